/*
   Copyright 2025 The skeinpres authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEIN_ERROR_HPP
#define SKEIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace skein {

// Exit codes of the command line front end double as error categories.
enum class ErrorCode : int {
    validation = 2,
    derivation = 3,
    certification = 4,
    parse = 5,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

   private:
    ErrorCode code_;
    std::string context_;
};

const char* code_name(ErrorCode code) noexcept;

}  // namespace skein

#endif
