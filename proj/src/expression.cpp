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

#include "skein/expression.hpp"

#include <cctype>
#include <map>
#include <string>

#include "skein/error.hpp"

namespace skein {

namespace {

class Parser {
   public:
    Parser(std::string_view s, const Alphabet& ab) : s_(s) {
        for (size_t i = 0; i < ab.size(); ++i) names_.emplace(ab.names[i], static_cast<Letter>(i));
    }

    NCPoly run() {
        NCPoly x = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return x;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::parse, "expression: " + what, "offset " + std::to_string(i_));
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    long integer() {
        skip();
        const size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::string digits(s_.substr(start, i_ - start));
        if (digits.empty() || digits == "-" || digits == "+") {
            i_ = start;
            fail("expected an integer");
        }
        if (digits.size() > 9) fail("integer too large");
        return std::stol(digits);
    }

    NCPoly sum() {
        NCPoly x = product();
        for (;;) {
            if (eat('+'))
                x += product();
            else if (eat('-'))
                x -= product();
            else
                return x;
        }
    }

    NCPoly product() {
        NCPoly x = power();
        while (eat('*')) x = x * power();
        return x;
    }

    NCPoly power() {
        if (eat('-')) return -power();
        NCPoly base = atom();
        if (!eat('^')) return base;
        const long n = integer();
        if (n < 0) fail("negative powers are only allowed on w");
        NCPoly out(1);
        for (long k = 0; k < n; ++k) out = out * base;
        return out;
    }

    NCPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            NCPoly x = sum();
            if (!eat(')')) fail("expected ')'");
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return NCPoly(Laurent(mpz_class(std::string(s_.substr(start, i_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.'))
                ++i_;
            const std::string id(s_.substr(start, i_ - start));
            if (i_ < s_.size() && s_[i_] == '[') {
                const size_t close = s_.find(']', i_);
                if (close == std::string_view::npos) fail("missing ']'");
                const std::string state(s_.substr(i_ + 1, close - i_ - 1));
                if (state != "pp" && state != "pm" && state != "mp" && state != "mm") {
                    ++i_;
                    fail("state must be pp, pm, mp or mm, got '" + state + "'");
                }
                auto it = names_.find(id + "[" + state + "]");
                if (it == names_.end()) {
                    i_ = start;
                    fail("unknown generator '" + id + "'");
                }
                i_ = close + 1;
                return NCPoly::letter(it->second);
            }
            if (id == "w") {
                if (!eat('^')) return NCPoly(Laurent::w(1));
                return NCPoly(Laurent::w(static_cast<int>(integer())));
            }
            i_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    size_t i_ = 0;
    std::map<std::string, Letter> names_;
};

}  // namespace

NCPoly parse_expression(std::string_view text, const Alphabet& ab) { return Parser(text, ab).run(); }

}  // namespace skein
