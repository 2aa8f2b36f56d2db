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

#ifndef SKEIN_GAUGE_HPP
#define SKEIN_GAUGE_HPP

#include <map>
#include <string>
#include <vector>

#include "skein/presentation.hpp"
#include "skein/rewrite.hpp"

namespace skein {

/*
    Element of A_0 (x) A_1 (x) ... (x) A_k. Each key holds one word per tensor
    factor. Factors never interact, so products concatenate componentwise.
*/
template <class K>
class Tensor {
   public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, K>;

    Tensor() = default;
    explicit Tensor(size_t factors) : n_(factors) {}
    static Tensor unit(size_t factors, const K& c = K(1)) {
        Tensor t(factors);
        t.add(Key(factors), c);
        return t;
    }

    size_t factors() const noexcept { return n_; }
    const Terms& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }

    void add(const Key& k, const K& c) {
        if (skein::is_zero(c)) return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (skein::is_zero(it->second)) t_.erase(it);
        }
    }
    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        Tensor r(a.n_);
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) {
                Key k(a.n_);
                for (size_t f = 0; f < a.n_; ++f) {
                    k[f] = ka[f];
                    k[f].insert(k[f].end(), kb[f].begin(), kb[f].end());
                }
                r.add(k, ca * cb);
            }
        return r;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    // Reduce every factor in its own system.
    Tensor normal_form(const std::vector<const RewriteSystem<K>*>& systems) const {
        Tensor cur = *this;
        for (size_t f = 0; f < n_; ++f) {
            std::map<Word, Poly<K>, WordLess> cache;
            Tensor next(n_);
            for (const auto& [k, c] : cur.t_) {
                auto it = cache.find(k[f]);
                if (it == cache.end()) it = cache.emplace(k[f], systems[f]->normal_form(Poly<K>::word(k[f]))).first;
                for (const auto& [w, wc] : it->second.terms()) {
                    Key nk = k;
                    nk[f] = w;
                    next.add(nk, c * wc);
                }
            }
            cur = std::move(next);
        }
        return cur;
    }

   private:
    size_t n_ = 0;
    Terms t_;
};

using NCTensor = Tensor<Laurent>;

// O_q[SL2] generated by x[ij], letter 2 * i + j; relations of a type a arc.
const NCSystem& bigon();

NCTensor coproduct(Letter x);  // two factors
Laurent counit(Letter x);
NCPoly antipode(Letter x);
NCPoly antipode(const NCPoly& x);  // anti-multiplicative extension
Laurent counit(const Word& w);

/*
    Quantum gauge coaction on a presentation with arcs of type a or d.
    Tensor factor 0 is the skein algebra, factor 1 + k the gauge copy at
    boundary_arcs[k].
*/
class GaugeCoaction {
   public:
    explicit GaugeCoaction(const Presentation& p);

    const Presentation& presentation() const noexcept { return p_; }
    const NCSystem& system() const noexcept { return rs_; }
    size_t vertices() const noexcept { return p_.boundary_arcs.size(); }
    size_t factors() const noexcept { return 1 + vertices(); }
    std::vector<const NCSystem*> systems(size_t gauge_copies = 1) const;

    NCTensor on_letter(Letter x) const;
    NCTensor apply(const NCPoly& x) const;  // reduced

    // (Delta^G (x) id) Delta^G and (id (x) Delta) Delta^G on a letter.
    NCTensor coassoc_left(Letter x) const;
    NCTensor coassoc_right(Letter x) const;
    // (id (x) eps) Delta^G on a letter.
    NCPoly counit_image(Letter x) const;

    std::string text(const NCTensor& t) const;

   private:
    Presentation p_;
    NCSystem rs_;
};

struct ComoduleReport {
    size_t generators = 0, relators = 0;
    std::vector<std::string> counit_failures, coassoc_failures, morphism_failures;
    bool ok() const { return counit_failures.empty() && coassoc_failures.empty() && morphism_failures.empty(); }
};

ComoduleReport check_comodule(const GaugeCoaction& g);

// Primitive Laurent basis of coinvariants among PBW words of length <= d.
std::vector<NCPoly> coinvariants(const GaugeCoaction& g, size_t d);

// Nullity of the same map after substituting w = w0 (rank over Q).
size_t coinvariant_dimension_at(const GaugeCoaction& g, size_t d, const mpq_class& w0);

// Whether x lies in the Q(w)-span of basis.
bool in_span(const std::vector<NCPoly>& basis, const NCPoly& x);

}  // namespace skein

#endif
