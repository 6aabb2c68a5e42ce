#ifndef PF_BIPOLY_HPP
#define PF_BIPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pf/error.hpp"
#include "pf/scalar.hpp"

namespace pf {

// Monomial exponent x^a y^b. Map ordering is graded (total degree, then
// x-exponent descending) so iteration lists terms the way we print them.
struct Exp {
    int a = 0;
    int b = 0;
    int deg() const { return a + b; }
    friend bool operator==(const Exp& l, const Exp& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator<(const Exp& l, const Exp& r) {
        if (l.deg() != r.deg()) return l.deg() < r.deg();
        return l.a > r.a;
    }
};

// Sparse bivariate polynomial over the coefficient backend K.
// Zero coefficients are never stored; the zero polynomial has no terms
// and its degree is "none" (treated as smaller than every bound).
template <class K>
class BiPoly {
public:
    using Traits = ScalarTraits<K>;
    using Real = RealOf<K>;
    using TermMap = std::map<Exp, K>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }

    static BiPoly monomial(const K& c, int a, int b) {
        BiPoly p;
        p.add_term(a, b, c);
        return p;
    }

    static BiPoly constant(const K& c) { return monomial(c, 0, 0); }
    static BiPoly x(int power = 1) { return monomial(Traits::from_int(1), power, 0); }
    static BiPoly y(int power = 1) { return monomial(Traits::from_int(1), 0, power); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int a, int b, const K& c) {
        if (Traits::is_zero(c)) return;
        Exp e{a, b};
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coeff(int a, int b) const {
        auto it = terms_.find(Exp{a, b});
        return it == terms_.end() ? K(0) : it->second;
    }

    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) d = d ? std::max(*d, e.deg()) : e.deg();
        return d;
    }

    // degree of the zero polynomial counts as <= any bound
    bool degree_le(int bound) const {
        auto d = degree();
        return !d || *d <= bound;
    }

    Real l1_norm() const {
        Real s(0);
        for (const auto& [e, c] : terms_) s += Traits::abs(c);
        return s;
    }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            if (d && *d != e.deg()) return false;
            d = e.deg();
        }
        return true;
    }

    BiPoly homogeneous_component(int d) const {
        BiPoly r;
        for (const auto& [e, c] : terms_)
            if (e.deg() == d) r.terms_.emplace(e, c);
        return r;
    }

    // terms of degree <= d / degree > d
    BiPoly truncate_le(int d) const {
        BiPoly r;
        for (const auto& [e, c] : terms_)
            if (e.deg() <= d) r.terms_.emplace(e, c);
        return r;
    }
    BiPoly truncate_gt(int d) const {
        BiPoly r;
        for (const auto& [e, c] : terms_)
            if (e.deg() > d) r.terms_.emplace(e, c);
        return r;
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.a, e.b, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.a, e.b, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly l, const BiPoly& r) { return l += r; }
    friend BiPoly operator-(BiPoly l, const BiPoly& r) { return l -= r; }

    friend BiPoly operator*(const BiPoly& l, const BiPoly& r) {
        BiPoly p;
        for (const auto& [el, cl] : l.terms_)
            for (const auto& [er, cr] : r.terms_) p.add_term(el.a + er.a, el.b + er.b, cl * cr);
        return p;
    }

    BiPoly& operator*=(const K& s) {
        if (Traits::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend BiPoly operator*(BiPoly p, const K& s) { return p *= s; }
    friend BiPoly operator*(const K& s, BiPoly p) { return p *= s; }

    BiPoly& operator/=(const K& s) {
        for (auto& [e, c] : terms_) c /= s;
        return *this;
    }
    friend BiPoly operator/(BiPoly p, const K& s) { return p /= s; }

    // multiplication by x^a y^b is an isometry of the coefficient norm
    BiPoly shifted_exponents(int da, int db) const {
        BiPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(Exp{e.a + da, e.b + db}, c);
        return r;
    }

    friend bool operator==(const BiPoly& l, const BiPoly& r) {
        if (l.terms_.size() != r.terms_.size()) return false;
        auto it = l.terms_.begin(), jt = r.terms_.begin();
        for (; it != l.terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
        return true;
    }

    BiPoly dx() const {
        BiPoly r;
        for (const auto& [e, c] : terms_)
            if (e.a > 0) r.add_term(e.a - 1, e.b, c * Traits::from_int(e.a));
        return r;
    }
    BiPoly dy() const {
        BiPoly r;
        for (const auto& [e, c] : terms_)
            if (e.b > 0) r.add_term(e.a, e.b - 1, c * Traits::from_int(e.b));
        return r;
    }

    template <class V>
    V eval(const V& xv, const V& yv) const {
        V s(0);
        for (const auto& [e, c] : terms_) {
            V t = value_cast<V>(c);
            for (int i = 0; i < e.a; ++i) t *= xv;
            for (int i = 0; i < e.b; ++i) t *= yv;
            s += t;
        }
        return s;
    }

    // H(sx * x, sy * y)
    BiPoly dilated(const K& sx, const K& sy) const {
        BiPoly r;
        for (const auto& [e, c] : terms_) {
            K f = c;
            for (int i = 0; i < e.a; ++i) f *= sx;
            for (int i = 0; i < e.b; ++i) f *= sy;
            r.add_term(e.a, e.b, f);
        }
        return r;
    }

    // H(x + ax, y + by) via binomial expansion
    BiPoly translated(const K& ax, const K& by) const {
        BiPoly xs = BiPoly::x() + BiPoly::constant(ax);
        BiPoly ys = BiPoly::y() + BiPoly::constant(by);
        BiPoly r;
        for (const auto& [e, c] : terms_) {
            BiPoly t = BiPoly::constant(c);
            for (int i = 0; i < e.a; ++i) t = t * xs;
            for (int i = 0; i < e.b; ++i) t = t * ys;
            r += t;
        }
        return r;
    }

private:
    template <class V>
    static V value_cast(const K& c) {
        if constexpr (std::is_same_v<V, K>)
            return c;
        else
            return V(to_complex(c));
    }

    TermMap terms_;
};

// Top-degree homogeneous component.
template <class K>
BiPoly<K> principal_part(const BiPoly<K>& p) {
    auto d = p.degree();
    if (!d) throw PreconditionError("principal_part: zero polynomial has no principal part");
    return p.homogeneous_component(*d);
}

template <class K>
BiPoly<CD> to_complex_poly(const BiPoly<K>& p) {
    BiPoly<CD> r;
    for (const auto& [e, c] : p.terms()) r.add_term(e.a, e.b, to_complex(c));
    return r;
}

} // namespace pf

#endif
