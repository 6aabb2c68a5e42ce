#ifndef PF_UNIPOLY_HPP
#define PF_UNIPOLY_HPP

#include <vector>

#include "pf/bipoly.hpp"
#include "pf/error.hpp"
#include "pf/scalar.hpp"

namespace pf {

// Dense univariate polynomial, coefficients ascending by power.
template <class K>
class UniPoly {
public:
    using Traits = ScalarTraits<K>;
    using Real = RealOf<K>;

    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly monomial(const K& c, int power) {
        std::vector<K> v(power + 1, K(0));
        v[power] = c;
        return UniPoly(std::move(v));
    }
    static UniPoly xpow(int power) { return monomial(Traits::from_int(1), power); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : K(0); }
    K leading() const { return c_.empty() ? K(0) : c_.back(); }

    void set_coeff(int i, const K& v) {
        if (i >= int(c_.size())) c_.resize(i + 1, K(0));
        c_[i] = v;
        trim();
    }

    Real l1_norm() const {
        Real s(0);
        for (const auto& v : c_) s += Traits::abs(v);
        return s;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly l, const UniPoly& r) { return l += r; }
    friend UniPoly operator-(UniPoly l, const UniPoly& r) { return l -= r; }

    friend UniPoly operator*(const UniPoly& l, const UniPoly& r) {
        if (l.is_zero() || r.is_zero()) return UniPoly();
        std::vector<K> v(l.c_.size() + r.c_.size() - 1, K(0));
        for (size_t i = 0; i < l.c_.size(); ++i)
            for (size_t j = 0; j < r.c_.size(); ++j) v[i + j] += l.c_[i] * r.c_[j];
        return UniPoly(std::move(v));
    }
    UniPoly& operator*=(const K& s) {
        if (Traits::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend UniPoly operator*(UniPoly p, const K& s) { return p *= s; }
    friend UniPoly operator*(const K& s, UniPoly p) { return p *= s; }
    UniPoly& operator/=(const K& s) {
        for (auto& v : c_) v /= s;
        return *this;
    }

    friend bool operator==(const UniPoly& l, const UniPoly& r) { return l.c_ == r.c_; }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Traits::from_int(long(i));
        return UniPoly(std::move(v));
    }

    template <class V>
    V eval(const V& x) const {
        V s(0);
        for (size_t i = c_.size(); i-- > 0;) {
            s *= x;
            if constexpr (std::is_same_v<V, K>)
                s += c_[i];
            else
                s += V(to_complex(c_[i]));
        }
        return s;
    }

    // p(x + a), Horner-style shift
    UniPoly translated(const K& a) const {
        UniPoly r;
        for (size_t i = c_.size(); i-- > 0;) {
            r = r * (UniPoly::xpow(1) + UniPoly::monomial(a, 0));
            r += UniPoly::monomial(c_[i], 0);
        }
        return r;
    }

    // p(s*x)
    UniPoly dilated(const K& s) const {
        UniPoly r = *this;
        K f = Traits::from_int(1);
        for (size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] *= f;
            f *= s;
        }
        r.trim();
        return r;
    }

    // embed as a bivariate polynomial in the given variable (0 = x, 1 = y)
    BiPoly<K> as_bipoly(int var = 0) const {
        BiPoly<K> r;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (Traits::is_zero(c_[i])) continue;
            if (var == 0)
                r.add_term(int(i), 0, c_[i]);
            else
                r.add_term(0, int(i), c_[i]);
        }
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
UniPoly<CD> to_complex_poly(const UniPoly<K>& p) {
    std::vector<CD> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(to_complex(c));
    return UniPoly<CD>(std::move(v));
}

// Result of dividing f by q with remainder, f = b*q + a, deg a < deg q,
// together with the geometric-series norm certificate: with qm the monic
// rescaling of q and c = ||qm - x^n||,
//   ||b_m|| + ||a|| <= K ||f||,  K = 1 + C + ... + C^(d-n),  C = 1 + c,
// where b_m is the quotient by qm. The achieved value recorded is the
// certified one (||b_m|| + ||a||); the returned quotient b refers to the
// original q.
template <class K>
struct UniDivision {
    UniPoly<K> quotient;  // b, w.r.t. the original divisor
    UniPoly<K> remainder; // a
    RealOf<K> C{};
    RealOf<K> claimed{};  // K * ||f||
    RealOf<K> achieved{}; // ||b_m|| + ||a||
};

// Division with remainder by stripping the top coefficient block, the
// iteration that yields the geometric-series bound. q must have a nonzero
// leading coefficient; it is rescaled to monic internally.
template <class K>
UniDivision<K> divide_univariate(const UniPoly<K>& f, const UniPoly<K>& q) {
    using Traits = ScalarTraits<K>;
    using Real = RealOf<K>;
    if (q.is_zero()) throw PreconditionError("divide_univariate: divisor is zero");
    const int n = q.degree();
    const K lead = q.leading();
    UniPoly<K> qm = q;
    qm /= lead; // monic

    const int d = std::max(f.degree(), n);
    const Real c = (qm - UniPoly<K>::xpow(n)).l1_norm();
    const Real C = Real(1) + c;
    Real Kfac(1), Cpow(1);
    for (int i = 1; i <= d - n; ++i) {
        Cpow *= C;
        Kfac += Cpow;
    }

    UniPoly<K> b;       // accumulates quotient w.r.t. qm
    UniPoly<K> cur = f; // shrinking dividend
    const UniPoly<K> tail = UniPoly<K>::xpow(n) - qm; // x^n - qm, degree <= n-1
    while (cur.degree() >= n) {
        // cur = btop * x^n + alow
        std::vector<K> hi(cur.coeffs().begin() + n, cur.coeffs().end());
        std::vector<K> lo(cur.coeffs().begin(), cur.coeffs().begin() + n);
        UniPoly<K> btop{std::move(hi)}, alow{std::move(lo)};
        b += btop;
        cur = alow + btop * tail;
    }

    UniDivision<K> out;
    out.remainder = cur;
    out.achieved = b.l1_norm() + cur.l1_norm();
    out.quotient = b;
    out.quotient /= lead;
    out.C = C;
    out.claimed = Kfac * f.l1_norm();
    return out;
}

} // namespace pf

#endif
