#ifndef PF_FORMS_HPP
#define PF_FORMS_HPP

#include <optional>

#include "pf/bipoly.hpp"

namespace pf {

// Polynomial differential forms on C^2 with the coefficient-sum norm.
// Grading convention: a k-form of polynomial coefficient degree m has
// degree m + k, so exterior derivation preserves degree. Orientation is
// fixed once and for all: dx^dy is the positive generator, hence
// d(y dx) = -dx^dy. Everything sign-sensitive downstream is pinned to
// this choice.

template <class K>
struct Form1 {
    BiPoly<K> P; // dx part
    BiPoly<K> Q; // dy part

    bool is_zero() const { return P.is_zero() && Q.is_zero(); }

    RealOf<K> l1_norm() const { return P.l1_norm() + Q.l1_norm(); }

    std::optional<int> degree() const {
        auto dp = P.degree(), dq = Q.degree();
        std::optional<int> d;
        if (dp) d = *dp + 1;
        if (dq) d = d ? std::max(*d, *dq + 1) : *dq + 1;
        return d;
    }
    bool degree_le(int bound) const {
        auto d = degree();
        return !d || *d <= bound;
    }

    Form1 operator-() const { return {-P, -Q}; }
    Form1& operator+=(const Form1& o) {
        P += o.P;
        Q += o.Q;
        return *this;
    }
    Form1& operator-=(const Form1& o) {
        P -= o.P;
        Q -= o.Q;
        return *this;
    }
    friend Form1 operator+(Form1 l, const Form1& r) { return l += r; }
    friend Form1 operator-(Form1 l, const Form1& r) { return l -= r; }
    friend Form1 operator*(const K& s, Form1 f) {
        f.P *= s;
        f.Q *= s;
        return f;
    }
    friend Form1 operator*(const BiPoly<K>& g, const Form1& f) { return {g * f.P, g * f.Q}; }
    friend bool operator==(const Form1& l, const Form1& r) { return l.P == r.P && l.Q == r.Q; }
};

template <class K>
struct Form2 {
    BiPoly<K> f; // coefficient of dx^dy

    bool is_zero() const { return f.is_zero(); }
    RealOf<K> l1_norm() const { return f.l1_norm(); }

    std::optional<int> degree() const {
        auto d = f.degree();
        if (!d) return std::nullopt;
        return *d + 2;
    }
    bool degree_le(int bound) const {
        auto d = degree();
        return !d || *d <= bound;
    }

    Form2 operator-() const { return {-f}; }
    Form2& operator+=(const Form2& o) {
        f += o.f;
        return *this;
    }
    Form2& operator-=(const Form2& o) {
        f -= o.f;
        return *this;
    }
    friend Form2 operator+(Form2 l, const Form2& r) { return l += r; }
    friend Form2 operator-(Form2 l, const Form2& r) { return l -= r; }
    friend Form2 operator*(const K& s, Form2 w) {
        w.f *= s;
        return w;
    }
    friend Form2 operator*(const BiPoly<K>& g, const Form2& w) { return {g * w.f}; }
    friend bool operator==(const Form2& l, const Form2& r) { return l.f == r.f; }
};

// (P1 dx + Q1 dy) ^ (P2 dx + Q2 dy) = (P1 Q2 - Q1 P2) dx^dy
template <class K>
Form2<K> wedge(const Form1<K>& l, const Form1<K>& r) {
    return {l.P * r.Q - l.Q * r.P};
}

template <class K>
Form1<K> exterior_d(const BiPoly<K>& f) {
    return {f.dx(), f.dy()};
}

// d(P dx + Q dy) = (Q_x - P_y) dx^dy
template <class K>
Form2<K> exterior_d(const Form1<K>& w) {
    return {w.Q.dx() - w.P.dy()};
}

template <class K>
Form1<K> differential(const BiPoly<K>& H) {
    return exterior_d(H);
}

// rho = x dy - y dx, the radial 1-form of the Euler identity
//   (n+1) Hhat dx^dy = dHhat ^ rho   for homogeneous Hhat of degree n+1.
template <class K>
Form1<K> rho_form() {
    return {-BiPoly<K>::y(), BiPoly<K>::x()};
}

template <class K>
Form1<CD> to_complex_form(const Form1<K>& w) {
    return {to_complex_poly(w.P), to_complex_poly(w.Q)};
}
template <class K>
Form2<CD> to_complex_form(const Form2<K>& w) {
    return {to_complex_poly(w.f)};
}

} // namespace pf

#endif
