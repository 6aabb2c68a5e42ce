#ifndef PF_TEST_SUPPORT_HPP
#define PF_TEST_SUPPORT_HPP

#include <random>

#include "pf/division.hpp"
#include "pf/forms.hpp"
#include "pf/normalization.hpp"
#include "pf/unipoly.hpp"

namespace pftest {

using pf::BiPoly;
using pf::CD;
using pf::Form1;
using pf::Form2;
using pf::QQ;
using pf::UniPoly;

using Rng = std::mt19937_64;

template <class K>
K random_scalar(Rng& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    if constexpr (pf::ScalarTraits<K>::exact) {
        QQ v(num(rng), den(rng));
        v.canonicalize();
        return v;
    } else {
        return CD(double(num(rng)) / den(rng), 0.0);
    }
}

template <class K>
K random_nonzero_scalar(Rng& rng) {
    K v = random_scalar<K>(rng);
    while (pf::ScalarTraits<K>::is_zero(v)) v = random_scalar<K>(rng);
    return v;
}

template <class K>
BiPoly<K> random_bipoly(Rng& rng, int max_deg, int terms) {
    BiPoly<K> p;
    std::uniform_int_distribution<int> d(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        int a = d(rng), b = d(rng);
        if (a + b > max_deg) continue;
        p.add_term(a, b, random_scalar<K>(rng));
    }
    return p;
}

template <class K>
BiPoly<K> random_homogeneous(Rng& rng, int deg) {
    BiPoly<K> p;
    for (int a = 0; a <= deg; ++a) p.add_term(a, deg - a, random_scalar<K>(rng));
    return p;
}

// random homogeneous of the given degree that is regular (nonzero resultant)
template <class K>
BiPoly<K> random_regular_principal(Rng& rng, int np1) {
    for (int tries = 0; tries < 200; ++tries) {
        BiPoly<K> hh = random_homogeneous<K>(rng, np1);
        if (hh.is_zero()) continue;
        if (pf::is_regular_at_infinity(hh)) return hh;
    }
    throw std::runtime_error("random_regular_principal: generation failed");
}

// rescaled so the inverse Sylvester norm is <= 1
template <class K>
BiPoly<K> random_quasimonic_principal(Rng& rng, int np1) {
    BiPoly<K> hh = random_regular_principal<K>(rng, np1);
    auto kappa = pf::normalization_constant(hh);
    if (kappa > pf::RealOf<K>(1)) hh *= pf::ScalarTraits<K>::to_value(kappa);
    return hh;
}

// quasimonic + random lower part of norm exactly 1/2
template <class K>
BiPoly<K> random_balanced(Rng& rng, int n) {
    BiPoly<K> H = random_quasimonic_principal<K>(rng, n + 1);
    BiPoly<K> h = random_bipoly<K>(rng, n, 2 * n + 2);
    auto hn = h.l1_norm();
    if (!pf::ScalarTraits<K>::is_zero(pf::ScalarTraits<K>::to_value(hn))) {
        K half = pf::ScalarTraits<K>::from_ratio(1, 2);
        h *= half / pf::ScalarTraits<K>::to_value(hn);
        H += h;
    }
    return H;
}

template <class K>
Form1<K> random_form1(Rng& rng, int max_deg, int terms) {
    return {random_bipoly<K>(rng, max_deg, terms), random_bipoly<K>(rng, max_deg, terms)};
}

template <class K>
Form2<K> random_form2(Rng& rng, int max_coeff_deg, int terms) {
    return {random_bipoly<K>(rng, max_coeff_deg, terms)};
}

// 1-form of degree n+1 normalized at infinity, with lower-order part of
// norm <= lower_norm
template <class K>
Form1<K> random_normalized_form(Rng& rng, int n, double lower_norm) {
    BiPoly<K> hh = random_quasimonic_principal<K>(rng, n + 1);
    Form1<K> xi = pf::differential(hh);
    Form1<K> low = random_form1<K>(rng, n - 1, 2 * n);
    auto ln = low.l1_norm();
    if (pf::ScalarTraits<K>::to_double(ln) > 0.0) {
        K f = pf::ScalarTraits<K>::from_ratio(long(lower_norm * 16), 16);
        low.P *= f / pf::ScalarTraits<K>::to_value(ln);
        low.Q *= f / pf::ScalarTraits<K>::to_value(ln);
        xi += low;
    }
    return xi;
}

template <class K>
UniPoly<K> random_monic(Rng& rng, int deg, bool kill_subleading) {
    std::vector<K> c(size_t(deg) + 1);
    for (int i = 0; i < deg; ++i) c[size_t(i)] = random_scalar<K>(rng);
    c[size_t(deg)] = pf::ScalarTraits<K>::from_int(1);
    if (kill_subleading && deg >= 1) c[size_t(deg - 1)] = K(0);
    return UniPoly<K>(std::move(c));
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace pftest

#endif
