#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pf/normalization.hpp"
#include "test_support.hpp"

using namespace pf;
using pftest::Rng;

namespace {

template <class K>
BiPoly<K> fermat_scaled(int np1) {
    // (x^(n+1) + y^(n+1)) / (n+1)
    K inv = ScalarTraits<K>::from_ratio(1, np1);
    return inv * (BiPoly<K>::x(np1) + BiPoly<K>::y(np1));
}

} // namespace

TEST_CASE("regularity at infinity") {
    BiPoly<QQ> H1 = ScalarTraits<QQ>::from_ratio(1, 2) * BiPoly<QQ>::y(2) + BiPoly<QQ>::x(3) - BiPoly<QQ>::x();
    CHECK_FALSE(is_regular_at_infinity(H1)); // principal part x^3 alone

    CHECK(is_regular_at_infinity(fermat_scaled<QQ>(3)));

    BiPoly<QQ> H3 = BiPoly<QQ>::monomial(QQ(1), 2, 2);
    CHECK_FALSE(is_regular_at_infinity(H3));

    CHECK_THROWS_AS(is_regular_at_infinity(BiPoly<QQ>::x()), PreconditionError);
}

TEST_CASE("normalization constants") {
    // scaled Fermat cubic: the Sylvester map permutes monomials, norm 1
    CHECK(normalization_constant(fermat_scaled<QQ>(3)) == QQ(1));

    // unscaled: map multiplied by 3, inverse norm divided by 3
    BiPoly<QQ> raw = BiPoly<QQ>::x(3) + BiPoly<QQ>::y(3);
    CHECK(normalization_constant(raw) == QQ(1, 3));

    // a x^3/3 + y^3/3 is quasimonic for a >= 1
    for (long a : {1L, 2L, 10L, 100L}) {
        BiPoly<QQ> hh = QQ(a, 3) * BiPoly<QQ>::x(3) + QQ(1, 3) * BiPoly<QQ>::y(3);
        CHECK(normalization_constant(hh) <= QQ(1));
    }

    CHECK_THROWS_AS(normalization_constant(BiPoly<QQ>::x(3)), PreconditionError);
}

TEST_CASE("constant scales inversely (property)") {
    Rng rng(31);
    for (int it = 0; it < 60; ++it) {
        BiPoly<QQ> hh = pftest::random_regular_principal<QQ>(rng, 3 + it % 3);
        QQ k = normalization_constant(hh);
        QQ lam = pftest::random_nonzero_scalar<QQ>(rng);
        CHECK(normalization_constant(lam * hh) == k / QQ(::abs(lam)));
    }
}

TEST_CASE("make_quasimonic") {
    auto [G1, l1] = make_quasimonic(fermat_scaled<QQ>(3));
    CHECK(G1 == fermat_scaled<QQ>(3));
    CHECK(l1 == QQ(1));

    BiPoly<QQ> raw = BiPoly<QQ>::x(3) + BiPoly<QQ>::y(3);
    auto [G2, l2] = make_quasimonic(raw);
    CHECK(G2 == raw);
    CHECK(l2 == QQ(1));

    // constant kappa > 1 forces the scale lambda = kappa
    BiPoly<QQ> small = QQ(1, 5) * fermat_scaled<QQ>(3);
    QQ kappa = normalization_constant(small);
    CHECK(kappa == QQ(5));
    auto [G3, l3] = make_quasimonic(small);
    CHECK(l3 == QQ(5));
    CHECK(normalization_constant(G3) == QQ(1));

    CHECK_THROWS_AS(make_quasimonic(BiPoly<QQ>::monomial(QQ(1), 2, 2)), PreconditionError);
}

TEST_CASE("make_quasimonic idempotent (property)") {
    Rng rng(77);
    for (int it = 0; it < 40; ++it) {
        BiPoly<QQ> H = pftest::random_regular_principal<QQ>(rng, 3) + pftest::random_bipoly<QQ>(rng, 2, 3);
        if (!is_regular_at_infinity(H)) continue;
        auto [G, l] = make_quasimonic(H);
        auto [G2, l2] = make_quasimonic(G);
        CHECK(G2 == G);
        CHECK(l2 == QQ(1));
    }
}

TEST_CASE("make_balanced") {
    BiPoly<QQ> hh = fermat_scaled<QQ>(3);
    auto [B1, l1] = make_balanced(hh);
    CHECK(B1 == hh);
    CHECK(l1 == QQ(1));

    // H = Hhat + 10x: the degree-1 term rescales by lambda^(1-(n+1)) = 1/100
    BiPoly<QQ> H = hh + QQ(10) * BiPoly<QQ>::x();
    auto [B2, l2] = make_balanced(H);
    CHECK(l2 == QQ(10));
    CHECK(principal_part(B2) == hh);
    CHECK((B2 - hh) == QQ(1, 10) * BiPoly<QQ>::x());
    CHECK((B2 - principal_part(B2)).l1_norm() <= QQ(1));
    CHECK(normalization_constant(principal_part(B2)) == normalization_constant(hh));

    BiPoly<QQ> H3 = hh + QQ(1, 2) * BiPoly<QQ>::x();
    auto [B3, l3] = make_balanced(H3);
    CHECK(B3 == H3);

    CHECK_THROWS_AS(make_balanced(QQ(1, 5) * hh + BiPoly<QQ>::x()), PreconditionError);
}

TEST_CASE("bounded pair division property") {
    Rng rng(123);
    for (int it = 0; it < 120; ++it) {
        int np1 = 3 + it % 3;
        BiPoly<QQ> hh = pftest::random_quasimonic_principal<QQ>(rng, np1);
        auto syl = sylvester_for_hamiltonian(hh);
        int n = np1 - 1;
        BiPoly<QQ> f = pftest::random_homogeneous<QQ>(rng, 2 * n - 1);
        auto coeffs = homogeneous_coeffs(f, 2 * n - 1);
        auto [u, v] = syl.solve_pair(coeffs);
        QQ norm_uv(0);
        for (const auto& c : u) norm_uv += QQ(::abs(c));
        for (const auto& c : v) norm_uv += QQ(::abs(c));
        CHECK(norm_uv <= f.l1_norm());

        // and the representation is exact
        BiPoly<QQ> back = hh.dx() * from_homogeneous_coeffs(u, n - 1) +
                          hh.dy() * from_homogeneous_coeffs(v, n - 1);
        CHECK(back == f);
    }
}

TEST_CASE("gradient floor probe") {
    BiPoly<QQ> hh = fermat_scaled<QQ>(3);
    double floor1 = gradient_floor(hh, 20000);
    CHECK(floor1 >= 1.0 - 1e-9);

    // scaling by 0.01 scales the probe linearly
    BiPoly<CD> small = CD(0.01, 0.0) * to_complex_poly(hh);
    double floor2 = gradient_floor(small, 20000);
    CHECK(floor2 == doctest::Approx(0.01 * floor1).epsilon(1e-9));

    BiPoly<QQ> ha = QQ(10, 3) * BiPoly<QQ>::x(3) + QQ(1, 3) * BiPoly<QQ>::y(3);
    CHECK(gradient_floor(ha, 20000) >= 1.0 - 1e-9);

    CHECK_THROWS_AS(gradient_floor(BiPoly<QQ>::x(2) + BiPoly<QQ>::y(), 10), PreconditionError);
}

TEST_CASE("normalization report fields") {
    auto rep = normalization_report(fermat_scaled<QQ>(3));
    CHECK(rep.regular_at_infinity);
    CHECK(rep.quasimonic);
    CHECK(rep.inverse_norm == doctest::Approx(1.0));
    CHECK(rep.condition_number >= 1.0);
}
