#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pf/forms.hpp"
#include "test_support.hpp"

using namespace pf;
using pftest::Rng;

TEST_CASE("l1 norm basics") {
    BiPoly<QQ> p = BiPoly<QQ>::x(3) - BiPoly<QQ>::x();
    CHECK(p.l1_norm() == QQ(2));

    CHECK(rho_form<QQ>().l1_norm() == QQ(2));
    CHECK(BiPoly<QQ>().l1_norm() == QQ(0));
    CHECK(Form2<QQ>{}.l1_norm() == QQ(0));
}

TEST_CASE("degree grading") {
    BiPoly<QQ> zero;
    CHECK(!zero.degree().has_value());
    CHECK(zero.degree_le(-5));

    Form1<QQ> w{BiPoly<QQ>::monomial(QQ(1), 1, 1), BiPoly<QQ>()}; // xy dx
    CHECK(*w.degree() == 3);
    Form2<QQ> v{BiPoly<QQ>::x()};
    CHECK(*v.degree() == 3);
}

TEST_CASE("wedge examples") {
    Form1<QQ> dx{BiPoly<QQ>::constant(QQ(1)), BiPoly<QQ>()};
    Form1<QQ> dy{BiPoly<QQ>(), BiPoly<QQ>::constant(QQ(1))};
    CHECK(wedge(dx, dy).f == BiPoly<QQ>::constant(QQ(1)));

    Form2<QQ> r = wedge(rho_form<QQ>(), dx);
    CHECK(r.f == -BiPoly<QQ>::x());
}

TEST_CASE("wedge norm submultiplicative (property)") {
    Rng rng(42);
    for (int it = 0; it < 1000; ++it) {
        auto a = pftest::random_form1<QQ>(rng, 5, 4);
        auto b = pftest::random_form1<QQ>(rng, 5, 4);
        CHECK(wedge(a, b).l1_norm() <= a.l1_norm() * b.l1_norm());
    }
}

TEST_CASE("exterior derivative examples and the orientation pin") {
    // d(x^2 y) = 2xy dx + x^2 dy
    BiPoly<QQ> f = BiPoly<QQ>::monomial(QQ(1), 2, 1);
    Form1<QQ> df = exterior_d(f);
    CHECK(df.P == BiPoly<QQ>::monomial(QQ(2), 1, 1));
    CHECK(df.Q == BiPoly<QQ>::monomial(QQ(1), 2, 0));

    // d(y dx) = -dx^dy under the fixed orientation
    Form1<QQ> ydx{BiPoly<QQ>::y(), BiPoly<QQ>()};
    CHECK(exterior_d(ydx).f == BiPoly<QQ>::constant(QQ(-1)));

    // d(x^a y^(b+1) dx) = -(b+1) x^a y^b dx^dy
    Form1<QQ> w{BiPoly<QQ>::monomial(QQ(1), 2, 2), BiPoly<QQ>()};
    CHECK(exterior_d(w).f == BiPoly<QQ>::monomial(QQ(-2), 2, 1));

    // theta = xy dx has degree 3 and ||d theta|| = 1 <= 3
    Form1<QQ> th{BiPoly<QQ>::monomial(QQ(1), 1, 1), BiPoly<QQ>()};
    CHECK(exterior_d(th).l1_norm() == QQ(1));
}

TEST_CASE("norm of d bounded by degree (property), and d o d = 0") {
    Rng rng(7);
    for (int it = 0; it < 500; ++it) {
        auto f = pftest::random_bipoly<QQ>(rng, 6, 5);
        if (f.is_zero()) continue;
        Form1<QQ> df = exterior_d(f);
        CHECK(df.l1_norm() <= QQ(*f.degree()) * f.l1_norm());
        CHECK(exterior_d(df).f.is_zero());

        auto w = pftest::random_form1<QQ>(rng, 6, 5);
        auto d = w.degree();
        if (d) CHECK(exterior_d(w).l1_norm() <= QQ(*d) * w.l1_norm());
    }
}

TEST_CASE("principal part examples") {
    BiPoly<QQ> H = ScalarTraits<QQ>::from_ratio(1, 2) * BiPoly<QQ>::y(2) + BiPoly<QQ>::x(3) - BiPoly<QQ>::x();
    CHECK(principal_part(H) == BiPoly<QQ>::x(3));

    BiPoly<QQ> G = BiPoly<QQ>::x(3) + BiPoly<QQ>::y(3);
    CHECK(principal_part(G) == G);

    BiPoly<QQ> xy = BiPoly<QQ>::x() + BiPoly<QQ>::y();
    BiPoly<QQ> P = xy * xy * xy * xy + BiPoly<QQ>::x() * BiPoly<QQ>::y();
    BiPoly<QQ> expect;
    expect.add_term(4, 0, QQ(1));
    expect.add_term(3, 1, QQ(4));
    expect.add_term(2, 2, QQ(6));
    expect.add_term(1, 3, QQ(4));
    expect.add_term(0, 4, QQ(1));
    CHECK(principal_part(P) == expect);

    CHECK_THROWS_AS(principal_part(BiPoly<QQ>()), PreconditionError);
}

TEST_CASE("Euler identity exact over the rationals") {
    Rng rng(99);
    for (int np1 = 2; np1 <= 6; ++np1) {
        for (int it = 0; it < 50; ++it) {
            BiPoly<QQ> hh = pftest::random_homogeneous<QQ>(rng, np1);
            Form2<QQ> lhs{ScalarTraits<QQ>::from_int(np1) * hh};
            Form2<QQ> rhs = wedge(exterior_d(hh), rho_form<QQ>());
            CHECK(lhs.f == rhs.f);
        }
    }
}

TEST_CASE("Euler identity in floating point") {
    Rng rng(100);
    for (int np1 = 2; np1 <= 6; ++np1) {
        BiPoly<CD> hh = pftest::random_homogeneous<CD>(rng, np1);
        Form2<CD> lhs{ScalarTraits<CD>::from_int(np1) * hh};
        Form2<CD> rhs = wedge(exterior_d(hh), rho_form<CD>());
        double res = ScalarTraits<CD>::to_double((lhs - rhs).l1_norm());
        CHECK(res <= 1e-12 * ScalarTraits<CD>::to_double(hh.l1_norm()));
    }
}

TEST_CASE("exact arithmetic round trips") {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        auto f = pftest::random_bipoly<QQ>(rng, 6, 6);
        auto g = pftest::random_bipoly<QQ>(rng, 6, 6);
        CHECK((f + g) - g == f);
        CHECK((f * g).l1_norm() <= f.l1_norm() * g.l1_norm());
    }
}
