#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pf/unipoly.hpp"
#include "test_support.hpp"

using namespace pf;
using pftest::Rng;

namespace {

// classical synthetic division, the independent oracle
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> synthetic_division(const UniPoly<K>& f, const UniPoly<K>& q) {
    UniPoly<K> rem = f, quot;
    const int n = q.degree();
    while (rem.degree() >= n) {
        int k = rem.degree() - n;
        K c = rem.leading() / q.leading();
        quot += UniPoly<K>::monomial(c, k);
        rem -= UniPoly<K>::monomial(c, k) * q;
    }
    return {quot, rem};
}

} // namespace

TEST_CASE("monomial split") {
    auto d = divide_univariate(UniPoly<QQ>::xpow(5), UniPoly<QQ>::xpow(2));
    CHECK(d.quotient == UniPoly<QQ>::xpow(3));
    CHECK(d.remainder.is_zero());
    CHECK(d.achieved == QQ(1));
}

TEST_CASE("hand division with certificate") {
    // f = x^4, q = x^2 - 1: C = 2, K = 1 + 2 + 4 = 7
    UniPoly<QQ> f = UniPoly<QQ>::xpow(4);
    UniPoly<QQ> q = UniPoly<QQ>::xpow(2) - UniPoly<QQ>::monomial(QQ(1), 0);
    auto d = divide_univariate(f, q);
    CHECK(d.quotient == UniPoly<QQ>::xpow(2) + UniPoly<QQ>::monomial(QQ(1), 0));
    CHECK(d.remainder == UniPoly<QQ>::monomial(QQ(1), 0));
    CHECK(d.achieved == QQ(3));
    CHECK(d.claimed == QQ(7));
    CHECK(d.C == QQ(2));
}

TEST_CASE("zero divisor refused") {
    CHECK_THROWS_AS(divide_univariate(UniPoly<QQ>::xpow(2), UniPoly<QQ>()), PreconditionError);
}

TEST_CASE("division agrees with synthetic division and meets the certificate") {
    Rng rng(2024);
    for (int it = 0; it < 400; ++it) {
        std::uniform_int_distribution<int> dd(1, 7), dn(1, 4);
        int nd = dd(rng), nq = dn(rng);
        if (nq > nd) std::swap(nd, nq);
        UniPoly<QQ> f, q;
        for (int i = 0; i <= nd; ++i) f += UniPoly<QQ>::monomial(pftest::random_scalar<QQ>(rng), i);
        for (int i = 0; i < nq; ++i) q += UniPoly<QQ>::monomial(pftest::random_scalar<QQ>(rng), i);
        q += UniPoly<QQ>::monomial(pftest::random_nonzero_scalar<QQ>(rng), nq);
        if (f.is_zero()) continue;

        auto d = divide_univariate(f, q);
        CHECK(d.quotient * q + d.remainder == f);
        CHECK(d.remainder.degree() < q.degree());
        CHECK(d.achieved <= d.claimed);

        auto [oq, orem] = synthetic_division(f, q);
        CHECK(d.quotient == oq);
        CHECK(d.remainder == orem);
    }
}

TEST_CASE("float path residual") {
    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        UniPoly<CD> f, q;
        for (int i = 0; i <= 6; ++i) f += UniPoly<CD>::monomial(pftest::random_scalar<CD>(rng), i);
        for (int i = 0; i < 3; ++i) q += UniPoly<CD>::monomial(pftest::random_scalar<CD>(rng), i);
        q += UniPoly<CD>::monomial(CD(1.0, 0.0), 3);
        if (f.is_zero()) continue;
        auto d = divide_univariate(f, q);
        double res = ScalarTraits<CD>::to_double((d.quotient * q + d.remainder - f).l1_norm());
        CHECK(res <= 1e-10 * std::max(ScalarTraits<CD>::to_double(d.claimed), 1.0));
    }
}

TEST_CASE("translate and dilate") {
    UniPoly<QQ> p = UniPoly<QQ>::xpow(2);
    auto shifted = p.translated(QQ(1)); // (x+1)^2
    CHECK(shifted.coeff(0) == QQ(1));
    CHECK(shifted.coeff(1) == QQ(2));
    CHECK(shifted.coeff(2) == QQ(1));

    auto dil = p.dilated(QQ(3)); // (3x)^2
    CHECK(dil.coeff(2) == QQ(9));
}
