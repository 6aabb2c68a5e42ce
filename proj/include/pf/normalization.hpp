#ifndef PF_NORMALIZATION_HPP
#define PF_NORMALIZATION_HPP

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "pf/bipoly.hpp"
#include "pf/error.hpp"
#include "pf/forms.hpp"
#include "pf/matrix.hpp"

namespace pf {

// Coefficient string of a homogeneous polynomial of the given degree,
// ordered by x-exponent descending: (x^n, x^{n-1}y, ..., y^n).
template <class K>
std::vector<K> homogeneous_coeffs(const BiPoly<K>& p, int n) {
    if (!p.is_zero() && (!p.is_homogeneous() || *p.degree() != n))
        throw PreconditionError("homogeneous_coeffs: polynomial is not homogeneous of the expected degree");
    std::vector<K> v(n + 1, K(0));
    for (const auto& [e, c] : p.terms()) v[e.b] = c;
    return v;
}

template <class K>
BiPoly<K> from_homogeneous_coeffs(const std::vector<K>& v, int n) {
    BiPoly<K> p;
    for (int j = 0; j <= n; ++j) p.add_term(n - j, j, v[j]);
    return p;
}

// The linear map (u, v) -> a*u + b*v from pairs of homogeneous
// degree-(n-1) polynomials to homogeneous degree-(2n-1) polynomials,
// for a homogeneous pair (a, b) of degree n. Its matrix is the classical
// Sylvester matrix of the pair; the pair is "normalized" when the inverse
// map has column-sum norm <= 1, which is exactly the bounded-division
// property  f = a u + b v,  ||u|| + ||v|| <= ||f||.
template <class K>
struct SylvesterMap {
    int n = 0;       // degree of the pair
    Mat<K> matrix;   // 2n x 2n, rows = degree-(2n-1) monomials (x-desc),
                     // columns = u-monomials then v-monomials (x-desc)
    std::optional<Mat<K>> inv; // cached inverse; nullopt when singular

    bool invertible() const { return inv.has_value(); }

    RealOf<K> inverse_norm() const {
        if (!inv) throw PreconditionError("SylvesterMap: not invertible (pair not regular)");
        return col_norm(*inv);
    }

    double condition_number() const {
        if (!inv) return std::numeric_limits<double>::infinity();
        return ScalarTraits<K>::to_double(col_norm(matrix)) * ScalarTraits<K>::to_double(col_norm(*inv));
    }

    // solve a*u + b*v = f for homogeneous f of degree 2n-1;
    // returns the coefficient strings of (u, v), x-exponent descending
    std::pair<std::vector<K>, std::vector<K>> solve_pair(const std::vector<K>& f) const {
        if (!inv) throw PreconditionError("SylvesterMap: not invertible (pair not regular)");
        std::vector<K> uv = inv->apply(f);
        std::vector<K> u(uv.begin(), uv.begin() + n);
        std::vector<K> v(uv.begin() + n, uv.end());
        return {std::move(u), std::move(v)};
    }
};

template <class K>
SylvesterMap<K> sylvester_map(const BiPoly<K>& a, const BiPoly<K>& b, int n) {
    if (n < 1) throw PreconditionError("sylvester_map: pair degree must be >= 1");
    SylvesterMap<K> s;
    s.n = n;
    s.matrix = Mat<K>(2 * n, 2 * n);
    const auto ac = homogeneous_coeffs(a, n);
    const auto bc = homogeneous_coeffs(b, n);
    // a * (x^{n-1-i} y^i) contributes a_j to the row k = i + j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) {
            s.matrix(i + j, i) = ac[j];
            s.matrix(i + j, n + i) = bc[j];
        }
    s.inv = inverse(s.matrix);
    return s;
}

// Sylvester map of the gradient pair of a homogeneous Hamiltonian.
template <class K>
SylvesterMap<K> sylvester_for_hamiltonian(const BiPoly<K>& Hhat) {
    auto d = Hhat.degree();
    if (!d || *d < 2) throw PreconditionError("sylvester_for_hamiltonian: degree too small");
    if (!Hhat.is_homogeneous())
        throw PreconditionError("sylvester_for_hamiltonian: principal part expected (homogeneous)");
    return sylvester_map(Hhat.dx(), Hhat.dy(), *d - 1);
}

// Regularity at infinity: the principal part factors into pairwise
// distinct linear forms iff the gradient pair has nonzero resultant.
// Over CD the determinant is compared against a Hadamard-style scale
// built from the row norms.
template <class K>
bool is_regular_at_infinity(const BiPoly<K>& H) {
    auto d = H.degree();
    if (!d || *d < 2) throw PreconditionError("is_regular_at_infinity: degree too small");
    const BiPoly<K> Hhat = principal_part(H);
    auto s = sylvester_map(Hhat.dx(), Hhat.dy(), *d - 1);
    K det = determinant(s.matrix);
    if constexpr (ScalarTraits<K>::exact) {
        return !ScalarTraits<K>::is_zero(det);
    } else {
        double scale = 1.0;
        for (int i = 0; i < s.matrix.rows(); ++i) {
            double rs = 0.0;
            for (int j = 0; j < s.matrix.cols(); ++j) rs += std::norm(to_complex(s.matrix(i, j)));
            scale *= std::sqrt(rs);
            if (scale == 0.0) return false;
        }
        return std::abs(to_complex(det)) > 1e-10 * scale;
    }
}

// Operator norm of the inverse Sylvester map of grad(Hhat); quasimonic
// means this value is <= 1. Over CD the computation refuses to certify a
// map whose condition number exceeds 1e12.
template <class K>
RealOf<K> normalization_constant(const BiPoly<K>& Hhat) {
    auto s = sylvester_for_hamiltonian(Hhat);
    if (!s.invertible()) throw PreconditionError("normalization_constant: not regular at infinity");
    if constexpr (!ScalarTraits<K>::exact) {
        if (s.condition_number() > 1e12)
            throw PreconditionError("normalization_constant: Sylvester map numerically near-singular");
    }
    return s.inverse_norm();
}

template <class K>
bool is_quasimonic(const BiPoly<K>& H) {
    auto d = H.degree();
    if (!d || *d < 2) return false;
    auto kappa = normalization_constant(principal_part(H));
    return leq_with_slack<K>(kappa, RealOf<K>(1));
}

template <class K>
bool is_balanced(const BiPoly<K>& H) {
    if (!is_quasimonic(H)) return false;
    auto h = H - principal_part(H);
    return leq_with_slack<K>(h.l1_norm(), RealOf<K>(1));
}

template <class K>
struct NormalizationReport {
    bool regular_at_infinity = false;
    double inverse_norm = 0.0;
    bool quasimonic = false;
    K scale_applied{1};
    double condition_number = 0.0;
};

enum class QuasimonicMode {
    Scale,  // lambda * H(x, y); keeps the monomial support fixed
    Dilate, // H(lambda x, lambda y); CD backend only (fractional root of the constant)
};

template <class K>
K pow_k(const K& base, int e) {
    K r = ScalarTraits<K>::from_int(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Rescale a regular-at-infinity Hamiltonian until its principal part is
// normalized. The reported scale lets callers track the induced map of
// integral values.
template <class K>
std::pair<BiPoly<K>, K> make_quasimonic(const BiPoly<K>& H, QuasimonicMode mode = QuasimonicMode::Scale) {
    if (!is_regular_at_infinity(H)) throw PreconditionError("make_quasimonic: not regular at infinity");
    auto d = H.degree();
    const auto kappa = normalization_constant(principal_part(H));
    if (leq_with_slack<K>(kappa, RealOf<K>(1), 0.0)) return {H, ScalarTraits<K>::from_int(1)};
    if (mode == QuasimonicMode::Scale) {
        K lambda = ScalarTraits<K>::to_value(kappa);
        return {lambda * H, lambda};
    }
    if constexpr (ScalarTraits<K>::exact) {
        throw PreconditionError("make_quasimonic: dilate mode needs the floating backend");
    } else {
        double lam = std::pow(ScalarTraits<K>::to_double(kappa), 1.0 / double(*d));
        K lambda(lam);
        return {H.dilated(lambda, lambda), lambda};
    }
}

// lambda^{-(n+1)} H(lambda x, lambda y) with lambda = max(1, ||H - Hhat||):
// the principal part is untouched, every degree-D term picks up
// lambda^{D-(n+1)} <= 1/lambda, so the low-order terms end up of norm <= 1.
template <class K>
std::pair<BiPoly<K>, K> make_balanced(const BiPoly<K>& H) {
    if (!is_quasimonic(H)) throw PreconditionError("make_balanced: not quasimonic");
    const int np1 = *H.degree();
    const auto hnorm = (H - principal_part(H)).l1_norm();
    if (leq_with_slack<K>(hnorm, RealOf<K>(1), 0.0)) return {H, ScalarTraits<K>::from_int(1)};
    K lambda = ScalarTraits<K>::to_value(hnorm);
    BiPoly<K> G = H.dilated(lambda, lambda);
    G /= pow_k(lambda, np1);
    return {G, lambda};
}

template <class K>
NormalizationReport<K> normalization_report(const BiPoly<K>& H) {
    NormalizationReport<K> rep;
    rep.regular_at_infinity = is_regular_at_infinity(H);
    if (!rep.regular_at_infinity) return rep;
    auto s = sylvester_for_hamiltonian(principal_part(H));
    rep.condition_number = s.condition_number();
    rep.inverse_norm = ScalarTraits<K>::to_double(s.inverse_norm());
    rep.quasimonic = is_quasimonic(H);
    return rep;
}

// Sampled lower-bound probe for the Hermitian gradient length on the
// boundary of the unit bidisk. A probe, not a proof: it samples both
// faces {|x|=1} and {|y|=1} with a fixed-seed generator.
template <class K>
double gradient_floor(const BiPoly<K>& Hhat, int samples) {
    if (!Hhat.is_homogeneous() || Hhat.is_zero())
        throw PreconditionError("gradient_floor: homogeneous polynomial expected");
    const BiPoly<CD> Hx = to_complex_poly(Hhat).dx();
    const BiPoly<CD> Hy = to_complex_poly(Hhat).dy();
    std::mt19937_64 rng(0x9e3779b9u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double two_pi = 2.0 * M_PI;
    double best = std::numeric_limits<double>::infinity();
    auto probe = [&](CD x, CD y) {
        double gx = std::abs(Hx.eval(x, y));
        double gy = std::abs(Hy.eval(x, y));
        double len = std::hypot(gx, gy);
        if (len < best) best = len;
    };
    for (int i = 0; i < samples; ++i) {
        double t1 = two_pi * uni(rng), t2 = two_pi * uni(rng);
        double r = (i % 4 == 0) ? 1.0 : uni(rng); // keep the edge well represented
        CD on(std::cos(t1), std::sin(t1));
        CD in = r * CD(std::cos(t2), std::sin(t2));
        if (i % 2 == 0)
            probe(on, in);
        else
            probe(in, on);
    }
    return best;
}

} // namespace pf

#endif
