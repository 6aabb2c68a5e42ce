#ifndef PF_DERIVE_HPP
#define PF_DERIVE_HPP

#include <string>
#include <vector>

#include "pf/basis.hpp"
#include "pf/critical.hpp"
#include "pf/division.hpp"
#include "pf/matrix.hpp"
#include "pf/roots.hpp"
#include "pf/unipoly.hpp"

namespace pf {

enum class Provenance { Hyperelliptic, Doubly, Redundant, Fuchsianized, Block };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Hyperelliptic: return "hyperelliptic";
        case Provenance::Doubly: return "doubly";
        case Provenance::Redundant: return "redundant";
        case Provenance::Fuchsianized: return "fuchsianized";
        case Provenance::Block: return "block";
    }
    return "?";
}

template <class K>
struct SystemCert {
    RealOf<K> norm_A{};   // max column sum
    RealOf<K> norm_B{};
    RealOf<K> achieved{}; // ||A|| + ||B||
    double bound_thm = 0.0;   // statement constant
    double bound_proof = 0.0; // proof constant (the one acceptance uses)
};

// The pencil (t - A) dI/dt = B I over the recorded basis of monomial
// 1-forms, together with the divisor witnesses eta_i certifying
//   H d omega_i = dH ^ eta_i + sum_j A_ij d omega_j,
//   d eta_i     = sum_j B_ij d omega_j.
template <class K>
struct PFSystem {
    int n = 0; // deg H = n + 1
    int nu = 0;
    Provenance provenance = Provenance::Redundant;
    FormBasis basis;
    Mat<K> A, B;
    std::vector<Form1<K>> etas;
    std::vector<K> basis_scale; // per-form scale factors; empty means all 1
    SystemCert<K> cert;
    BiPoly<K> hamiltonian;
    double fuchs_s = 0.0; // homotopy parameter, when provenance == Fuchsianized
};

template <class K>
struct BlockSystem {
    int m = 0;    // extension order
    int size = 0; // (m+1) * nu
    Mat<K> blockA, blockB;
    double norm_bound = 0.0; // ||A|| + ||B|| + m + (m+1)||A||, coarse column bound
};

namespace detail {
template <class K>
void fill_cert_norms(PFSystem<K>& sys) {
    sys.cert.norm_A = col_norm(sys.A);
    sys.cert.norm_B = col_norm(sys.B);
    sys.cert.achieved = sys.cert.norm_A + sys.cert.norm_B;
}
} // namespace detail

// Hyperelliptic Hamiltonian (y^2)/2 + p(x) for monic p of degree n+1
// without the x^n term. Row i comes from the single univariate division
// x^(i-1) p = b_i p' + a_i:
//   A_ij = [x^(j-1)] a_i,   B = E/2 + ([x^(j-1)] b_i')_ij,
// with eta_i = x^(i-1) y dx / 2 - b_i(x) dy. The sign of the diagonal of
// B is pinned by the ellipse oracle (I = sqrt(2) pi t for p = x^2), which
// forces spectrum {1/2 + i/(n+1)}; only |B_ii - 1/2| = i/(n+1) is
// orientation-free.
template <class K>
PFSystem<K> derive_hyperelliptic(const UniPoly<K>& p) {
    using Traits = ScalarTraits<K>;
    using Real = RealOf<K>;
    const int np1 = p.degree();
    const int n = np1 - 1;
    if (n < 1) throw PreconditionError("derive_hyperelliptic: deg p >= 2 required");
    if (!leq_with_slack<K>(Traits::abs(p.leading() - Traits::from_int(1)), Real(0), 1e-12))
        throw PreconditionError("derive_hyperelliptic: p must be monic");
    if (!leq_with_slack<K>(Traits::abs(p.coeff(n)), Real(0), 1e-12))
        throw PreconditionError("derive_hyperelliptic: coefficient of x^n must vanish");

    PFSystem<K> sys;
    sys.n = n;
    sys.nu = n;
    sys.provenance = Provenance::Hyperelliptic;
    sys.basis = FormBasis::hyperelliptic(n);
    sys.A = Mat<K>(n, n);
    sys.B = Mat<K>(n, n);
    const K half = Traits::from_ratio(1, 2);
    sys.hamiltonian = half * (BiPoly<K>::y() * BiPoly<K>::y()) + p.as_bipoly(0);

    const UniPoly<K> dp = p.derivative();
    for (int i = 1; i <= n; ++i) {
        auto div = divide_univariate(UniPoly<K>::xpow(i - 1) * p, dp);
        const UniPoly<K>& a = div.remainder;
        const UniPoly<K>& b = div.quotient;
        for (int j = 1; j <= n; ++j) sys.A(i - 1, j - 1) = a.coeff(j - 1);
        const UniPoly<K> bprime = b.derivative();
        for (int j = 1; j <= n; ++j) sys.B(i - 1, j - 1) = bprime.coeff(j - 1);
        sys.B(i - 1, i - 1) += half;
        // eta_i = (1/2) x^(i-1) y dx - b_i(x) dy
        Form1<K> eta{half * BiPoly<K>::monomial(Traits::from_int(1), i - 1, 1), -b.as_bipoly(0)};
        sys.etas.push_back(std::move(eta));
    }

    detail::fill_cert_norms(sys);
    const double C = Traits::to_double(p.l1_norm());
    double geo = 1.0, Cp = 1.0;
    for (int i = 1; i <= np1; ++i) {
        Cp *= C;
        geo += Cp;
    }
    sys.cert.bound_thm = sys.cert.bound_proof = double(n) * double(n) * geo;
    return sys;
}

// H = p(x) + q(y), both monic. The nm primitives x^i y^(j+1) dx are
// handled through the pair of univariate divisions
//   p x^i = b_i p' + a_i,   q y^j = b*_j q' + a*_j.
template <class K>
PFSystem<K> derive_doubly_hyperelliptic(const UniPoly<K>& p, const UniPoly<K>& q) {
    using Traits = ScalarTraits<K>;
    using Real = RealOf<K>;
    const int n = p.degree() - 1, m = q.degree() - 1;
    if (n < 1 || m < 1) throw PreconditionError("derive_doubly_hyperelliptic: degrees >= 2 required");
    for (const auto* poly : {&p, &q})
        if (!leq_with_slack<K>(Traits::abs(poly->leading() - Traits::from_int(1)), Real(0), 1e-12))
            throw PreconditionError("derive_doubly_hyperelliptic: inputs must be monic");

    PFSystem<K> sys;
    sys.n = n;
    sys.provenance = Provenance::Doubly;
    sys.basis = FormBasis::doubly(n, m);
    sys.nu = sys.basis.nu();
    sys.A = Mat<K>(sys.nu, sys.nu);
    sys.B = Mat<K>(sys.nu, sys.nu);
    sys.hamiltonian = p.as_bipoly(0) + q.as_bipoly(1);

    std::vector<UniPoly<K>> ax(n), bx(n), ay(m), by(m);
    const UniPoly<K> dp = p.derivative(), dq = q.derivative();
    for (int i = 0; i < n; ++i) {
        auto d = divide_univariate(UniPoly<K>::xpow(i) * p, dp);
        ax[i] = d.remainder;
        bx[i] = d.quotient;
    }
    for (int j = 0; j < m; ++j) {
        auto d = divide_univariate(UniPoly<K>::xpow(j) * q, dq);
        ay[j] = d.remainder;
        by[j] = d.quotient;
    }

    for (int row = 0; row < sys.nu; ++row) {
        const auto [i, j] = std::pair(sys.basis.entry(row).a, sys.basis.entry(row).b);
        const K jw = Traits::from_int(j + 1);
        // remainder  -(j+1) (a_i(x) y^j + x^i a*_j(y)) dx^dy;
        // the x-part lands on columns (k, j), the y-part on (i, l)
        for (int k = 0; k < n; ++k) {
            int col = sys.basis.index_of(k, j);
            sys.A(row, col) += ax[i].coeff(k);
        }
        for (int l = 0; l < m; ++l) {
            int col = sys.basis.index_of(i, l);
            sys.A(row, col) += jw * ay[j].coeff(l) / Traits::from_int(l + 1);
        }
        const UniPoly<K> bxp = bx[i].derivative(), byp = by[j].derivative();
        for (int k = 0; k < n; ++k) {
            int col = sys.basis.index_of(k, j);
            sys.B(row, col) += bxp.coeff(k);
        }
        for (int l = 0; l < m; ++l) {
            int col = sys.basis.index_of(i, l);
            sys.B(row, col) += jw * byp.coeff(l) / Traits::from_int(l + 1);
        }
        // eta_ij = (j+1) [ x^i b*_j(y) dx - b_i(x) y^j dy ]
        Form1<K> eta{jw * by[j].as_bipoly(1).shifted_exponents(i, 0),
                     -(jw * bx[i].as_bipoly(0).shifted_exponents(0, j))};
        sys.etas.push_back(std::move(eta));
    }

    detail::fill_cert_norms(sys);
    // no closed-form constant is stated for the doubly hyperelliptic case
    sys.cert.bound_thm = sys.cert.bound_proof = 0.0;
    return sys;
}

// The redundant system for a balanced Hamiltonian. Each H d omega_i is
// split through the Euler identity into an exactly divisible principal
// part plus a correction of degree <= 3n and norm <= 6n, which the
// certified division then handles:
//   eta'_i  = (d omega_i / dx^dy) rho / (n+1),      ||eta'_i|| <= 4
//   Omega'_i = h d omega_i - dh ^ eta'_i,           ||Omega'_i|| <= 6n
//   Omega'_i = dH ^ eta''_i + Theta_i               (certified division)
//   eta_i = eta'_i + eta''_i.
template <class K>
PFSystem<K> derive_redundant(const BiPoly<K>& H) {
    using Traits = ScalarTraits<K>;
    if (!is_balanced(H)) throw PreconditionError("derive_redundant: Hamiltonian not balanced");
    const int n = *H.degree() - 1;

    PFSystem<K> sys;
    sys.n = n;
    sys.provenance = Provenance::Redundant;
    sys.basis = basis_forms(n);
    sys.nu = sys.basis.nu();
    sys.A = Mat<K>(sys.nu, sys.nu);
    sys.B = Mat<K>(sys.nu, sys.nu);
    sys.hamiltonian = H;

    const BiPoly<K> Hhat = principal_part(H);
    const BiPoly<K> h = H - Hhat;
    const Form1<K> dh = differential(h);
    const Form1<K> rho = rho_form<K>();
    const K np1 = Traits::from_int(n + 1);
    NormalizedDivider<K> divider(differential(H));

    for (int i = 0; i < sys.nu; ++i) {
        const Form2<K> dw = sys.basis.dform<K>(i);
        Form1<K> eta1 = (dw.f / np1) * rho;
        Form2<K> omega_cor = Form2<K>{h * dw.f} - wedge(dh, eta1);
        FormDivision<K> fd = divider.divide(omega_cor);
        Form1<K> eta = eta1 + fd.eta;

        auto arow = sys.basis.expand(fd.theta);
        auto brow = sys.basis.expand(exterior_d(eta));
        for (int j = 0; j < sys.nu; ++j) {
            sys.A(i, j) = arow[j];
            sys.B(i, j) = brow[j];
        }
        sys.etas.push_back(std::move(eta));
    }

    detail::fill_cert_norms(sys);
    double pw = 1.0;
    for (int i = 0; i < n + 1; ++i) pw *= double(n + 1);
    sys.cert.bound_thm = 6.0 * double(n) * pw;          // 6 n (n+1)^(n+1)
    sys.cert.bound_proof = 6.0 * pw * double(n + 1);    // 6 (n+1)^(n+2)
    return sys;
}

// Quasimonic but unbalanced input with ||H - Hhat|| <= c: derive for the
// balancing substitution lambda^{-(n+1)} H(lambda x, lambda y), then undo
// the induced time change t -> lambda^{-(n+1)} t. B survives unchanged, A
// picks up lambda^(n+1), and the basis forms carry the per-degree scale
// factors lambda^{-deg omega_i} (they are no longer unit norm).
template <class K>
PFSystem<K> derive_redundant_unbalanced(const BiPoly<K>& H, const RealOf<K>& c) {
    using Traits = ScalarTraits<K>;
    using Real = RealOf<K>;
    if (!is_quasimonic(H)) throw PreconditionError("derive_redundant_unbalanced: not quasimonic");
    const int np1 = *H.degree();
    const Real hnorm = (H - principal_part(H)).l1_norm();
    if (!leq_with_slack<K>(hnorm, c)) throw PreconditionError("derive_redundant_unbalanced: c < ||H - Hhat||");

    if (leq_with_slack<K>(c, Real(1), 0.0)) {
        PFSystem<K> sys = derive_redundant(H);
        sys.hamiltonian = H;
        return sys;
    }

    const K lambda = Traits::to_value(c);
    BiPoly<K> G = H.dilated(lambda, lambda);
    const K lam_pow = pow_k(lambda, np1);
    G /= lam_pow;
    PFSystem<K> sys = derive_redundant(G);
    sys.hamiltonian = H;
    sys.A *= lam_pow;

    const K inv_lambda = Traits::from_int(1) / lambda;
    sys.basis_scale.resize(sys.nu);
    for (int i = 0; i < sys.nu; ++i) sys.basis_scale[i] = pow_k(inv_lambda, sys.basis.form_degree(i));
    for (auto& eta : sys.etas) {
        eta.P = eta.P.dilated(inv_lambda, inv_lambda) * inv_lambda;
        eta.Q = eta.Q.dilated(inv_lambda, inv_lambda) * inv_lambda;
    }

    detail::fill_cert_norms(sys);
    double pw = 1.0;
    const int n = np1 - 1;
    for (int i = 0; i < np1 + 1; ++i) pw *= double(n + 1);
    const double cd = Traits::to_double(c);
    sys.cert.bound_thm = sys.cert.bound_proof = 6.0 * pw * std::pow(cd, np1); // 6 (n+1)^(n+2) c^(n+1)
    return sys;
}

// Block system for the generators t^k I, 0 <= k <= m = floor(d/(n+1)).
// Differentiating the pencil gives, per level k,
//   t (t^k I)' = A (t^k I)' + (B + kE) t^k I - k A t^(k-1) I,
// i.e. block-diagonal A blocks and block-bidiagonal B blocks.
template <class K>
BlockSystem<K> extend_block(const PFSystem<K>& sys, int d) {
    using Traits = ScalarTraits<K>;
    if (d < 0) throw PreconditionError("extend_block: d >= 0 required");
    const int nu = sys.nu;
    const int m = d / (sys.n + 1);
    BlockSystem<K> bs;
    bs.m = m;
    bs.size = (m + 1) * nu;
    bs.blockA = Mat<K>(bs.size, bs.size);
    bs.blockB = Mat<K>(bs.size, bs.size);
    for (int k = 0; k <= m; ++k) {
        const int off = k * nu;
        for (int i = 0; i < nu; ++i) {
            for (int j = 0; j < nu; ++j) {
                bs.blockA(off + i, off + j) = sys.A(i, j);
                bs.blockB(off + i, off + j) = sys.B(i, j);
                if (k > 0) bs.blockB(off + i, off - nu + j) = -Traits::from_int(k) * sys.A(i, j);
            }
            bs.blockB(off + i, off + i) += Traits::from_int(k);
        }
    }
    const double nA = Traits::to_double(col_norm(sys.A));
    const double nB = Traits::to_double(col_norm(sys.B));
    bs.norm_bound = nA + nB + double(m) + double(m + 1) * nA;
    return bs;
}

namespace detail {

// monomial 1-forms of degree <= n-1 (coefficient degree <= n-2)
template <class K>
std::vector<Form1<K>> low_degree_one_forms(int n) {
    std::vector<Form1<K>> out;
    const K one = ScalarTraits<K>::from_int(1);
    for (int d = 0; d <= n - 2; ++d)
        for (int a = d; a >= 0; --a) {
            out.push_back({BiPoly<K>::monomial(one, a, d - a), BiPoly<K>()});
            out.push_back({BiPoly<K>(), BiPoly<K>::monomial(one, a, d - a)});
        }
    return out;
}

inline double min_pairwise_gap(const std::vector<CD>& zs) {
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j) gap = std::min(gap, std::abs(zs[i] - zs[j]));
    return gap;
}

} // namespace detail

// Simple-spectrum version of the redundant system for a Morse balanced
// Hamiltonian. A second system is built by forcing the remainders into a
// certified complement basis of mu = n^2 forms (prescribed lambdas on the
// redundant rows), and the dyadic homotopy toward the norm-bounded system
// is scanned for the smallest s whose A(s) still has pairwise eigenvalue
// gaps above 1e-8 times the spectral radius.
template <class K>
PFSystem<K> fuchsianize(const BiPoly<K>& H, const std::vector<K>& lambdas) {
    using Traits = ScalarTraits<K>;
    PFSystem<K> base = derive_redundant(H);
    const int n = base.n;
    const int mu = n * n;
    if (base.nu == mu) {
        if (!lambdas.empty()) throw PreconditionError("fuchsianize: no redundant rows, no lambdas expected");
        base.provenance = Provenance::Fuchsianized;
        return base;
    }
    if (int(lambdas.size()) != base.nu - mu)
        throw PreconditionError("fuchsianize: need exactly nu - mu lambda values");

    // Morse check and lambda separation, both on the numeric locus
    CriticalLocus locus = critical_points(to_complex_poly(H));
    double tscale = 1e-300;
    for (const auto& t : locus.values) tscale = std::max(tscale, std::abs(t));
    for (const auto& l : lambdas) tscale = std::max(tscale, std::abs(to_complex(l)));
    const double gap_tol = 1e-8 * std::max(tscale, 1e-12);
    if (detail::min_pairwise_gap(locus.values) <= gap_tol)
        throw PreconditionError("fuchsianize: Hamiltonian is not Morse (critical values collide)");
    {
        std::vector<CD> all = locus.values;
        for (const auto& l : lambdas) all.push_back(to_complex(l));
        if (detail::min_pairwise_gap(all) <= gap_tol)
            throw PreconditionError("fuchsianize: lambdas must be distinct from each other and from critical values");
    }

    // image of eta -> dH ^ eta on low-degree 1-forms, in d-omega coordinates
    const Form1<K> dH = differential(H);
    const auto betas = detail::low_degree_one_forms<K>(n);
    Mat<K> M(base.nu, int(betas.size()));
    for (size_t k = 0; k < betas.size(); ++k) {
        auto col = base.basis.expand(wedge(dH, betas[k]));
        for (int i = 0; i < base.nu; ++i) M(i, int(k)) = col[i];
    }
    auto completion = completing_coordinates(M);
    if (!completion || int(completion->size()) != mu)
        throw InternalError("fuchsianize: cannot certify a complement basis of codimension mu");
    const std::vector<int> S = *completion;
    std::vector<int> in_S(base.nu, -1);
    for (size_t j = 0; j < S.size(); ++j) in_S[S[j]] = int(j);

    // square system [M | E_S]
    const int cols_m = int(betas.size());
    Mat<K> square(base.nu, base.nu);
    for (int i = 0; i < base.nu; ++i) {
        for (int k = 0; k < cols_m; ++k) square(i, k) = M(i, k);
        for (int j = 0; j < mu; ++j) square(i, cols_m + j) = (S[size_t(j)] == i) ? Traits::from_int(1) : K(0);
    }

    Mat<K> A2(base.nu, base.nu), B2(base.nu, base.nu);
    std::vector<Form1<K>> etas2(base.nu);
    int lambda_pos = 0;
    for (int i = 0; i < base.nu; ++i) {
        // Theta_i back from the stored expansion
        std::vector<K> theta(base.nu);
        for (int j = 0; j < base.nu; ++j) theta[j] = base.A(i, j);
        K lam = K(0);
        if (in_S[i] < 0) {
            lam = lambdas[size_t(lambda_pos++)];
            theta[i] -= lam;
        }
        auto w = solve(square, theta);
        if (!w) throw InternalError("fuchsianize: restricted division solve failed");
        Form1<K> kappa;
        for (int k = 0; k < cols_m; ++k) kappa += (*w)[k] * betas[k];
        etas2[i] = base.etas[i] + kappa;
        for (int j = 0; j < mu; ++j) A2(i, S[size_t(j)]) = (*w)[cols_m + j];
        if (in_S[i] < 0) A2(i, i) += lam;
        auto brow = base.basis.expand(exterior_d(etas2[i]));
        for (int j = 0; j < base.nu; ++j) B2(i, j) = brow[j];
    }

    // dyadic homotopy scan: smallest s with a certified simple spectrum
    double best_s = -1.0;
    Mat<K> bestA, bestB;
    std::vector<Form1<K>> best_etas;
    for (int k = 1; k <= 40; ++k) {
        const K s = pow_k(Traits::from_ratio(1, 2), k);
        const K one_minus = Traits::from_int(1) - s;
        Mat<K> As(base.nu, base.nu), Bs(base.nu, base.nu);
        for (int i = 0; i < base.nu; ++i)
            for (int j = 0; j < base.nu; ++j) {
                As(i, j) = one_minus * base.A(i, j) + s * A2(i, j);
                Bs(i, j) = one_minus * base.B(i, j) + s * B2(i, j);
            }
        auto eigs = mat_eigenvalues(to_complex_mat(As));
        double rad = 1e-300;
        for (const auto& z : eigs) rad = std::max(rad, std::abs(z));
        if (detail::min_pairwise_gap(eigs) > 1e-8 * rad) {
            best_s = Traits::to_double(ScalarTraits<K>::abs(s));
            bestA = As;
            bestB = Bs;
            best_etas.clear();
            for (int i = 0; i < base.nu; ++i)
                best_etas.push_back(Form1<K>{one_minus * base.etas[i].P + s * etas2[i].P,
                                             one_minus * base.etas[i].Q + s * etas2[i].Q});
        } else if (best_s > 0.0) {
            break; // gaps only shrink further down the dyadic ladder
        }
    }
    if (best_s < 0.0) throw InternalError("fuchsianize: no dyadic homotopy parameter yields a simple spectrum");

    PFSystem<K> out = base;
    out.provenance = Provenance::Fuchsianized;
    out.A = bestA;
    out.B = bestB;
    out.etas = best_etas;
    out.fuchs_s = best_s;
    detail::fill_cert_norms(out);
    return out;
}

} // namespace pf

#endif
