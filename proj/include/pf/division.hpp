#ifndef PF_DIVISION_HPP
#define PF_DIVISION_HPP

#include <utility>

#include "pf/forms.hpp"
#include "pf/normalization.hpp"

namespace pf {

template <class K>
Form1<K> form_principal(const Form1<K>& w) {
    auto d = w.degree();
    if (!d) return w;
    return {w.P.homogeneous_component(*d - 1), w.Q.homogeneous_component(*d - 1)};
}

template <class K>
struct DivisionCert {
    RealOf<K> C{};        // 1 + ||xi - xihat||
    RealOf<K> Kfactor{};  // 1 + C + ... + C^(d-2n)
    RealOf<K> claimed{};  // Kfactor * ||Omega||
    RealOf<K> achieved{}; // ||eta|| + ||Theta||
};

// Omega = xi ^ eta + Theta with deg Theta <= 2n.
template <class K>
struct FormDivision {
    Form1<K> eta;
    Form2<K> theta;
    DivisionCert<K> cert;
};

// Division of 2-forms by a fixed 1-form xi of degree n+1 normalized at
// infinity. The top-degree step inverts the Sylvester map of the principal
// coefficients once; everything else is monomial bookkeeping chosen so
// that the coefficient-sum norm never grows.
template <class K>
class NormalizedDivider {
public:
    explicit NormalizedDivider(Form1<K> xi) : xi_(std::move(xi)) {
        auto d = xi_.degree();
        if (!d || *d < 2) throw PreconditionError("NormalizedDivider: 1-form of degree >= 2 expected");
        n_ = *d - 1;
        xihat_ = form_principal(xi_);
        syl_ = sylvester_map(xihat_.P.homogeneous_component(n_), xihat_.Q.homogeneous_component(n_), n_);
        if (!syl_.invertible())
            throw PreconditionError("NormalizedDivider: principal part not regular (singular Sylvester map)");
        if (!leq_with_slack<K>(syl_.inverse_norm(), RealOf<K>(1)))
            throw PreconditionError("NormalizedDivider: 1-form not normalized at infinity");
        c_ = (xi_ - xihat_).l1_norm();
    }

    int pair_degree() const { return n_; }
    const Form1<K>& xi() const { return xi_; }
    const Form1<K>& xi_hat() const { return xihat_; }
    RealOf<K> lower_norm() const { return c_; }

    // Exact division of a homogeneous 2-form of degree 2n+1 by the
    // principal part: Omega = xihat ^ eta, ||eta|| <= ||Omega||.
    Form1<K> divide_top(const Form2<K>& Omega) const {
        auto d = Omega.degree();
        if (!d || *d != 2 * n_ + 1 || !Omega.f.is_homogeneous())
            throw PreconditionError("divide_top: homogeneous 2-form of degree 2n+1 expected");
        auto f = homogeneous_coeffs(Omega.f, 2 * n_ - 1);
        auto [u, v] = syl_.solve_pair(f);
        return {-from_homogeneous_coeffs(v, n_ - 1), from_homogeneous_coeffs(u, n_ - 1)};
    }

    // Exact division when every term has degree > 2n: each monomial is
    // split as cofactor * (monomial of degree 2n-1) with the fixed choice
    // a2 = min(a, 2n-1), and the inner part is divided as above. Monomial
    // multiplication preserves the norm, so ||eta|| <= ||Omega|| survives.
    Form1<K> divide_high(const Form2<K>& Omega) const {
        const int top = 2 * n_ - 1;
        Form1<K> eta;
        for (const auto& [e, c] : Omega.f.terms()) {
            if (e.deg() < top)
                throw PreconditionError("divide_high: form has terms of degree <= 2n");
            const int a2 = std::min(e.a, top);
            const int b2 = top - a2;
            Form2<K> inner{BiPoly<K>::monomial(c, a2, b2)};
            Form1<K> part = divide_top(inner);
            eta.P += part.P.shifted_exponents(e.a - a2, e.b - b2);
            eta.Q += part.Q.shifted_exponents(e.a - a2, e.b - b2);
        }
        return eta;
    }

    // General division with remainder: peel the part of degree > 2n,
    // divide it by the principal part, fold the correction
    // (xihat - xi) ^ eta back in, and repeat while the degree drops.
    FormDivision<K> divide(const Form2<K>& Omega) const {
        const int rem_deg = 2 * n_; // remainder degree bound as a 2-form
        FormDivision<K> out;
        Form2<K> cur = Omega;
        Form1<K> low = xihat_ - xi_;
        while (true) {
            Form2<K> high{cur.f.truncate_gt(rem_deg - 2)};
            if (high.is_zero()) {
                out.theta = cur;
                break;
            }
            Form2<K> rest{cur.f.truncate_le(rem_deg - 2)};
            Form1<K> etat = divide_high(high);
            out.eta += etat;
            cur = rest + wedge(low, etat);
        }

        using Real = RealOf<K>;
        const Real C = Real(1) + c_;
        auto dd = Omega.degree();
        const int d = dd ? std::max(*dd, rem_deg) : rem_deg;
        Real Kfac(1), Cpow(1);
        for (int i = 1; i <= d - rem_deg; ++i) {
            Cpow *= C;
            Kfac += Cpow;
        }
        out.cert.C = C;
        out.cert.Kfactor = Kfac;
        out.cert.claimed = Kfac * Omega.l1_norm();
        out.cert.achieved = out.eta.l1_norm() + out.theta.l1_norm();
        return out;
    }

private:
    Form1<K> xi_;
    Form1<K> xihat_;
    SylvesterMap<K> syl_;
    int n_ = 0;
    RealOf<K> c_{};
};

template <class K>
Form1<K> divide_top_homogeneous(const Form2<K>& Omega, const Form1<K>& xi_hat) {
    if (!(xi_hat == form_principal(xi_hat)))
        throw PreconditionError("divide_top_homogeneous: homogeneous 1-form expected");
    return NormalizedDivider<K>(xi_hat).divide_top(Omega);
}

template <class K>
Form1<K> divide_homogeneous(const Form2<K>& Omega, const Form1<K>& xi_hat) {
    if (!(xi_hat == form_principal(xi_hat)))
        throw PreconditionError("divide_homogeneous: homogeneous 1-form expected");
    return NormalizedDivider<K>(xi_hat).divide_high(Omega);
}

template <class K>
FormDivision<K> divide_2form(const Form2<K>& Omega, const Form1<K>& xi) {
    return NormalizedDivider<K>(xi).divide(Omega);
}

// Division by the differential of a balanced Hamiltonian. For balanced H
// the lower part of dH has norm <= n, so the generic certificate factor
// never exceeds (n+1)^{n+1}; the recorded claim takes the smaller of the
// two.
template <class K>
FormDivision<K> divide_by_dH(const Form2<K>& Omega, const BiPoly<K>& H) {
    using Real = RealOf<K>;
    if (!is_balanced(H)) throw PreconditionError("divide_by_dH: Hamiltonian not balanced");
    const int n = *H.degree() - 1;
    if (!Omega.degree_le(3 * n)) throw PreconditionError("divide_by_dH: 2-form degree exceeds 3n");
    FormDivision<K> out = NormalizedDivider<K>(differential(H)).divide(Omega);
    Real cap(1);
    for (int i = 0; i < n + 1; ++i) cap *= Real(n + 1);
    Real capped = cap * Omega.l1_norm();
    if (capped < out.cert.claimed) out.cert.claimed = capped;
    return out;
}

} // namespace pf

#endif
