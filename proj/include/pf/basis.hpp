#ifndef PF_BASIS_HPP
#define PF_BASIS_HPP

#include <vector>

#include "pf/forms.hpp"

namespace pf {

// Monomial primitive omega_(a,b) = x^a y^(b+1) dx, so that
// d omega_(a,b) = -(b+1) x^a y^b dx^dy. With this choice the expansion of
// any 2-form over {d omega_i} is diagonal: the coefficient on x^a y^b
// divides by -(b+1).
struct BasisEntry {
    int a = 0;
    int b = 0;
};

class FormBasis {
public:
    FormBasis() = default;
    FormBasis(int n, std::vector<BasisEntry> entries) : n_(n), entries_(std::move(entries)) {}

    // all nu = n(2n-1) monomial primitives of degree <= 2n,
    // ordered by total degree, then x-exponent descending
    static FormBasis redundant(int n) {
        std::vector<BasisEntry> es;
        for (int d = 0; d <= 2 * n - 2; ++d)
            for (int a = d; a >= 0; --a) es.push_back({a, d - a});
        return FormBasis(n, std::move(es));
    }

    // x^(i-1) y dx, i = 1..n
    static FormBasis hyperelliptic(int n) {
        std::vector<BasisEntry> es;
        for (int i = 0; i < n; ++i) es.push_back({i, 0});
        return FormBasis(n, std::move(es));
    }

    // x^i y^(j+1) dx, 0 <= i <= n-1, 0 <= j <= m-1, same graded order
    static FormBasis doubly(int n, int m) {
        std::vector<BasisEntry> es;
        for (int d = 0; d <= n + m - 2; ++d)
            for (int a = std::min(d, n - 1); a >= 0; --a) {
                int b = d - a;
                if (b <= m - 1) es.push_back({a, b});
            }
        return FormBasis(n, std::move(es));
    }

    int n() const { return n_; }
    int nu() const { return int(entries_.size()); }
    const std::vector<BasisEntry>& entries() const { return entries_; }
    const BasisEntry& entry(int i) const { return entries_[i]; }

    int form_degree(int i) const { return entries_[i].a + entries_[i].b + 2; }

    int index_of(int a, int b) const {
        for (size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].a == a && entries_[i].b == b) return int(i);
        return -1;
    }

    template <class K>
    Form1<K> form(int i) const {
        const auto& e = entries_[i];
        return {BiPoly<K>::monomial(ScalarTraits<K>::from_int(1), e.a, e.b + 1), BiPoly<K>()};
    }

    template <class K>
    Form2<K> dform(int i) const {
        const auto& e = entries_[i];
        return {BiPoly<K>::monomial(ScalarTraits<K>::from_int(-(e.b + 1)), e.a, e.b)};
    }

    // diagonal expansion of W over {d omega_i}; every monomial of W must
    // be covered by an entry
    template <class K>
    std::vector<K> expand(const Form2<K>& W) const {
        std::vector<K> c(entries_.size(), K(0));
        for (const auto& [e, v] : W.f.terms()) {
            int i = index_of(e.a, e.b);
            if (i < 0) throw PreconditionError("FormBasis::expand: 2-form outside the basis span");
            c[i] = -v / ScalarTraits<K>::from_int(e.b + 1);
        }
        return c;
    }

    template <class K>
    Form2<K> combine(const std::vector<K>& c) const {
        Form2<K> W;
        for (size_t i = 0; i < entries_.size(); ++i)
            if (!ScalarTraits<K>::is_zero(c[i])) W += c[i] * dform<K>(int(i));
        return W;
    }

private:
    int n_ = 0;
    std::vector<BasisEntry> entries_;
};

inline FormBasis basis_forms(int n) {
    if (n < 1) throw PreconditionError("basis_forms: n >= 1 required");
    return FormBasis::redundant(n);
}

} // namespace pf

#endif
