#ifndef PF_SCALAR_HPP
#define PF_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

#include <gmpxx.h>

namespace pf {

using CD = std::complex<double>;
using QQ = mpq_class;

// Coefficient backend traits. Two backends are supported:
//   CD - complex double precision (default everywhere),
//   QQ - exact arbitrary-precision rationals, for real-rational inputs
//        and for tests that assert residuals are literally zero.
// `Real` is the type carrying norms and absolute values; it is exact for QQ.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<CD> {
    using Real = double;
    static constexpr bool exact = false;
    static Real abs(const CD& v) { return std::abs(v); }
    static bool is_zero(const CD& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static CD from_int(long n) { return CD(double(n), 0.0); }
    static CD from_ratio(long p, long q) { return CD(double(p) / double(q), 0.0); }
    static double to_double(const Real& r) { return r; }
    static CD to_value(const Real& r) { return CD(r, 0.0); }
    static std::string str(const CD& v) {
        std::ostringstream os;
        os.precision(17);
        if (v.imag() == 0.0)
            os << v.real();
        else
            os << '(' << v.real() << ',' << v.imag() << ')';
        return os.str();
    }
};

template <>
struct ScalarTraits<QQ> {
    using Real = QQ;
    static constexpr bool exact = true;
    static Real abs(const QQ& v) { return QQ(::abs(v)); }
    static bool is_zero(const QQ& v) { return sgn(v) == 0; }
    static QQ from_int(long n) { return QQ(n); }
    static QQ from_ratio(long p, long q) {
        QQ r(p, q);
        r.canonicalize();
        return r;
    }
    static double to_double(const Real& r) { return r.get_d(); }
    static QQ to_value(const Real& r) { return r; }
    static std::string str(const QQ& v) { return v.get_str(); }
};

template <class K>
using RealOf = typename ScalarTraits<K>::Real;

inline CD to_complex(const CD& v) { return v; }
inline CD to_complex(const QQ& v) { return CD(v.get_d(), 0.0); }

// "value <= bound" with a relative slack on the inexact backend; exact
// comparison on the rational one.
template <class K>
bool leq_with_slack(const RealOf<K>& value, const RealOf<K>& bound, double rel = 1e-9) {
    if constexpr (ScalarTraits<K>::exact) {
        (void)rel;
        return value <= bound;
    } else {
        return value <= bound + rel * (std::abs(bound) + 1.0);
    }
}

} // namespace pf

#endif
