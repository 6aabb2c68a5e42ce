#ifndef PF_MATRIX_HPP
#define PF_MATRIX_HPP

#include <optional>
#include <vector>

#include "pf/error.hpp"
#include "pf/scalar.hpp"

namespace pf {

// Small dense matrix, row-major. Sizes here are tiny (<= a few dozen), so
// plain Gaussian elimination with max-abs pivoting covers both backends:
// it is exact over the rationals and adequately stable over complex double.
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), d_(size_t(rows) * cols, K(0)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<K>::from_int(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    K& operator()(int i, int j) { return d_[size_t(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return d_[size_t(i) * c_ + j]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const K& v = a(i, k);
                if (ScalarTraits<K>::is_zero(v)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += v * b(k, j);
            }
        return m;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        std::vector<K> out(r_, K(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Mat& operator*=(const K& s) {
        for (auto& v : d_) v *= s;
        return *this;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat m(a.r_, a.c_);
        for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = a.d_[i] + b.d_[i];
        return m;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat m(a.r_, a.c_);
        for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = a.d_[i] - b.d_[i];
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<K> d_;
};

// max over columns of the column sum of absolute values
template <class K>
RealOf<K> col_norm(const Mat<K>& m) {
    using Traits = ScalarTraits<K>;
    RealOf<K> best(0);
    for (int j = 0; j < m.cols(); ++j) {
        RealOf<K> s(0);
        for (int i = 0; i < m.rows(); ++i) s += Traits::abs(m(i, j));
        if (s > best) best = s;
    }
    return best;
}

namespace detail {
template <class K>
int pivot_row(const Mat<K>& m, int col, int from) {
    using Traits = ScalarTraits<K>;
    int best = -1;
    RealOf<K> besta(0);
    for (int i = from; i < m.rows(); ++i) {
        RealOf<K> a = Traits::abs(m(i, col));
        if (a > besta) {
            besta = a;
            best = i;
        }
    }
    return best;
}
template <class K>
void swap_rows(Mat<K>& m, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}
} // namespace detail

// Gauss-Jordan inverse; nullopt when singular (exactly singular over QQ,
// pivot exactly zero over CD).
template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
    using Traits = ScalarTraits<K>;
    const int n = a.rows();
    Mat<K> m = a, inv = Mat<K>::identity(n);
    for (int col = 0; col < n; ++col) {
        int p = detail::pivot_row(m, col, col);
        if (p < 0) return std::nullopt;
        detail::swap_rows(m, p, col);
        detail::swap_rows(inv, p, col);
        K piv = m(col, col);
        for (int k = 0; k < n; ++k) {
            m(col, k) /= piv;
            inv(col, k) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            K f = m(i, col);
            if (Traits::is_zero(f)) continue;
            for (int k = 0; k < n; ++k) {
                m(i, k) -= f * m(col, k);
                inv(i, k) -= f * inv(col, k);
            }
        }
    }
    return inv;
}

template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& a, const std::vector<K>& rhs) {
    using Traits = ScalarTraits<K>;
    const int n = a.rows();
    Mat<K> m(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int p = detail::pivot_row(m, col, col);
        if (p < 0) return std::nullopt;
        detail::swap_rows(m, p, col);
        K piv = m(col, col);
        for (int k = col; k <= n; ++k) m(col, k) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            K f = m(i, col);
            if (Traits::is_zero(f)) continue;
            for (int k = col; k <= n; ++k) m(i, k) -= f * m(col, k);
        }
    }
    std::vector<K> x(n);
    for (int i = 0; i < n; ++i) x[i] = m(i, n);
    return x;
}

template <class K>
K determinant(const Mat<K>& a) {
    using Traits = ScalarTraits<K>;
    const int n = a.rows();
    Mat<K> m = a;
    K det = Traits::from_int(1);
    for (int col = 0; col < n; ++col) {
        int p = detail::pivot_row(m, col, col);
        if (p < 0) return K(0);
        if (p != col) {
            detail::swap_rows(m, p, col);
            det = -det;
        }
        K piv = m(col, col);
        det *= piv;
        for (int i = col + 1; i < n; ++i) {
            K f = m(i, col) / piv;
            if (Traits::is_zero(f)) continue;
            for (int k = col; k < n; ++k) m(i, k) -= f * m(col, k);
        }
    }
    return det;
}

// Row-reduce [M | I] to find which coordinate vectors complete the column
// space of M to the full ambient space. Returns the list of coordinate
// indices chosen; fails (nullopt) when rank(M) < cols(M). Over CD a pivot
// below rel_tol * (largest abs in the working column block) counts as zero.
template <class K>
std::optional<std::vector<int>> completing_coordinates(const Mat<K>& M, double rel_tol = 1e-10) {
    using Traits = ScalarTraits<K>;
    const int rows = M.rows(), mc = M.cols();
    Mat<K> w(rows, mc + rows);
    RealOf<K> scale(0);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < mc; ++j) {
            w(i, j) = M(i, j);
            RealOf<K> a = Traits::abs(M(i, j));
            if (a > scale) scale = a;
        }
        w(i, mc + i) = Traits::from_int(1);
    }

    auto negligible = [&](const RealOf<K>& a) {
        if constexpr (Traits::exact) {
            return a == RealOf<K>(0);
        } else {
            return a <= rel_tol * (scale > RealOf<K>(0) ? scale : RealOf<K>(1));
        }
    };

    int rank = 0;
    std::vector<int> completion;
    for (int col = 0; col < mc + rows && rank < rows; ++col) {
        int p = detail::pivot_row(w, col, rank);
        if (p < 0 || negligible(Traits::abs(w(p, col)))) {
            if (col < mc) return std::nullopt; // M itself is rank deficient
            continue;
        }
        if (col >= mc) completion.push_back(col - mc);
        detail::swap_rows(w, p, rank);
        K piv = w(rank, col);
        for (int k = col; k < mc + rows; ++k) w(rank, k) /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            K f = w(i, col);
            if (Traits::is_zero(f)) continue;
            for (int k = col; k < mc + rows; ++k) w(i, k) -= f * w(rank, k);
        }
        ++rank;
    }
    if (rank < rows) return std::nullopt;
    return completion;
}

template <class K>
Mat<CD> to_complex_mat(const Mat<K>& m) {
    Mat<CD> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
    return r;
}

} // namespace pf

#endif
