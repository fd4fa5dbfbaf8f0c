#include "hmp/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hmp {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: shape mismatch in *");
    IntMatrix r(rows_, o.cols_);
    Int t;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                t = aik * o(k, j);
                r(i, j) += t;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Int trace(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("trace: non-square matrix");
    Int t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = divexact(t, prev);  // exact by the Bareiss identity
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign == 1 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long k) {
    if (!m.is_square()) throw std::invalid_argument("mat_pow: non-square matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k) {
        if (k & 1UL) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

IntMatrix geometric_sum_matrix(const IntMatrix& m, unsigned long k, unsigned long l) {
    if (!m.is_square())
        throw std::invalid_argument("geometric_sum_matrix: non-square matrix");
    if (k == 0 || l == 0 || k % l != 0)
        throw std::invalid_argument("geometric_sum_matrix: l must divide k, k >= 1");
    const unsigned long terms = k / l;
    const IntMatrix step = mat_pow(m, l);
    IntMatrix s = IntMatrix::identity(m.rows());
    for (unsigned long j = 1; j < terms; ++j) s = s * step + IntMatrix::identity(m.rows());
    return s;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Int> r(m.rows(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

namespace {

// Minor determinant with row i / column j removed.
Int minor_det(const IntMatrix& m, std::size_t di, std::size_t dj) {
    const std::size_t n = m.rows();
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
        if (i == di) continue;
        for (std::size_t j = 0, sj = 0; j < n; ++j) {
            if (j == dj) continue;
            sub(si, sj) = m(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("unimodular_inverse: non-square");
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    if (n == 0) return inv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = minor_det(m, j, i);  // adjugate: cofactor transposed
            if ((i + j) % 2) c = -c;
            inv(i, j) = d == 1 ? c : Int(-c);
        }
    return inv;
}

}  // namespace hmp
