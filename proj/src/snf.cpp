#include "hmp/snf.hpp"

#include <stdexcept>

namespace hmp {

namespace {

// row_i -= q * row_t applied to both S and its row-operation mirror U.
void row_sub(IntMatrix& s, IntMatrix& u, std::size_t i, std::size_t t, const Int& q) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(i, c) -= q * s(t, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(t, c);
}

void col_sub(IntMatrix& s, IntMatrix& v, std::size_t j, std::size_t t, const Int& q) {
    for (std::size_t r = 0; r < s.rows(); ++r) s(r, j) -= q * s(r, t);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) -= q * v(r, t);
}

void row_add(IntMatrix& s, IntMatrix& u, std::size_t dst, std::size_t src) {
    for (std::size_t c = 0; c < s.cols(); ++c) s(dst, c) += s(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += u(src, c);
}

}  // namespace

std::vector<Int> SNFDecomposition::diagonal() const {
    const std::size_t n = std::min(S.rows(), S.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = S(i, i);
    return d;
}

SNFDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SNFDecomposition dec{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& S = dec.S;
    IntMatrix& U = dec.U;
    IntMatrix& V = dec.V;
    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal-|value| nonzero pivot in the trailing submatrix.
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (S(i, j) == 0) continue;
                    if (pi == r || cmp_abs(S(i, j), S(pi, pj)) < 0) pi = i, pj = j;
                }
            if (pi == r) {  // trailing submatrix is zero: done
                t = steps;
                break;
            }
            S.swap_rows(t, pi);
            U.swap_rows(t, pi);
            S.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (S(i, t) == 0) continue;
                Int q = S(i, t) / S(t, t);
                if (q != 0) row_sub(S, U, i, t, q);
                if (S(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (S(t, j) == 0) continue;
                Int q = S(t, j) / S(t, t);
                if (q != 0) col_sub(S, V, j, t, q);
                if (S(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // leftovers smaller than the pivot: rescan

            // Pivot row/column clean; force pivot | every trailing entry.
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (!divisible(S(i, j), S(t, t))) {
                        row_add(S, U, t, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t == steps) break;
    }
    for (std::size_t t = 0; t < steps; ++t) {
        if (S(t, t) >= 0) continue;
        for (std::size_t j = 0; j < c; ++j) S(t, j) = -S(t, j);
        for (std::size_t j = 0; j < r; ++j) U(t, j) = -U(t, j);
    }
    return dec;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const SNFDecomposition dec = smith_normal_form(m);
    const std::size_t c = m.cols();
    std::size_t rank = 0;
    for (const Int& d : dec.diagonal())
        if (d != 0) ++rank;
    IntMatrix kernel(c, c - rank);
    for (std::size_t j = rank; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) kernel(i, j - rank) = dec.V(i, j);
    return kernel;
}

bool lattice_solvable(const IntMatrix& b, const std::vector<Int>& v) {
    if (v.size() != b.rows()) throw std::invalid_argument("lattice_solvable: size mismatch");
    const SNFDecomposition dec = smith_normal_form(b);
    const std::vector<Int> w = mat_vec(dec.U, v);
    const std::size_t steps = std::min(b.rows(), b.cols());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Int d = i < steps ? dec.S(i, i) : Int(0);
        if (d == 0) {
            if (w[i] != 0) return false;
        } else if (!divisible(w[i], d)) {
            return false;
        }
    }
    return true;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("lattice_intersection: need square bases of equal size");
    const std::size_t m = a.rows();
    IntMatrix joint(m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            joint(i, j) = a(i, j);
            joint(i, m + j) = -b(i, j);
        }
    const IntMatrix kernel = integer_kernel(joint);
    if (kernel.cols() != m)
        throw std::invalid_argument("lattice_intersection: bases must be nonsingular");
    IntMatrix x(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = kernel(i, j);
    return a * x;
}

Int lattice_index(const IntMatrix& basis) {
    Int d = det(basis);
    if (d == 0) throw std::invalid_argument("lattice_index: singular basis");
    return abs(d);
}

}  // namespace hmp
