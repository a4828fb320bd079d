#include "shioda/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace shioda {

IntVec SNFResult::diagonal() const {
    const std::size_t k = std::min(s.rows(), s.cols());
    IntVec d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = s.at(i, i);
    return d;
}

std::vector<Int> SNFResult::invariant_factors() const {
    std::vector<Int> out;
    for (const Int& x : diagonal())
        if (x > 1) out.push_back(x);
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_i -= q * row_t
void row_axpy(IntMatrix& m, std::size_t i, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
}

void col_axpy(IntMatrix& m, std::size_t j, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

SNFResult snf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // pivot: smallest |entry| in the remaining block, lowest index wins ties
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Int& x = s.at(i, j);
                    if (x == 0) continue;
                    Int a = abs(x);
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                t = steps;  // remaining block is zero
                break;
            }
            swap_rows(s, t, pi);
            swap_rows(u, t, pi);
            swap_cols(s, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);  // truncated: remainder shrinks
                row_axpy(s, i, t, q);
                row_axpy(u, i, t, q);
                if (s.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                col_axpy(s, j, t, q);
                col_axpy(v, j, t, q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: the pivot must divide every remaining entry
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_axpy(s, t, i, Int(-1));  // fold row i into row t
                        row_axpy(u, t, i, Int(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= steps) break;
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return SNFResult{s, u, v, m};
}

HermiteResult hermite_with_transform(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);
    std::size_t r = 0;

    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        // gcd-reduce column j below row r down to a single nonzero entry
        for (;;) {
            std::size_t piv = rows;
            Int best = 0;
            for (std::size_t i = r; i < rows; ++i) {
                if (h.at(i, j) == 0) continue;
                Int a = abs(h.at(i, j));
                if (best == 0 || a < best) {
                    best = a;
                    piv = i;
                }
            }
            if (piv == rows) break;  // column clear
            swap_rows(h, r, piv);
            swap_rows(u, r, piv);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h.at(i, j) == 0) continue;
                Int q = h.at(i, j) / h.at(r, j);
                row_axpy(h, i, r, q);
                row_axpy(u, i, r, q);
                if (h.at(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, j) == 0) continue;  // no pivot in this column
        if (h.at(r, j) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floordiv(h.at(i, j), h.at(r, j));  // entries above land in [0, pivot)
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    return HermiteResult{h, u, r};
}

std::vector<IntVec> left_kernel_basis(const IntMatrix& m) {
    HermiteResult hr = hermite_with_transform(m);
    std::vector<IntVec> basis;
    for (std::size_t i = hr.rank; i < m.rows(); ++i) basis.push_back(hr.u.row(i));
    return basis;
}

std::vector<IntVec> right_kernel_basis(const IntMatrix& m) {
    return left_kernel_basis(m.transpose());
}

}  // namespace shioda
