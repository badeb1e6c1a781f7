#include "weilzeta/abelian/smith.hpp"

#include <sstream>

#include "weilzeta/error.hpp"

namespace weilzeta::abelian {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& entries)
    : rows_(rows), cols_(cols), a_(entries) {
    if (entries.size() != rows * cols) throw Error(ErrorKind::InvalidArgument, "matrix entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
    IntMatrix out(rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
    IntMatrix out(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i - begin, j) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (other.rows_ != rows_) throw Error(ErrorKind::InvalidArgument, "row count mismatch in hconcat");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    IntMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const BigInt& v = x(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += v * y(k, j);
        }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<BigInt> SmithForm::invariants() const {
    std::vector<BigInt> out;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

namespace {

struct Reducer {
    IntMatrix& a;
    IntMatrix& u;
    IntMatrix& v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row_i -= f * row_j
    void add_row(std::size_t i, std::size_t j, const BigInt& f) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= f * a(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= f * u(j, c);
    }
    // col_i -= f * col_j
    void add_col(std::size_t i, std::size_t j, const BigInt& f) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= f * a(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= f * v(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

BigInt tdiv(const BigInt& x, const BigInt& y) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm sf{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& a = sf.D;
    Reducer red{a, sf.U, sf.V};
    const std::size_t rows = a.rows(), cols = a.cols();

    for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
        // Pivot: smallest nonzero |entry| in the trailing block, row-major tie-break.
        auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
            bool found = false;
            BigInt best;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    BigInt mag = abs(a(i, j));
                    if (!found || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            return found;
        };
        std::size_t pi = s, pj = s;
        if (!find_pivot(pi, pj)) break;
        red.swap_rows(s, pi);
        red.swap_cols(s, pj);

        while (true) {
            bool dirty = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (a(i, s) == 0) continue;
                red.add_row(i, s, tdiv(a(i, s), a(s, s)));
                if (a(i, s) != 0) dirty = true;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (a(s, j) == 0) continue;
                red.add_col(j, s, tdiv(a(s, j), a(s, s)));
                if (a(s, j) != 0) dirty = true;
            }
            if (dirty) {
                // Move the smallest remainder in row s / column s onto the diagonal.
                std::size_t bi = s, bj = s;
                BigInt best = abs(a(s, s));
                for (std::size_t i = s + 1; i < rows; ++i)
                    if (a(i, s) != 0 && abs(a(i, s)) < best) {
                        best = abs(a(i, s));
                        bi = i;
                        bj = s;
                    }
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (a(s, j) != 0 && abs(a(s, j)) < best) {
                        best = abs(a(s, j));
                        bi = s;
                        bj = j;
                    }
                red.swap_rows(s, bi);
                red.swap_cols(s, bj);
                continue;
            }
            // Row and column clear; enforce divisibility of the trailing block.
            bool fixed = true;
            for (std::size_t i = s + 1; i < rows && fixed; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(s, s).get_mpz_t())) {
                        red.add_row(s, i, BigInt(-1));
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (a(s, s) < 0) red.negate_row(s);
    }
    return sf;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const SmithForm sf = smith_normal_form(m);
    const std::size_t r = sf.rank();
    return sf.V.columns(r, m.cols());
}

BigInt lattice_content(const IntMatrix& m) {
    BigInt prod = 1;
    for (const auto& d : smith_normal_form(m).invariants()) prod *= d;
    return prod;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t sw = k + 1;
            while (sw < n && a(sw, k) == 0) ++sw;
            if (sw == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(sw, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    return n == 0 ? BigInt(1) : BigInt(sign * a(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& m) { return m.rows() == m.cols() && abs(determinant(m)) == 1; }

}  // namespace weilzeta::abelian
