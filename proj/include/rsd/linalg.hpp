#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsd/laurent.hpp"
#include "rsd/sampling.hpp"

namespace rsd {

template <Field K>
class Mat;

/// Dense vector over A with entrywise canonical scalars.
template <Field K>
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : e_(n) {}
    explicit Vec(std::vector<Laurent<K>> entries) : e_(std::move(entries)) {}

    std::size_t size() const { return e_.size(); }
    const Laurent<K>& operator[](std::size_t i) const { return e_[i]; }
    Laurent<K>& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec operator+(const Vec& o) const {
        check_same(o);
        Vec r(size());
        for (std::size_t i = 0; i < size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        check_same(o);
        Vec r(size());
        for (std::size_t i = 0; i < size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    Vec operator*(const Laurent<K>& a) const {
        Vec r(size());
        for (std::size_t i = 0; i < size(); ++i) r.e_[i] = e_[i] * a;
        return r;
    }
    Vec operator-() const {
        Vec r(size());
        for (std::size_t i = 0; i < size(); ++i) r.e_[i] = -e_[i];
        return r;
    }

    bool operator==(const Vec& o) const = default;

    static Vec unit(std::size_t n, std::size_t i) {
        Vec r(n);
        r[i] = Laurent<K>::one();
        return r;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) out += ",";
            out += e_[i].str();
        }
        return out;
    }

private:
    void check_same(const Vec& o) const {
        if (size() != o.size()) throw std::invalid_argument("vector dimension mismatch");
    }
    std::vector<Laurent<K>> e_;
};

/// Dense row-major matrix over A.
template <Field K>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Laurent<K>::one();
        return m;
    }
    static Mat from_cols(std::size_t rows, const std::vector<Vec<K>>& cols) {
        Mat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Laurent<K>& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Laurent<K>& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vec<K> col(std::size_t j) const {
        Vec<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    std::vector<Vec<K>> columns() const {
        std::vector<Vec<K>> cs;
        cs.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cs.push_back(col(j));
        return cs;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }
    Vec<K> operator*(const Vec<K>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("matrix dimension mismatch");
        Vec<K> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    /// Horizontal concatenation [*this | o].
    Mat hstack(const Mat& o) const {
        if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
        Mat r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? Laurent<K>::one() : Laurent<K>::zero())) return false;
        return true;
    }

    bool operator==(const Mat& o) const = default;

    /// Rows separated by ';', entries by ','.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) out += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ",";
                out += at(i, j).str();
            }
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Laurent<K>> a_;
};

namespace detail {

/// Gauss-Jordan on [M | aug] over the field A. Pivot choice per column:
/// smallest deg(num)+deg(den), ties to the lowest row index.
template <Field K>
struct Rref {
    Mat<K> m;
    std::vector<std::size_t> pivot_cols;
};

template <Field K>
Rref<K> rref(Mat<K> m, std::size_t lead_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lead_cols && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::int64_t best_size = 0;
        for (std::size_t i = row; i < m.rows(); ++i) {
            const auto& x = m.at(i, col);
            if (x.is_zero()) continue;
            std::int64_t sz = x.num().degree() + x.den().degree();
            if (best == m.rows() || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(best, j));
        Laurent<K> inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Laurent<K> f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace detail

template <Field K>
std::size_t mat_rank(const Mat<K>& m) {
    return detail::rref(m, m.cols()).pivot_cols.size();
}

/// Outcome of solving M x = b: a particular solution when consistent, and a
/// basis of the null space of M either way.
template <Field K>
struct SolveResult {
    std::optional<Vec<K>> particular;
    std::vector<Vec<K>> kernel;
    bool consistent() const { return particular.has_value(); }
};

template <Field K>
SolveResult<K> mat_solve(const Mat<K>& m, const Vec<K>& b) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve dimension mismatch");
    Mat<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto red = detail::rref(aug, m.cols());
    SolveResult<K> res;

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;

    // consistency: no row of the form (0 ... 0 | nonzero)
    bool ok = true;
    for (std::size_t i = red.pivot_cols.size(); i < m.rows(); ++i)
        if (!red.m.at(i, m.cols()).is_zero()) ok = false;

    if (ok) {
        Vec<K> x(m.cols());
        for (std::size_t p = 0; p < red.pivot_cols.size(); ++p)
            x[red.pivot_cols[p]] = red.m.at(p, m.cols());
        res.particular = std::move(x);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec<K> x(m.cols());
        x[j] = Laurent<K>::one();
        for (std::size_t p = 0; p < red.pivot_cols.size(); ++p)
            x[red.pivot_cols[p]] = -red.m.at(p, j);
        res.kernel.push_back(std::move(x));
    }
    return res;
}

template <Field K>
std::optional<Mat<K>> mat_inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto red = detail::rref(m.hstack(Mat<K>::identity(m.rows())), m.cols());
    if (red.pivot_cols.size() != m.cols()) return std::nullopt;
    Mat<K> inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = red.m.at(i, m.cols() + j);
    return inv;
}

/// Canonical basis of the column span: the unique reduced column echelon
/// form (pivot entries 1 at the earliest reachable rows, pivot rows cleared
/// elsewhere). Subspace equality is structural equality of this form.
template <Field K>
Mat<K> column_echelon(const Mat<K>& m) {
    // reduce the transpose by rows, then transpose back
    Mat<K> tr(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) tr.at(j, i) = m.at(i, j);
    auto red = detail::rref(tr, tr.cols());
    std::size_t rank = red.pivot_cols.size();
    Mat<K> out(m.rows(), rank);
    for (std::size_t p = 0; p < rank; ++p)
        for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, p) = red.m.at(p, i);
    return out;
}

/// An elementary-generator sample of GL_n(A) together with its exact inverse.
template <Field K>
struct InvertiblePair {
    Mat<K> mat;
    Mat<K> inv;
};

/// Deterministic product of elementary matrices: transvections with Laurent
/// polynomial multipliers of |t-degree| <= complexity, t^{+-1} and unit
/// scalings, and swaps. complexity = 0 degenerates to a monomial matrix
/// (permutation times t-power and constant scalings).
template <Field K>
InvertiblePair<K> random_invertible(std::size_t n, std::uint64_t seed, std::int64_t complexity) {
    if (n < 1) throw std::invalid_argument("random_invertible needs n >= 1");
    Rng rng(seed);
    Mat<K> m = Mat<K>::identity(n);
    Mat<K> minv = Mat<K>::identity(n);

    auto apply_col_add = [&](std::size_t dst, std::size_t src, const Laurent<K>& c) {
        // m <- m * E, minv <- E^{-1} * minv with E = I + c * e_src e_dst^T
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, dst) = m.at(i, dst) + m.at(i, src) * c;
            minv.at(src, i) = minv.at(src, i) - minv.at(dst, i) * c;
        }
    };
    auto apply_scale = [&](std::size_t j, const Laurent<K>& u) {
        Laurent<K> ui = u.inv();
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, j) = m.at(i, j) * u;
            minv.at(j, i) = minv.at(j, i) * ui;
        }
    };
    auto apply_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(m.at(i, a), m.at(i, b));
            std::swap(minv.at(a, i), minv.at(b, i));
        }
    };

    std::size_t steps = 2 * n + 2;
    for (std::size_t s = 0; s < steps; ++s) {
        std::uint64_t kind = rng.below(complexity == 0 ? 3 : 4);
        if (complexity == 0) kind += 1; // no transvections in the monomial regime
        switch (kind) {
            case 0: {
                if (n == 1) break;
                std::size_t i = rng.below(n);
                std::size_t j = (i + 1 + rng.below(n - 1)) % n;
                Laurent<K> c = random_laurent_poly<K>(rng, -complexity, complexity);
                if (!c.is_zero()) apply_col_add(j, i, c);
                break;
            }
            case 1:
                apply_scale(rng.below(n), Laurent<K>::t_power(rng.chance(1, 2) ? 1 : -1));
                break;
            case 2: {
                std::int64_t deg = complexity > 0 ? rng.range(0, complexity) : 0;
                apply_scale(rng.below(n),
                            Laurent<K>::make(0, random_unit_poly<K>(rng, deg), Poly<K>::one()));
                break;
            }
            default: {
                if (n == 1) break;
                std::size_t i = rng.below(n);
                std::size_t j = (i + 1 + rng.below(n - 1)) % n;
                apply_swap(i, j);
                break;
            }
        }
    }
    return {std::move(m), std::move(minv)};
}

/// Random vector with entries from random_scalar.
template <Field K>
Vec<K> random_vec(Rng& rng, std::size_t n, std::int64_t min_val, std::int64_t max_val,
                  std::int64_t num_deg, std::int64_t den_deg) {
    Vec<K> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = random_scalar<K>(rng, min_val, max_val, num_deg, den_deg);
    return v;
}

} // namespace rsd
