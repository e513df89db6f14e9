#pragma once

// Shared generators and independent oracles for the unit and acceptance
// suites. Everything here is seed-deterministic and exact; the oracles stay
// off the library's solve/normal-form code paths.

#include <string>
#include <unordered_set>
#include <vector>

#include "rsd/lattice.hpp"
#include "rsd/rsdmod.hpp"
#include "rsd/sampling.hpp"

namespace rsdtest {

using namespace rsd;

/// Applies `count` random unimodular O-column operations in place:
/// add an O-polynomial multiple of one column to another, scale a column by
/// a unit of O, or swap two columns.
template <Field K>
void random_o_column_ops(Rng& rng, std::vector<Vec<K>>& cols, int count, std::int64_t deg) {
    if (cols.size() < 1) return;
    for (int s = 0; s < count; ++s) {
        switch (cols.size() > 1 ? rng.below(3) : 1) {
            case 0: {
                std::size_t i = rng.below(cols.size());
                std::size_t j = (i + 1 + rng.below(cols.size() - 1)) % cols.size();
                Laurent<K> q = Laurent<K>::from_poly(random_poly<K>(rng, deg));
                cols[j] = cols[j] + cols[i] * q;
                break;
            }
            case 1: {
                std::size_t i = rng.below(cols.size());
                Laurent<K> u = Laurent<K>::from_poly(random_unit_poly<K>(rng, deg));
                cols[i] = cols[i] * u;
                break;
            }
            default: {
                std::size_t i = rng.below(cols.size());
                std::size_t j = (i + 1 + rng.below(cols.size() - 1)) % cols.size();
                std::swap(cols[i], cols[j]);
                break;
            }
        }
    }
}

/// Random generators for a lattice in A^n; entries are Laurent polynomials
/// with exponents in [min_exp, max_exp].
template <Field K>
std::vector<Vec<K>> random_lattice_gens(Rng& rng, std::size_t n, std::size_t count,
                                        std::int64_t min_exp, std::int64_t max_exp) {
    std::vector<Vec<K>> gens;
    for (std::size_t g = 0; g < count; ++g) {
        Vec<K> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = random_laurent_poly<K>(rng, min_exp, max_exp);
        gens.push_back(std::move(v));
    }
    return gens;
}

/// All polynomials over F_p of degree <= deg, as O-scalars.
inline std::vector<Laurent<Fp>> all_fp_polys(std::int64_t deg) {
    auto p = Fp::modulus();
    std::size_t total = 1;
    for (std::int64_t i = 0; i <= deg; ++i) total *= p;
    std::vector<Laurent<Fp>> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        std::vector<Fp> coeffs;
        for (std::int64_t i = 0; i <= deg; ++i) {
            coeffs.push_back(Fp(static_cast<long>(c % p)));
            c /= p;
        }
        out.push_back(Laurent<Fp>::from_poly(Poly<Fp>(std::move(coeffs))));
    }
    return out;
}

/// Exhaustive membership oracle over F_p: is x an O-combination of the
/// generators with polynomial coefficients of degree <= deg? Enumerates all
/// coefficient tuples for rank 1, meets in the middle for rank 2. Sound
/// unconditionally (a witness is exact); complete whenever a witness with
/// coefficients of degree <= deg exists.
inline bool oracle_membership_fp(const std::vector<Vec<Fp>>& gens, const Vec<Fp>& x,
                                 std::int64_t deg) {
    auto coeffs = all_fp_polys(deg);
    if (gens.empty()) return x.is_zero();
    if (gens.size() == 1) {
        for (const auto& c : coeffs)
            if (gens[0] * c == x) return true;
        return false;
    }
    if (gens.size() == 2) {
        std::unordered_set<std::string> right;
        for (const auto& c : coeffs) right.insert((gens[1] * c).str());
        for (const auto& c : coeffs)
            if (right.count((x - gens[0] * c).str())) return true;
        return false;
    }
    throw std::logic_error("oracle limited to rank <= 2");
}

/// Scan oracle for the module valuation: least m in [-window, window] with
/// t^m x in M, or +inf if none in the window.
template <Field K>
ExtInt scan_module_valuation(const Lattice<K>& l, const Vec<K>& x, std::int64_t window) {
    for (std::int64_t m = -window; m <= window; ++m)
        if (l.membership(x * Laurent<K>::t_power(m))) return ExtInt::finite(m);
    return ExtInt::plus_inf();
}

/// A random point of the orbit of the given type: the canonical block model
/// transported by a seeded invertible matrix.
template <Field K>
RSDecomposition<K> random_rsd(const ModuleType& type, std::uint64_t seed,
                              std::int64_t complexity = 1) {
    if (type.n() == 0) return canonical_rsd<K>(type);
    return canonical_rsd<K>(type).transported(random_invertible<K>(type.n(), seed, complexity).mat);
}

/// Exact rank of a sparse rational matrix (rows as (column, value) lists)
/// by plain fraction-free-enough Gaussian elimination over Q.
inline std::size_t rank_rational(std::vector<std::vector<std::pair<std::size_t, Rat>>> rows,
                                 std::size_t cols) {
    std::vector<std::vector<Rat>> dense;
    dense.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> d(cols, Rat::zero());
        for (const auto& [c, v] : r) d[c] = d[c] + v;
        dense.push_back(std::move(d));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < dense.size(); ++col) {
        std::size_t pivot = dense.size();
        for (std::size_t i = rank; i < dense.size(); ++i)
            if (!dense[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == dense.size()) continue;
        std::swap(dense[rank], dense[pivot]);
        Rat inv = dense[rank][col].inv();
        for (std::size_t j = col; j < cols; ++j) dense[rank][j] = dense[rank][j] * inv;
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (i == rank || dense[i][col].is_zero()) continue;
            Rat f = dense[i][col];
            for (std::size_t j = col; j < cols; ++j)
                dense[i][j] = dense[i][j] - f * dense[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Dimension over k of the commutant of (A, P) at finite level: matrices on
/// the coordinate window t^-B .. t^{B-1} commuting with the truncated shift
/// (A-linearity) and with the truncated projection P. The exact solution
/// space should be the scalars only.
inline std::size_t schur_commutant_dimension(std::int64_t window) {
    const std::int64_t B = window;
    const std::size_t N = static_cast<std::size_t>(2 * B);
    auto idx = [&](std::int64_t i, std::int64_t j) {
        return static_cast<std::size_t>(i + B) * N + static_cast<std::size_t>(j + B);
    };
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
    // shift commutation: phi(t^{j+1}) = t * phi(t^j) where both sides live
    // in the window; the t^{-B} component of the product is empty
    for (std::int64_t j = -B; j + 1 < B; ++j) {
        for (std::int64_t i = -B; i < B; ++i) {
            if (i - 1 >= -B)
                rows.push_back({{idx(i, j + 1), Rat::one()}, {idx(i - 1, j), -Rat::one()}});
            else
                rows.push_back({{idx(i, j + 1), Rat::one()}});
        }
    }
    // projection commutation: phi P = P phi kills the mixed blocks
    for (std::int64_t i = -B; i < B; ++i)
        for (std::int64_t j = -B; j < B; ++j)
            if ((i >= 0) != (j >= 0)) rows.push_back({{idx(i, j), Rat::one()}});
    return N * N - rank_rational(std::move(rows), N * N);
}

} // namespace rsdtest
