#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsd/linalg.hpp"

namespace rsd {

/// Shape of the fractional ideal I_M(x) = { a in A | a x in M }: exactly one
/// of {0}, A, or O t^n.
struct IdealDescriptor {
    enum class Kind { zero, all, power };
    Kind kind = Kind::zero;
    std::int64_t n = 0;

    static IdealDescriptor zero() { return {Kind::zero, 0}; }
    static IdealDescriptor all() { return {Kind::all, 0}; }
    static IdealDescriptor power(std::int64_t n) { return {Kind::power, n}; }

    bool operator==(const IdealDescriptor& o) const {
        return kind == o.kind && (kind != Kind::power || n == o.n);
    }
    std::string str() const {
        switch (kind) {
            case Kind::zero: return "0";
            case Kind::all: return "A";
            default: return "O t^" + std::to_string(n);
        }
    }
};

/// Classification of a rank <= 1 O-submodule of A: 0, all of A, or O t^n.
struct Rank1Class {
    enum class Kind { zero, divisible, fractional };
    Kind kind = Kind::zero;
    std::int64_t n = 0;

    static Rank1Class zero() { return {Kind::zero, 0}; }
    static Rank1Class divisible() { return {Kind::divisible, 0}; }
    static Rank1Class fractional(std::int64_t n) { return {Kind::fractional, n}; }

    bool operator==(const Rank1Class& o) const {
        return kind == o.kind && (kind != Kind::fractional || n == o.n);
    }
    std::string str() const {
        switch (kind) {
            case Kind::zero: return "0";
            case Kind::divisible: return "A";
            default: return "O t^" + std::to_string(n);
        }
    }
};

enum class Rank1Marker { all, zero };

/// A finitely generated O-submodule of A^n (O = k[[t]]) in its canonical
/// column Hermite form over the discrete valuation ring:
///
///   * pivot rows are the earliest reachable, one per basis column;
///   * the pivot entry of column j is exactly t^{a_j};
///   * later columns vanish on earlier pivot rows, and entries of earlier
///     columns on pivot row j are reduced mod t^{a_j} O, i.e. Laurent
///     polynomials with exponents < a_j.
///
/// The form is the unique representative of its O-span under GL_r(O) column
/// action, so lattice equality is structural equality. Every finitely
/// generated O-submodule of A^n is free, hence fits this shape.
template <Field K>
class Lattice {
public:
    Lattice() = default;

    static Lattice zero_lattice(std::size_t n) {
        Lattice l;
        l.ambient_ = n;
        l.basis_ = Mat<K>(n, 0);
        return l;
    }

    /// Canonical form of sum_i O g_i via iterated DVR column reduction.
    static Lattice from_generators(std::size_t n, const std::vector<Vec<K>>& gens) {
        for (const auto& g : gens)
            if (g.size() != n) throw std::invalid_argument("generator dimension mismatch");
        std::vector<Vec<K>> cols;
        for (const auto& g : gens)
            if (!g.is_zero()) cols.push_back(g);

        Lattice l;
        l.ambient_ = n;

        // pivot phase: for each row in turn, move the minimal-valuation entry
        // into the next pivot slot and clear the row in all later columns
        std::size_t next = 0; // columns [0, next) are settled pivots
        for (std::size_t row = 0; row < n && next < cols.size(); ++row) {
            std::size_t best = cols.size();
            for (std::size_t c = next; c < cols.size(); ++c) {
                const auto& e = cols[c][row];
                if (e.is_zero()) continue;
                if (best == cols.size() || e.val() < cols[best][row].val() ||
                    (e.val() == cols[best][row].val() &&
                     e.size_hint() < cols[best][row].size_hint()))
                    best = c;
            }
            if (best == cols.size()) continue;
            std::swap(cols[next], cols[best]);
            std::int64_t a = cols[next][row].val();
            // scale by the inverse unit so the pivot entry becomes t^a
            Laurent<K> unit_inv = (cols[next][row].shifted(-a)).inv();
            cols[next] = cols[next] * unit_inv;
            for (std::size_t c = next + 1; c < cols.size(); ++c) {
                const auto& e = cols[c][row];
                if (e.is_zero()) continue;
                cols[c] = cols[c] - cols[next] * e.shifted(-a); // e/t^a lies in O
            }
            // drop columns that vanished
            std::erase_if(cols, [&](const Vec<K>& v) { return v.is_zero(); });
            l.pivot_rows_.push_back(static_cast<std::int64_t>(row));
            l.exponents_.push_back(a);
            ++next;
        }
        cols.resize(next);

        // residue phase: reduce earlier columns on pivot row j mod t^{a_j} O;
        // ascending j leaves already-reduced rows untouched since column j is
        // zero above its own pivot row
        for (std::size_t j = 1; j < cols.size(); ++j) {
            auto prow = static_cast<std::size_t>(l.pivot_rows_[j]);
            for (std::size_t col = 0; col < j; ++col) {
                const auto& e = cols[col][prow];
                if (e.is_zero()) continue;
                auto [q, rem] = e.reduce_mod_tpow(l.exponents_[j]);
                if (!q.is_zero()) cols[col] = cols[col] - cols[j] * q;
            }
        }

        l.basis_ = Mat<K>::from_cols(n, cols);
        return l;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.cols(); }
    bool is_zero() const { return rank() == 0; }
    const Mat<K>& basis() const { return basis_; }
    const std::vector<std::int64_t>& pivot_rows() const { return pivot_rows_; }
    /// Pivot valuations a_j, in pivot-row order (not sorted).
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    bool operator==(const Lattice& o) const = default;

    /// x in M, i.e. basis c = x solvable with every c_i in O.
    bool membership(const Vec<K>& x) const {
        check_dim(x);
        if (x.is_zero()) return true;
        if (rank() == 0) return false;
        auto sol = mat_solve(basis_, x);
        if (!sol.consistent()) return false;
        for (std::size_t i = 0; i < rank(); ++i)
            if (!(*sol.particular)[i].in_O()) return false;
        return true;
    }

    /// nu_M(x) = min { m | t^m x in M }; +inf when A x meets M trivially.
    /// -inf cannot occur here since a lattice has no divisible elements.
    ExtInt module_valuation(const Vec<K>& x) const {
        check_dim(x);
        if (x.is_zero()) throw std::invalid_argument("module valuation of the zero vector");
        if (rank() == 0) return ExtInt::plus_inf();
        auto sol = mat_solve(basis_, x);
        if (!sol.consistent()) return ExtInt::plus_inf();
        std::int64_t m = INT64_MIN;
        for (std::size_t i = 0; i < rank(); ++i) {
            const auto& c = (*sol.particular)[i];
            if (!c.is_zero()) m = std::max(m, -c.val());
        }
        return ExtInt::finite(m);
    }

    /// Trichotomy of I_M(x); the divisible branch is unreachable for a
    /// lattice and only appears via GeneralSubmodule dispatch.
    IdealDescriptor fractional_ideal(const Vec<K>& x) const {
        ExtInt v = module_valuation(x);
        return v.is_finite() ? IdealDescriptor::power(v.v) : IdealDescriptor::zero();
    }

    /// Lattice literal: `lattice n=<n> gens=[<vector>;<vector>;...]`.
    std::string str() const {
        std::string out = "lattice n=" + std::to_string(ambient_) + " gens=[";
        for (std::size_t j = 0; j < rank(); ++j) {
            if (j) out += "; ";
            out += basis_.col(j).str();
        }
        out += "]";
        return out;
    }

private:
    void check_dim(const Vec<K>& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    }

    std::size_t ambient_ = 0;
    Mat<K> basis_;
    std::vector<std::int64_t> pivot_rows_;
    std::vector<std::int64_t> exponents_;
};

template <Field K>
bool lattice_equal(const Lattice<K>& a, const Lattice<K>& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    return a == b;
}

/// Rank-1 trichotomy for lattices in A^1: a nonzero lattice is O t^{a_1}.
template <Field K>
Rank1Class classify_rank1(const Lattice<K>& l) {
    if (l.ambient() != 1) throw std::invalid_argument("classify_rank1 needs ambient dimension 1");
    if (l.rank() == 0) return Rank1Class::zero();
    return Rank1Class::fractional(l.exponents()[0]);
}

inline Rank1Class classify_rank1(Rank1Marker marker) {
    return marker == Rank1Marker::all ? Rank1Class::divisible() : Rank1Class::zero();
}

} // namespace rsd
