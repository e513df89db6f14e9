#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsd/field.hpp"

namespace rsd {

/// Dense univariate polynomial over a field. Coefficient i is the
/// coefficient of t^i; the vector carries no trailing zeros, so the zero
/// polynomial is the empty vector.
template <Field K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(K::one()); }
    static Poly constant(const K& a) {
        Poly p;
        if (!a.is_zero()) p.c_.push_back(a);
        return p;
    }
    /// a * t^e, e >= 0.
    static Poly monomial(const K& a, std::size_t e) {
        Poly p;
        if (!a.is_zero()) {
            p.c_.assign(e + 1, K::zero());
            p.c_[e] = a;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    /// t-adic valuation: index of the first nonzero coefficient; -1 for zero.
    std::int64_t low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<std::int64_t>(i);
        return -1;
    }

    const K& coeff(std::size_t i) const {
        static const K kzero = K::zero();
        return i < c_.size() ? c_[i] : kzero;
    }
    const std::vector<K>& coeffs() const { return c_; }
    K at_zero() const { return coeff(0); }
    const K& lead() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r(c_.size(), K::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly operator*(const K& a) const {
        if (a.is_zero()) return Poly();
        std::vector<K> r(c_.size(), K::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * a;
        return Poly(std::move(r));
    }

    /// Shift by t^e (e >= 0).
    Poly shifted(std::size_t e) const {
        if (is_zero() || e == 0) return *this;
        std::vector<K> r(c_.size() + e, K::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
        return Poly(std::move(r));
    }
    /// Divide by t^e; requires low_degree() >= e.
    Poly unshifted(std::size_t e) const {
        if (e == 0) return *this;
        if (is_zero()) return *this;
        if (low_degree() < static_cast<std::int64_t>(e))
            throw std::domain_error("unshift below valuation");
        return Poly(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(e), c_.end()));
    }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = *this;
        std::vector<K> q;
        if (r.degree() >= d.degree())
            q.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, K::zero());
        const K dlead_inv = d.lead().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            auto shift = static_cast<std::size_t>(r.degree() - d.degree());
            K f = r.lead() * dlead_inv;
            q[shift] = f;
            r = r - (d * f).shifted(shift);
        }
        return {Poly(std::move(q)), r};
    }

    bool operator==(const Poly& o) const = default;

    /// Total coefficient size, used by pivot heuristics.
    std::size_t size_hint() const {
        std::size_t s = 0;
        for (const auto& a : c_) s += a.size_hint();
        return s;
    }

    /// Render as e.g. "1-t+2*t^3"; "0" for zero.
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd via the Euclidean algorithm.
template <Field K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.lead().inv();
}

namespace detail {

/// One "c*t^e" summand with sign handling; exported for Laurent printing.
template <Field K>
inline void append_term(std::string& out, const K& c, std::int64_t e, bool first) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first) {
        if (neg) out += '-';
    } else {
        out += neg ? '-' : '+';
    }
    bool unit_coeff = (cs == "1");
    if (e == 0) {
        out += cs;
    } else {
        if (!unit_coeff) {
            out += cs;
            out += '*';
        }
        out += 't';
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
}

} // namespace detail

template <Field K>
std::string Poly<K>::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        detail::append_term(out, c_[i], static_cast<std::int64_t>(i), first);
        first = false;
    }
    return out;
}

} // namespace rsd
