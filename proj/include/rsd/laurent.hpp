#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsd/poly.hpp"

namespace rsd {

/// Integer extended with both infinities; valuations live here.
struct ExtInt {
    enum class Kind { finite, plus_inf, minus_inf };
    Kind kind = Kind::finite;
    std::int64_t v = 0;

    static ExtInt finite(std::int64_t n) { return {Kind::finite, n}; }
    static ExtInt plus_inf() { return {Kind::plus_inf, 0}; }
    static ExtInt minus_inf() { return {Kind::minus_inf, 0}; }

    bool is_finite() const { return kind == Kind::finite; }
    bool operator==(const ExtInt& o) const {
        return kind == o.kind && (kind != Kind::finite || v == o.v);
    }
    std::string str() const {
        switch (kind) {
            case Kind::plus_inf: return "+inf";
            case Kind::minus_inf: return "-inf";
            default: return std::to_string(v);
        }
    }
};

template <Field K>
class TruncatedSeries;

/// An element of A = k((t)), restricted to the subfield of rational
/// functions (poles only at t = 0 among "series-visible" places). Stored in
/// the unique canonical form
///
///     t^val * num(t) / den(t),   num(0) != 0, den(0) = 1, gcd(num, den) = 1,
///
/// so structural equality is value equality and the valuation is O(1).
/// The zero element is flagged separately. All operations are exact.
template <Field K>
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return constant(K::one()); }
    static Laurent constant(const K& a) {
        return make(0, Poly<K>::constant(a), Poly<K>::one());
    }
    static Laurent t_power(std::int64_t e) { return make(e, Poly<K>::one(), Poly<K>::one()); }
    /// t^shift * p / q; canonicalizes. q must be nonzero.
    static Laurent make(std::int64_t shift, const Poly<K>& p, const Poly<K>& q) {
        if (q.is_zero()) throw std::domain_error("Laurent scalar with zero denominator");
        Laurent x;
        if (p.is_zero()) return x;
        std::int64_t a = p.low_degree(), b = q.low_degree();
        Poly<K> u = p.unshifted(static_cast<std::size_t>(a));
        Poly<K> w = q.unshifted(static_cast<std::size_t>(b));
        Poly<K> g = poly_gcd(u, w);
        if (g.degree() > 0) {
            u = u.divrem(g).first;
            w = w.divrem(g).first;
        }
        K scale = w.at_zero().inv();
        x.val_ = shift + a - b;
        x.num_ = u * scale;
        x.den_ = w * scale;
        return x;
    }
    static Laurent from_poly(const Poly<K>& p, std::int64_t shift = 0) {
        return make(shift, p, Poly<K>::one());
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return !is_zero() && val_ == 0 && num_.is_one() && den_.is_one(); }
    /// t-adic valuation; +inf for zero.
    ExtInt valuation() const { return is_zero() ? ExtInt::plus_inf() : ExtInt::finite(val_); }
    std::int64_t val() const {
        if (is_zero()) throw std::domain_error("valuation of zero is +inf");
        return val_;
    }
    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool in_O() const { return is_zero() || val_ >= 0; }
    bool unit_of_O() const { return !is_zero() && val_ == 0; }
    bool is_constant() const { return is_zero() || (val_ == 0 && num_.degree() == 0 && den_.is_one()); }
    /// Membership in k[t^-1] (Laurent polynomials in t^-1, constant allowed).
    bool in_k_tinv() const {
        return is_zero() || (den_.is_one() && val_ + num_.degree() <= 0);
    }
    /// Membership in A^- = t^-1 k[t^-1].
    bool in_A_minus() const {
        return is_zero() || (den_.is_one() && val_ + num_.degree() <= -1);
    }

    Laurent operator-() const {
        Laurent x = *this;
        x.num_ = -x.num_;
        return x;
    }
    Laurent operator+(const Laurent& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        std::int64_t m = std::min(val_, o.val_);
        Poly<K> p = num_ * o.den_ * pshift(val_ - m) + o.num_ * den_ * pshift(o.val_ - m);
        return make(m, p, den_ * o.den_);
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }
    Laurent operator*(const Laurent& o) const {
        if (is_zero() || o.is_zero()) return Laurent();
        // cross-cancel first; keeps intermediate gcds small
        Poly<K> g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
        Poly<K> u = num_.divrem(g1).first * o.num_.divrem(g2).first;
        Poly<K> w = den_.divrem(g2).first * o.den_.divrem(g1).first;
        Laurent x;
        K scale = w.at_zero().inv();
        x.val_ = val_ + o.val_;
        x.num_ = u * scale;
        x.den_ = w * scale;
        return x;
    }
    Laurent inv() const {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        return make(-val_, den_, num_);
    }
    Laurent operator/(const Laurent& o) const { return *this * o.inv(); }

    /// Multiply by t^e in place-free O(1) fashion.
    Laurent shifted(std::int64_t e) const {
        Laurent x = *this;
        if (!x.is_zero()) x.val_ += e;
        return x;
    }

    bool operator==(const Laurent& o) const = default;

    std::size_t size_hint() const { return num_.size_hint() + den_.size_hint(); }

    /// Exact power-series coefficients d_0..d_{count-1} of num/den
    /// (so the coefficient of t^{val+j} in the value is d_j).
    std::vector<K> unit_series(std::size_t count) const {
        std::vector<K> d(count, K::zero());
        const auto wdeg = static_cast<std::size_t>(den_.degree());
        for (std::size_t j = 0; j < count; ++j) {
            K s = num_.coeff(j);
            for (std::size_t i = 1; i <= std::min(j, wdeg); ++i)
                s -= den_.coeff(i) * d[j - i];
            d[j] = s;
        }
        return d;
    }

    /// Exact coefficient of t^e.
    K coeff_at(std::int64_t e) const {
        if (is_zero() || e < val_) return K::zero();
        auto j = static_cast<std::size_t>(e - val_);
        return unit_series(j + 1)[j];
    }

    /// The Rota-Baxter operator: projection onto k[[t]] along t^-1 k[t^-1].
    Laurent rb_project() const { return *this - singular_part(); }

    /// The complementary projection; always a Laurent polynomial in t^-1
    /// with no constant term.
    Laurent singular_part() const {
        if (is_zero() || val_ >= 0) return Laurent();
        auto count = static_cast<std::size_t>(-val_);
        std::vector<K> d = unit_series(count);
        return make(val_, Poly<K>(std::move(d)), Poly<K>::one());
    }

    /// Split as q * t^a + r with q in O and r a Laurent polynomial whose
    /// exponents are < a; the mod-t^a reduction used by lattice normal forms.
    std::pair<Laurent, Laurent> reduce_mod_tpow(std::int64_t a) const {
        Laurent scaled = shifted(-a);
        Laurent q = scaled.rb_project();
        Laurent r = scaled.singular_part().shifted(a);
        return {q, r};
    }

    TruncatedSeries<K> expand(std::int64_t prec) const;

    /// Canonical rendering "t^m*(num)/(den)", den omitted when 1; parses back
    /// to the same value.
    std::string str() const {
        if (is_zero()) return "0";
        if (den_.is_one() && num_.is_one()) {
            if (val_ == 0) return "1";
            if (val_ == 1) return "t";
            return "t^" + std::to_string(val_);
        }
        std::string out;
        if (val_ == 1) {
            out += "t*";
        } else if (val_ != 0) {
            out += "t^" + std::to_string(val_) + "*";
        }
        out += "(" + num_.str() + ")";
        if (!den_.is_one()) out += "/(" + den_.str() + ")";
        return out;
    }

private:
    static Poly<K> pshift(std::int64_t e) {
        return Poly<K>::monomial(K::one(), static_cast<std::size_t>(e));
    }

    std::int64_t val_ = 0;
    Poly<K> num_;            // empty <=> the element is zero
    Poly<K> den_ = Poly<K>::one();
};

/// Checks the Rota-Baxter relation of weight -1 for the projection P:
/// P(x)P(y) = P(P(x)y) + P(xP(y)) - P(xy). Holds identically; exposed as an
/// executable witness.
template <Field K>
bool verify_rb_relation(const Laurent<K>& x, const Laurent<K>& y) {
    Laurent<K> px = x.rb_project(), py = y.rb_project();
    Laurent<K> lhs = px * py;
    Laurent<K> rhs = (px * y).rb_project() + (x * py).rb_project() - (x * y).rb_project();
    return lhs == rhs;
}

/// Finite jet of a Laurent series: exact coefficients for all exponents
/// < prec, in strictly increasing exponent order with no stored zeros.
/// Serves as the independent truncation oracle for the exact kernel.
template <Field K>
class TruncatedSeries {
public:
    using Term = std::pair<std::int64_t, K>;

    TruncatedSeries() = default;
    TruncatedSeries(std::vector<Term> terms, std::int64_t prec) : prec_(prec) {
        for (auto& [e, c] : terms)
            if (e < prec && !c.is_zero()) terms_.push_back({e, c});
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t prec() const { return prec_; }
    bool is_zero() const { return terms_.empty(); }
    /// Known lower bound for the valuation (prec when no term is visible).
    std::int64_t val_bound() const { return terms_.empty() ? prec_ : terms_.front().first; }

    K coeff_at(std::int64_t e) const {
        for (const auto& [ee, c] : terms_)
            if (ee == e) return c;
        return K::zero();
    }

    TruncatedSeries truncate_to(std::int64_t p) const {
        TruncatedSeries r;
        r.prec_ = std::min(prec_, p);
        for (const auto& t : terms_)
            if (t.first < r.prec_) r.terms_.push_back(t);
        return r;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r;
        r.prec_ = std::min(prec_, o.prec_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            std::int64_t ei = i < terms_.size() ? terms_[i].first : r.prec_;
            std::int64_t ej = j < o.terms_.size() ? o.terms_[j].first : r.prec_;
            std::int64_t e = std::min(ei, ej);
            if (e >= r.prec_) break;
            K c = K::zero();
            if (ei == e) c += terms_[i++].second;
            if (ej == e) c += o.terms_[j++].second;
            if (!c.is_zero()) r.terms_.push_back({e, c});
        }
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        std::vector<Term> prod;
        std::int64_t prec = std::min(prec_ + o.val_bound(), o.prec_ + val_bound());
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                if (e1 + e2 < prec) prod.push_back({e1 + e2, c1 * c2});
        std::sort(prod.begin(), prod.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        TruncatedSeries r;
        r.prec_ = prec;
        for (const auto& [e, c] : prod) {
            if (!r.terms_.empty() && r.terms_.back().first == e)
                r.terms_.back().second += c;
            else
                r.terms_.push_back({e, c});
        }
        std::erase_if(r.terms_, [](const Term& t) { return t.second.is_zero(); });
        return r;
    }

    bool operator==(const TruncatedSeries& o) const {
        return prec_ == o.prec_ && terms_ == o.terms_;
    }

    std::string str() const {
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            detail::append_term(out, c, e, first);
            first = false;
        }
        if (first) out += "0";
        out += " + O(t^" + std::to_string(prec_) + ")";
        return out;
    }

private:
    std::vector<Term> terms_;
    std::int64_t prec_ = 0;
};

template <Field K>
TruncatedSeries<K> Laurent<K>::expand(std::int64_t prec) const {
    if (is_zero() || prec <= val_) return TruncatedSeries<K>({}, prec);
    auto count = static_cast<std::size_t>(prec - val_);
    std::vector<K> d = unit_series(count);
    std::vector<typename TruncatedSeries<K>::Term> terms;
    for (std::size_t j = 0; j < count; ++j)
        if (!d[j].is_zero()) terms.push_back({val_ + static_cast<std::int64_t>(j), d[j]});
    return TruncatedSeries<K>(std::move(terms), prec);
}

} // namespace rsd
