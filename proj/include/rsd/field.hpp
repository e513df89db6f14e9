#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace rsd {

/// Exact rational coefficient field, the default choice for k.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long n) { return Rat(n); }
    static Rat from_fraction(long num, unsigned long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        Rat r;
        r.v_ = mpq_class(num, den);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }

    /// Rough size measure used by pivot heuristics (bit length of num+den).
    std::size_t size_hint() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    }

    std::string str() const { return v_.get_str(); }
    static const char* field_name() { return "Q"; }

private:
    mpq_class v_;
};

/// Prime field F_p with a process-wide modulus, NTL-style. Set the modulus
/// once before constructing any values; mixing moduli is not supported.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) { v_ = norm(n); }

    static void set_modulus(std::uint64_t p) {
        if (p < 2) throw std::domain_error("modulus must be >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::domain_error("modulus must be prime");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }
    static Fp from_int(long n) { return Fp(n); }
    static Fp from_fraction(long num, unsigned long den) {
        Fp d(static_cast<long>(den % modulus_));
        if (d.is_zero())
            throw std::domain_error("denominator vanishes modulo " + std::to_string(modulus_));
        return Fp(num) / d;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const { return raw((v_ + o.v_) % modulus_); }
    Fp operator-(const Fp& o) const { return raw((v_ + modulus_ - o.v_) % modulus_); }
    Fp operator*(const Fp& o) const { return raw(mulmod(v_, o.v_)); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus_), nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus_);
        return raw(static_cast<std::uint64_t>(t));
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_; }

    std::size_t size_hint() const { return 1; }

    std::string str() const { return std::to_string(v_); }
    static std::string field_name() { return "F" + std::to_string(modulus_); }

    std::uint64_t residue() const { return v_; }

private:
    static Fp raw(std::uint64_t v) { Fp r; r.v_ = v; return r; }
    static std::uint64_t norm(long n) {
        auto p = static_cast<std::int64_t>(modulus_);
        std::int64_t m = n % p;
        if (m < 0) m += p;
        return static_cast<std::uint64_t>(m);
    }
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus_);
    }

    std::uint64_t v_;
    inline static std::uint64_t modulus_ = 2;
};

template <class K>
concept Field = std::regular<K> && requires(const K a, const K b) {
    { K::zero() } -> std::convertible_to<K>;
    { K::one() } -> std::convertible_to<K>;
    { K::from_int(1L) } -> std::convertible_to<K>;
    { K::from_fraction(1L, 2UL) } -> std::convertible_to<K>;
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inv() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.size_hint() } -> std::convertible_to<std::size_t>;
    { a.str() } -> std::convertible_to<std::string>;
};

} // namespace rsd
