#pragma once

#include <cstdint>
#include <random>

#include "rsd/laurent.hpp"

namespace rsd {

/// Seeded deterministic source for every randomized routine. All draws go
/// through the helpers below, never through std distributions, so identical
/// seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

/// Small nonzero field element; numerators in [-4, 4].
template <Field K>
K random_nonzero(Rng& rng) {
    for (;;) {
        K a = K::from_int(static_cast<long>(rng.range(-4, 4)));
        if (!a.is_zero()) return a;
    }
}

template <Field K>
K random_element(Rng& rng) {
    return K::from_int(static_cast<long>(rng.range(-4, 4)));
}

/// Random polynomial of degree <= max_deg (possibly zero).
template <Field K>
Poly<K> random_poly(Rng& rng, std::int64_t max_deg) {
    std::vector<K> c(static_cast<std::size_t>(max_deg + 1), K::zero());
    for (auto& a : c) a = random_element<K>(rng);
    return Poly<K>(std::move(c));
}

/// Random nonzero polynomial with nonzero constant term (an O-unit numerator).
template <Field K>
Poly<K> random_unit_poly(Rng& rng, std::int64_t max_deg) {
    Poly<K> tail = max_deg > 0 ? random_poly<K>(rng, max_deg - 1).shifted(1) : Poly<K>::zero();
    return Poly<K>::constant(random_nonzero<K>(rng)) + tail;
}

/// Random scalar t^v * num/den with v in [min_val, max_val], num of degree
/// <= num_deg, den an O-unit of degree <= den_deg. May be zero.
template <Field K>
Laurent<K> random_scalar(Rng& rng, std::int64_t min_val, std::int64_t max_val,
                         std::int64_t num_deg, std::int64_t den_deg) {
    if (rng.chance(1, 8)) return Laurent<K>::zero();
    Poly<K> num = random_poly<K>(rng, num_deg);
    if (num.is_zero()) num = Poly<K>::constant(random_nonzero<K>(rng));
    Poly<K> den = Poly<K>::constant(K::one());
    if (den_deg > 0) {
        den = Poly<K>::one() + random_poly<K>(rng, den_deg - 1).shifted(1);
    }
    return Laurent<K>::make(rng.range(min_val, max_val), num, den);
}

/// Random Laurent polynomial (no denominator) with exponents in
/// [min_exp, max_exp]; zero with small probability.
template <Field K>
Laurent<K> random_laurent_poly(Rng& rng, std::int64_t min_exp, std::int64_t max_exp) {
    if (rng.chance(1, 8)) return Laurent<K>::zero();
    Poly<K> p = random_poly<K>(rng, max_exp - min_exp);
    if (p.is_zero()) p = Poly<K>::constant(random_nonzero<K>(rng));
    return Laurent<K>::make(min_exp, p, Poly<K>::one());
}

} // namespace rsd
