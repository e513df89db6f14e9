#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rsd {

/// Isomorphism type of an n-dimensional module: multiplicities (k, r, l) of
/// the three one-dimensional irreducibles A_0 = (A, 0), A_r = (A, P),
/// A_1 = (A, Id). In decomposition terms k = dim N~, r = rank M_f,
/// l = dim M~; this is the complete orbit invariant.
struct ModuleType {
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t l = 0;

    std::size_t n() const { return k + r + l; }
    bool operator==(const ModuleType&) const = default;
    std::string str() const {
        return "(" + std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(l) + ")";
    }
};

/// All types with k + r + l = n, in the fixed enumeration order (k outer,
/// then r); orbit_index is the position in this list.
std::vector<ModuleType> enumerate_types(std::size_t n);
std::size_t orbit_index(const ModuleType& type);

/// Number of orbits on decompositions of A^n: (n+2)(n+1)/2.
std::int64_t count_orbits(std::size_t n);
/// Number of classes of finitely generated O-submodules of A^n: n+1.
std::int64_t count_fractional_classes(std::size_t n);

} // namespace rsd
