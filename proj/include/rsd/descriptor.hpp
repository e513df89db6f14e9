#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rsd/module_type.hpp"

namespace rsd {

/// Symbolic block expression for the (infinite-dimensional) groups and
/// algebras of the theory: stabilizers, endomorphism algebras, fibers. These
/// are reported, never enumerated. Zero-size blocks are omitted at
/// construction, block order is fixed, and equality is structural, so the
/// printed token string is canonical.
///
/// Token grammar:
///   atom       := 'GL(' n ',' base ')' | 'M(' r 'x' c ',' base ')'
///               | base | 'I(' n ')' | '0' | '1'
///   base       := 'A' | 'O' | 'k'
///   product    := atom (' x ' atom)*
///   diagonal   := 'diag(' descriptor (', ' descriptor)* ')'
///   triangle   := '[' row ('; ' row)* ']'     rows of atoms or '0'
///   quotient   := descriptor ' / ' descriptor
class StructureDescriptor {
public:
    enum class Base { A, O, k };
    enum class Shape { full_linear_group, matrix_space, field, identity };
    struct Block {
        Shape shape;
        std::size_t rows = 0, cols = 0;
        Base base = Base::A;
        bool operator==(const Block&) const = default;
    };
    enum class Tag { zero, trivial, product, diagonal, lower_block_triangular, quotient };

    static StructureDescriptor zero();
    static StructureDescriptor trivial();
    /// Product of the given blocks; empty input collapses to the trivial
    /// descriptor.
    static StructureDescriptor product(std::vector<Block> factors);
    /// Same factors printed as diag(...).
    static StructureDescriptor diagonal(std::vector<Block> factors);
    /// Lower block triangular with the given nonzero diagonal blocks and the
    /// lower grid filled with matrix spaces over the given bases; entries
    /// row-major, row i holding i+1 blocks.
    static StructureDescriptor triangle(std::vector<Block> grid, std::size_t diag_count);
    static StructureDescriptor quotient(StructureDescriptor num, StructureDescriptor den);

    static Block gl(std::size_t n, Base b) { return {Shape::full_linear_group, n, n, b}; }
    static Block mat(std::size_t r, std::size_t c, Base b) { return {Shape::matrix_space, r, c, b}; }
    static Block field(Base b) { return {Shape::field, 1, 1, b}; }

    Tag tag() const { return tag_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    bool is_zero() const { return tag_ == Tag::zero; }
    bool is_trivial() const { return tag_ == Tag::trivial; }

    bool operator==(const StructureDescriptor&) const = default;

    std::string str() const;

private:
    Tag tag_ = Tag::trivial;
    std::vector<Block> blocks_;
    std::size_t diag_count_ = 0;
    std::vector<StructureDescriptor> parts_; // quotient: {numerator, denominator}
};

enum class Irreducible { A0, Ar, A1 };

/// Hom spaces between the irreducibles: 0 off the diagonal, A for the ends
/// of A_0 and A_1, k for the end of A_r.
StructureDescriptor hom_descriptor(Irreducible i, Irreducible j);

/// End of type (k, r, l): M(kxk, A) x M(lxl, A) x M(rxr, k).
StructureDescriptor end_descriptor(const ModuleType& type);

enum class StabilizerScope { pair, module_only };

/// pair: the stabilizer of (M, N), GL(k,A) x GL(l,A) x GL(r,k).
/// module_only: the stabilizer G_M of M alone, a lower block triangle with
/// diagonal GL(l,A), GL(r,O), GL(k,A) (flag order M~, V_0, rest; note the
/// A_1-multiplicity l equals dim M~).
StructureDescriptor stabilizer_descriptor(const ModuleType& type, StabilizerScope scope);

/// Fiber of the forgetful map (M, N) -> M over a module of the given type:
/// the quotient G_M / diag(GL(l,A), GL(r,k), GL(k,A)), together with the
/// bundle view (flag type, affine-Grassmannian fiber GL(r,A)/GL(r,O)).
struct FiberDescriptor {
    StructureDescriptor quotient;
    std::array<std::size_t, 3> flag_type{}; // (dim M~, r, codim)
    StructureDescriptor bundle_fiber;

    bool operator==(const FiberDescriptor&) const = default;
};

FiberDescriptor fiber_descriptor(const ModuleType& type);

} // namespace rsd
