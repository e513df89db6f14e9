#include "rsd/descriptor.hpp"

#include <stdexcept>

namespace rsd {

std::vector<ModuleType> enumerate_types(std::size_t n) {
    std::vector<ModuleType> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t r = 0; r + k <= n; ++r) out.push_back({k, r, n - k - r});
    return out;
}

std::size_t orbit_index(const ModuleType& type) {
    std::size_t idx = 0;
    for (const auto& t : enumerate_types(type.n())) {
        if (t == type) return idx;
        ++idx;
    }
    throw std::logic_error("type not in its own enumeration");
}

std::int64_t count_orbits(std::size_t n) {
    auto m = static_cast<std::int64_t>(n);
    return (m + 2) * (m + 1) / 2;
}

std::int64_t count_fractional_classes(std::size_t n) {
    return static_cast<std::int64_t>(n) + 1;
}

StructureDescriptor StructureDescriptor::zero() {
    StructureDescriptor d;
    d.tag_ = Tag::zero;
    return d;
}

StructureDescriptor StructureDescriptor::trivial() {
    return StructureDescriptor{};
}

StructureDescriptor StructureDescriptor::product(std::vector<Block> factors) {
    if (factors.empty()) return trivial();
    StructureDescriptor d;
    d.tag_ = Tag::product;
    d.blocks_ = std::move(factors);
    return d;
}

StructureDescriptor StructureDescriptor::diagonal(std::vector<Block> factors) {
    if (factors.empty()) return trivial();
    if (factors.size() == 1) return product(std::move(factors));
    StructureDescriptor d;
    d.tag_ = Tag::diagonal;
    d.blocks_ = std::move(factors);
    return d;
}

StructureDescriptor StructureDescriptor::triangle(std::vector<Block> grid,
                                                  std::size_t diag_count) {
    if (diag_count == 0) return trivial();
    if (grid.size() != diag_count * (diag_count + 1) / 2)
        throw std::invalid_argument("triangle grid size mismatch");
    if (diag_count == 1) return product({grid[0]});
    StructureDescriptor d;
    d.tag_ = Tag::lower_block_triangular;
    d.blocks_ = std::move(grid);
    d.diag_count_ = diag_count;
    return d;
}

StructureDescriptor StructureDescriptor::quotient(StructureDescriptor num,
                                                  StructureDescriptor den) {
    if (den.is_trivial()) return num;
    if (num.is_trivial()) return trivial();
    StructureDescriptor d;
    d.tag_ = Tag::quotient;
    d.parts_.push_back(std::move(num));
    d.parts_.push_back(std::move(den));
    return d;
}

namespace {

char base_char(StructureDescriptor::Base b) {
    switch (b) {
        case StructureDescriptor::Base::A: return 'A';
        case StructureDescriptor::Base::O: return 'O';
        default: return 'k';
    }
}

std::string block_str(const StructureDescriptor::Block& b) {
    using Shape = StructureDescriptor::Shape;
    switch (b.shape) {
        case Shape::full_linear_group:
            return "GL(" + std::to_string(b.rows) + "," + base_char(b.base) + ")";
        case Shape::matrix_space:
            return "M(" + std::to_string(b.rows) + "x" + std::to_string(b.cols) + "," +
                   base_char(b.base) + ")";
        case Shape::field:
            return std::string(1, base_char(b.base));
        default:
            return "I(" + std::to_string(b.rows) + ")";
    }
}

} // namespace

std::string StructureDescriptor::str() const {
    switch (tag_) {
        case Tag::zero:
            return "0";
        case Tag::trivial:
            return "1";
        case Tag::product: {
            std::string out;
            for (std::size_t i = 0; i < blocks_.size(); ++i) {
                if (i) out += " x ";
                out += block_str(blocks_[i]);
            }
            return out;
        }
        case Tag::diagonal: {
            std::string out = "diag(";
            for (std::size_t i = 0; i < blocks_.size(); ++i) {
                if (i) out += ", ";
                out += block_str(blocks_[i]);
            }
            return out + ")";
        }
        case Tag::lower_block_triangular: {
            std::string out = "[";
            std::size_t pos = 0;
            for (std::size_t i = 0; i < diag_count_; ++i) {
                if (i) out += "; ";
                for (std::size_t j = 0; j < diag_count_; ++j) {
                    if (j) out += " ";
                    out += j <= i ? block_str(blocks_[pos + j]) : "0";
                }
                pos += i + 1;
            }
            return out + "]";
        }
        default:
            return parts_[0].str() + " / " + parts_[1].str();
    }
}

StructureDescriptor hom_descriptor(Irreducible i, Irreducible j) {
    if (i != j) return StructureDescriptor::zero();
    auto base = (i == Irreducible::Ar) ? StructureDescriptor::Base::k
                                       : StructureDescriptor::Base::A;
    return StructureDescriptor::product({StructureDescriptor::field(base)});
}

StructureDescriptor end_descriptor(const ModuleType& type) {
    using D = StructureDescriptor;
    std::vector<D::Block> factors;
    if (type.k > 0) factors.push_back(D::mat(type.k, type.k, D::Base::A));
    if (type.l > 0) factors.push_back(D::mat(type.l, type.l, D::Base::A));
    if (type.r > 0) factors.push_back(D::mat(type.r, type.r, D::Base::k));
    return D::product(std::move(factors));
}

namespace {

/// G_M grid in flag order (M~ block first): diagonal GL(l,A), GL(r,O),
/// GL(k,A) with full matrix spaces over A below; zero-size blocks dropped.
StructureDescriptor module_stabilizer(const ModuleType& type) {
    using D = StructureDescriptor;
    struct Slot {
        std::size_t dim;
        D::Base base;
    };
    std::vector<Slot> diag;
    if (type.l > 0) diag.push_back({type.l, D::Base::A});
    if (type.r > 0) diag.push_back({type.r, D::Base::O});
    if (type.k > 0) diag.push_back({type.k, D::Base::A});
    std::vector<D::Block> grid;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            grid.push_back(D::mat(diag[i].dim, diag[j].dim, D::Base::A));
        grid.push_back(D::gl(diag[i].dim, diag[i].base));
    }
    return D::triangle(std::move(grid), diag.size());
}

} // namespace

StructureDescriptor stabilizer_descriptor(const ModuleType& type, StabilizerScope scope) {
    using D = StructureDescriptor;
    if (scope == StabilizerScope::module_only) return module_stabilizer(type);
    std::vector<D::Block> factors;
    if (type.k > 0) factors.push_back(D::gl(type.k, D::Base::A));
    if (type.l > 0) factors.push_back(D::gl(type.l, D::Base::A));
    if (type.r > 0) factors.push_back(D::gl(type.r, D::Base::k));
    return D::product(std::move(factors));
}

FiberDescriptor fiber_descriptor(const ModuleType& type) {
    using D = StructureDescriptor;
    FiberDescriptor f;
    std::vector<D::Block> den;
    if (type.l > 0) den.push_back(D::gl(type.l, D::Base::A));
    if (type.r > 0) den.push_back(D::gl(type.r, D::Base::k));
    if (type.k > 0) den.push_back(D::gl(type.k, D::Base::A));
    f.quotient = D::quotient(module_stabilizer(type), D::diagonal(std::move(den)));
    f.flag_type = {type.l, type.r, type.k};
    f.bundle_fiber =
        type.r > 0
            ? D::quotient(D::product({D::gl(type.r, D::Base::A)}),
                          D::product({D::gl(type.r, D::Base::O)}))
            : D::trivial();
    return f;
}

} // namespace rsd
