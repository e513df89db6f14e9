#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsd/lattice.hpp"
#include "rsd/module_type.hpp"

namespace rsd {

/// Rejection with a stable, machine-readable name (surfaced by the CLI).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

namespace detail {

template <Field K>
std::vector<std::size_t> echelon_pivot_rows(const Mat<K>& echelon) {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < echelon.cols(); ++j)
        for (std::size_t i = 0; i < echelon.rows(); ++i)
            if (!echelon.at(i, j).is_zero()) {
                rows.push_back(i);
                break;
            }
    return rows;
}

} // namespace detail

/// An arbitrary O-submodule M of A^n, stored per the splitting
/// M = M~ (+) M_f: the divisible part M~ as a reduced-column-echelon A-basis
/// and the free part as a canonical lattice lifted into the earliest-pivot
/// echelon complement of M~ (its basis vanishes on the pivot rows of M~).
template <Field K>
class GeneralSubmodule {
public:
    GeneralSubmodule() = default;

    /// M~ = A-span of a_span (exact: the O-span of finitely many vectors has
    /// no divisible elements), M_f = lattice of the o_span generators after
    /// projection along M~ onto the complement.
    static GeneralSubmodule build(std::size_t n, const std::vector<Vec<K>>& a_span,
                                  const std::vector<Vec<K>>& o_span) {
        for (const auto& v : a_span)
            if (v.size() != n) throw std::invalid_argument("a_span dimension mismatch");
        for (const auto& v : o_span)
            if (v.size() != n) throw std::invalid_argument("o_span dimension mismatch");
        GeneralSubmodule m;
        m.ambient_ = n;
        m.divisible_ = column_echelon(Mat<K>::from_cols(n, a_span));
        m.pivot_rows_ = detail::echelon_pivot_rows(m.divisible_);
        std::vector<Vec<K>> reduced;
        reduced.reserve(o_span.size());
        for (const auto& g : o_span) reduced.push_back(m.project_off_divisible(g));
        m.free_ = Lattice<K>::from_generators(n, reduced);
        return m;
    }

    std::size_t ambient() const { return ambient_; }
    const Mat<K>& divisible_basis() const { return divisible_; }
    const Lattice<K>& free_part() const { return free_; }
    std::size_t dim_divisible() const { return divisible_.cols(); }
    std::size_t rank_free() const { return free_.rank(); }

    /// (dim M~, rank M_f); dim_A(AM) is their sum.
    std::pair<std::size_t, std::size_t> submodule_type() const {
        return {dim_divisible(), rank_free()};
    }

    bool operator==(const GeneralSubmodule& o) const {
        return ambient_ == o.ambient_ && divisible_ == o.divisible_ && free_ == o.free_;
    }

    /// Projection along M~ onto the complement spanned by non-pivot
    /// coordinates; identity on the free part.
    Vec<K> project_off_divisible(const Vec<K>& v) const {
        Vec<K> r = v;
        for (std::size_t p = 0; p < pivot_rows_.size(); ++p) {
            const Laurent<K>& c = r[pivot_rows_[p]];
            if (c.is_zero()) continue;
            r = r - divisible_.col(p) * c;
        }
        return r;
    }

    bool membership(const Vec<K>& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        return free_.membership(project_off_divisible(x));
    }

    /// nu_M on the full module; -inf exactly on the divisible part.
    ExtInt module_valuation(const Vec<K>& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
        if (x.is_zero()) throw std::invalid_argument("module valuation of the zero vector");
        Vec<K> px = project_off_divisible(x);
        if (px.is_zero()) return ExtInt::minus_inf();
        return free_.module_valuation(px);
    }

    /// I_M(x) trichotomy, the divisible branch included.
    IdealDescriptor fractional_ideal(const Vec<K>& x) const {
        ExtInt v = module_valuation(x);
        if (v.is_finite()) return IdealDescriptor::power(v.v);
        return v == ExtInt::minus_inf() ? IdealDescriptor::all() : IdealDescriptor::zero();
    }

    Rank1Class rank1_class() const {
        if (ambient_ != 1) throw std::invalid_argument("rank-1 classification needs ambient 1");
        if (dim_divisible() == 1) return Rank1Class::divisible();
        if (rank_free() == 1) return Rank1Class::fractional(free_.exponents()[0]);
        return Rank1Class::zero();
    }

    GeneralSubmodule transported(const Mat<K>& phi) const {
        std::vector<Vec<K>> a_span, o_span;
        for (std::size_t j = 0; j < divisible_.cols(); ++j) a_span.push_back(phi * divisible_.col(j));
        for (std::size_t j = 0; j < free_.basis().cols(); ++j) o_span.push_back(phi * free_.basis().col(j));
        return build(ambient_, a_span, o_span);
    }

private:
    std::size_t ambient_ = 0;
    Mat<K> divisible_;
    std::vector<std::size_t> pivot_rows_;
    Lattice<K> free_;
};

/// The flag 0 <= M~ <= AM <= V attached to an O-submodule, with subquotient
/// dimensions (dim M~, rank M_f, codim).
template <Field K>
struct Flag {
    std::array<std::size_t, 3> dims{};
    Mat<K> v1; // canonical basis of M~
    Mat<K> v2; // canonical basis of AM
};

template <Field K>
Flag<K> flag_of(const GeneralSubmodule<K>& m) {
    Flag<K> f;
    f.dims = {m.dim_divisible(), m.rank_free(),
              m.ambient() - m.dim_divisible() - m.rank_free()};
    f.v1 = m.divisible_basis();
    f.v2 = column_echelon(m.divisible_basis().hstack(m.free_part().basis()));
    return f;
}

/// A k[t^-1]-submodule N of A^n in the mirror splitting N = N~ (+) N_f:
/// the divisible part as an echelon A-basis, the free part as a stored
/// k[t^-1]-basis (canonicalized against a lattice during RSD validation).
template <Field K>
class SingularModule {
public:
    SingularModule() = default;

    static SingularModule build(std::size_t n, const std::vector<Vec<K>>& a_span,
                                const std::vector<Vec<K>>& gens) {
        for (const auto& v : a_span)
            if (v.size() != n) throw std::invalid_argument("a_span dimension mismatch");
        for (const auto& v : gens)
            if (v.size() != n) throw std::invalid_argument("gens dimension mismatch");
        SingularModule s;
        s.ambient_ = n;
        s.divisible_ = column_echelon(Mat<K>::from_cols(n, a_span));
        s.free_ = Mat<K>::from_cols(n, gens);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    const Mat<K>& divisible_basis() const { return divisible_; }
    const Mat<K>& free_basis() const { return free_; }
    std::size_t dim_divisible() const { return divisible_.cols(); }
    std::size_t rank_free() const { return free_.cols(); }

    SingularModule transported(const Mat<K>& phi) const {
        std::vector<Vec<K>> a_span, gens;
        for (std::size_t j = 0; j < divisible_.cols(); ++j) a_span.push_back(phi * divisible_.col(j));
        for (std::size_t j = 0; j < free_.cols(); ++j) gens.push_back(phi * free_.col(j));
        return build(ambient_, a_span, gens);
    }

private:
    std::size_t ambient_ = 0;
    Mat<K> divisible_;
    Mat<K> free_;
};

namespace detail {

/// Column reduction of the N_f coordinate matrix C over the PID k[t^-1].
/// Succeeds iff GL_r(k[t^-1]) column operations bring C to t^-1 (I + t R)
/// with R over O, in which case phi = I + t R is returned; otherwise the
/// pair is not a direct sum and the shape is rejected.
///
/// Method: each column splits entrywise into singular + regular parts.
/// Repeatedly look at the top singular terms: if the matrix of leading
/// symbol vectors (each column's coefficient vector at its own top depth
/// d_j) is nonsingular over k, the depths are the minimal indices of the
/// module; validity forces them all to be 1, and the constant change of
/// basis by the inverse symbol matrix lands exactly on t^-1 I singular
/// parts. If the symbol matrix is singular, a kernel vector yields a
/// unimodular combination that strictly drops one column's depth
/// (multiplying by t^{-d} only disturbs terms below the top), so the loop
/// terminates. A column whose singular part vanishes is a nonzero element
/// of N_f meeting O^r, which kills the direct sum.
template <Field K>
Mat<K> reduce_singular_frame(std::vector<Vec<K>>& cols) {
    const std::size_t r = cols.size();
    for (;;) {
        std::vector<std::int64_t> depth(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t i = 0; i < r; ++i) {
                const Laurent<K>& e = cols[j][i];
                if (!e.is_zero() && e.val() < 0) depth[j] = std::max(depth[j], -e.val());
            }
            if (depth[j] == 0)
                throw DomainError("SingularShapeMismatch",
                                  "a k[t^-1]-basis element lies in O^r, so the sum is not direct");
        }
        // leading symbols over k: column j at its own depth
        Mat<K> symbols(r, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                symbols.at(i, j) = Laurent<K>::constant(cols[j][i].coeff_at(-depth[j]));
        auto sol = mat_solve(symbols, Vec<K>(r));
        if (sol.kernel.empty()) {
            for (std::size_t j = 0; j < r; ++j)
                if (depth[j] != 1)
                    throw DomainError("SingularShapeMismatch",
                                      "minimal k[t^-1] column degrees exceed 1; no basis of the "
                                      "form t^-1 e_i + O^r exists");
            auto inv = mat_inverse(symbols);
            std::vector<Vec<K>> out(r, Vec<K>(r));
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t l = 0; l < r; ++l)
                    if (!inv->at(l, j).is_zero()) out[j] = out[j] + cols[l] * inv->at(l, j);
            cols = std::move(out);
            Mat<K> phi = Mat<K>::identity(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    phi.at(i, j) = phi.at(i, j) + cols[j][i].rb_project().shifted(1);
            return phi;
        }
        // drop the deepest column in the kernel's support
        const Vec<K>& mu = sol.kernel.front();
        std::size_t target = r;
        std::int64_t dmax = -1;
        for (std::size_t j = 0; j < r; ++j)
            if (!mu[j].is_zero() && depth[j] > dmax) {
                dmax = depth[j];
                target = j;
            }
        Vec<K> combo(r);
        for (std::size_t j = 0; j < r; ++j) {
            if (mu[j].is_zero()) continue;
            combo = combo + cols[j] * (mu[j] * Laurent<K>::t_power(-(dmax - depth[j])));
        }
        cols[target] = std::move(combo);
    }
}

} // namespace detail

template <Field K>
class RSDecomposition;

template <Field K>
RSDecomposition<K> build_rsd(const GeneralSubmodule<K>& m, const SingularModule<K>& n);

/// A validated regular-singular decomposition (M, N) of A^n, equivalently
/// the Rota-Baxter projection p with image M and kernel N. Stores the frame
/// B = (basis of M~ | O-basis of M cap V_0 | basis of N~) and the unit frame
/// phi in GL_r(O) with phi(t^-1 e_i) running through the normalized
/// k[t^-1]-basis of N_f in B_f-coordinates. V_0 = A N_1 with N_1 = N cap AM
/// is intrinsic to the pair, so every stored component is canonical.
template <Field K>
class RSDecomposition {
public:
    const GeneralSubmodule<K>& regular() const { return regular_; }
    const SingularModule<K>& singular() const { return singular_; }
    std::size_t ambient() const { return regular_.ambient(); }
    const Mat<K>& frame() const { return frame_; }
    const Mat<K>& frame_inverse() const { return frame_inv_; }
    ModuleType type() const { return type_; }
    /// The lattice M cap V_0 whose basis forms the frame's middle block.
    const Lattice<K>& pair_lattice() const { return pair_free_; }

    /// The unit frame phi of Prop-style normal form; r >= 1 required.
    const Mat<K>& unit_frame() const {
        if (type_.r == 0)
            throw DomainError("NoRegularPart", "the decomposition has no regular block");
        return unit_frame_;
    }

    /// p(v): in frame coordinates (x_div, x_0, x_sing) the projection acts as
    /// (x_div, phi P phi^{-1} x_0, 0) with P entrywise on the middle block.
    Vec<K> apply_p(const Vec<K>& v) const {
        if (v.size() != ambient()) throw std::invalid_argument("ambient dimension mismatch");
        Vec<K> x = frame_inv_ * v;
        const std::size_t l = type_.l, r = type_.r;
        Vec<K> mid(r);
        for (std::size_t i = 0; i < r; ++i) mid[i] = x[l + i];
        if (r > 0) {
            mid = unit_frame_inv_ * mid;
            for (std::size_t i = 0; i < r; ++i) mid[i] = mid[i].rb_project();
            mid = unit_frame_ * mid;
        }
        Vec<K> y(ambient());
        for (std::size_t i = 0; i < l; ++i) y[i] = x[i];
        for (std::size_t i = 0; i < r; ++i) y[l + i] = mid[i];
        return frame_ * y;
    }

    RSDecomposition transported(const Mat<K>& phi) const {
        if (phi.rows() != ambient() || phi.cols() != ambient())
            throw std::invalid_argument("transport dimension mismatch");
        if (mat_rank(phi) != ambient())
            throw DomainError("SingularTransport", "transport by a singular matrix");
        return build_rsd(regular_.transported(phi), singular_.transported(phi));
    }

    /// Canonical-component equality: same M (echelon + lattice), same N~
    /// echelon, same pair lattice and unit frame. These data determine (M, N).
    bool operator==(const RSDecomposition& o) const {
        return regular_ == o.regular_ &&
               singular_.divisible_basis() == o.singular_.divisible_basis() &&
               pair_free_ == o.pair_free_ && unit_frame_ == o.unit_frame_;
    }

    friend RSDecomposition build_rsd<K>(const GeneralSubmodule<K>&, const SingularModule<K>&);

private:
    GeneralSubmodule<K> regular_;
    SingularModule<K> singular_;
    Lattice<K> pair_free_;
    Mat<K> frame_, frame_inv_;
    Mat<K> unit_frame_, unit_frame_inv_;
    ModuleType type_;
};

/// Validates the pair (M, N) and assembles the decomposition.
///
/// The intrinsic frame is derived in the order of the decomposition theorem:
/// V_1 = AM, then N_1 = N cap V_1 (the N_f generators corrected off N~),
/// then V_0 = A N_1 and the lattice M cap V_0. Checks:
///  (1) A-spans: V_1 (+) N~ = V, A N_1 is r-dimensional, and
///      V_1 = M~ (+) V_0 with M_f projecting into V_0;
///  (2) in the O-basis of M cap V_0, the k[t^-1] column reduction of N_1
///      reaches t^-1 (I + t R) with R over O.
/// Rejections: SpanMismatch for (1), SingularShapeMismatch for (2).
template <Field K>
RSDecomposition<K> build_rsd(const GeneralSubmodule<K>& m, const SingularModule<K>& n) {
    if (m.ambient() != n.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    const std::size_t dim = m.ambient();
    const std::size_t l = m.dim_divisible(), r = m.rank_free(), k = n.dim_divisible();

    if (l + r + k != dim)
        throw DomainError("SpanMismatch", "block dimensions " + std::to_string(l) + "+" +
                                              std::to_string(r) + "+" + std::to_string(k) +
                                              " do not fill dimension " + std::to_string(dim));
    if (n.rank_free() != r)
        throw DomainError("SpanMismatch",
                          "free ranks differ: N_f has " + std::to_string(n.rank_free()) +
                              " generators, M_f rank " + std::to_string(r));

    // V_1 = AM, and V = V_1 (+) N~
    Mat<K> v1 = column_echelon(m.divisible_basis().hstack(m.free_part().basis()));
    Mat<K> v1_ntilde = v1.hstack(n.divisible_basis());
    if (v1_ntilde.cols() != dim || !mat_inverse(v1_ntilde))
        throw DomainError("SpanMismatch", "AM and N~ do not span V directly");

    // correct the N_f generators off N~: N_1 = N cap V_1
    std::vector<Vec<K>> n1;
    n1.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        auto sol = mat_solve(v1_ntilde, n.free_basis().col(j));
        Vec<K> inside(dim);
        for (std::size_t i = 0; i < l + r; ++i)
            if (!(*sol.particular)[i].is_zero())
                inside = inside + v1.col(i) * (*sol.particular)[i];
        n1.push_back(std::move(inside));
    }
    if (r > 0 && mat_rank(Mat<K>::from_cols(dim, n1)) != r)
        throw DomainError("SpanMismatch", "N cap AM does not span an r-dimensional space");

    // V_0 = A N_1, and V_1 = M~ (+) V_0
    Mat<K> v0 = column_echelon(Mat<K>::from_cols(dim, n1));
    Mat<K> mdiv_v0 = m.divisible_basis().hstack(v0);
    if (mat_rank(mdiv_v0) != l + r)
        throw DomainError("SpanMismatch", "M~ meets A(N cap AM)");

    // M cap V_0 as a canonical lattice: project the free basis along M~
    std::vector<Vec<K>> projected;
    projected.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        auto sol = mat_solve(mdiv_v0, m.free_part().basis().col(j));
        if (!sol.consistent())
            throw DomainError("SpanMismatch", "A M_f is not contained in M~ + A(N cap AM)");
        Vec<K> inside(dim);
        for (std::size_t i = 0; i < r; ++i)
            if (!(*sol.particular)[l + i].is_zero())
                inside = inside + v0.col(i) * (*sol.particular)[l + i];
        projected.push_back(std::move(inside));
    }
    Lattice<K> pair_free = Lattice<K>::from_generators(dim, projected);
    if (pair_free.rank() != r)
        throw DomainError("SpanMismatch", "M cap V_0 has deficient rank");

    RSDecomposition<K> rsd;
    rsd.regular_ = m;
    rsd.type_ = ModuleType{k, r, l};
    rsd.pair_free_ = pair_free;
    rsd.frame_ = m.divisible_basis().hstack(pair_free.basis()).hstack(n.divisible_basis());
    auto frame_inv = mat_inverse(rsd.frame_);
    if (!frame_inv) throw DomainError("SpanMismatch", "M~, V_0 and N~ do not span V directly");
    rsd.frame_inv_ = std::move(*frame_inv);

    // N_1 in the middle-block coordinates (the other blocks vanish since
    // N_1 spans V_0)
    std::vector<Vec<K>> coords;
    coords.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        Vec<K> full = rsd.frame_inv_ * n1[j];
        Vec<K> c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = full[l + i];
        coords.push_back(std::move(c));
    }

    if (r > 0) {
        rsd.unit_frame_ = detail::reduce_singular_frame<K>(coords);
        rsd.unit_frame_inv_ = *mat_inverse(rsd.unit_frame_);
    } else {
        rsd.unit_frame_ = Mat<K>(0, 0);
        rsd.unit_frame_inv_ = Mat<K>(0, 0);
    }

    // store N with the normalized free basis b_i (ambient coordinates)
    std::vector<Vec<K>> nf_normalized;
    nf_normalized.reserve(r);
    const Mat<K>& bf = pair_free.basis();
    for (std::size_t j = 0; j < r; ++j) {
        Vec<K> b(dim);
        for (std::size_t i = 0; i < r; ++i) {
            Laurent<K> cij = rsd.unit_frame_.at(i, j) * Laurent<K>::t_power(-1);
            if (!cij.is_zero()) b = b + bf.col(i) * cij;
        }
        nf_normalized.push_back(std::move(b));
    }
    std::vector<Vec<K>> n_div_cols;
    for (std::size_t j = 0; j < n.divisible_basis().cols(); ++j)
        n_div_cols.push_back(n.divisible_basis().col(j));
    rsd.singular_ = SingularModule<K>::build(dim, n_div_cols, nf_normalized);
    return rsd;
}

/// The normalized unit frame phi in GL_r(O) with phi(t^-1 e_i) = b_i.
template <Field K>
Mat<K> normalize_singular(const RSDecomposition<K>& rsd) {
    return rsd.unit_frame();
}

/// Exact check of the module axiom P(a) p(x) = p(P(a) x + a p(x) - a x).
template <Field K>
bool verify_module_axiom(const RSDecomposition<K>& rsd, const Laurent<K>& a, const Vec<K>& x) {
    Vec<K> px = rsd.apply_p(x);
    Laurent<K> pa = a.rb_project();
    Vec<K> lhs = px * pa;
    Vec<K> rhs = rsd.apply_p(x * pa + px * a - x * a);
    return lhs == rhs;
}

/// Block-diagonal model of type (k, r, l): the first k coordinates carry
/// (0, A), the next r carry (O, A^-), the last l carry (A, 0).
template <Field K>
RSDecomposition<K> canonical_rsd(const ModuleType& type) {
    const std::size_t n = type.n();
    std::vector<Vec<K>> m_div, m_free, n_div, n_free;
    for (std::size_t i = 0; i < type.k; ++i) n_div.push_back(Vec<K>::unit(n, i));
    for (std::size_t i = 0; i < type.r; ++i) {
        m_free.push_back(Vec<K>::unit(n, type.k + i));
        n_free.push_back(Vec<K>::unit(n, type.k + i) * Laurent<K>::t_power(-1));
    }
    for (std::size_t i = 0; i < type.l; ++i) m_div.push_back(Vec<K>::unit(n, type.k + type.r + i));
    return build_rsd(GeneralSubmodule<K>::build(n, m_div, m_free),
                     SingularModule<K>::build(n, n_div, n_free));
}

/// The certified pieces of V = M~ (+) V_0 (+) N~ with V_0 = A M_f = A N_f.
template <Field K>
struct RsdParts {
    Mat<K> m_div;
    Mat<K> v0;
    Mat<K> n_div;
    Lattice<K> m_free;
    Mat<K> n_free;
};

template <Field K>
RsdParts<K> rsd_decompose(const RSDecomposition<K>& rsd) {
    RsdParts<K> p;
    p.m_div = rsd.regular().divisible_basis();
    p.m_free = rsd.pair_lattice();
    p.v0 = p.m_free.basis();
    p.n_div = rsd.singular().divisible_basis();
    p.n_free = rsd.singular().free_basis();
    return p;
}

/// Membership of v in N = N~ (+) N_f: the N_f coefficients must lie in
/// k[t^-1]. Valid on a validated decomposition only.
template <Field K>
bool singular_membership(const RSDecomposition<K>& rsd, const Vec<K>& v) {
    Mat<K> nbasis = rsd.singular().divisible_basis().hstack(rsd.singular().free_basis());
    if (nbasis.cols() == 0) return v.is_zero();
    auto sol = mat_solve(nbasis, v);
    if (!sol.consistent()) return false;
    for (std::size_t i = rsd.singular().dim_divisible(); i < nbasis.cols(); ++i)
        if (!(*sol.particular)[i].in_k_tinv()) return false;
    return true;
}

} // namespace rsd
