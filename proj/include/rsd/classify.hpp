#pragma once

#include <optional>

#include "rsd/descriptor.hpp"
#include "rsd/rsdmod.hpp"

namespace rsd {

template <Field K>
Mat<K> block_diag(const std::vector<Mat<K>>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    Mat<K> m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

template <Field K>
ModuleType type_of(const RSDecomposition<K>& rsd) {
    return rsd.type();
}

template <Field K>
bool are_isomorphic(const RSDecomposition<K>& a, const RSDecomposition<K>& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    return a.type() == b.type();
}

namespace detail {

/// The frame map carrying the block model of rsd's type onto rsd itself:
/// T = B * blockdiag(I_l, phi, I_k). Conjugation by T turns the blockwise
/// (Id, P, 0) projection into apply_p.
template <Field K>
Mat<K> standardizing_map(const RSDecomposition<K>& rsd, bool inverse) {
    ModuleType t = rsd.type();
    std::vector<Mat<K>> blocks{Mat<K>::identity(t.l),
                               t.r > 0 ? (inverse ? *mat_inverse(rsd.unit_frame()) : rsd.unit_frame())
                                       : Mat<K>(0, 0),
                               Mat<K>::identity(t.k)};
    Mat<K> d = block_diag(blocks);
    return inverse ? d * rsd.frame_inverse() : rsd.frame() * d;
}

} // namespace detail

/// A transporting isomorphism phi with transport(a, phi) == b, existing
/// exactly when the types match. Built by composing the two standardizing
/// frames, so it carries (M~, M_f, N~, N_f) of a onto those of b.
template <Field K>
std::optional<Mat<K>> iso_witness(const RSDecomposition<K>& a, const RSDecomposition<K>& b) {
    if (!are_isomorphic(a, b)) return std::nullopt;
    return detail::standardizing_map(b, false) * detail::standardizing_map(a, true);
}

/// Random invertible constant matrix (entries in k), deterministic in rng.
template <Field K>
Mat<K> random_gl_constant(Rng& rng, std::size_t n) {
    if (n == 0) return Mat<K>(0, 0);
    for (;;) {
        Mat<K> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Laurent<K>::constant(random_element<K>(rng));
        if (mat_rank(m) == n) return m;
    }
}

/// A sample from the stabilizer of (M, N): blockwise GL_k(A), GL_l(A) from
/// the elementary-generator sampler and GL_r(k) constants, conjugated into
/// the decomposition's frame. Transport by the result fixes every canonical
/// component.
template <Field K>
Mat<K> sample_stabilizer_element(const RSDecomposition<K>& rsd, std::uint64_t seed) {
    Rng rng(seed);
    ModuleType t = rsd.type();
    Mat<K> u_div = t.l > 0 ? random_invertible<K>(t.l, rng.raw(), 1).mat : Mat<K>(0, 0);
    Mat<K> c_mid = random_gl_constant<K>(rng, t.r);
    Mat<K> w_sing = t.k > 0 ? random_invertible<K>(t.k, rng.raw(), 1).mat : Mat<K>(0, 0);
    Mat<K> inner = block_diag<K>({u_div, c_mid, w_sing});
    return detail::standardizing_map(rsd, false) * inner * detail::standardizing_map(rsd, true);
}

} // namespace rsd
