#include "etaq/symprod.hpp"

#include <string>

namespace etaq {

namespace {

using I = std::int64_t;

// Pairing of u = u0*Delta + u1*K with v in the (Delta, K) plane.
I pair_dk(const std::array<I, 2>& u, const std::array<I, 2>& v, I D2, I DK, I K2) {
    return u[0] * v[0] * D2 + (u[0] * v[1] + u[1] * v[0]) * DK + u[1] * v[1] * K2;
}

} // namespace

SymProdTable intersection_table(int k) {
    if (k < 3) fail(ErrorKind::RangeError, "the symmetric-product table needs k >= 3");
    if (k > 20000) fail(ErrorKind::RangeError, "k too large for 64-bit intersection numbers");
    const I K = k;
    SymProdTable t;
    t.k = k;
    t.g = (K - 1) * (K - 1);

    t.K2 = (t.g - 1) * (4 * t.g - 9);
    t.KDelta = 6 * (t.g - 1);
    t.Delta2 = -4 * (t.g - 1);

    t.gamma_matrix = {{{0, (2 * K - 5) * (K - 1) * K, 2 * (K - 1) * K},
                       {(2 * K - 5) * (K - 1) * K, (2 * K - 5) * (K - 2) * K * (2 * K + 1),
                        6 * (K - 2) * K},
                       {2 * (K - 1) * K, 6 * (K - 2) * K, -4 * (K - 2) * K}}};
    t.kernel_vector = {4 * K - 8, -2, 2 * K - 5};
    t.nef_ray_diag = {3, 2};
    t.nef_ray_ruling = {5 - 2 * K, 2};

    // Genus of the ruling curve: 2g-2 = -k(k-1) + 2(k-2)(k-1)k, and by
    // adjunction on the surface 2g-2 = Gamma^2 + Gamma.K.
    const I two_g_minus_2 = -K * (K - 1) + 2 * (K - 2) * (K - 1) * K;
    if (two_g_minus_2 % 2 != 0) fail(ErrorKind::InternalConsistency, "odd genus formula value");
    t.genus_gamma = two_g_minus_2 / 2 + 1;
    const I adjunction = t.gamma_matrix[0][0] + t.gamma_matrix[0][1];
    if (adjunction != two_g_minus_2)
        fail(ErrorKind::InternalConsistency, "adjunction disagrees with the branch count");

    // The two presentations of the (K, Delta) pairings agree.
    t.presentations_agree = t.K2 == t.gamma_matrix[1][1] && t.KDelta == t.gamma_matrix[1][2] &&
                            t.Delta2 == t.gamma_matrix[2][2];
    if (!t.presentations_agree)
        fail(ErrorKind::InternalConsistency, "genus and k presentations disagree");

    // The pairing matrix annihilates the kernel vector and has rank two.
    t.kernel_annihilated = true;
    for (int r = 0; r < 3; ++r) {
        I acc = 0;
        for (int c = 0; c < 3; ++c) acc += t.gamma_matrix[r][c] * t.kernel_vector[c];
        if (acc != 0) t.kernel_annihilated = false;
    }
    if (!t.kernel_annihilated)
        fail(ErrorKind::InternalConsistency, "kernel vector not annihilated");

    const auto& m = t.gamma_matrix;
    const I det3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const I minor2 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    t.matrix_rank_two = det3 == 0 && minor2 != 0;
    if (!t.matrix_rank_two) fail(ErrorKind::InternalConsistency, "pairing matrix rank is not two");

    // Nef-ray identities in the (Delta, K) plane.
    const std::array<I, 2> delta = {1, 0};
    t.ray_diag_orthogonal_delta =
        pair_dk(t.nef_ray_diag, delta, t.Delta2, t.KDelta, t.K2) == 0;
    t.ray_ruling_isotropic =
        pair_dk(t.nef_ray_ruling, t.nef_ray_ruling, t.Delta2, t.KDelta, t.K2) == 0;
    t.ray_diag_self = pair_dk(t.nef_ray_diag, t.nef_ray_diag, t.Delta2, t.KDelta, t.K2);
    if (!t.ray_diag_orthogonal_delta || !t.ray_ruling_isotropic || t.ray_diag_self <= 0)
        fail(ErrorKind::InternalConsistency, "nef-ray identities failed");

    // The ruling ray pairs against (Gamma, K, Delta) as (4k-8) times the
    // Gamma row of the pairing matrix; its pairing with Gamma itself comes
    // from the Gamma row of the matrix.
    const I vs_gamma = 2 * m[0][1] + (5 - 2 * K) * m[0][2];
    const I vs_K = pair_dk(t.nef_ray_ruling, {0, 1}, t.Delta2, t.KDelta, t.K2);
    const I vs_Delta = pair_dk(t.nef_ray_ruling, delta, t.Delta2, t.KDelta, t.K2);
    if (vs_gamma != (4 * K - 8) * m[0][0] || vs_K != (4 * K - 8) * m[0][1] ||
        vs_Delta != (4 * K - 8) * m[0][2])
        fail(ErrorKind::InternalConsistency, "ruling ray does not match the Gamma row");

    return t;
}

} // namespace etaq
