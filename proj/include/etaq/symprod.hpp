#ifndef ETAQ_SYMPROD_HPP
#define ETAQ_SYMPROD_HPP

#include <array>
#include <cstdint>

#include "etaq/error.hpp"

namespace etaq {

/*
 * Exact integer intersection theory on the second symmetric product C^(2)
 * of a smooth bidegree-(k,k) curve of genus g = (k-1)^2: the pairing table
 * of the diagonal class Delta and a canonical class K, the class Gamma cut
 * by a ruling pencil, and the two nef-cone boundary rays inside the plane
 * spanned by Delta and K.
 */
struct SymProdTable {
    int k = 0;
    std::int64_t g = 0;

    // Pairings expressed through the genus.
    std::int64_t K2 = 0;     // (g-1)(4g-9)
    std::int64_t KDelta = 0; // 6(g-1)
    std::int64_t Delta2 = 0; // -4(g-1)

    // Symmetric pairing matrix of (Gamma, K, Delta), expressed through k.
    std::array<std::array<std::int64_t, 3>, 3> gamma_matrix{};
    std::int64_t genus_gamma = 0;
    std::array<std::int64_t, 3> kernel_vector{}; // (4k-8, -2, 2k-5)

    // Nef-cone boundary rays as primitive (coeff Delta, coeff K) vectors.
    std::array<std::int64_t, 2> nef_ray_diag{};  // 2K + 3*Delta
    std::array<std::int64_t, 2> nef_ray_ruling{}; // 2K + (5-2k)*Delta

    // Recorded identities (all verified exactly during construction).
    bool presentations_agree = false; // genus form vs k form of K2, K.Delta, Delta2
    bool kernel_annihilated = false;  // gamma_matrix * kernel_vector = 0
    bool matrix_rank_two = false;
    bool ray_diag_orthogonal_delta = false; // (2K+3Delta).Delta = 0
    bool ray_ruling_isotropic = false;      // (2K+(5-2k)Delta)^2 = 0
    std::int64_t ray_diag_self = 0;         // (2K+3Delta)^2 > 0
};

// Closed-formula table for k >= 3; every recorded identity is checked
// exactly and a failure raises InternalConsistency.
SymProdTable intersection_table(int k);

} // namespace etaq

#endif
