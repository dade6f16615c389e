#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "projspec/numeric.hpp"
#include "projspec/proj_point.hpp"

namespace projspec {

// Seeded generators for the randomized property sweeps. All draws go through
// std::mt19937_64, so a seed fixes every sample.
using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix random_matrix(std::size_t d, Rng& rng);
/// Haar-distributed unitary (QR of a Gaussian matrix, phases fixed).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);
/// U D_i U^* with a shared random unitary U and random diagonals D_i.
std::vector<ComplexMatrix> random_normal_commuting(std::size_t n, std::size_t d, Rng& rng);
/// Polynomials in one random (generally non-normal) matrix.
std::vector<ComplexMatrix> random_commuting(std::size_t n, std::size_t d, Rng& rng);
/// A pair of normal matrices U D_1 U^*, V D_2 V^* where V = U C and C is
/// the Cayley transform of i*eps*H for a random Hermitian H of unit norm.
/// eps = 0 gives a commuting pair; eps > 0 generically does not commute.
std::pair<ComplexMatrix, ComplexMatrix> random_normal_pair(std::size_t d, double eps, Rng& rng);
/// Point of P^2 with coordinates uniform in the unit square of C, drawn
/// until tau is finite and at least `margin` away from [-1, 1].
ProjPoint random_fatou_point(Rng& rng, long double margin = 1e-6L);
/// Point of P^2 with coordinates uniform in the unit square of C.
ProjPoint random_plane_point(Rng& rng);

}  // namespace projspec
