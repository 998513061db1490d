#pragma once

// Seeded samplers. Every stream is an mt19937_64 seeded from (seed, index)
// through splitmix64, so a sample depends only on its index.

#include <cstdint>
#include <random>

#include "slocc/lorentz.hpp"
#include "slocc/pauli.hpp"

namespace slocc {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

std::uint64_t splitmix64(std::uint64_t x);
Rng stream(std::uint64_t seed, std::uint64_t index);

Vec3 random_unit_vector(Rng& rng);
Eigen::Vector4cd haar_pure_state(Rng& rng);
/// sum_i p_i |psi_i><psi_i| with Dirichlet(1,...,1) weights.
HermitianOp random_mixed_state(Rng& rng, int components = 4);
/// Pure single-qubit state (1, n) / 2.
FourVector random_pure_qubit(Rng& rng);

Mat2c random_su2(Rng& rng);
/// exp of a traceless 2x2 matrix with N(0, spread^2) real and imaginary
/// Pauli components.
Mat2c random_sl2c(Rng& rng, double spread = 0.5);
LocalFilter random_filter(Rng& rng, double spread = 0.5);

/// Exponential map on sl(2,C).
Mat2c sl2c_exp(const Eigen::Vector3cd& generator);

/// Ordered singular values (1, w1, w2, w3) with max |w_i| < 1 - margin.
LorentzSV random_strict_sv(Rng& rng, double margin = 0.02);

}  // namespace slocc
