#pragma once

#include "sl3/matrix.hpp"
#include "sl3/poly.hpp"

#include <cstdint>
#include <random>

namespace sl3::gen {

/// Deterministic engine for a (seed, stream) pair; streams keep parallel
/// loops reproducible regardless of scheduling.
std::mt19937_64 engine(std::uint64_t seed, std::uint64_t stream = 0);

/// p/q with |p| <= max_abs, 1 <= q <= max_den.
Rat rat(std::mt19937_64& rng, int max_abs = 5, int max_den = 4);

/// Random polynomial of degree <= max_degree (possibly zero).
Poly poly(std::mt19937_64& rng, int max_degree = 12, int max_abs = 5, int max_den = 4);

Unipotent unipotent(std::mt19937_64& rng, int max_degree = 12);

/// Element of U_n: every coordinate divisible by t^(n+1).
Unipotent congruence_element(std::mt19937_64& rng, int n, int extra_degree = 6);

}  // namespace sl3::gen
