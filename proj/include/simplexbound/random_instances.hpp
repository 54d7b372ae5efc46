#pragma once

#include <cstddef>
#include <random>

#include "simplexbound/multipoly.hpp"

namespace simplexbound {

/// Random polynomial in k variables of total degree exactly d whose
/// coefficients have bitsize at most tau (|a| < 2^tau).
MultiPoly random_poly(std::mt19937_64& rng, std::size_t k, unsigned d, unsigned long tau);

/// Q^2 + c with Q random of degree q_deg (|coeffs| <= q_coeff) and c in
/// [1, c_max]; positive on all of R^k.
MultiPoly random_positive_poly(std::mt19937_64& rng, std::size_t k, unsigned q_deg, long q_coeff,
                               long c_max);

}  // namespace simplexbound
