#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "jido/param_poly.hpp"
#include "jido/weyl.hpp"

namespace jido {

/// All randomness in the library flows through this engine type. Values are
/// drawn from raw engine output (not std distributions), so a seed gives the
/// same stream with any standard library.
using Rng = std::mt19937_64;

/// Deterministic per-check seed derived from a run seed and a label.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// Uniform integer in [lo, hi].
long random_int(Rng& rng, long lo, long hi);

/// num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(Rng& rng, long max_num, long max_den);

/// Sparse polynomial in L1, L2, Lh with at most `terms` terms of degree <= 2.
ParamPoly random_param_poly(Rng& rng, unsigned terms);

/// Sparse operator with at most `terms` terms, exponents <= max_exp per slot
/// and total degree <= max_degree in both the polynomial and derivative part.
DiffOp random_diffop(Rng& rng, Frame frame, unsigned terms, unsigned max_degree, bool symbolic = true);

}  // namespace jido
