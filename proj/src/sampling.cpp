#include "jido/sampling.hpp"

namespace jido {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, mixed with the run seed.
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

long random_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rational random_rational(Rng& rng, long max_num, long max_den) {
  Rational r(random_int(rng, -max_num, max_num), random_int(rng, 1, max_den));
  r.canonicalize();
  return r;
}

ParamPoly random_param_poly(Rng& rng, unsigned terms) {
  ParamPoly p;
  for (unsigned t = 0; t < terms; ++t) {
    ParamExponents e{0, 0, 0};
    unsigned degree = static_cast<unsigned>(random_int(rng, 0, 2));
    for (unsigned d = 0; d < degree; ++d) ++e[random_int(rng, 0, 2)];
    p += ParamPoly::monomial(e, random_rational(rng, 9, 6));
  }
  return p;
}

DiffOp random_diffop(Rng& rng, Frame frame, unsigned terms, unsigned max_degree, bool symbolic) {
  DiffOp op(frame);
  for (unsigned t = 0; t < terms; ++t) {
    Exponents6 poly{}, deriv{};
    for (unsigned d = static_cast<unsigned>(random_int(rng, 0, max_degree)); d > 0; --d)
      ++poly[random_int(rng, 0, kVariableCount - 1)];
    for (unsigned d = static_cast<unsigned>(random_int(rng, 0, max_degree)); d > 0; --d)
      ++deriv[random_int(rng, 0, kVariableCount - 1)];
    ParamPoly c = symbolic ? random_param_poly(rng, 2) : ParamPoly(random_rational(rng, 9, 6));
    op.add_term({poly, deriv}, c);
  }
  return op;
}

}  // namespace jido
