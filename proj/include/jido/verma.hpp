#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jido/generator.hpp"
#include "jido/param_poly.hpp"
#include "jido/uea.hpp"

namespace jido {

/// Exponents of (a1+, a2+, b1+, b2+, c+, d+) in a PBW vector X|0>.
using RaisingExponents = std::array<std::uint16_t, 6>;

WeightVector weight_of(const RaisingExponents& exps);
std::string raising_monomial_to_string(const RaisingExponents& exps);

/// Vector of the lowest-weight Verma module, expanded in the PBW basis of
/// U(G2+) applied to |0>.
class VermaElement {
 public:
  using Terms = std::map<RaisingExponents, ParamPoly>;

  VermaElement() = default;
  static VermaElement vacuum();
  static VermaElement basis(const RaisingExponents& exps, const ParamPoly& coeff = ParamPoly(1L));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const RaisingExponents& exps) const;

  void add_term(const RaisingExponents& exps, const ParamPoly& coeff);
  VermaElement& operator+=(const VermaElement& other);
  VermaElement& operator-=(const VermaElement& other);
  VermaElement& operator*=(const ParamPoly& s);
  friend VermaElement operator+(VermaElement a, const VermaElement& b) { return a += b; }
  friend VermaElement operator-(VermaElement a, const VermaElement& b) { return a -= b; }
  friend VermaElement operator*(const ParamPoly& s, VermaElement a) { return a *= s; }
  friend bool operator==(const VermaElement&, const VermaElement&) = default;

  VermaElement substitute(const Bindings& b) const;

  /// e.g. "d+|0>", "b2+|0> - 1/2*a2+^2|0>".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Index of (b1hat+)^k (b2hat+)^l (chat+)^n (d+)^m |0>.
struct HatKetIndex {
  unsigned k = 0;
  unsigned l = 0;
  unsigned n = 0;
  unsigned m = 0;

  friend auto operator<=>(const HatKetIndex&, const HatKetIndex&) = default;
};

std::string to_string(const HatKetIndex& idx);
WeightVector weight_of(const HatKetIndex& idx);

/// Expansion of the hat monomial in the PBW basis, where
/// b_k-hat = b_k+ - (a_k+)^2 / 2 and c-hat = c+ - a1+ a2+ / 2.
VermaElement hat_ket(const HatKetIndex& idx);

/// Lowest-weight Verma module: G2- annihilates |0>, h_i acts by the
/// weight components and Z by the central charge.
///
/// Generator actions are memoized per instance; an instance is therefore not
/// safe to share between threads. Create one per worker.
class VermaModule {
 public:
  VermaModule();  // symbolic (L1, L2), central charge 1
  VermaModule(ParamPoly lambda1, ParamPoly lambda2, ParamPoly central = ParamPoly(1L));

  const ParamPoly& lambda1() const { return lambda1_; }
  const ParamPoly& lambda2() const { return lambda2_; }
  const ParamPoly& central() const { return central_; }

  VermaElement act(Generator x, const VermaElement& v) const;
  VermaElement act(const UeaElement& u, const VermaElement& v) const;

 private:
  const VermaElement& act_on_basis(Generator x, const RaisingExponents& m) const;

  ParamPoly lambda1_;
  ParamPoly lambda2_;
  ParamPoly central_;
  mutable std::map<std::pair<Generator, RaisingExponents>, VermaElement> memo_;
};

/// All raising exponent vectors of weight mu (relative to the lowest weight).
/// Empty when mu lies outside the cone or has non-half-integral components.
std::vector<RaisingExponents> weight_space_basis(const WeightVector& mu);

/// Independent oracle: a basis of the vectors of weight mu annihilated by the
/// six lowering generators, at a numeric lowest weight. Basis vectors are
/// scaled to primitive integer coefficients with a positive leading entry.
std::vector<VermaElement> brute_force_singular(const Rational& lambda1, const Rational& lambda2,
                                               const WeightVector& mu, const Rational& central = 1);

/// Exact null space of a dense rational matrix, via fraction-free
/// elimination. Each basis vector is primitive over the integers.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows, std::size_t columns);

/// Rank of a dense rational matrix.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows, std::size_t columns);

/// Whether v lies in the span of `basis` (all with constant coefficients).
bool in_span(const std::vector<VermaElement>& basis, const VermaElement& v);

}  // namespace jido
