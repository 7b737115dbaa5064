#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jido/generator.hpp"
#include "jido/param_poly.hpp"
#include "jido/verma.hpp"

namespace jido {

/// The five families of singular vectors; III is split by the ordering of
/// (p, q) into its three summation regimes.
enum class FamilyKind { I, II, III, IV, V };
enum class Family { I, II, IIIa, IIIb, IIIc, IV, V };

std::string_view family_name(Family f);  // "i", "ii", "iii-a", ...
std::optional<FamilyKind> parse_family_kind(std::string_view text);
FamilyKind kind_of(Family f);

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SingularVectorSpec {
  Family family = Family::I;
  unsigned p = 1;
  unsigned q = 0;  // families III only
  /// Weight constraints, solved for the eliminated component(s).
  Bindings constraints;
  /// The component left free by the constraints, if any.
  std::optional<Param> free_param;
  /// Lambda' - Lambda.
  WeightVector shift;
  /// The weight condition as a human-readable relation.
  std::string condition;

  std::string label() const;
};

/// Builds and checks a spec. Throws SpecError for nonpositive parameters and
/// for family III with p = q or p = 2q.
SingularVectorSpec validate_spec(FamilyKind kind, unsigned p, std::optional<unsigned> q = std::nullopt);

/// c(k, n). Throws SpecError when (k, n) is outside the summation range.
ParamPoly coefficient(const SingularVectorSpec& spec, unsigned k, unsigned n);

/// The (k, n) pairs of the printed double sums.
std::vector<std::pair<unsigned, unsigned>> summation_range(const SingularVectorSpec& spec);

/// Hat-ket index attached to (k, n).
HatKetIndex ket_index(const SingularVectorSpec& spec, unsigned k, unsigned n);

using ClosedForm = std::map<HatKetIndex, ParamPoly>;

ClosedForm closed_form(const SingularVectorSpec& spec);

WeightVector weight_shift(const SingularVectorSpec& spec);

/// Closed form expanded into the PBW basis.
VermaElement expand(const ClosedForm& form);

/// Lowering generators that fail to annihilate the expanded closed form,
/// with the spec's weight constraints imposed symbolically.
std::vector<Generator> symbolic_singularity_failures(const SingularVectorSpec& spec);

/// Lowest weight of a spec at a value of its free component (if any).
std::pair<Rational, Rational> constrained_weight(const SingularVectorSpec& spec, const Rational& free_value);

/// Free-component values for the oracle: `count` distinct rationals with
/// denominators <= 97, skipping values where a closed-form coefficient
/// vanishes. Empty when the spec has no free component.
std::vector<Rational> sample_free_values(const SingularVectorSpec& spec, std::uint64_t seed, unsigned count = 3);

struct OracleSample {
  std::optional<Rational> free_value;
  Rational lambda1;
  Rational lambda2;
  std::size_t dimension = 0;
  bool contains_closed_form = false;
};

struct OracleReport {
  std::vector<OracleSample> samples;
  /// Every sample contains the closed-form line and the dimensions agree.
  bool ok() const;
  std::string summary() const;  // "dimension 1 at L2 = 3/5, -7/2, 11/9"
};

OracleReport oracle_check(const SingularVectorSpec& spec, std::uint64_t seed);

}  // namespace jido
