#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jido/generator.hpp"
#include "jido/rational.hpp"

namespace jido {

/// One exponent per generator, in PBW order.
using PbwExponents = std::array<std::uint16_t, kGeneratorCount>;

/// Element of U(G2) written in the PBW basis. Every stored monomial is in
/// normal order by construction; zero coefficients are never stored.
class UeaElement {
 public:
  using Terms = std::map<PbwExponents, Rational>;

  UeaElement() = default;
  static UeaElement unit();
  static UeaElement generator(Generator g, const Rational& coeff = 1);
  static UeaElement monomial(const PbwExponents& exps, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total exponent over all monomials (0 for scalars and zero).
  unsigned degree() const;

  UeaElement& operator+=(const UeaElement& other);
  UeaElement& operator-=(const UeaElement& other);
  UeaElement& operator*=(const Rational& s);
  friend UeaElement operator+(UeaElement a, const UeaElement& b) { return a += b; }
  friend UeaElement operator-(UeaElement a, const UeaElement& b) { return a -= b; }
  friend UeaElement operator*(const Rational& s, UeaElement a) { return a *= s; }
  friend bool operator==(const UeaElement&, const UeaElement&) = default;

  void add_term(const PbwExponents& exps, const Rational& coeff);

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Linear combination of generators; the image of a bracket.
using LinearCombination = std::vector<std::pair<Generator, Rational>>;

/// Structure constants of G2, generated from the index-form relations of
/// the Heisenberg algebra, its sp(2) action and sp(2) itself.
class StructureTable {
 public:
  static const StructureTable& instance();

  const LinearCombination& bracket(Generator x, Generator y) const {
    return table_[index(x)][index(y)];
  }

 private:
  StructureTable();
  std::array<std::array<LinearCombination, kGeneratorCount>, kGeneratorCount> table_;
};

/// [x, y] as a degree <= 1 element.
UeaElement bracket(Generator x, Generator y);

/// Image of the word g_1 g_2 ... g_n in U(G2), in PBW normal form.
UeaElement pbw_normal_form(std::span<const Generator> word);

UeaElement uea_multiply(const UeaElement& u, const UeaElement& v);

/// g * u, normal ordered.
UeaElement left_multiply(Generator g, const UeaElement& u);

WeightVector weight_of_monomial(const PbwExponents& exps);

std::string monomial_to_string(const PbwExponents& exps);

/// Outcome of a check on the structure constants.
struct StructureCheck {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// [X, Y] + [Y, X] = 0 for all ordered pairs.
StructureCheck check_antisymmetry();

/// Jacobi identity over all unordered triples of distinct generators.
StructureCheck check_jacobi();

/// Z commutes with every generator.
StructureCheck check_center();

/// The nonzero brackets among raising generators are exactly
/// [b2+, d+] = -c+, [a2+, d+] = -1/2 a1+, [c+, d+] = -1/2 b1+.
StructureCheck check_raising_relations();

}  // namespace jido
