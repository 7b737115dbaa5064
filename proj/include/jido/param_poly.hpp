#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jido/rational.hpp"

namespace jido {

/// Formal parameters carried symbolically through every computation:
/// the lowest weight (Lambda_1, Lambda_2) and the central value Lambda-hat.
enum class Param : std::uint8_t { L1 = 0, L2 = 1, Lh = 2 };

inline constexpr std::array<Param, 3> kAllParams = {Param::L1, Param::L2, Param::Lh};

std::string_view param_name(Param p);
std::string_view param_latex(Param p);

using ParamExponents = std::array<std::uint16_t, 3>;

class ParamPoly;
using Bindings = std::map<Param, ParamPoly>;

enum class TextFormat { plain, latex, machine };

/// Sparse polynomial in (L1, L2, Lh) with exact rational coefficients.
///
/// Terms are stored sorted by graded lexicographic order (total degree
/// first, then the exponent triple) and never hold a zero coefficient, so
/// two polynomials are equal iff their term vectors are equal.
class ParamPoly {
 public:
  using Term = std::pair<ParamExponents, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant);             // NOLINT(google-explicit-constructor)

  static ParamPoly variable(Param p);
  static ParamPoly monomial(const ParamExponents& exps, const Rational& coeff);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the exponent-free term (0 if absent).
  Rational constant_term() const;
  unsigned degree() const;
  bool depends_on(Param p) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& scalar);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
  friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;

  ParamPoly pow(unsigned n) const;

  /// Simultaneous substitution. Throws std::invalid_argument when the
  /// bindings are cyclic (a bound parameter reachable from its own image).
  ParamPoly substitute(const Bindings& bindings) const;

  /// p(L + offset): each listed parameter is shifted by a constant.
  ParamPoly translate(const std::map<Param, Rational>& offsets) const;

  /// Numeric value when every parameter present is bound to a constant.
  Rational evaluate(const std::map<Param, Rational>& values) const;

  std::string to_string(TextFormat format = TextFormat::plain) const;

 private:
  ParamPoly substitute_impl(const Bindings& bindings) const;
  static bool less(const ParamExponents& a, const ParamExponents& b);
  void canonicalize();

  std::vector<Term> terms_;
};

/// prod_{j=1..m} (x - j), i.e. Gamma(x)/Gamma(x-m).
ParamPoly gamma_ratio_falling(const ParamPoly& x, unsigned m);

/// prod_{j=0..m-1} (y + j), i.e. Gamma(y+m)/Gamma(y).
ParamPoly gamma_ratio_rising(const ParamPoly& y, unsigned m);

/// Parses the plain rendering, e.g. "2*L1 - 3/2", "L1^2*Lh + 1/4".
ParamPoly parse_param_poly(std::string_view text);

void check_acyclic(const Bindings& bindings);

}  // namespace jido
