#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "jido/generator.hpp"
#include "jido/param_poly.hpp"

namespace jido {

/// ORIGINAL: (x1, x2, y1, y2, z, w). FINAL: (xi1, xi2, eta1, eta2, zeta, omega).
enum class Frame : std::uint8_t { original, final };

inline constexpr std::size_t kVariableCount = 6;

std::string_view frame_name(Frame f);  // "original" / "final"
std::optional<Frame> parse_frame(std::string_view text);
std::string_view variable_name(Frame f, std::size_t i);
std::string_view variable_latex(Frame f, std::size_t i);

using Exponents6 = std::array<std::uint16_t, kVariableCount>;

/// Polynomial test function in the six coordinates of a frame.
class PolyFunction {
 public:
  using Terms = std::map<Exponents6, ParamPoly>;

  explicit PolyFunction(Frame frame = Frame::original) : frame_(frame) {}
  static PolyFunction constant(Frame frame, const ParamPoly& c);
  static PolyFunction variable(Frame frame, std::size_t i);
  static PolyFunction monomial(Frame frame, const Exponents6& exps, const ParamPoly& c = ParamPoly(1L));

  Frame frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents6& exps, const ParamPoly& c);
  PolyFunction& operator+=(const PolyFunction& o);
  PolyFunction& operator-=(const PolyFunction& o);
  PolyFunction& operator*=(const ParamPoly& s);
  friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
  friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
  friend PolyFunction operator*(const PolyFunction& a, const PolyFunction& b);
  friend bool operator==(const PolyFunction&, const PolyFunction&) = default;

  PolyFunction derivative(std::size_t i) const;
  std::string to_string() const;

 private:
  Frame frame_;
  Terms terms_;
};

/// Key of a normal-ordered monomial x^poly d^deriv.
struct OpKey {
  Exponents6 poly{};
  Exponents6 deriv{};
  friend bool operator==(const OpKey&, const OpKey&) = default;
};

/// Canonical term order: derivative degree descending, polynomial degree
/// ascending, then derivative and polynomial exponents lex descending.
struct OpKeyLess {
  bool operator()(const OpKey& a, const OpKey& b) const;
};

class FrameMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Differential operator with polynomial coefficients, stored in the
/// normal-ordered basis x^a d^b over ParamPoly scalars.
class DiffOp {
 public:
  using Terms = std::map<OpKey, ParamPoly, OpKeyLess>;

  explicit DiffOp(Frame frame = Frame::original) : frame_(frame) {}
  static DiffOp scalar(Frame frame, const ParamPoly& c);
  static DiffOp variable(Frame frame, std::size_t i);
  static DiffOp derivative(Frame frame, std::size_t i, unsigned order = 1);
  static DiffOp multiplication(const PolyFunction& f);
  static DiffOp term(Frame frame, const Exponents6& poly, const Exponents6& deriv, const ParamPoly& c);

  Frame frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Scalar value when the operator has no variable or derivative factors.
  std::optional<ParamPoly> as_scalar() const;
  unsigned order() const;  // highest total derivative order

  void add_term(const OpKey& key, const ParamPoly& c);
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const ParamPoly& s);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const ParamPoly& s, DiffOp a) { return a *= s; }
  DiffOp operator-() const;
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  DiffOp substitute(const Bindings& b) const;
  DiffOp translate(const std::map<Param, Rational>& offsets) const;
  PolyFunction apply(const PolyFunction& f) const;

  std::string to_string(TextFormat format = TextFormat::plain) const;

 private:
  Frame frame_;
  Terms terms_;
};

/// A o B, normal ordered by the Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp power(const DiffOp& a, unsigned n);
PolyFunction apply_to_polynomial(const DiffOp& a, const PolyFunction& f);

/// Frame-labeled rendering. Machine format is
///   frame <name>
///   <coeff> | p1,...,p6 | d1,...,d6
/// with one line per term ("0" for the zero operator).
std::string serialize(const DiffOp& a, TextFormat format);
DiffOp parse_machine(std::string_view text);

/// Resolves pi(gen) references inside operator expressions.
using OperatorResolver = std::function<DiffOp(Generator)>;

/// Parses an operator expression such as "-1/4*(zeta + eta2*omega/6)*Deta1".
/// Juxtaposition by '*' is composition; variables multiply, D-prefixed
/// variables differentiate, L1/L2/Lh are scalars.
DiffOp parse_expression(std::string_view text, Frame frame, const OperatorResolver& resolve = {});

/// Coordinate change ORIGINAL -> FINAL.
/// forward_coordinate(i): FINAL coordinate i as a polynomial in ORIGINAL ones.
/// inverse_coordinate(i): ORIGINAL coordinate i as a polynomial in FINAL ones.
PolyFunction forward_coordinate(std::size_t i);
PolyFunction inverse_coordinate(std::size_t i);

/// Image of d/d(original_i) as listed by the chain rule.
DiffOp printed_chain_rule(std::size_t i);
/// The same image computed from the Jacobian of forward_coordinate.
DiffOp derived_chain_rule(std::size_t i);
/// Image of d/d(final_i) in ORIGINAL coordinates, from the Jacobian of
/// inverse_coordinate.
DiffOp derived_inverse_chain_rule(std::size_t i);

/// Substitutes the coordinate change into a polynomial.
PolyFunction polynomial_to_final(const PolyFunction& f);
PolyFunction polynomial_to_original(const PolyFunction& f);

DiffOp transform_to_final(const DiffOp& a);
DiffOp transform_to_original(const DiffOp& a);

}  // namespace jido
