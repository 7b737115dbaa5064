#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jido/actions.hpp"
#include "jido/singvec.hpp"
#include "jido/weyl.hpp"

namespace jido {

/// sum_{(k,l,n,m)} c * pi_R(b1^)^k pi_R(b2^)^l pi_R(c^)^n pi_R(d+)^m in `frame`.
DiffOp build_operator(const SingularVectorSpec& spec, Frame frame);

/// How the central value Lh is treated when comparing residuals.
struct CentralMode {
  bool symbolic = false;
  Rational value = 1;

  static CentralMode fixed(const Rational& v) { return {false, v}; }
  static CentralMode free() { return {true, 0}; }
  std::string to_string() const;  // "fixed:1", "symbolic"
};

std::optional<CentralMode> parse_central_mode(std::string_view text);

struct IntertwinerReport {
  SingularVectorSpec spec;
  Frame frame = Frame::final;
  CentralMode central;
  /// pi_L^{L'}(X) D - D pi_L^{L}(X), one entry per generator, in PBW order.
  std::vector<std::pair<Generator, DiffOp>> residuals;
  bool pass = false;

  std::vector<Generator> failing() const;
};

/// `left` defaults to authoritative_left_table(frame).
IntertwinerReport verify_intertwining(const SingularVectorSpec& spec, Frame frame, CentralMode central,
                                      const ActionTable* left = nullptr);

/// Residual for a single generator, after the spec's constraints.
DiffOp intertwining_residual(const SingularVectorSpec& spec, const DiffOp& op, const ActionTable& left, Generator x,
                             CentralMode central);

struct CentralSolution {
  enum class Kind { all, finite, empty };
  Kind kind = Kind::all;
  std::vector<Rational> values;  // for Kind::finite, ascending
  std::string diagnostic;

  std::string to_string() const;  // "all Lh", "{Lh = 1}", "{}"
};

/// Common zero set in Lh of every residual coefficient, with the free weight
/// component kept symbolic.
CentralSolution solve_central_charge(const SingularVectorSpec& spec, Frame frame);

/// Rational roots of a univariate polynomial given by coefficients in
/// ascending degree. Also used on the gcd of the residual coefficients.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// Monic gcd of univariate rational polynomials (ascending coefficients).
/// The gcd of an empty list, or of zeros only, is the zero polynomial.
std::vector<Rational> polynomial_gcd(const std::vector<std::vector<Rational>>& polys);

}  // namespace jido
