#include <catch_amalgamated.hpp>

#include "jido/sampling.hpp"
#include "jido/weyl.hpp"

using namespace jido;

namespace {

constexpr Frame O = Frame::original;
constexpr Frame F = Frame::final;

DiffOp expr(std::string_view s, Frame f = O) { return parse_expression(s, f); }

PolyFunction random_poly(Rng& rng, Frame f) {
  PolyFunction p(f);
  for (int t = 0; t < 4; ++t) {
    Exponents6 e{};
    for (auto& x : e) x = static_cast<std::uint16_t>(random_int(rng, 0, 1) ? random_int(rng, 0, 3) : 0);
    p.add_term(e, ParamPoly(random_rational(rng, 5, 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("Leibniz normal ordering", "[weyl]") {
  CHECK(compose(DiffOp::derivative(F, 0), DiffOp::variable(F, 0)).to_string() == "xi1*Dxi1 + 1");
  CHECK(commutator(DiffOp::derivative(O, 5), DiffOp::variable(O, 5)) == DiffOp::scalar(O, ParamPoly(1L)));
  CHECK(commutator(DiffOp::derivative(O, 1), DiffOp::variable(O, 0)).is_zero());
  CHECK(compose(DiffOp::derivative(O, 0, 2), DiffOp::multiplication(PolyFunction::monomial(O, {2, 0, 0, 0, 0, 0}))) ==
        expr("x1^2*Dx1^2 + 4*x1*Dx1 + 2"));
  CHECK(power(expr("Dx1 + x2"), 0) == DiffOp::scalar(O, ParamPoly(1L)));
  CHECK(power(expr("Dx1 + x2"), 2) == expr("Dx1^2 + 2*x2*Dx1 + x2^2"));
}

TEST_CASE("operators act faithfully on polynomials", "[weyl]") {
  Rng rng(derive_seed(5, "faithful"));
  for (int i = 0; i < 30; ++i) {
    const Frame f = i % 2 ? F : O;
    DiffOp a = random_diffop(rng, f, 4, 3), b = random_diffop(rng, f, 4, 3);
    PolyFunction p = random_poly(rng, f);
    CHECK(apply_to_polynomial(compose(a, b), p) == apply_to_polynomial(a, apply_to_polynomial(b, p)));
    CHECK(apply_to_polynomial(a + b, p) == apply_to_polynomial(a, p) + apply_to_polynomial(b, p));
  }
  // d/dx1 (x1^3 x2) = 3 x1^2 x2
  CHECK(apply_to_polynomial(DiffOp::derivative(O, 0), PolyFunction::monomial(O, {3, 1, 0, 0, 0, 0})) ==
        PolyFunction::monomial(O, {2, 1, 0, 0, 0, 0}, ParamPoly(3L)));
}

TEST_CASE("composition is associative and bilinear", "[weyl]") {
  Rng rng(derive_seed(5, "assoc"));
  for (int i = 0; i < 30; ++i) {
    DiffOp a = random_diffop(rng, F, 3, 3), b = random_diffop(rng, F, 3, 3), c = random_diffop(rng, F, 3, 3);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
    // Jacobi identity for the commutator.
    DiffOp j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("frames do not mix", "[weyl]") {
  CHECK_THROWS_AS(compose(DiffOp::derivative(O, 0), DiffOp::derivative(F, 0)), FrameMismatch);
  CHECK_THROWS_AS(transform_to_final(DiffOp::derivative(F, 0)), FrameMismatch);
}

TEST_CASE("chain rule and coordinate change", "[weyl]") {
  for (std::size_t i = 0; i < kVariableCount; ++i) {
    INFO(variable_name(O, i));
    CHECK(printed_chain_rule(i) == derived_chain_rule(i));
    CHECK(polynomial_to_original(polynomial_to_final(PolyFunction::variable(O, i))) == PolyFunction::variable(O, i));
    CHECK(polynomial_to_final(polynomial_to_original(PolyFunction::variable(F, i))) == PolyFunction::variable(F, i));
  }
  CHECK(transform_to_final(expr("Dw - 1/4*(z + y2*w/6)*Dy1 - y2/2*Dz")) ==
        expr("Domega - 1/2*xi2*Dxi1 - 1/2*zeta*Deta1 - eta2*Dzeta", F));
}

TEST_CASE("transform is a homomorphism with an inverse", "[weyl]") {
  Rng rng(derive_seed(5, "transform"));
  for (int i = 0; i < 20; ++i) {
    DiffOp a = random_diffop(rng, O, 3, 2), b = random_diffop(rng, O, 3, 2);
    CHECK(transform_to_final(compose(a, b)) == compose(transform_to_final(a), transform_to_final(b)));
    CHECK(transform_to_original(transform_to_final(a)) == a);
    DiffOp c = random_diffop(rng, F, 3, 2);
    CHECK(transform_to_final(transform_to_original(c)) == c);
  }
}

TEST_CASE("transform agrees with substitution on test functions", "[weyl]") {
  Rng rng(derive_seed(5, "pullback"));
  for (int i = 0; i < 15; ++i) {
    DiffOp a = random_diffop(rng, O, 3, 2);
    PolyFunction p = random_poly(rng, F);
    // (A f)(x) computed in either frame.
    PolyFunction via_original = polynomial_to_final(apply_to_polynomial(a, polynomial_to_original(p)));
    CHECK(via_original == apply_to_polynomial(transform_to_final(a), p));
  }
}

TEST_CASE("serialization", "[weyl]") {
  DiffOp d = expr("Domega - 1/2*xi2*Dxi1 - 1/2*zeta*Deta1 - eta2*Dzeta", F);
  CHECK(d.to_string() == "Domega - 1/2*xi2*Dxi1 - 1/2*zeta*Deta1 - eta2*Dzeta");
  CHECK(serialize(d, TextFormat::machine) ==
        "frame final\n"
        "1 | 0,0,0,0,0,0 | 0,0,0,0,0,1\n"
        "-1/2 | 0,1,0,0,0,0 | 1,0,0,0,0,0\n"
        "-1/2 | 0,0,0,0,1,0 | 0,0,1,0,0,0\n"
        "-1 | 0,0,0,1,0,0 | 0,0,0,0,1,0\n");
  CHECK(expr("Deta2 - 1/2*Dxi2^2", F).to_string(TextFormat::latex) ==
        "-\\frac{1}{2}\\partial_{\\xi_2}^{2} + \\partial_{\\eta_2}");
  CHECK(serialize(DiffOp(F), TextFormat::machine) == "frame final\n0\n");
  CHECK(expr("(L1 - Lh)*x1*Dy2").to_string() == "(L1 - Lh)*x1*Dy2");
}

TEST_CASE("machine format round trip", "[weyl]") {
  Rng rng(derive_seed(5, "machine"));
  for (int i = 0; i < 30; ++i) {
    DiffOp a = random_diffop(rng, i % 2 ? F : O, 5, 4);
    const std::string text = serialize(a, TextFormat::machine);
    CHECK(parse_machine(text) == a);
    CHECK(serialize(parse_machine(text), TextFormat::machine) == text);
    CHECK(parse_expression(a.to_string(), a.frame()) == a);
  }
  CHECK(parse_machine("frame final\n0\n").is_zero());
  CHECK_THROWS(parse_machine("frame final\n1 | 0,0 | 0,0,0,0,0,0\n"));
}

TEST_CASE("expression parser", "[weyl]") {
  CHECK(expr("-1/4*(z + y2*w/6)*Dy1") == expr("-1/4*z*Dy1 - 1/24*y2*w*Dy1"));
  CHECK(expr("(Dx2 + w/2*Dx1)^2") == expr("Dx2^2 + w*Dx1*Dx2 + 1/4*w^2*Dx1^2"));
  CHECK(expr("Dw*w") == expr("w*Dw + 1"));
  CHECK_THROWS(expr("Dq"));
  CHECK_THROWS(expr("x1 +"));
  CHECK_THROWS(expr("xi1", O));
}
