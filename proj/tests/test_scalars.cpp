#include <catch_amalgamated.hpp>

#include "jido/param_poly.hpp"
#include "jido/rational.hpp"
#include "jido/sampling.hpp"

using namespace jido;

namespace {

ParamPoly L1() { return ParamPoly::variable(Param::L1); }
ParamPoly L2() { return ParamPoly::variable(Param::L2); }
ParamPoly Lh() { return ParamPoly::variable(Param::Lh); }

}  // namespace

TEST_CASE("rational parsing and printing", "[scalars]") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("param poly arithmetic examples", "[scalars]") {
  CHECK((L1() + L1()).to_string() == "2*L1");
  CHECK((L1() - L1()).is_zero());
  ParamPoly sq = (L1() + ParamPoly(Rational(1, 2))) * (L1() - ParamPoly(Rational(1, 2)));
  CHECK(sq == L1() * L1() - ParamPoly(Rational(1, 4)));
  CHECK(parse_param_poly(sq.to_string()) == sq);
  CHECK(parse_param_poly("L1^2*Lh + 1/4") == L1().pow(2) * Lh() + ParamPoly(Rational(1, 4)));
}

TEST_CASE("param poly ring axioms on random elements", "[scalars]") {
  Rng rng(derive_seed(7, "ring"));
  for (int i = 0; i < 50; ++i) {
    ParamPoly a = random_param_poly(rng, 4), b = random_param_poly(rng, 4), c = random_param_poly(rng, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ParamPoly());
    CHECK(a * ParamPoly(1L) == a);
    ParamPoly d = a;
    d += d;
    CHECK(d == a * Rational(2));
  }
}

TEST_CASE("gamma ratios", "[scalars]") {
  // Gamma(x)/Gamma(x-m) = (x-1)...(x-m)
  CHECK(gamma_ratio_falling(L1(), 0) == ParamPoly(1L));
  CHECK(gamma_ratio_falling(L1(), 2) == (L1() - ParamPoly(1L)) * (L1() - ParamPoly(2L)));
  CHECK(gamma_ratio_rising(L2(), 3) == L2() * (L2() + ParamPoly(1L)) * (L2() + ParamPoly(2L)));
  // Functional equation: Gamma(x+1)/Gamma(x+1-m) = x Gamma(x)/Gamma(x-(m-1)).
  for (unsigned m = 1; m <= 5; ++m) {
    ParamPoly x = Rational(2) * L1() + ParamPoly(Rational(-3, 2));
    CHECK(gamma_ratio_falling(x + ParamPoly(1L), m) == x * gamma_ratio_falling(x, m - 1));
    CHECK(gamma_ratio_rising(x, m) == gamma_ratio_rising(x, m - 1) * (x + ParamPoly(long(m) - 1)));
  }
  // Numeric spot check against integer factorials: Gamma(n+1)/Gamma(n+1-m).
  ParamPoly v = gamma_ratio_falling(ParamPoly(7L), 3);
  CHECK(v == ParamPoly(Rational(factorial(6) / factorial(3))));
}

TEST_CASE("substitution is a ring homomorphism", "[scalars]") {
  Rng rng(derive_seed(7, "substitute"));
  for (int i = 0; i < 30; ++i) {
    Bindings b{{Param::L1, random_param_poly(rng, 2)}, {Param::Lh, ParamPoly(random_rational(rng, 9, 9))}};
    b[Param::L1] = b[Param::L1].substitute({{Param::L1, L2()}});
    ParamPoly x = random_param_poly(rng, 3), y = random_param_poly(rng, 3);
    CHECK((x * y).substitute(b) == x.substitute(b) * y.substitute(b));
    CHECK((x + y).substitute(b) == x.substitute(b) + y.substitute(b));
  }
}

TEST_CASE("substitution examples and cyclic bindings", "[scalars]") {
  ParamPoly p = L1() * L2();
  CHECK(p.substitute({{Param::L1, L2() + ParamPoly(Rational(-1, 2))}}) == L2() * L2() - Rational(1, 2) * L2());
  // Simultaneous, not sequential.
  CHECK((L1() + L2()).substitute({{Param::L1, Lh()}, {Param::L2, ParamPoly(3L)}}) == Lh() + ParamPoly(3L));
  CHECK_THROWS_AS(L1().substitute({{Param::L1, L1() + ParamPoly(1L)}}), std::invalid_argument);
  CHECK_THROWS_AS(L1().substitute({{Param::L1, L2()}, {Param::L2, L1()}}), std::invalid_argument);
  CHECK(L1().translate({{Param::L1, Rational(1, 2)}}) == L1() + ParamPoly(Rational(1, 2)));
  CHECK((L1() * Lh()).evaluate({{Param::L1, Rational(2, 3)}, {Param::Lh, Rational(3)}}) == 2);
}
