#include <catch_amalgamated.hpp>

#include "jido/sampling.hpp"
#include "jido/verma.hpp"

using namespace jido;
using G = Generator;

namespace {

ParamPoly P(Param p) { return ParamPoly::variable(p); }

// Reduced row echelon form over Q, for comparison with the fraction-free path.
std::size_t naive_rank(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        Rational f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("hat kets", "[verma]") {
  RaisingExponents b2{0, 0, 0, 1, 0, 0}, a2sq{0, 2, 0, 0, 0, 0};
  CHECK(hat_ket({0, 1, 0, 0}) == VermaElement::basis(b2) + VermaElement::basis(a2sq, ParamPoly(Rational(-1, 2))));
  CHECK(hat_ket({0, 0, 0, 0}) == VermaElement::vacuum());
  CHECK(weight_of(HatKetIndex{1, 0, 1, 2}) == weight_of(RaisingExponents{0, 0, 1, 0, 1, 2}));
}

TEST_CASE("lowering actions on hat kets", "[verma]") {
  VermaModule m;
  CHECK(m.act(G::b2m, hat_ket({0, 1, 0, 0})) ==
        (Rational(2) * P(Param::L2) - ParamPoly(Rational(1, 2))) * VermaElement::vacuum());
  CHECK(m.act(G::dm, hat_ket({0, 0, 0, 1})) ==
        Rational(-1, 2) * P(Param::L1) * VermaElement::vacuum() + Rational(1, 2) * P(Param::L2) * VermaElement::vacuum());
  CHECK(m.act(G::a1m, VermaElement::vacuum()).is_zero());
  CHECK(m.act(G::h1, VermaElement::vacuum()) == P(Param::L1) * VermaElement::vacuum());
}

TEST_CASE("module action is a representation", "[verma]") {
  VermaModule m;
  std::vector<VermaElement> probes{VermaElement::vacuum(), hat_ket({0, 1, 0, 1}), hat_ket({1, 0, 1, 0}),
                                   VermaElement::basis({1, 1, 0, 0, 0, 1})};
  for (const auto& v : probes)
    for (Generator x : kAllGenerators)
      for (Generator y : kAllGenerators) {
        VermaElement lhs = m.act(x, m.act(y, v)) - m.act(y, m.act(x, v));
        CHECK(lhs == m.act(bracket(x, y), v));
      }
}

TEST_CASE("weight spaces", "[verma]") {
  CHECK(weight_space_basis({0, 0}).size() == 1);
  CHECK(weight_space_basis({Rational(1, 2), Rational(-1, 2)}).size() == 1);
  CHECK(weight_space_basis({0, 1}).size() == 2);  // a2+^2, b2+
  CHECK(weight_space_basis({Rational(-1, 2), 0}).empty());
  for (const auto& e : weight_space_basis({1, 1})) CHECK(weight_of(e) == WeightVector{1, 1});
}

TEST_CASE("brute force singular vectors", "[verma]") {
  auto d = brute_force_singular(0, 0, {Rational(1, 2), Rational(-1, 2)});
  REQUIRE(d.size() == 1);
  CHECK(d[0].to_string() == "d+|0>");
  CHECK(brute_force_singular(Rational(1, 3), Rational(1, 7), {Rational(1, 2), Rational(-1, 2)}).empty());
  auto b = brute_force_singular(Rational(2, 5), Rational(1, 4), {0, 1});
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Rational(2) * hat_ket({0, 1, 0, 0}));
  CHECK(in_span(b, hat_ket({0, 1, 0, 0})));
  CHECK_FALSE(in_span(b, VermaElement::basis({0, 0, 0, 1, 0, 0})));
}

TEST_CASE("fraction-free elimination agrees with naive elimination", "[verma]") {
  Rng rng(derive_seed(3, "elimination"));
  for (int t = 0; t < 40; ++t) {
    std::size_t rows = static_cast<std::size_t>(random_int(rng, 1, 6));
    std::size_t cols = static_cast<std::size_t>(random_int(rng, 1, 7));
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
      for (auto& x : row) x = random_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 5, 4);
    if (t % 4 == 0 && rows > 1) m[1] = m[0];  // force dependence
    const std::size_t rank = matrix_rank(m, cols);
    CHECK(rank == naive_rank(m, cols));
    auto ns = null_space(m, cols);
    CHECK(ns.size() == cols - rank);
    for (const auto& v : ns)
      for (const auto& row : m) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += row[j] * v[j];
        CHECK(s == 0);
      }
  }
}
