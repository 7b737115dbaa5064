#include <catch_amalgamated.hpp>

#include <set>

#include "jido/singvec.hpp"

using namespace jido;

namespace {

std::vector<SingularVectorSpec> grid(unsigned max_p) {
  std::vector<SingularVectorSpec> out;
  for (FamilyKind k : {FamilyKind::I, FamilyKind::II, FamilyKind::III, FamilyKind::IV, FamilyKind::V})
    for (unsigned p = 1; p <= max_p; ++p)
      for (unsigned q = 1; q <= (k == FamilyKind::III ? max_p : 1u); ++q) {
        if (k == FamilyKind::III && (p == q || p == 2 * q)) continue;
        out.push_back(k == FamilyKind::III ? validate_spec(k, p, q) : validate_spec(k, p));
      }
  return out;
}

// Pairs (k, n) with every factorial argument of the coefficient nonnegative.
std::set<std::pair<unsigned, unsigned>> factorial_support(const SingularVectorSpec& s) {
  std::set<std::pair<unsigned, unsigned>> out;
  const long p = s.p, q = s.q;
  for (long k = 0; k <= 2 * p; ++k)
    for (long n = 0; n <= 2 * p; ++n) {
      bool ok = false;
      switch (kind_of(s.family)) {
        case FamilyKind::I:
        case FamilyKind::II: ok = k == 0 && n == 0; break;
        case FamilyKind::III: ok = p - 2 * k - n >= 0 && q - k - n >= 0; break;
        case FamilyKind::IV: ok = p - 2 * k - n >= 0; break;
        case FamilyKind::V: ok = p - k - n >= 0; break;
      }
      if (ok) out.emplace(k, n);
    }
  return out;
}

}  // namespace

TEST_CASE("spec validation", "[singvec]") {
  CHECK_THROWS_WITH(validate_spec(FamilyKind::III, 2, 1), "excluded: p = 2q");
  CHECK_THROWS_WITH(validate_spec(FamilyKind::III, 2, 2), "excluded: p = q");
  CHECK_THROWS_WITH(validate_spec(FamilyKind::I, 0), "p must be a positive integer");
  CHECK_THROWS_AS(validate_spec(FamilyKind::III, 1), SpecError);
  CHECK_THROWS_AS(validate_spec(FamilyKind::II, 1, 2), SpecError);
  CHECK(validate_spec(FamilyKind::III, 1, 2).family == Family::IIIa);
  CHECK(validate_spec(FamilyKind::III, 3, 2).family == Family::IIIb);
  CHECK(validate_spec(FamilyKind::III, 5, 2).family == Family::IIIc);
  CHECK(validate_spec(FamilyKind::III, 1, 2).label() == "iii-a p=1 q=2");
}

TEST_CASE("weight shifts", "[singvec]") {
  CHECK(weight_shift(validate_spec(FamilyKind::I, 1)) == WeightVector{Rational(1, 2), Rational(-1, 2)});
  CHECK(weight_shift(validate_spec(FamilyKind::II, 1)) == WeightVector{0, 1});
  CHECK(weight_shift(validate_spec(FamilyKind::III, 1, 2)) == WeightVector{Rational(1, 2), Rational(3, 2)});
  CHECK(weight_shift(validate_spec(FamilyKind::IV, 2)) == WeightVector{1, 1});
  CHECK(weight_shift(validate_spec(FamilyKind::V, 1)) == WeightVector{1, 0});
  for (const auto& s : grid(3))
    for (const auto& [idx, c] : closed_form(s)) CHECK(weight_of(idx) == s.shift);
}

TEST_CASE("closed form coefficients", "[singvec]") {
  auto iv = validate_spec(FamilyKind::IV, 1);
  ClosedForm f = closed_form(iv);
  const ParamPoly L1 = ParamPoly::variable(Param::L1);
  REQUIRE(f.size() == 2);
  CHECK(f.at(HatKetIndex{0, 0, 1, 0}) == Rational(2) * L1 - ParamPoly(Rational(3, 2)));
  CHECK(f.at(HatKetIndex{0, 1, 0, 1}) == ParamPoly(1L));
  auto iii = validate_spec(FamilyKind::III, 1, 2);
  CHECK(coefficient(iii, 0, 0) == ParamPoly(Rational(1)));  // 1! 2! / (1! 2!)
  CHECK(coefficient(iii, 0, 1) == ParamPoly(Rational(2)));  // 1! 2! / (1! 1!)
  CHECK_THROWS_AS(coefficient(iii, 1, 0), SpecError);
  CHECK(closed_form(validate_spec(FamilyKind::I, 3)).begin()->first == HatKetIndex{0, 0, 0, 3});
}

TEST_CASE("summation ranges cover exactly the nonnegative factorial support", "[singvec]") {
  for (const auto& s : grid(4)) {
    auto r = summation_range(s);
    std::set<std::pair<unsigned, unsigned>> got(r.begin(), r.end());
    INFO(s.label());
    CHECK(got.size() == r.size());
    CHECK(got == factorial_support(s));
  }
}

TEST_CASE("closed forms are singular as parameter identities", "[singvec]") {
  for (const auto& s : grid(3)) {
    INFO(s.label());
    CHECK(symbolic_singularity_failures(s).empty());
  }
}

TEST_CASE("a wrong weight constraint is detected", "[singvec]") {
  auto s = validate_spec(FamilyKind::II, 1);
  s.constraints[Param::L2] = ParamPoly(Rational(1, 3));
  CHECK_FALSE(symbolic_singularity_failures(s).empty());
}

TEST_CASE("oracle agrees with the closed forms", "[singvec]") {
  for (const auto& s : grid(3)) {
    INFO(s.label());
    OracleReport r = oracle_check(s, 20240229);
    CHECK(r.ok());
    CHECK(r.samples.size() == (s.free_param ? 3u : 1u));
    for (const auto& smp : r.samples) CHECK(smp.dimension == 1);
  }
}

TEST_CASE("oracle sampling is seeded", "[singvec]") {
  auto s = validate_spec(FamilyKind::V, 2);
  CHECK(sample_free_values(s, 5) == sample_free_values(s, 5));
  CHECK(sample_free_values(s, 5) != sample_free_values(s, 6));
  for (const Rational& x : sample_free_values(s, 5)) CHECK(x.get_den() <= 97);
  CHECK(sample_free_values(validate_spec(FamilyKind::III, 1, 2), 5).empty());
}
