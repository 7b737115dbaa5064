#include "jido/generator.hpp"

namespace jido {

namespace {

constexpr std::array<std::string_view, kGeneratorCount> kNames = {
    "a1+", "a2+", "b1+", "b2+", "c+", "d+", "h1", "h2", "Z", "a1-", "a2-", "b1-", "b2-", "c-", "d-",
};

constexpr std::array<std::string_view, kGeneratorCount> kLatex = {
    "a_1^+", "a_2^+", "b_1^+", "b_2^+", "c^+", "d^+", "h_1", "h_2", "1",
    "a_1^-", "a_2^-", "b_1^-", "b_2^-", "c^-", "d^-",
};

}  // namespace

std::string_view name(Generator g) { return kNames[index(g)]; }
std::string_view latex_name(Generator g) { return kLatex[index(g)]; }

std::optional<Generator> parse_generator(std::string_view text) {
  if (text == "1") return Generator::Z;
  for (Generator g : kAllGenerators)
    if (name(g) == text) return g;
  return std::nullopt;
}

std::string to_string(const WeightVector& w) {
  return "(" + to_string(w.h1) + ", " + to_string(w.h2) + ")";
}

WeightVector delta1() { return {Rational(1, 2), 0}; }
WeightVector delta2() { return {0, Rational(1, 2)}; }

WeightVector weight(Generator g) {
  const Rational half(1, 2);
  WeightVector w;
  switch (g) {
    case Generator::a1p: w = {half, 0}; break;
    case Generator::a2p: w = {0, half}; break;
    case Generator::b1p: w = {1, 0}; break;
    case Generator::b2p: w = {0, 1}; break;
    case Generator::cp: w = {half, half}; break;
    case Generator::dp: w = {half, -half}; break;
    case Generator::h1:
    case Generator::h2:
    case Generator::Z: return {};
    case Generator::a1m: w = {-half, 0}; break;
    case Generator::a2m: w = {0, -half}; break;
    case Generator::b1m: w = {-1, 0}; break;
    case Generator::b2m: w = {0, -1}; break;
    case Generator::cm: w = {-half, -half}; break;
    case Generator::dm: w = {-half, half}; break;
  }
  return w;
}

}  // namespace jido
