#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jido/rational.hpp"

namespace jido {

/// Basis of G2, listed in PBW order: raising, then Cartan and center, then
/// lowering. `Z` is the central element of the Heisenberg subalgebra.
enum class Generator : std::uint8_t {
  a1p, a2p, b1p, b2p, cp, dp,
  h1, h2, Z,
  a1m, a2m, b1m, b2m, cm, dm,
};

inline constexpr std::size_t kGeneratorCount = 15;

inline constexpr std::array<Generator, kGeneratorCount> kAllGenerators = {
    Generator::a1p, Generator::a2p, Generator::b1p, Generator::b2p, Generator::cp,
    Generator::dp,  Generator::h1,  Generator::h2,  Generator::Z,   Generator::a1m,
    Generator::a2m, Generator::b1m, Generator::b2m, Generator::cm,  Generator::dm,
};

inline constexpr std::array<Generator, 6> kRaisingGenerators = {
    Generator::a1p, Generator::a2p, Generator::b1p, Generator::b2p, Generator::cp, Generator::dp,
};

inline constexpr std::array<Generator, 6> kLoweringGenerators = {
    Generator::a1m, Generator::a2m, Generator::b1m, Generator::b2m, Generator::cm, Generator::dm,
};

constexpr std::size_t index(Generator g) { return static_cast<std::size_t>(g); }
constexpr bool is_raising(Generator g) { return index(g) <= index(Generator::dp); }
constexpr bool is_lowering(Generator g) { return index(g) >= index(Generator::a1m); }
constexpr bool is_cartan(Generator g) { return g == Generator::h1 || g == Generator::h2 || g == Generator::Z; }

/// "a1+", "b2-", "h1", "Z", ...
std::string_view name(Generator g);
std::string_view latex_name(Generator g);
/// Inverse of name(); also accepts "1" for the central element.
std::optional<Generator> parse_generator(std::string_view text);

/// Eigenvalues under (h1, h2).
struct WeightVector {
  Rational h1 = 0;
  Rational h2 = 0;

  WeightVector& operator+=(const WeightVector& o) {
    h1 += o.h1;
    h2 += o.h2;
    return *this;
  }
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    return {a.h1 - b.h1, a.h2 - b.h2};
  }
  friend WeightVector operator*(long k, const WeightVector& w) { return {k * w.h1, k * w.h2}; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

std::string to_string(const WeightVector& w);

/// delta_1 = (1/2, 0), delta_2 = (0, 1/2).
WeightVector delta1();
WeightVector delta2();

WeightVector weight(Generator g);

}  // namespace jido
