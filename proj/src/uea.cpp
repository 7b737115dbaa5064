#include "jido/uea.hpp"

#include <algorithm>

#include <optional>
#include <stdexcept>

namespace jido {

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

namespace {

// Index-form description of a basis element: a_i^+, a_i^-, K^+_{ij},
// K^-_{ij}, K^0_{ij} (i, j in {1, 2}) or the central element.
enum class Kind { a_plus, a_minus, k_plus, k_minus, k_zero, center };

struct IndexForm {
  Kind kind;
  int i = 0;
  int j = 0;
};

IndexForm index_form(Generator g) {
  switch (g) {
    case Generator::a1p: return {Kind::a_plus, 1};
    case Generator::a2p: return {Kind::a_plus, 2};
    case Generator::b1p: return {Kind::k_plus, 1, 1};
    case Generator::b2p: return {Kind::k_plus, 2, 2};
    case Generator::cp: return {Kind::k_plus, 1, 2};
    case Generator::dp: return {Kind::k_zero, 1, 2};
    case Generator::h1: return {Kind::k_zero, 1, 1};
    case Generator::h2: return {Kind::k_zero, 2, 2};
    case Generator::Z: return {Kind::center};
    case Generator::a1m: return {Kind::a_minus, 1};
    case Generator::a2m: return {Kind::a_minus, 2};
    case Generator::b1m: return {Kind::k_minus, 1, 1};
    case Generator::b2m: return {Kind::k_minus, 2, 2};
    case Generator::cm: return {Kind::k_minus, 1, 2};
    case Generator::dm: return {Kind::k_zero, 2, 1};
  }
  throw std::logic_error("index_form");
}

Generator from_index_form(Kind kind, int i, int j = 0) {
  switch (kind) {
    case Kind::a_plus: return i == 1 ? Generator::a1p : Generator::a2p;
    case Kind::a_minus: return i == 1 ? Generator::a1m : Generator::a2m;
    case Kind::k_plus:  // symmetric in (i, j)
      return i != j ? Generator::cp : (i == 1 ? Generator::b1p : Generator::b2p);
    case Kind::k_minus:
      return i != j ? Generator::cm : (i == 1 ? Generator::b1m : Generator::b2m);
    case Kind::k_zero:
      if (i == j) return i == 1 ? Generator::h1 : Generator::h2;
      return i == 1 ? Generator::dp : Generator::dm;
    case Kind::center: return Generator::Z;
  }
  throw std::logic_error("from_index_form");
}

int delta(int a, int b) { return a == b ? 1 : 0; }

class Accumulator {
 public:
  void add(Generator g, const Rational& c) {
    if (c != 0) coeffs_[index(g)] += c;
  }
  void add(Kind kind, int i, int j, const Rational& c) { add(from_index_form(kind, i, j), c); }
  LinearCombination finish(bool negate) const {
    LinearCombination out;
    for (Generator g : kAllGenerators)
      if (coeffs_[index(g)] != 0) out.emplace_back(g, negate ? Rational(-coeffs_[index(g)]) : coeffs_[index(g)]);
    return out;
  }

 private:
  std::array<Rational, kGeneratorCount> coeffs_{};
};

// The relations as printed, in the orientation in which they are printed.
// Returns nullopt when the ordered pair is only given by antisymmetry.
std::optional<LinearCombination> printed_bracket(Generator gx, Generator gy) {
  const IndexForm x = index_form(gx), y = index_form(gy);
  const Rational half(1, 2);
  Accumulator acc;
  if (x.kind == Kind::center || y.kind == Kind::center) return LinearCombination{};
  // Heisenberg: [a_i^-, a_j^+] = delta_ij, [a^-, a^-] = [a^+, a^+] = 0.
  if (x.kind == Kind::a_minus && y.kind == Kind::a_plus) {
    acc.add(Generator::Z, delta(x.i, y.i));
    return acc.finish(false);
  }
  if (x.kind == y.kind && (x.kind == Kind::a_plus || x.kind == Kind::a_minus || x.kind == Kind::k_plus ||
                           x.kind == Kind::k_minus))
    return LinearCombination{};
  // [a_k^+, K^+_ij] = [a_k^-, K^-_ij] = 0
  if ((x.kind == Kind::a_plus && y.kind == Kind::k_plus) || (x.kind == Kind::a_minus && y.kind == Kind::k_minus))
    return LinearCombination{};
  // [a_i^-, K^+_kj] = 1/2 delta_ik a_j^+ + 1/2 delta_ij a_k^+
  if (x.kind == Kind::a_minus && y.kind == Kind::k_plus) {
    int i = x.i, k = y.i, j = y.j;
    acc.add(Kind::a_plus, j, 0, half * delta(i, k));
    acc.add(Kind::a_plus, k, 0, half * delta(i, j));
    return acc.finish(false);
  }
  // [K^-_kj, a_i^+] = 1/2 delta_ik a_j^- + 1/2 delta_ij a_k^-
  if (x.kind == Kind::k_minus && y.kind == Kind::a_plus) {
    int k = x.i, j = x.j, i = y.i;
    acc.add(Kind::a_minus, j, 0, half * delta(i, k));
    acc.add(Kind::a_minus, k, 0, half * delta(i, j));
    return acc.finish(false);
  }
  // [K^0_ij, a_k^+] = 1/2 delta_jk a_i^+
  if (x.kind == Kind::k_zero && y.kind == Kind::a_plus) {
    acc.add(Kind::a_plus, x.i, 0, half * delta(x.j, y.i));
    return acc.finish(false);
  }
  // [a_k^-, K^0_ij] = 1/2 delta_ik a_j^-
  if (x.kind == Kind::a_minus && y.kind == Kind::k_zero) {
    acc.add(Kind::a_minus, y.j, 0, half * delta(y.i, x.i));
    return acc.finish(false);
  }
  // 2[K^-_ij, K^0_kl] = K^-_il delta_kj + K^-_jl delta_ki
  if (x.kind == Kind::k_minus && y.kind == Kind::k_zero) {
    int i = x.i, j = x.j, k = y.i, l = y.j;
    acc.add(Kind::k_minus, i, l, half * delta(k, j));
    acc.add(Kind::k_minus, j, l, half * delta(k, i));
    return acc.finish(false);
  }
  // 2[K^-_ij, K^+_kl] = K^0_kj d_li + K^0_lj d_ki + K^0_ki d_lj + K^0_li d_kj
  if (x.kind == Kind::k_minus && y.kind == Kind::k_plus) {
    int i = x.i, j = x.j, k = y.i, l = y.j;
    acc.add(Kind::k_zero, k, j, half * delta(l, i));
    acc.add(Kind::k_zero, l, j, half * delta(k, i));
    acc.add(Kind::k_zero, k, i, half * delta(l, j));
    acc.add(Kind::k_zero, l, i, half * delta(k, j));
    return acc.finish(false);
  }
  // 2[K^+_ij, K^0_kl] = -K^+_ik delta_jl - K^+_jk delta_li
  if (x.kind == Kind::k_plus && y.kind == Kind::k_zero) {
    int i = x.i, j = x.j, k = y.i, l = y.j;
    acc.add(Kind::k_plus, i, k, -half * delta(j, l));
    acc.add(Kind::k_plus, j, k, -half * delta(l, i));
    return acc.finish(false);
  }
  // 2[K^0_ji, K^0_kl] = K^0_jl delta_ki - K^0_ki delta_lj
  if (x.kind == Kind::k_zero && y.kind == Kind::k_zero) {
    int j = x.i, i = x.j, k = y.i, l = y.j;
    acc.add(Kind::k_zero, j, l, half * delta(k, i));
    acc.add(Kind::k_zero, k, i, -half * delta(l, j));
    return acc.finish(false);
  }
  return std::nullopt;
}

}  // namespace

StructureTable::StructureTable() {
  for (Generator x : kAllGenerators) {
    for (Generator y : kAllGenerators) {
      if (auto direct = printed_bracket(x, y)) {
        table_[index(x)][index(y)] = *direct;
      } else if (auto reversed = printed_bracket(y, x)) {
        for (auto& [g, c] : *reversed) c = -c;
        table_[index(x)][index(y)] = *reversed;
      } else {
        throw std::logic_error("no relation for [" + std::string(name(x)) + ", " + std::string(name(y)) + "]");
      }
    }
  }
}

const StructureTable& StructureTable::instance() {
  static const StructureTable table;
  return table;
}

UeaElement bracket(Generator x, Generator y) {
  UeaElement r;
  for (const auto& [g, c] : StructureTable::instance().bracket(x, y)) r += UeaElement::generator(g, c);
  return r;
}

// ---------------------------------------------------------------------------
// UeaElement
// ---------------------------------------------------------------------------

UeaElement UeaElement::unit() { return monomial(PbwExponents{}, 1); }

UeaElement UeaElement::generator(Generator g, const Rational& coeff) {
  PbwExponents e{};
  e[index(g)] = 1;
  return monomial(e, coeff);
}

UeaElement UeaElement::monomial(const PbwExponents& exps, const Rational& coeff) {
  UeaElement u;
  u.add_term(exps, coeff);
  return u;
}

void UeaElement::add_term(const PbwExponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned UeaElement::degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

UeaElement& UeaElement::operator+=(const UeaElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

UeaElement& UeaElement::operator-=(const UeaElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

UeaElement& UeaElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= s;
  }
  return *this;
}

std::string monomial_to_string(const PbwExponents& exps) {
  std::string out;
  for (Generator g : kAllGenerators) {
    unsigned e = exps[index(g)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += name(g);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string UeaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + jido::to_string(c) + ")*" + monomial_to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PBW rewriting
// ---------------------------------------------------------------------------

namespace {

// g * m for a single normal-ordered monomial m. Adjacent swaps: if g sorts
// after the leading generator y of m = y * rest, then
//   g y rest = y (g rest) + [g, y] rest.
// Both remainders are handled recursively; the bracket term has lower degree.
void left_multiply_monomial(Generator g, const PbwExponents& m, const Rational& coeff, UeaElement& out) {
  std::size_t lead = kGeneratorCount;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    if (m[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == kGeneratorCount || index(g) <= lead) {
    PbwExponents e = m;
    ++e[index(g)];
    out.add_term(e, coeff);
    return;
  }
  const Generator y = kAllGenerators[lead];
  PbwExponents rest = m;
  --rest[lead];

  UeaElement g_rest;
  left_multiply_monomial(g, rest, 1, g_rest);
  for (const auto& [e, c] : g_rest.terms()) left_multiply_monomial(y, e, coeff * c, out);

  for (const auto& [t, c] : StructureTable::instance().bracket(g, y)) left_multiply_monomial(t, rest, coeff * c, out);
}

}  // namespace

UeaElement left_multiply(Generator g, const UeaElement& u) {
  UeaElement out;
  for (const auto& [e, c] : u.terms()) left_multiply_monomial(g, e, c, out);
  return out;
}

UeaElement pbw_normal_form(std::span<const Generator> word) {
  UeaElement result = UeaElement::unit();
  for (auto it = word.rbegin(); it != word.rend(); ++it) result = left_multiply(*it, result);
  return result;
}

UeaElement uea_multiply(const UeaElement& u, const UeaElement& v) {
  UeaElement result;
  for (const auto& [mono, coeff] : u.terms()) {
    UeaElement partial = v;
    // Apply the generators of the monomial right to left.
    for (std::size_t i = kGeneratorCount; i-- > 0;)
      for (unsigned k = 0; k < mono[i]; ++k) partial = left_multiply(kAllGenerators[i], partial);
    partial *= coeff;
    result += partial;
  }
  return result;
}

WeightVector weight_of_monomial(const PbwExponents& exps) {
  WeightVector w;
  for (Generator g : kAllGenerators)
    if (exps[index(g)]) w += long(exps[index(g)]) * weight(g);
  return w;
}

namespace {

using Combination = std::map<Generator, Rational>;

Combination combine(const LinearCombination& lc, const Rational& scale = 1) {
  Combination out;
  for (const auto& [g, c] : lc) out[g] += scale * c;
  return out;
}

void accumulate(Combination& acc, const Combination& more) {
  for (const auto& [g, c] : more) acc[g] += c;
}

bool vanishes(const Combination& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second == 0; });
}

// [x, sum c_i g_i]
Combination bracket_with(Generator x, const Combination& y) {
  Combination out;
  const auto& table = StructureTable::instance();
  for (const auto& [g, c] : y)
    if (c != 0) accumulate(out, combine(table.bracket(x, g), c));
  return out;
}

std::string pair_id(Generator x, Generator y) { return std::string(name(x)) + "," + std::string(name(y)); }

}  // namespace

StructureCheck check_antisymmetry() {
  StructureCheck r;
  const auto& table = StructureTable::instance();
  for (Generator x : kAllGenerators)
    for (Generator y : kAllGenerators) {
      ++r.checked;
      Combination sum = combine(table.bracket(x, y));
      accumulate(sum, combine(table.bracket(y, x)));
      if (!vanishes(sum)) r.failures.push_back(pair_id(x, y));
    }
  return r;
}

StructureCheck check_jacobi() {
  StructureCheck r;
  const auto& table = StructureTable::instance();
  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = i + 1; j < kGeneratorCount; ++j)
      for (std::size_t k = j + 1; k < kGeneratorCount; ++k) {
        const Generator x = kAllGenerators[i], y = kAllGenerators[j], z = kAllGenerators[k];
        ++r.checked;
        Combination sum = bracket_with(x, combine(table.bracket(y, z)));
        accumulate(sum, bracket_with(y, combine(table.bracket(z, x))));
        accumulate(sum, bracket_with(z, combine(table.bracket(x, y))));
        if (!vanishes(sum)) r.failures.push_back(pair_id(x, y) + "," + std::string(name(z)));
      }
  return r;
}

StructureCheck check_center() {
  StructureCheck r;
  const auto& table = StructureTable::instance();
  for (Generator x : kAllGenerators) {
    ++r.checked;
    if (!vanishes(combine(table.bracket(Generator::Z, x)))) r.failures.push_back(pair_id(Generator::Z, x));
  }
  return r;
}

StructureCheck check_raising_relations() {
  using G = Generator;
  const std::map<std::pair<G, G>, Combination> expected{
      {{G::b2p, G::dp}, {{G::cp, Rational(-1)}}},
      {{G::a2p, G::dp}, {{G::a1p, Rational(-1, 2)}}},
      {{G::cp, G::dp}, {{G::b1p, Rational(-1, 2)}}},
  };
  StructureCheck r;
  const auto& table = StructureTable::instance();
  for (std::size_t i = 0; i < kRaisingGenerators.size(); ++i)
    for (std::size_t j = i + 1; j < kRaisingGenerators.size(); ++j) {
      const G x = kRaisingGenerators[i], y = kRaisingGenerators[j];
      ++r.checked;
      Combination got = combine(table.bracket(x, y));
      std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
      auto it = expected.find({x, y});
      const Combination want = it == expected.end() ? Combination{} : it->second;
      if (got != want) r.failures.push_back(pair_id(x, y));
    }
  return r;
}

}  // namespace jido
