#include "jido/verma.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jido {

namespace {

constexpr std::size_t kRaising = 6;

PbwExponents as_pbw(const RaisingExponents& r) {
  PbwExponents e{};
  for (std::size_t i = 0; i < kRaising; ++i) e[i] = r[i];
  return e;
}

}  // namespace

WeightVector weight_of(const RaisingExponents& exps) { return weight_of_monomial(as_pbw(exps)); }

std::string raising_monomial_to_string(const RaisingExponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < kRaising; ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += name(kRaisingGenerators[i]);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// VermaElement
// ---------------------------------------------------------------------------

VermaElement VermaElement::vacuum() { return basis(RaisingExponents{}); }

VermaElement VermaElement::basis(const RaisingExponents& exps, const ParamPoly& coeff) {
  VermaElement v;
  v.add_term(exps, coeff);
  return v;
}

ParamPoly VermaElement::coefficient(const RaisingExponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void VermaElement::add_term(const RaisingExponents& exps, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VermaElement& VermaElement::operator+=(const VermaElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

VermaElement& VermaElement::operator-=(const VermaElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

VermaElement& VermaElement::operator*=(const ParamPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

VermaElement VermaElement::substitute(const Bindings& b) const {
  VermaElement out;
  for (const auto& [e, c] : terms_) out.add_term(e, c.substitute(b));
  return out;
}

std::string VermaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = raising_monomial_to_string(e);
    std::string ket = mono.empty() ? "|0>" : mono + "|0>";
    std::string coeff = c.to_string();
    bool single = c.terms().size() == 1;
    bool negative = single && c.terms()[0].second < 0;
    if (negative) coeff = (-c).to_string();
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    if (coeff == "1") {
      out += ket;
    } else if (single) {
      out += coeff + "*" + ket;
    } else {
      out += "(" + coeff + ")*" + ket;
    }
  }
  return out;
}

std::string to_string(const HatKetIndex& idx) {
  return "|" + std::to_string(idx.k) + "," + std::to_string(idx.l) + "," + std::to_string(idx.n) + "," +
         std::to_string(idx.m) + ">";
}

WeightVector weight_of(const HatKetIndex& idx) {
  return long(idx.k) * weight(Generator::b1p) + long(idx.l) * weight(Generator::b2p) +
         long(idx.n) * weight(Generator::cp) + long(idx.m) * weight(Generator::dp);
}

// ---------------------------------------------------------------------------
// Module action
// ---------------------------------------------------------------------------

VermaModule::VermaModule()
    : VermaModule(ParamPoly::variable(Param::L1), ParamPoly::variable(Param::L2), ParamPoly(1L)) {}

VermaModule::VermaModule(ParamPoly lambda1, ParamPoly lambda2, ParamPoly central)
    : lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)), central_(std::move(central)) {}

// X acting on m|0> for a single PBW raising monomial m. Writing m = y * rest
// with y the leading generator,
//   X y rest|0> = y (X rest|0>) + [X, y] rest|0>,
// which terminates because rest has lower degree. Raising X already sorted
// before y is appended directly; Cartan elements and Z act diagonally.
const VermaElement& VermaModule::act_on_basis(Generator x, const RaisingExponents& m) const {
  auto key = std::make_pair(x, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  VermaElement result;
  std::size_t lead = kRaising;
  for (std::size_t i = 0; i < kRaising; ++i) {
    if (m[i] != 0) {
      lead = i;
      break;
    }
  }

  if (x == Generator::h1 || x == Generator::h2) {
    WeightVector w = weight_of(m);
    ParamPoly eigen = x == Generator::h1 ? lambda1_ + ParamPoly(w.h1) : lambda2_ + ParamPoly(w.h2);
    result = VermaElement::basis(m, eigen);
  } else if (x == Generator::Z) {
    result = VermaElement::basis(m, central_);
  } else if (is_raising(x) && index(x) <= lead) {
    RaisingExponents e = m;
    ++e[index(x)];
    result = VermaElement::basis(e);
  } else if (lead == kRaising) {
    // lowering generator on |0>
  } else {
    const Generator y = kRaisingGenerators[lead];
    RaisingExponents rest = m;
    --rest[lead];
    const VermaElement& x_rest = act_on_basis(x, rest);
    for (const auto& [e, c] : x_rest.terms()) {
      VermaElement t = act_on_basis(y, e);
      result += c * t;
    }
    for (const auto& [t, c] : StructureTable::instance().bracket(x, y)) {
      VermaElement part = act_on_basis(t, rest);
      result += ParamPoly(c) * part;
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

VermaElement VermaModule::act(Generator x, const VermaElement& v) const {
  VermaElement out;
  for (const auto& [e, c] : v.terms()) {
    VermaElement t = act_on_basis(x, e);
    out += c * t;
  }
  return out;
}

VermaElement VermaModule::act(const UeaElement& u, const VermaElement& v) const {
  VermaElement out;
  for (const auto& [mono, coeff] : u.terms()) {
    VermaElement partial = v;
    for (std::size_t i = kGeneratorCount; i-- > 0;)
      for (unsigned k = 0; k < mono[i]; ++k) partial = act(kAllGenerators[i], partial);
    out += ParamPoly(coeff) * partial;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hat kets
// ---------------------------------------------------------------------------

VermaElement hat_ket(const HatKetIndex& idx) {
  // Only raising generators are involved, so the lowest weight is irrelevant.
  static thread_local VermaModule raising_only;
  const Rational half(1, 2);
  auto b_hat = [&](Generator b, Generator a) {
    PbwExponents sq{};
    sq[index(a)] = 2;
    return UeaElement::generator(b) - half * UeaElement::monomial(sq);
  };
  PbwExponents a1a2{};
  a1a2[index(Generator::a1p)] = 1;
  a1a2[index(Generator::a2p)] = 1;
  const UeaElement c_hat = UeaElement::generator(Generator::cp) - half * UeaElement::monomial(a1a2);
  const UeaElement b1_hat = b_hat(Generator::b1p, Generator::a1p);
  const UeaElement b2_hat = b_hat(Generator::b2p, Generator::a2p);

  VermaElement v = VermaElement::vacuum();
  for (unsigned i = 0; i < idx.m; ++i) v = raising_only.act(Generator::dp, v);
  for (unsigned i = 0; i < idx.n; ++i) v = raising_only.act(c_hat, v);
  for (unsigned i = 0; i < idx.l; ++i) v = raising_only.act(b2_hat, v);
  for (unsigned i = 0; i < idx.k; ++i) v = raising_only.act(b1_hat, v);
  return v;
}

// ---------------------------------------------------------------------------
// Weight spaces and the brute-force oracle
// ---------------------------------------------------------------------------

std::vector<RaisingExponents> weight_space_basis(const WeightVector& mu) {
  // In doubled units: r1 + 2 k1 + n + m = A and r2 + 2 k2 + n - m = B.
  Rational a2 = 2 * mu.h1, b2 = 2 * mu.h2;
  if (a2.get_den() != 1 || b2.get_den() != 1) return {};
  if (a2 < 0) return {};
  const long A = a2.get_num().get_si();
  const long B = b2.get_num().get_si();
  std::vector<RaisingExponents> out;
  for (long m = 0; m <= A; ++m) {
    for (long n = 0; n <= A - m; ++n) {
      long rem_b = B - n + m;
      if (rem_b < 0) continue;
      for (long k1 = 0; 2 * k1 <= A - m - n; ++k1) {
        long r1 = A - m - n - 2 * k1;
        for (long k2 = 0; 2 * k2 <= rem_b; ++k2) {
          long r2 = rem_b - 2 * k2;
          out.push_back({std::uint16_t(r1), std::uint16_t(r2), std::uint16_t(k1), std::uint16_t(k2),
                         std::uint16_t(n), std::uint16_t(m)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Row echelon form by fraction-free (Bareiss) elimination over the integers.
// Returns the pivot columns; `rows` is left in echelon form.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = col + 1; j < columns; ++j) {
        Integer v = rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = v;
      }
      rows[i][col] = 0;
    }
    prev = rows[r][col];
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Integer>> to_integer_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Integer l = 1;
    bool nonzero = false;
    for (const auto& x : row) {
      if (x == 0) continue;
      nonzero = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> ir;
    ir.reserve(row.size());
    for (const auto& x : row) ir.push_back(x.get_num() * (l / x.get_den()));
    out.push_back(std::move(ir));
  }
  return out;
}

std::vector<Rational> make_primitive(std::vector<Rational> v) {
  Integer l = 1, g = 0;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return v;
  Rational sign = 1;
  for (const auto& x : v) {
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& x : v) x = x * sign / g;
  return v;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows, std::size_t columns) {
  auto ir = to_integer_rows(rows);
  return bareiss_echelon(ir, columns).size();
}

std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows, std::size_t columns) {
  auto ir = to_integer_rows(rows);
  const auto pivots = bareiss_echelon(ir, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(columns, 0);
    x[free] = 1;
    // Back substitution through the echelon rows.
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < columns; ++j)
        if (x[j] != 0 && ir[r][j] != 0) s += Rational(ir[r][j]) * x[j];
      x[pc] = -s / Rational(ir[r][pc]);
    }
    basis.push_back(make_primitive(std::move(x)));
  }
  return basis;
}

std::vector<VermaElement> brute_force_singular(const Rational& lambda1, const Rational& lambda2,
                                               const WeightVector& mu, const Rational& central) {
  const auto basis = weight_space_basis(mu);
  if (basis.empty()) return {};
  VermaModule module{ParamPoly(lambda1), ParamPoly(lambda2), ParamPoly(central)};

  std::vector<std::vector<Rational>> rows;
  for (Generator x : kLoweringGenerators) {
    const auto target = weight_space_basis(mu + weight(x));
    std::map<RaisingExponents, std::size_t> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) row_of[target[i]] = i;
    std::vector<std::vector<Rational>> block(target.size(), std::vector<Rational>(basis.size(), 0));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      VermaElement image = module.act(x, VermaElement::basis(basis[col]));
      for (const auto& [e, c] : image.terms()) {
        if (!c.is_constant()) throw std::logic_error("brute_force_singular: non-numeric coefficient");
        block.at(row_of.at(e))[col] = c.constant_term();
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }

  std::vector<VermaElement> out;
  for (const auto& vec : null_space(std::move(rows), basis.size())) {
    VermaElement v;
    for (std::size_t i = 0; i < basis.size(); ++i) v.add_term(basis[i], ParamPoly(vec[i]));
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<VermaElement>& basis, const VermaElement& v) {
  std::set<RaisingExponents> support;
  for (const auto& b : basis)
    for (const auto& [e, c] : b.terms()) support.insert(e);
  for (const auto& [e, c] : v.terms()) support.insert(e);
  std::vector<RaisingExponents> cols(support.begin(), support.end());
  auto row_of = [&](const VermaElement& x) {
    std::vector<Rational> row;
    for (const auto& e : cols) {
      ParamPoly c = x.coefficient(e);
      if (!c.is_constant()) throw std::invalid_argument("in_span: symbolic coefficient");
      row.push_back(c.constant_term());
    }
    return row;
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis) rows.push_back(row_of(b));
  const std::size_t r0 = matrix_rank(rows, cols.size());
  rows.push_back(row_of(v));
  return matrix_rank(rows, cols.size()) == r0;
}

}  // namespace jido
