#include "jido/intertwine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace jido {

namespace {

class PowerCache {
 public:
  explicit PowerCache(DiffOp base) : base_(std::move(base)) {}
  const DiffOp& get(unsigned n) {
    if (powers_.empty()) powers_.push_back(DiffOp::scalar(base_.frame(), ParamPoly(1L)));
    while (powers_.size() <= n) powers_.push_back(compose(powers_.back(), base_));
    return powers_[n];
  }

 private:
  DiffOp base_;
  std::vector<DiffOp> powers_;
};

}  // namespace

DiffOp build_operator(const SingularVectorSpec& spec, Frame frame) {
  const ActionTable& right = action_table(Side::right, frame);
  PowerCache b1(hat_right_action(HatGenerator::b1, right));
  PowerCache b2(hat_right_action(HatGenerator::b2, right));
  PowerCache c(hat_right_action(HatGenerator::c, right));
  PowerCache d(right.at(Generator::dp));
  DiffOp result(frame);
  for (const auto& [idx, coeff] : closed_form(spec)) {
    DiffOp t = compose(compose(b1.get(idx.k), b2.get(idx.l)), compose(c.get(idx.n), d.get(idx.m)));
    result += coeff * t;
  }
  return result;
}

std::string CentralMode::to_string() const { return symbolic ? "symbolic" : "fixed:" + jido::to_string(value); }

std::optional<CentralMode> parse_central_mode(std::string_view text) {
  if (text == "symbolic") return CentralMode::free();
  if (text.substr(0, 6) == "fixed:") {
    try {
      return CentralMode::fixed(parse_rational(text.substr(6)));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Generator> IntertwinerReport::failing() const {
  std::vector<Generator> out;
  for (const auto& [g, r] : residuals)
    if (!r.is_zero()) out.push_back(g);
  return out;
}

DiffOp intertwining_residual(const SingularVectorSpec& spec, const DiffOp& op, const ActionTable& left, Generator x,
                             CentralMode central) {
  if (left.side != Side::left || left.frame != op.frame())
    throw TableError("intertwining residual needs a left table in the operator's frame");
  const std::map<Param, Rational> shift{{Param::L1, spec.shift.h1}, {Param::L2, spec.shift.h2}};
  Bindings fix = spec.constraints;
  if (!central.symbolic) fix[Param::Lh] = ParamPoly(central.value);
  // Substitution is a ring homomorphism and D only carries free components,
  // so the constraints may be imposed on the factors before composing.
  DiffOp shifted = left.at(x).translate(shift).substitute(fix);
  DiffOp plain = left.at(x).substitute(fix);
  DiffOp d = op.substitute(fix);
  return compose(shifted, d) - compose(d, plain);
}

IntertwinerReport verify_intertwining(const SingularVectorSpec& spec, Frame frame, CentralMode central,
                                      const ActionTable* left) {
  const ActionTable& table = left ? *left : authoritative_left_table(frame);
  IntertwinerReport report;
  report.spec = spec;
  report.frame = frame;
  report.central = central;
  const DiffOp op = build_operator(spec, frame);
  report.pass = true;
  for (Generator x : kAllGenerators) {
    DiffOp r = intertwining_residual(spec, op, table, x, central);
    if (!r.is_zero()) report.pass = false;
    report.residuals.emplace_back(x, std::move(r));
  }
  return report;
}

// ---------------------------------------------------------------- univariate

namespace {

using UPoly = std::vector<Rational>;  // ascending

void strip(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    strip(a);
  }
  return a;
}

void make_monic(UPoly& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const UPoly& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// p / (x - r) for a root r.
UPoly deflate(const UPoly& p, const Rational& r) {
  UPoly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rational> polynomial_gcd(const std::vector<std::vector<Rational>>& polys) {
  UPoly g;
  for (UPoly p : polys) {
    strip(p);
    if (p.empty()) continue;
    if (g.empty()) {
      g = p;
    } else {
      UPoly a = g, b = p;
      while (!b.empty()) {
        UPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
      }
      g = a;
    }
    make_monic(g);
    if (g.size() == 1) break;  // constant gcd
  }
  return g;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  UPoly p = coeffs;
  strip(p);
  std::set<Rational> roots;
  if (p.size() <= 1) return {};
  // Factor out x.
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  if (zeros > 0) {
    roots.insert(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
  }
  if (p.size() > 1) {
    Integer lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : p) {
      Rational s = c * lcm;
      ints.push_back(s.get_num());
    }
    for (const Integer& num : divisors(ints.front()))
      for (const Integer& den : divisors(ints.back()))
        for (int sign : {1, -1}) {
          Rational x(num * sign, den);
          x.canonicalize();
          if (evaluate(p, x) == 0) roots.insert(x);
        }
  }
  return {roots.begin(), roots.end()};
}

std::string CentralSolution::to_string() const {
  switch (kind) {
    case Kind::all: return "all Lh";
    case Kind::empty: return "{}";
    case Kind::finite: {
      std::string s = "{";
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", Lh = " : "Lh = ") + jido::to_string(values[i]);
      return s + "}";
    }
  }
  return "?";
}

CentralSolution solve_central_charge(const SingularVectorSpec& spec, Frame frame) {
  IntertwinerReport report = verify_intertwining(spec, frame, CentralMode::free());
  // Group each coefficient by its (L1, L2) exponents into polynomials in Lh.
  std::vector<UPoly> polys;
  for (const auto& [g, r] : report.residuals)
    for (const auto& [key, coeff] : r.terms()) {
      std::map<std::pair<unsigned, unsigned>, UPoly> groups;
      for (const auto& [e, c] : coeff.terms()) {
        UPoly& u = groups[{e[0], e[1]}];
        if (u.size() <= e[2]) u.resize(e[2] + 1, Rational(0));
        u[e[2]] += c;
      }
      for (auto& [k, u] : groups) polys.push_back(std::move(u));
    }
  CentralSolution sol;
  UPoly g = polynomial_gcd(polys);
  if (g.empty()) {
    sol.kind = CentralSolution::Kind::all;
    return sol;
  }
  if (g.size() == 1) {
    sol.kind = CentralSolution::Kind::empty;
    sol.diagnostic = "residual coefficients have no common zero in Lh";
    return sol;
  }
  sol.values = rational_roots(g);
  sol.kind = sol.values.empty() ? CentralSolution::Kind::empty : CentralSolution::Kind::finite;
  UPoly rest = g;
  for (const Rational& r : sol.values)
    while (rest.size() > 1 && evaluate(rest, r) == 0) rest = deflate(rest, r);
  if (rest.size() > 1)
    sol.diagnostic = "common factor of degree " + std::to_string(rest.size() - 1) + " has no rational roots";
  return sol;
}

}  // namespace jido
