#include "jido/singvec.hpp"

#include <algorithm>
#include <set>

#include "jido/sampling.hpp"

namespace jido {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::I: return "i";
    case Family::II: return "ii";
    case Family::IIIa: return "iii-a";
    case Family::IIIb: return "iii-b";
    case Family::IIIc: return "iii-c";
    case Family::IV: return "iv";
    case Family::V: return "v";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  if (text == "i" || text == "I" || text == "1") return FamilyKind::I;
  if (text == "ii" || text == "II" || text == "2") return FamilyKind::II;
  if (text == "iii" || text == "III" || text == "3") return FamilyKind::III;
  if (text == "iv" || text == "IV" || text == "4") return FamilyKind::IV;
  if (text == "v" || text == "V" || text == "5") return FamilyKind::V;
  return std::nullopt;
}

FamilyKind kind_of(Family f) {
  switch (f) {
    case Family::I: return FamilyKind::I;
    case Family::II: return FamilyKind::II;
    case Family::IIIa:
    case Family::IIIb:
    case Family::IIIc: return FamilyKind::III;
    case Family::IV: return FamilyKind::IV;
    case Family::V: return FamilyKind::V;
  }
  return FamilyKind::I;
}

std::string SingularVectorSpec::label() const {
  std::string s = std::string(family_name(family)) + " p=" + std::to_string(p);
  if (kind_of(family) == FamilyKind::III) s += " q=" + std::to_string(q);
  return s;
}

namespace {

ParamPoly L(Param p) { return ParamPoly::variable(p); }

Rational half_of(long v) { return make_rational(v, 2); }

}  // namespace

SingularVectorSpec validate_spec(FamilyKind kind, unsigned p, std::optional<unsigned> q) {
  if (p < 1) throw SpecError("p must be a positive integer");
  SingularVectorSpec s;
  s.p = p;
  const long P = p;
  const WeightVector d1 = delta1(), d2 = delta2();
  switch (kind) {
    case FamilyKind::I:
      s.family = Family::I;
      // L1 - L2 = (1 - p)/2
      s.constraints[Param::L1] = L(Param::L2) + ParamPoly(half_of(1 - P));
      s.free_param = Param::L2;
      s.shift = P * (d1 - d2);
      s.condition = "L1 - L2 = (1 - p)/2";
      break;
    case FamilyKind::II:
      s.family = Family::II;
      s.constraints[Param::L2] = ParamPoly(Rational(3, 4) - half_of(P));
      s.free_param = Param::L1;
      s.shift = 2 * P * d2;
      s.condition = "L2 = 3/4 - p/2";
      break;
    case FamilyKind::III: {
      if (!q || *q < 1) throw SpecError("family iii requires a positive integer q");
      const long Q = *q;
      if (P == Q) throw SpecError("excluded: p = q");
      if (P == 2 * Q) throw SpecError("excluded: p = 2q");
      s.q = *q;
      s.family = P < Q ? Family::IIIa : (P < 2 * Q ? Family::IIIb : Family::IIIc);
      s.constraints[Param::L1] = ParamPoly(Rational(5, 4) - half_of(P - Q));
      s.constraints[Param::L2] = ParamPoly(Rational(3, 4) - half_of(Q));
      s.shift = P * d1 + (2 * Q - P) * d2;
      s.condition = "L1 = 5/4 - (p - q)/2, L2 = 3/4 - q/2, p != q, p != 2q";
      break;
    }
    case FamilyKind::IV:
      s.family = Family::IV;
      // L1 + L2 = 2 - p/2, keeping L1 (the coefficients depend on it).
      s.constraints[Param::L2] = ParamPoly(2 - half_of(P)) - L(Param::L1);
      s.free_param = Param::L1;
      s.shift = P * (d1 + d2);
      s.condition = "L1 + L2 = 2 - p/2";
      break;
    case FamilyKind::V:
      s.family = Family::V;
      s.constraints[Param::L1] = ParamPoly(Rational(5, 4) - half_of(P));
      s.free_param = Param::L2;
      s.shift = 2 * P * d1;
      s.condition = "L1 = 5/4 - p/2";
      break;
  }
  if (kind != FamilyKind::III && q && *q != 0) throw SpecError("q only applies to family iii");
  return s;
}

std::vector<std::pair<unsigned, unsigned>> summation_range(const SingularVectorSpec& spec) {
  std::vector<std::pair<unsigned, unsigned>> out;
  const unsigned p = spec.p, q = spec.q;
  auto block = [&](unsigned k_lo, unsigned k_hi, auto n_hi) {
    for (unsigned k = k_lo; k <= k_hi; ++k)
      for (unsigned n = 0; n <= n_hi(k); ++n) out.emplace_back(k, n);
  };
  switch (spec.family) {
    case Family::I:
    case Family::II: out.emplace_back(0, 0); break;
    case Family::IIIa:
    case Family::IV: block(0, p / 2, [p](unsigned k) { return p - 2 * k; }); break;
    case Family::IIIb:
      block(0, p - q, [q](unsigned k) { return q - k; });
      if (p - q + 1 <= p / 2) block(p - q + 1, p / 2, [p](unsigned k) { return p - 2 * k; });
      break;
    case Family::IIIc: block(0, q, [q](unsigned k) { return q - k; }); break;
    case Family::V: block(0, p, [p](unsigned k) { return p - k; }); break;
  }
  return out;
}

HatKetIndex ket_index(const SingularVectorSpec& spec, unsigned k, unsigned n) {
  const unsigned p = spec.p, q = spec.q;
  switch (spec.family) {
    case Family::I: return {0, 0, 0, p};
    case Family::II: return {0, p, 0, 0};
    case Family::IIIa:
    case Family::IIIb:
    case Family::IIIc: return {k, q - k - n, n, p - 2 * k - n};
    case Family::IV: return {k, p - k - n, n, p - 2 * k - n};
    case Family::V: return {k, p - k - n, n, 2 * p - 2 * k - n};
  }
  return {};
}

ParamPoly coefficient(const SingularVectorSpec& spec, unsigned k, unsigned n) {
  const auto range = summation_range(spec);
  if (std::find(range.begin(), range.end(), std::make_pair(k, n)) == range.end())
    throw SpecError("(k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + ") outside the range of " +
                    spec.label());
  const unsigned p = spec.p, q = spec.q;
  Integer four_k = 1;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  switch (spec.family) {
    case Family::I:
    case Family::II: return ParamPoly(1L);
    case Family::IIIa:
    case Family::IIIb:
    case Family::IIIc: {
      Integer num = factorial(p) * factorial(q);
      Integer den = four_k * factorial(k) * factorial(n) * factorial(p - 2 * k - n) * factorial(q - k - n);
      Rational c(num, den);
      c.canonicalize();
      return ParamPoly(c);
    }
    case Family::IV: {
      Integer den = four_k * factorial(k) * factorial(n) * factorial(p - 2 * k - n);
      Rational c(factorial(p), den);
      c.canonicalize();
      // Gamma(2 L1 + p - 3/2) / Gamma(2 L1 + p - 3/2 - k - n)
      ParamPoly x = Rational(2) * L(Param::L1) + ParamPoly(Rational(long(p)) - Rational(3, 2));
      return gamma_ratio_falling(x, k + n) * c;
    }
    case Family::V: {
      Integer den = four_k * factorial(k) * factorial(n) * factorial(p - k - n);
      Rational c(factorial(p), den);
      c.canonicalize();
      if (n % 2 == 1) c = -c;
      // Gamma(2 L2 - p - 3/2 + 2k + n) / Gamma(2 L2 - p - 3/2)
      ParamPoly y = Rational(2) * L(Param::L2) - ParamPoly(Rational(long(p)) + Rational(3, 2));
      return gamma_ratio_rising(y, 2 * k + n) * c;
    }
  }
  return {};
}

ClosedForm closed_form(const SingularVectorSpec& spec) {
  ClosedForm form;
  for (auto [k, n] : summation_range(spec)) {
    ParamPoly c = coefficient(spec, k, n);
    if (!c.is_zero()) form[ket_index(spec, k, n)] += c;
  }
  return form;
}

WeightVector weight_shift(const SingularVectorSpec& spec) { return spec.shift; }

VermaElement expand(const ClosedForm& form) {
  VermaElement v;
  for (const auto& [idx, c] : form) v += c * hat_ket(idx);
  return v;
}

std::vector<Generator> symbolic_singularity_failures(const SingularVectorSpec& spec) {
  const VermaElement v = expand(closed_form(spec)).substitute(spec.constraints);
  VermaModule module(ParamPoly::variable(Param::L1).substitute(spec.constraints),
                     ParamPoly::variable(Param::L2).substitute(spec.constraints));
  std::vector<Generator> failing;
  for (Generator g : kLoweringGenerators)
    if (!module.act(g, v).is_zero()) failing.push_back(g);
  return failing;
}

std::pair<Rational, Rational> constrained_weight(const SingularVectorSpec& spec, const Rational& free_value) {
  std::map<Param, Rational> values;
  if (spec.free_param) values[*spec.free_param] = free_value;
  auto component = [&](Param p) {
    auto it = spec.constraints.find(p);
    return it == spec.constraints.end() ? values.at(p) : it->second.evaluate(values);
  };
  return {component(Param::L1), component(Param::L2)};
}

std::vector<Rational> sample_free_values(const SingularVectorSpec& spec, std::uint64_t seed, unsigned count) {
  if (!spec.free_param) return {};
  Rng rng(derive_seed(seed, spec.label()));
  const ClosedForm form = closed_form(spec);
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational x = random_rational(rng, 400, 97);
    if (!seen.insert(x).second) continue;
    std::map<Param, Rational> at{{*spec.free_param, x}};
    bool degenerate = std::any_of(form.begin(), form.end(), [&](const auto& kv) {
      return kv.second.substitute(spec.constraints).evaluate(at) == 0;
    });
    if (!degenerate) out.push_back(x);
  }
  return out;
}

bool OracleReport::ok() const {
  if (samples.empty()) return false;
  return std::all_of(samples.begin(), samples.end(), [&](const OracleSample& s) {
    return s.contains_closed_form && s.dimension == samples.front().dimension;
  });
}

std::string OracleReport::summary() const {
  std::set<std::size_t> dims;
  for (const auto& s : samples) dims.insert(s.dimension);
  std::string out = "dimension ";
  bool first = true;
  for (std::size_t d : dims) {
    out += (first ? "" : "/") + std::to_string(d);
    first = false;
  }
  if (!samples.empty() && samples.front().free_value) {
    out += " at ";
    for (std::size_t i = 0; i < samples.size(); ++i)
      out += (i ? ", " : "") + jido::to_string(*samples[i].free_value);
  } else if (!samples.empty()) {
    out += " at (" + jido::to_string(samples.front().lambda1) + ", " + jido::to_string(samples.front().lambda2) + ")";
  }
  for (const auto& s : samples)
    if (!s.contains_closed_form) return out + "; closed form not in null space";
  return out + "; contains closed form";
}

OracleReport oracle_check(const SingularVectorSpec& spec, std::uint64_t seed) {
  OracleReport report;
  std::vector<std::optional<Rational>> points;
  for (const Rational& x : sample_free_values(spec, seed)) points.emplace_back(x);
  if (points.empty()) points.emplace_back(std::nullopt);
  const VermaElement symbolic = expand(closed_form(spec)).substitute(spec.constraints);
  for (const auto& point : points) {
    OracleSample s;
    s.free_value = point;
    std::tie(s.lambda1, s.lambda2) = constrained_weight(spec, point.value_or(Rational(0)));
    auto basis = brute_force_singular(s.lambda1, s.lambda2, spec.shift);
    s.dimension = basis.size();
    Bindings at;
    if (spec.free_param && point) at[*spec.free_param] = ParamPoly(*point);
    VermaElement v = symbolic.substitute(at);
    s.contains_closed_form = !v.is_zero() && in_span(basis, v);
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace jido
