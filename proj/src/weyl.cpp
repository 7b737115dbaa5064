#include "jido/weyl.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jido {

namespace {

constexpr std::array<std::string_view, kVariableCount> kOriginalNames = {"x1", "x2", "y1", "y2", "z", "w"};
constexpr std::array<std::string_view, kVariableCount> kFinalNames = {"xi1", "xi2", "eta1", "eta2", "zeta", "omega"};
constexpr std::array<std::string_view, kVariableCount> kOriginalLatex = {"x_1", "x_2", "y_1", "y_2", "z", "w"};
constexpr std::array<std::string_view, kVariableCount> kFinalLatex = {"\\xi_1",  "\\xi_2", "\\eta_1",
                                                                      "\\eta_2", "\\zeta", "\\omega"};

unsigned total(const Exponents6& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void require_same_frame(Frame a, Frame b, const char* what) {
  if (a != b)
    throw FrameMismatch(std::string(what) + ": frame mismatch (" + std::string(frame_name(a)) + " vs " +
                        std::string(frame_name(b)) + ")");
}

// n (n-1) ... (n-k+1)
Integer falling_int(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::string_view frame_name(Frame f) { return f == Frame::original ? "original" : "final"; }

std::optional<Frame> parse_frame(std::string_view text) {
  if (text == "original" || text == "ORIGINAL") return Frame::original;
  if (text == "final" || text == "FINAL") return Frame::final;
  return std::nullopt;
}

std::string_view variable_name(Frame f, std::size_t i) {
  return f == Frame::original ? kOriginalNames.at(i) : kFinalNames.at(i);
}

std::string_view variable_latex(Frame f, std::size_t i) {
  return f == Frame::original ? kOriginalLatex.at(i) : kFinalLatex.at(i);
}

// ---------------------------------------------------------------- PolyFunction

PolyFunction PolyFunction::constant(Frame frame, const ParamPoly& c) { return monomial(frame, {}, c); }

PolyFunction PolyFunction::variable(Frame frame, std::size_t i) {
  Exponents6 e{};
  e.at(i) = 1;
  return monomial(frame, e);
}

PolyFunction PolyFunction::monomial(Frame frame, const Exponents6& exps, const ParamPoly& c) {
  PolyFunction f(frame);
  f.add_term(exps, c);
  return f;
}

void PolyFunction::add_term(const Exponents6& exps, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyFunction& PolyFunction::operator+=(const PolyFunction& o) {
  require_same_frame(frame_, o.frame_, "polynomial sum");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyFunction& PolyFunction::operator-=(const PolyFunction& o) {
  require_same_frame(frame_, o.frame_, "polynomial difference");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyFunction& PolyFunction::operator*=(const ParamPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyFunction operator*(const PolyFunction& a, const PolyFunction& b) {
  require_same_frame(a.frame_, b.frame_, "polynomial product");
  PolyFunction r(a.frame_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents6 e;
      for (std::size_t i = 0; i < kVariableCount; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

PolyFunction PolyFunction::derivative(std::size_t i) const {
  PolyFunction r(frame_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents6 d = e;
    --d[i];
    r.add_term(d, c * Rational(e[i]));
  }
  return r;
}

std::string PolyFunction::to_string() const {
  DiffOp op = DiffOp::multiplication(*this);
  return op.to_string(TextFormat::plain);
}

// ---------------------------------------------------------------- DiffOp

bool OpKeyLess::operator()(const OpKey& a, const OpKey& b) const {
  unsigned da = total(a.deriv), db = total(b.deriv);
  if (da != db) return da > db;
  unsigned pa = total(a.poly), pb = total(b.poly);
  if (pa != pb) return pa < pb;
  if (a.deriv != b.deriv) return a.deriv > b.deriv;
  return a.poly > b.poly;
}

DiffOp DiffOp::scalar(Frame frame, const ParamPoly& c) { return term(frame, {}, {}, c); }

DiffOp DiffOp::variable(Frame frame, std::size_t i) {
  Exponents6 e{};
  e.at(i) = 1;
  return term(frame, e, {}, ParamPoly(1L));
}

DiffOp DiffOp::derivative(Frame frame, std::size_t i, unsigned order) {
  Exponents6 e{};
  e.at(i) = static_cast<std::uint16_t>(order);
  return term(frame, {}, e, ParamPoly(1L));
}

DiffOp DiffOp::multiplication(const PolyFunction& f) {
  DiffOp op(f.frame());
  for (const auto& [e, c] : f.terms()) op.add_term({e, {}}, c);
  return op;
}

DiffOp DiffOp::term(Frame frame, const Exponents6& poly, const Exponents6& deriv, const ParamPoly& c) {
  DiffOp op(frame);
  op.add_term({poly, deriv}, c);
  return op;
}

std::optional<ParamPoly> DiffOp::as_scalar() const {
  if (terms_.empty()) return ParamPoly();
  if (terms_.size() != 1 || !(terms_.begin()->first == OpKey{})) return std::nullopt;
  return terms_.begin()->second;
}

unsigned DiffOp::order() const {
  // Terms are sorted by derivative degree descending.
  return terms_.empty() ? 0 : total(terms_.begin()->first.deriv);
}

void DiffOp::add_term(const OpKey& key, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  require_same_frame(frame_, o.frame_, "operator sum");
  if (&o == this) return *this *= ParamPoly(2L);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  require_same_frame(frame_, o.frame_, "operator difference");
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const ParamPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

DiffOp DiffOp::substitute(const Bindings& b) const {
  DiffOp r(frame_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.substitute(b));
  return r;
}

DiffOp DiffOp::translate(const std::map<Param, Rational>& offsets) const {
  DiffOp r(frame_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.translate(offsets));
  return r;
}

PolyFunction DiffOp::apply(const PolyFunction& f) const {
  require_same_frame(frame_, f.frame(), "apply");
  PolyFunction r(frame_);
  for (const auto& [k, c] : terms_)
    for (const auto& [g, fc] : f.terms()) {
      Integer factor = 1;
      Exponents6 e{};
      bool vanishes = false;
      for (std::size_t i = 0; i < kVariableCount && !vanishes; ++i) {
        if (g[i] < k.deriv[i]) {
          vanishes = true;
          break;
        }
        factor *= falling_int(g[i], k.deriv[i]);
        e[i] = k.poly[i] + g[i] - k.deriv[i];
      }
      if (!vanishes) r.add_term(e, c * fc * Rational(factor));
    }
  return r;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  require_same_frame(a.frame(), b.frame(), "compose");
  DiffOp r(a.frame());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const ParamPoly cab = ca * cb;
      // d^beta x^gamma = sum_j prod_i C(beta_i, j_i) gamma_i!/(gamma_i - j_i)! x^(gamma-j) d^(beta-j)
      Exponents6 limit;
      for (std::size_t i = 0; i < kVariableCount; ++i) limit[i] = std::min(ka.deriv[i], kb.poly[i]);
      Exponents6 j{};
      while (true) {
        Integer factor = 1;
        OpKey key;
        for (std::size_t i = 0; i < kVariableCount; ++i) {
          if (j[i] > 0) factor *= binomial(ka.deriv[i], j[i]) * falling_int(kb.poly[i], j[i]);
          key.poly[i] = ka.poly[i] + kb.poly[i] - j[i];
          key.deriv[i] = ka.deriv[i] - j[i] + kb.deriv[i];
        }
        r.add_term(key, factor == 1 ? cab : cab * Rational(factor));
        std::size_t i = 0;
        while (i < kVariableCount && j[i] == limit[i]) j[i++] = 0;
        if (i == kVariableCount) break;
        ++j[i];
      }
    }
  }
  return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

DiffOp power(const DiffOp& a, unsigned n) {
  DiffOp r = DiffOp::scalar(a.frame(), ParamPoly(1L));
  for (unsigned i = 0; i < n; ++i) r = compose(r, a);
  return r;
}

PolyFunction apply_to_polynomial(const DiffOp& a, const PolyFunction& f) { return a.apply(f); }

// ---------------------------------------------------------------- rendering

namespace {

std::string render_key(Frame frame, const OpKey& key, TextFormat format) {
  std::string out;
  const bool latex = format == TextFormat::latex;
  auto factor = [&](std::string base, unsigned e) {
    if (e == 0) return;
    if (!latex && !out.empty()) out += "*";
    out += base;
    if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < kVariableCount; ++i)
    factor(std::string(latex ? variable_latex(frame, i) : variable_name(frame, i)), key.poly[i]);
  for (std::size_t i = 0; i < kVariableCount; ++i)
    factor(latex ? "\\partial_{" + std::string(variable_latex(frame, i)) + "}"
                 : "D" + std::string(variable_name(frame, i)),
           key.deriv[i]);
  return out;
}

}  // namespace

std::string DiffOp::to_string(TextFormat format) const {
  if (format == TextFormat::machine) return serialize(*this, format);
  if (terms_.empty()) return "0";
  const bool latex = format == TextFormat::latex;
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string mono = render_key(frame_, key, format);
    std::string coeff;
    bool negative = false;
    if (c.terms().size() == 1) {
      negative = c.terms().front().second < 0;
      coeff = (negative ? -c : c).to_string(format);
      if (!mono.empty() && coeff == "1") coeff.clear();
    } else {
      coeff = latex ? "\\left(" + c.to_string(format) + "\\right)" : "(" + c.to_string(format) + ")";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty() && !latex) out += "*";
    out += mono;
  }
  return out;
}

std::string serialize(const DiffOp& a, TextFormat format) {
  if (format != TextFormat::machine) return a.to_string(format);
  std::string out = "frame " + std::string(frame_name(a.frame())) + "\n";
  if (a.is_zero()) return out + "0\n";
  auto join = [](const Exponents6& e) {
    std::string s;
    for (std::size_t i = 0; i < kVariableCount; ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    return s;
  };
  for (const auto& [key, c] : a.terms())
    out += c.to_string(TextFormat::plain) + " | " + join(key.poly) + " | " + join(key.deriv) + "\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Exponents6 parse_exponents(std::string_view s) {
  Exponents6 e{};
  std::size_t i = 0;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) {
    std::string_view t = trim(item);
    if (i >= kVariableCount || t.empty() ||
        !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("machine format: bad exponent list '" + std::string(s) + "'");
    e[i++] = static_cast<std::uint16_t>(std::stoul(std::string(t)));
  }
  if (i != kVariableCount) throw std::invalid_argument("machine format: expected 6 exponents in '" + std::string(s) + "'");
  return e;
}

}  // namespace

DiffOp parse_machine(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Frame> frame;
  DiffOp op;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!frame) {
      if (t.substr(0, 6) != "frame ") throw std::invalid_argument("machine format: missing frame header");
      frame = parse_frame(trim(t.substr(6)));
      if (!frame) throw std::invalid_argument("machine format: unknown frame '" + std::string(t.substr(6)) + "'");
      op = DiffOp(*frame);
      continue;
    }
    if (t == "0") continue;
    auto bar1 = t.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : t.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) throw std::invalid_argument("machine format: malformed line '" + line + "'");
    ParamPoly c = parse_param_poly(trim(t.substr(0, bar1)));
    OpKey key{parse_exponents(t.substr(bar1 + 1, bar2 - bar1 - 1)), parse_exponents(t.substr(bar2 + 1))};
    op.add_term(key, c);
  }
  if (!frame) throw std::invalid_argument("machine format: empty input");
  return op;
}

// ---------------------------------------------------------------- expressions

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, Frame frame, const OperatorResolver& resolve)
      : s_(s), frame_(frame), resolve_(resolve) {}

  DiffOp parse() {
    DiffOp r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  DiffOp expr() {
    DiffOp r(frame_);
    bool first = true;
    while (true) {
      skip();
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      DiffOp t = term();
      r += negative ? -t : t;
      first = false;
    }
    return r;
  }

  DiffOp term() {
    DiffOp r = power_factor();
    while (true) {
      if (accept('*')) {
        r = compose(r, power_factor());
      } else if (accept('/')) {
        auto d = power_factor().as_scalar();
        if (!d || !d->is_constant() || d->is_zero()) fail("division by a non-constant or zero");
        r *= ParamPoly(Rational(1) / d->constant_term());
      } else {
        return r;
      }
    }
  }

  DiffOp power_factor() {
    skip();
    if (accept('-')) return -power_factor();
    DiffOp base = primary();
    if (accept('^')) base = power(base, static_cast<unsigned>(std::stoul(digits())));
    return base;
  }

  DiffOp primary() {
    skip();
    if (accept('(')) {
      DiffOp r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return DiffOp::scalar(frame_, ParamPoly(parse_rational(digits())));
    std::string id = ident();
    if (id == "pi") {
      if (!accept('(')) fail("expected '(' after pi");
      auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated pi(");
      std::string_view g = trim(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      auto gen = parse_generator(g);
      if (!gen) fail("unknown generator '" + std::string(g) + "'");
      if (!resolve_) fail("pi() reference without a resolver");
      DiffOp r = resolve_(*gen);
      require_same_frame(frame_, r.frame(), "pi() reference");
      return r;
    }
    if (id == "L1") return DiffOp::scalar(frame_, ParamPoly::variable(Param::L1));
    if (id == "L2") return DiffOp::scalar(frame_, ParamPoly::variable(Param::L2));
    if (id == "Lh") return DiffOp::scalar(frame_, ParamPoly::variable(Param::Lh));
    for (std::size_t i = 0; i < kVariableCount; ++i) {
      if (id == variable_name(frame_, i)) return DiffOp::variable(frame_, i);
      if (id.size() > 1 && id[0] == 'D' && id.substr(1) == variable_name(frame_, i))
        return DiffOp::derivative(frame_, i);
    }
    fail("unknown identifier '" + id + "' in frame " + std::string(frame_name(frame_)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an operand");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("operator expression: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }

  std::string_view s_;
  Frame frame_;
  const OperatorResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffOp parse_expression(std::string_view text, Frame frame, const OperatorResolver& resolve) {
  return ExprParser(text, frame, resolve).parse();
}

// ---------------------------------------------------------------- frames

namespace {

constexpr std::array<std::string_view, kVariableCount> kForward = {
    "x1 - w*x2/2", "x2", "y1 + w^2*y2/12 - w*z/4", "y2", "z - w*y2/2", "w",
};

constexpr std::array<std::string_view, kVariableCount> kInverse = {
    "xi1 + omega*xi2/2", "xi2", "eta1 + zeta*omega/4 + eta2*omega^2/24", "eta2", "zeta + eta2*omega/2", "omega",
};

constexpr std::array<std::string_view, kVariableCount> kChainRule = {
    "Dxi1",
    "Dxi2 - omega/2*Dxi1",
    "Deta1",
    "Deta2 + omega^2/12*Deta1 - omega/2*Dzeta",
    "Dzeta - omega/4*Deta1",
    "Domega - 1/4*(zeta - eta2*omega/6)*Deta1 - eta2/2*Dzeta - xi2/2*Dxi1",
};

PolyFunction as_polynomial(const DiffOp& op) {
  PolyFunction f(op.frame());
  for (const auto& [k, c] : op.terms()) {
    if (total(k.deriv) != 0) throw std::logic_error("coordinate map is not a polynomial");
    f.add_term(k.poly, c);
  }
  return f;
}

struct FrameMap {
  explicit FrameMap(Frame t) : target(t) {}
  Frame target;
  std::array<DiffOp, kVariableCount> var_image;
  std::array<DiffOp, kVariableCount> deriv_image;
};

DiffOp apply_frame_map(const DiffOp& a, const FrameMap& map) {
  std::array<std::vector<DiffOp>, kVariableCount> var_pow, deriv_pow;
  auto get = [&](std::vector<DiffOp>& cache, const DiffOp& base, unsigned e) -> const DiffOp& {
    if (cache.empty()) cache.push_back(DiffOp::scalar(map.target, ParamPoly(1L)));
    while (cache.size() <= e) cache.push_back(compose(cache.back(), base));
    return cache[e];
  };
  DiffOp result(map.target);
  for (const auto& [k, c] : a.terms()) {
    DiffOp t = DiffOp::scalar(map.target, c);
    for (std::size_t i = 0; i < kVariableCount; ++i)
      if (k.poly[i]) t = compose(t, get(var_pow[i], map.var_image[i], k.poly[i]));
    for (std::size_t i = 0; i < kVariableCount; ++i)
      if (k.deriv[i]) t = compose(t, get(deriv_pow[i], map.deriv_image[i], k.deriv[i]));
    result += t;
  }
  return result;
}

PolyFunction substitute_polynomial(const PolyFunction& f, Frame target,
                                   const std::array<PolyFunction, kVariableCount>& images) {
  PolyFunction r(target);
  for (const auto& [e, c] : f.terms()) {
    PolyFunction t = PolyFunction::constant(target, c);
    for (std::size_t i = 0; i < kVariableCount; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t = t * images[i];
    r += t;
  }
  return r;
}

const std::array<PolyFunction, kVariableCount>& forward_table() {
  static const auto table = [] {
    std::array<PolyFunction, kVariableCount> t;
    for (std::size_t i = 0; i < kVariableCount; ++i)
      t[i] = as_polynomial(parse_expression(kForward[i], Frame::original));
    return t;
  }();
  return table;
}

const std::array<PolyFunction, kVariableCount>& inverse_table() {
  static const auto table = [] {
    std::array<PolyFunction, kVariableCount> t;
    for (std::size_t i = 0; i < kVariableCount; ++i) t[i] = as_polynomial(parse_expression(kInverse[i], Frame::final));
    return t;
  }();
  return table;
}

const FrameMap& to_final_map() {
  static const FrameMap map = [] {
    FrameMap m{Frame::final};
    for (std::size_t i = 0; i < kVariableCount; ++i) {
      m.var_image[i] = DiffOp::multiplication(inverse_coordinate(i));
      m.deriv_image[i] = printed_chain_rule(i);
    }
    return m;
  }();
  return map;
}

const FrameMap& to_original_map() {
  static const FrameMap map = [] {
    FrameMap m{Frame::original};
    for (std::size_t i = 0; i < kVariableCount; ++i) {
      m.var_image[i] = DiffOp::multiplication(forward_coordinate(i));
      m.deriv_image[i] = derived_inverse_chain_rule(i);
    }
    return m;
  }();
  return map;
}

}  // namespace

PolyFunction forward_coordinate(std::size_t i) { return forward_table().at(i); }
PolyFunction inverse_coordinate(std::size_t i) { return inverse_table().at(i); }

PolyFunction polynomial_to_final(const PolyFunction& f) {
  require_same_frame(f.frame(), Frame::original, "polynomial_to_final");
  return substitute_polynomial(f, Frame::final, inverse_table());
}

PolyFunction polynomial_to_original(const PolyFunction& f) {
  require_same_frame(f.frame(), Frame::final, "polynomial_to_original");
  return substitute_polynomial(f, Frame::original, forward_table());
}

DiffOp printed_chain_rule(std::size_t i) { return parse_expression(kChainRule.at(i), Frame::final); }

DiffOp derived_chain_rule(std::size_t i) {
  // d/dx_i = sum_j (d xi_j / d x_i) d/d xi_j
  DiffOp r(Frame::final);
  for (std::size_t j = 0; j < kVariableCount; ++j) {
    PolyFunction coeff = polynomial_to_final(forward_coordinate(j).derivative(i));
    r += compose(DiffOp::multiplication(coeff), DiffOp::derivative(Frame::final, j));
  }
  return r;
}

DiffOp derived_inverse_chain_rule(std::size_t i) {
  DiffOp r(Frame::original);
  for (std::size_t j = 0; j < kVariableCount; ++j) {
    PolyFunction coeff = polynomial_to_original(inverse_coordinate(j).derivative(i));
    r += compose(DiffOp::multiplication(coeff), DiffOp::derivative(Frame::original, j));
  }
  return r;
}

DiffOp transform_to_final(const DiffOp& a) {
  require_same_frame(a.frame(), Frame::original, "transform_to_final");
  return apply_frame_map(a, to_final_map());
}

DiffOp transform_to_original(const DiffOp& a) {
  require_same_frame(a.frame(), Frame::final, "transform_to_original");
  return apply_frame_map(a, to_original_map());
}

}  // namespace jido
