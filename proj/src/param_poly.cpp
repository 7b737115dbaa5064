#include "jido/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jido {

std::string_view param_name(Param p) {
  switch (p) {
    case Param::L1: return "L1";
    case Param::L2: return "L2";
    case Param::Lh: return "Lh";
  }
  return "?";
}

std::string_view param_latex(Param p) {
  switch (p) {
    case Param::L1: return "\\Lambda_1";
    case Param::L2: return "\\Lambda_2";
    case Param::Lh: return "\\hat{\\Lambda}";
  }
  return "?";
}

namespace {

unsigned total_degree(const ParamExponents& e) { return unsigned(e[0]) + e[1] + e[2]; }

}  // namespace

// Graded, then lexicographic with L1 < L2 < Lh.
bool ParamPoly::less(const ParamExponents& a, const ParamExponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (int i = 2; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

ParamPoly::ParamPoly(const Rational& constant) {
  if (constant != 0) {
    terms_.emplace_back(ParamExponents{0, 0, 0}, constant);
    terms_.back().second.canonicalize();
  }
}

ParamPoly::ParamPoly(long constant) : ParamPoly(Rational(constant)) {}

ParamPoly ParamPoly::variable(Param p) {
  ParamExponents e{0, 0, 0};
  e[static_cast<int>(p)] = 1;
  return monomial(e, 1);
}

ParamPoly ParamPoly::monomial(const ParamExponents& exps, const Rational& coeff) {
  ParamPoly r;
  if (coeff != 0) {
    r.terms_.emplace_back(exps, coeff);
    r.terms_.back().second.canonicalize();
  }
  return r;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
}

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && total_degree(terms_[0].first) == 0) return terms_[0].second;
  return 0;
}

unsigned ParamPoly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.back().first); }

bool ParamPoly::depends_on(Param p) const {
  int i = static_cast<int>(p);
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.first[i] != 0; });
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  if (&other == this) return *this *= ParamPoly(2L);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && less(a->first, b->first))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || less(b->first, a->first)) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) { return *this += -other; }

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ParamPoly& ParamPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= scalar;
  }
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  ParamPoly r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.terms_.emplace_back(ParamExponents{std::uint16_t(ea[0] + eb[0]), std::uint16_t(ea[1] + eb[1]),
                                           std::uint16_t(ea[2] + eb[2])},
                            ca * cb);
  r.canonicalize();
  return r;
}

void ParamPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return less(x.first, y.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

ParamPoly ParamPoly::pow(unsigned n) const {
  ParamPoly result(1L), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

void check_acyclic(const Bindings& bindings) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<Param, int> state;
  std::function<void(Param)> visit = [&](Param p) {
    auto it = bindings.find(p);
    if (it == bindings.end()) return;
    int& s = state[p];
    if (s == 2) return;
    if (s == 1)
      throw std::invalid_argument("cyclic parameter binding involving " + std::string(param_name(p)));
    s = 1;
    for (Param q : kAllParams)
      if (it->second.depends_on(q)) visit(q);
    state[p] = 2;
  };
  for (const auto& [p, image] : bindings) visit(p);
}

ParamPoly ParamPoly::substitute(const Bindings& bindings) const {
  if (bindings.empty() || terms_.empty()) return *this;
  check_acyclic(bindings);
  return substitute_impl(bindings);
}

ParamPoly ParamPoly::translate(const std::map<Param, Rational>& offsets) const {
  Bindings b;
  for (const auto& [p, v] : offsets)
    if (v != 0) b[p] = variable(p) + ParamPoly(v);
  if (b.empty() || terms_.empty()) return *this;
  return substitute_impl(b);
}

ParamPoly ParamPoly::substitute_impl(const Bindings& bindings) const {
  std::array<std::vector<ParamPoly>, 3> powers;  // cached powers of bound images
  auto power_of = [&](int i, unsigned e) -> const ParamPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(1L);
    const ParamPoly& image = bindings.at(static_cast<Param>(i));
    while (cache.size() <= e) cache.push_back(cache.back() * image);
    return cache[e];
  };
  ParamPoly result;
  for (const auto& [exps, coeff] : terms_) {
    ParamExponents kept{0, 0, 0};
    ParamPoly term(1L);
    for (int i = 0; i < 3; ++i) {
      if (exps[i] == 0) continue;
      if (bindings.count(static_cast<Param>(i)))
        term *= power_of(i, exps[i]);
      else
        kept[i] = exps[i];
    }
    result += term * monomial(kept, coeff);
  }
  return result;
}

Rational ParamPoly::evaluate(const std::map<Param, Rational>& values) const {
  Rational sum = 0;
  for (const auto& [exps, coeff] : terms_) {
    Rational t = coeff;
    for (int i = 0; i < 3; ++i) {
      if (exps[i] == 0) continue;
      auto it = values.find(static_cast<Param>(i));
      if (it == values.end())
        throw std::invalid_argument("evaluate: unbound parameter " +
                                    std::string(param_name(static_cast<Param>(i))));
      Rational p = 1;
      for (unsigned k = 0; k < exps[i]; ++k) p *= it->second;
      t *= p;
    }
    sum += t;
  }
  return sum;
}

namespace {

std::string render_monomial(const ParamExponents& exps, TextFormat format) {
  std::string out;
  for (Param p : kAllParams) {
    unsigned e = exps[static_cast<int>(p)];
    if (e == 0) continue;
    if (format == TextFormat::latex) {
      out += param_latex(p);
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    } else {
      if (!out.empty()) out += "*";
      out += param_name(p);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

}  // namespace

std::string ParamPoly::to_string(TextFormat format) const {
  if (terms_.empty()) return "0";
  // Highest degree first; within a degree, storage order.
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const Term* a, const Term* b) { return total_degree(a->first) > total_degree(b->first); });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(t->first, format);
    if (mono.empty()) {
      out += format == TextFormat::latex ? latex_rational(c) : jido::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else if (format == TextFormat::latex) {
      out += latex_rational(c) + mono;
    } else {
      out += jido::to_string(c) + "*" + mono;
    }
  }
  return out;
}

ParamPoly gamma_ratio_falling(const ParamPoly& x, unsigned m) {
  ParamPoly r(1L);
  for (unsigned j = 1; j <= m; ++j) r *= x - ParamPoly(long(j));
  return r;
}

ParamPoly gamma_ratio_rising(const ParamPoly& y, unsigned m) {
  ParamPoly r(1L);
  for (unsigned j = 0; j < m; ++j) r *= y + ParamPoly(long(j));
  return r;
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
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
    if (start == pos_) fail("expected a parameter name");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_param_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

ParamPoly parse_factor(PolyLexer& lex) {
  if (lex.peek_digit()) {
    std::string num = lex.digits();
    if (lex.accept('/')) num += "/" + lex.digits();
    return ParamPoly(parse_rational(num));
  }
  std::string id = lex.ident();
  ParamPoly base;
  if (id == "L1") {
    base = ParamPoly::variable(Param::L1);
  } else if (id == "L2") {
    base = ParamPoly::variable(Param::L2);
  } else if (id == "Lh") {
    base = ParamPoly::variable(Param::Lh);
  } else {
    lex.fail("unknown parameter '" + id + "'");
  }
  if (lex.accept('^')) base = base.pow(std::stoul(lex.digits()));
  return base;
}

}  // namespace

ParamPoly parse_param_poly(std::string_view text) {
  PolyLexer lex(text);
  ParamPoly result;
  bool first = true;
  while (!lex.done()) {
    Rational sign = 1;
    if (lex.accept('-')) {
      sign = -1;
    } else if (!lex.accept('+') && !first) {
      lex.fail("expected '+' or '-'");
    }
    ParamPoly term = parse_factor(lex);
    while (lex.accept('*')) term *= parse_factor(lex);
    result += term * sign;
    first = false;
  }
  if (first) lex.fail("empty polynomial");
  return result;
}

}  // namespace jido
