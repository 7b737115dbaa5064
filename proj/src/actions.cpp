#include "jido/actions.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace jido {

namespace {

struct EmbeddedTable {
  std::string_view stem;
  std::string_view text;
};

constexpr EmbeddedTable kEmbedded[] = {
#include "embedded_tables.inc"
};

std::string stem_of(Side side, Frame frame, Variant variant) {
  std::string s = std::string(side_name(side)) + "_" + std::string(frame_name(frame));
  if (side == Side::left && frame == Frame::final) s += "_" + std::string(variant_name(variant));
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Section {
  Generator gen;
  std::vector<std::string> lines;
  int line_no;
};

}  // namespace

std::string_view side_name(Side s) { return s == Side::left ? "left" : "right"; }
std::string_view variant_name(Variant v) { return v == Variant::primary ? "primary" : "simplified"; }

const DiffOp& ActionTable::at(Generator g) const {
  auto it = entries.find(g);
  if (it == entries.end()) throw TableError(label() + ": no entry for " + std::string(name(g)));
  return it->second;
}

std::string ActionTable::label() const {
  return std::string(side_name(side)) + "/" + std::string(frame_name(frame)) + "/" + std::string(variant_name(variant));
}

std::string_view table_source(Side side, Frame frame, Variant variant) {
  if (variant == Variant::simplified && !(side == Side::left && frame == Frame::final))
    throw TableError("no simplified table for " + std::string(side_name(side)) + "/" + std::string(frame_name(frame)));
  const std::string stem = stem_of(side, frame, variant);
  for (const auto& t : kEmbedded)
    if (t.stem == stem) return t.text;
  throw TableError("missing built-in table " + stem);
}

const ActionTable& action_table(Side side, Frame frame, Variant variant) {
  static const std::map<std::string, ActionTable> tables = [] {
    std::map<std::string, ActionTable> m;
    for (Frame f : {Frame::original, Frame::final})
      for (Side s : {Side::left, Side::right}) {
        std::string key = stem_of(s, f, Variant::primary);
        m.emplace(key, load_table(table_source(s, f)));
      }
    const ActionTable& primary = m.at(stem_of(Side::left, Frame::final, Variant::primary));
    m.emplace(stem_of(Side::left, Frame::final, Variant::simplified),
              load_table(table_source(Side::left, Frame::final, Variant::simplified), &primary));
    return m;
  }();
  table_source(side, frame, variant);  // validates the combination
  return tables.at(stem_of(side, frame, variant));
}

ActionTable load_table(std::string_view text, const ActionTable* fallback) {
  ActionTable table;
  std::optional<Side> side;
  std::optional<Frame> frame;
  std::optional<Variant> variant;
  std::vector<Section> sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> TableError {
    return TableError("table line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      auto g = parse_generator(trim(line.substr(1, line.size() - 2)));
      if (!g) throw fail("unknown generator '" + std::string(line) + "'");
      for (const auto& s : sections)
        if (s.gen == *g) throw fail("duplicate section " + std::string(name(*g)));
      sections.push_back({*g, {}, line_no});
      continue;
    }
    if (sections.empty()) {
      auto space = line.find(' ');
      std::string_view key = line.substr(0, space);
      std::string_view value = space == std::string_view::npos ? "" : trim(line.substr(space));
      if (key == "side") {
        if (value == "left") side = Side::left;
        else if (value == "right") side = Side::right;
        else throw fail("bad side '" + std::string(value) + "'");
      } else if (key == "frame") {
        frame = parse_frame(value);
        if (!frame) throw fail("bad frame '" + std::string(value) + "'");
      } else if (key == "variant") {
        if (value == "primary") variant = Variant::primary;
        else if (value == "simplified") variant = Variant::simplified;
        else throw fail("bad variant '" + std::string(value) + "'");
      } else {
        throw fail("unexpected header line '" + std::string(line) + "'");
      }
      continue;
    }
    sections.back().lines.emplace_back(line);
  }
  if (!side || !frame) throw TableError("table header must declare side and frame");
  table.side = *side;
  table.frame = *frame;
  table.variant = variant.value_or(Variant::primary);
  if (fallback && fallback->frame != table.frame) throw TableError("fallback table has a different frame");

  // Resolve entries on demand so pi() references may point forward.
  std::map<Generator, const Section*> by_gen;
  for (const auto& s : sections) by_gen[s.gen] = &s;
  std::set<Generator> in_progress;
  std::function<DiffOp(Generator)> resolve = [&](Generator g) -> DiffOp {
    if (auto it = table.entries.find(g); it != table.entries.end()) return it->second;
    auto sit = by_gen.find(g);
    if (sit == by_gen.end()) {
      if (fallback && fallback->has(g)) return fallback->at(g);
      throw TableError("unresolved reference pi(" + std::string(name(g)) + ")");
    }
    if (!in_progress.insert(g).second) throw TableError("cyclic reference through pi(" + std::string(name(g)) + ")");
    const Section& s = *sit->second;
    if (s.lines.empty())
      throw TableError("table line " + std::to_string(s.line_no) + ": empty section " + std::string(name(g)));
    DiffOp op(table.frame);
    try {
      if (s.lines.front().find('|') != std::string::npos) {
        std::string machine = "frame " + std::string(frame_name(table.frame)) + "\n";
        for (const auto& l : s.lines) machine += l + "\n";
        op = parse_machine(machine);
      } else {
        std::string expr;
        for (const auto& l : s.lines) expr += l + " ";
        op = parse_expression(expr, table.frame, resolve);
      }
    } catch (const TableError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw TableError("section " + std::string(name(g)) + " (line " + std::to_string(s.line_no) + "): " + e.what());
    }
    in_progress.erase(g);
    table.entries.emplace(g, op);
    return op;
  };
  for (const auto& s : sections) resolve(s.gen);

  if (table.variant == Variant::primary) {
    for (Generator g : kAllGenerators) {
      bool needed = table.side == Side::left || is_raising(g);
      if (needed && !table.has(g)) throw TableError(table.label() + ": missing entry for " + std::string(name(g)));
      if (!needed && table.has(g))
        throw TableError(table.label() + ": right tables cover G2+ only, found " + std::string(name(g)));
    }
  }
  return table;
}

ActionTable load_table_file(const std::string& path, const ActionTable* fallback) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_table(buf.str(), fallback);
}

std::string dump_table(const ActionTable& table) {
  std::string out = "side " + std::string(side_name(table.side)) + "\nframe " + std::string(frame_name(table.frame)) +
                    "\nvariant " + std::string(variant_name(table.variant)) + "\n";
  for (const auto& [g, op] : table.entries) {
    out += "\n[" + std::string(name(g)) + "]\n";
    std::string body = serialize(op, TextFormat::machine);
    body = body.substr(body.find('\n') + 1);  // drop the frame line
    if (op.is_zero()) body = "0 | 0,0,0,0,0,0 | 0,0,0,0,0,0\n";
    out += body;
  }
  return out;
}

ActionTable merge_tables(const ActionTable& base, const ActionTable& overlay) {
  if (base.side != overlay.side || base.frame != overlay.frame) throw TableError("merge_tables: incompatible tables");
  ActionTable r = base;
  r.variant = overlay.variant;
  for (const auto& [g, op] : overlay.entries) r.entries.insert_or_assign(g, op);
  return r;
}

DiffOp pi_of(const ActionTable& table, const LinearCombination& combination) {
  DiffOp r(table.frame);
  for (const auto& [g, c] : combination) r += ParamPoly(c) * table.at(g);
  return r;
}

std::string_view hat_name(HatGenerator h) {
  switch (h) {
    case HatGenerator::b1: return "b1hat+";
    case HatGenerator::b2: return "b2hat+";
    case HatGenerator::c: return "chat+";
  }
  return "?";
}

DiffOp hat_right_action(HatGenerator h, const ActionTable& right) {
  if (right.side != Side::right) throw TableError("hat_right_action needs a right table");
  const ParamPoly half(Rational(1, 2));
  switch (h) {
    case HatGenerator::b1:
      return right.at(Generator::b1p) - half * power(right.at(Generator::a1p), 2);
    case HatGenerator::b2:
      return right.at(Generator::b2p) - half * power(right.at(Generator::a2p), 2);
    case HatGenerator::c:
      return right.at(Generator::cp) - half * compose(right.at(Generator::a1p), right.at(Generator::a2p));
  }
  throw TableError("unknown hat generator");
}

DiffOp hat_right_action(HatGenerator h, Frame frame) { return hat_right_action(h, action_table(Side::right, frame)); }

namespace {

std::string pair_id(Generator x, Generator y) { return std::string(name(x)) + "," + std::string(name(y)); }

std::vector<Generator> domain(const ActionTable& t) {
  std::vector<Generator> gens;
  for (Generator g : kAllGenerators)
    if (t.has(g)) gens.push_back(g);
  return gens;
}

}  // namespace

CheckReport verify_homomorphism(const ActionTable& table) {
  CheckReport report{"homomorphism " + table.label(), 0, {}};
  const auto gens = domain(table);
  const auto& structure = StructureTable::instance();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Generator x = gens[i], y = gens[j];
      DiffOp r = commutator(table.at(x), table.at(y)) - pi_of(table, structure.bracket(x, y));
      ++report.checked;
      if (!r.is_zero()) report.failures.push_back({pair_id(x, y), std::move(r)});
    }
  return report;
}

CheckReport verify_left_right_commute(const ActionTable& left, const ActionTable& right) {
  if (left.frame != right.frame) throw FrameMismatch("verify_left_right_commute: tables in different frames");
  CheckReport report{"left-right commute " + std::string(frame_name(left.frame)), 0, {}};
  for (Generator x : domain(left))
    for (Generator y : domain(right)) {
      DiffOp r = commutator(left.at(x), right.at(y));
      ++report.checked;
      if (!r.is_zero()) report.failures.push_back({pair_id(x, y), std::move(r)});
    }
  return report;
}

CheckReport verify_covariant_commute(const ActionTable& left, const ActionTable& right) {
  if (left.frame != right.frame) throw FrameMismatch("verify_covariant_commute: tables in different frames");
  CheckReport report{"covariant commute " + std::string(frame_name(left.frame)), 0, {}};
  for (Generator x : domain(left)) {
    if (is_lowering(x)) continue;
    for (Generator y : domain(right)) {
      DiffOp r = commutator(left.at(x), right.at(y));
      if (x == Generator::h1) r -= ParamPoly(weight(y).h1) * right.at(y);
      if (x == Generator::h2) r -= ParamPoly(weight(y).h2) * right.at(y);
      ++report.checked;
      if (!r.is_zero()) report.failures.push_back({pair_id(x, y), std::move(r)});
    }
  }
  return report;
}

CheckReport verify_frame_consistency(const ActionTable& original, const ActionTable& final_table) {
  if (original.frame != Frame::original || final_table.frame != Frame::final || original.side != final_table.side)
    throw TableError("verify_frame_consistency: expects matching original and final tables");
  CheckReport report{"frames " + std::string(side_name(original.side)), 0, {}};
  for (Generator g : domain(original)) {
    DiffOp r = transform_to_final(original.at(g)) - final_table.at(g);
    ++report.checked;
    if (!r.is_zero()) report.failures.push_back({std::string(name(g)), std::move(r)});
  }
  return report;
}

SimplifiedReport verify_simplified_forms() {
  const ActionTable& primary = action_table(Side::left, Frame::final, Variant::primary);
  const ActionTable& simplified = action_table(Side::left, Frame::final, Variant::simplified);
  SimplifiedReport report;
  for (const auto& [g, op] : simplified.entries)
    report.differences.push_back({std::string(name(g)), op - primary.at(g)});
  report.primary_homomorphism = verify_homomorphism(primary);
  report.simplified_homomorphism = verify_homomorphism(merge_tables(primary, simplified));
  if (report.simplified_homomorphism.ok())
    report.authoritative = Variant::simplified;
  else if (report.primary_homomorphism.ok())
    report.authoritative = Variant::primary;
  return report;
}

const ActionTable& authoritative_left_table(Frame frame) {
  if (frame == Frame::original) return action_table(Side::left, Frame::original);
  static const ActionTable table = [] {
    const ActionTable& primary = action_table(Side::left, Frame::final, Variant::primary);
    if (verify_homomorphism(primary).ok()) return primary;
    ActionTable merged = merge_tables(primary, action_table(Side::left, Frame::final, Variant::simplified));
    if (verify_homomorphism(merged).ok()) return merged;
    throw TableError("neither left/final variant satisfies the commutation relations");
  }();
  return table;
}

}  // namespace jido
