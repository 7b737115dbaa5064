#include "jido/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "jido/actions.hpp"
#include "jido/intertwine.hpp"
#include "jido/sampling.hpp"
#include "jido/singvec.hpp"
#include "jido/uea.hpp"
#include "jido/verma.hpp"

namespace jido::cli {

std::string SummaryLine::to_string() const {
  static constexpr const char* names[] = {"OK", "FAIL", "NOTE"};
  std::string s = id + " " + names[static_cast<int>(status)];
  if (!detail.empty()) s += " " + detail;
  return s;
}

namespace {

using Status = SummaryLine::Status;
using Lines = std::vector<SummaryLine>;
using Task = std::function<Lines()>;

struct NamedTask {
  std::string id;
  Task run;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string counted(std::size_t ok, std::size_t total, std::string_view what) {
  return std::to_string(ok) + "/" + std::to_string(total) + " " + std::string(what) + " OK";
}

std::string failing_list(const std::vector<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) s += " [" + id + "]";
  return "; failing" + s;
}

SummaryLine structure_line(const std::string& id, const StructureCheck& c, std::string_view what) {
  SummaryLine l{id, c.ok() ? Status::ok : Status::fail, counted(c.checked - c.failures.size(), c.checked, what)};
  if (!c.ok()) l.detail += failing_list(c.failures);
  return l;
}

SummaryLine report_line(const std::string& id, const CheckReport& r, std::string_view what, Status on_failure) {
  SummaryLine l{id, r.ok() ? Status::ok : on_failure, counted(r.checked - r.failures.size(), r.checked, what)};
  if (!r.ok()) {
    std::vector<std::string> ids;
    for (const auto& f : r.failures) ids.push_back(f.id);
    l.detail += failing_list(ids);
  }
  return l;
}

std::vector<Frame> frames_of(const RunConfig& c) {
  if (c.frame.empty() || c.frame == "both") return {Frame::original, Frame::final};
  auto f = parse_frame(c.frame);
  if (!f) throw UsageError("unknown frame '" + c.frame + "'");
  return {*f};
}

std::string spec_id(const SingularVectorSpec& s) {
  std::string id = std::string(family_name(s.family)) + ".p" + std::to_string(s.p);
  if (kind_of(s.family) == FamilyKind::III) id += ".q" + std::to_string(s.q);
  return id;
}

// Valid specs of the grid, family III enumerating admissible (p, q) only.
std::vector<SingularVectorSpec> grid(unsigned max_p, unsigned max_q) {
  std::vector<SingularVectorSpec> out;
  for (FamilyKind k : {FamilyKind::I, FamilyKind::II, FamilyKind::III, FamilyKind::IV, FamilyKind::V})
    for (unsigned p = 1; p <= max_p; ++p) {
      if (k != FamilyKind::III) {
        out.push_back(validate_spec(k, p));
        continue;
      }
      for (unsigned q = 1; q <= max_q; ++q) {
        try {
          out.push_back(validate_spec(k, p, q));
        } catch (const SpecError&) {
        }
      }
    }
  return out;
}

// Side and frame declared by a table file, when both are present.
std::optional<std::pair<Side, Frame>> table_header(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Side> side;
  std::optional<Frame> frame;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string key, value;
    words >> key >> value;
    if (key == "side") side = value == "right" ? Side::right : Side::left;
    if (key == "frame") frame = parse_frame(value);
    if (!key.empty() && key[0] == '[') break;
  }
  if (!side || !frame) return std::nullopt;
  return std::pair{*side, *frame};
}

// ------------------------------------------------------------------ suites

void relations_suite(const RunConfig& c, std::vector<NamedTask>& tasks) {
  if (!c.table.empty()) {
    // A user table replaces the built-in ones; references fall back to the
    // built-in primary table of the same side and frame.
    tasks.push_back({"relations.file", [path = c.table] {
                       std::ifstream in(path);
                       if (!in) throw TableError("cannot read " + path);
                       std::stringstream ss;
                       ss << in.rdbuf();
                       const std::string text = ss.str();
                       const ActionTable* fallback = nullptr;
                       if (auto hdr = table_header(text)) fallback = &action_table(hdr->first, hdr->second);
                       ActionTable t = load_table(text, fallback);
                       if (t.variant == Variant::simplified) t = merge_tables(action_table(t.side, t.frame), t);
                       return Lines{report_line("relations." + t.label(), verify_homomorphism(t), "pairs", Status::fail)};
                     }});
    return;
  }
  tasks.push_back({"structure", [] {
                     return Lines{structure_line("structure.antisymmetry", check_antisymmetry(), "pairs"),
                                  structure_line("structure.jacobi", check_jacobi(), "triples"),
                                  structure_line("structure.center", check_center(), "generators"),
                                  structure_line("structure.raising", check_raising_relations(), "pairs")};
                   }});
  for (Frame f : frames_of(c)) {
    const std::string fn(frame_name(f));
    tasks.push_back({"relations.left." + fn, [f, fn] {
                       Lines out;
                       out.push_back(report_line("relations.left." + fn, verify_homomorphism(authoritative_left_table(f)),
                                                 "pairs", Status::fail));
                       if (f == Frame::final) {
                         const ActionTable& primary = action_table(Side::left, f, Variant::primary);
                         if (&primary != &authoritative_left_table(f))
                           out.push_back(report_line("relations.left.final.primary", verify_homomorphism(primary),
                                                     "pairs", Status::note));
                       }
                       return out;
                     }});
    tasks.push_back({"relations.right." + fn, [f, fn] {
                       return Lines{report_line("relations.right." + fn, verify_homomorphism(action_table(Side::right, f)),
                                                "pairs", Status::fail)};
                     }});
  }
}

void lr_commute_suite(const RunConfig& c, std::vector<NamedTask>& tasks) {
  for (Frame f : frames_of(c)) {
    const std::string fn(frame_name(f));
    tasks.push_back({"lr-commute." + fn, [f, fn] {
                       const ActionTable& left = authoritative_left_table(f);
                       const ActionTable& right = action_table(Side::right, f);
                       return Lines{
                           report_line("lr-commute." + fn, verify_left_right_commute(left, right), "pairs", Status::fail),
                           report_line("lr-commute.covariant." + fn, verify_covariant_commute(left, right), "pairs",
                                       Status::fail)};
                     }});
  }
}

void frames_suite(const RunConfig& c, std::vector<NamedTask>& tasks) {
  tasks.push_back({"frames.chain-rule", [] {
                     StructureCheck r;
                     for (std::size_t i = 0; i < kVariableCount; ++i) {
                       ++r.checked;
                       if (printed_chain_rule(i) != derived_chain_rule(i))
                         r.failures.emplace_back(variable_name(Frame::original, i));
                     }
                     return Lines{structure_line("frames.chain-rule", r, "variables")};
                   }});
  tasks.push_back({"frames.right", [] {
                     return Lines{report_line("frames.right",
                                              verify_frame_consistency(action_table(Side::right, Frame::original),
                                                                       action_table(Side::right, Frame::final)),
                                              "generators", Status::fail)};
                   }});
  tasks.push_back({"frames.left", [] {
                     const ActionTable& original = action_table(Side::left, Frame::original);
                     Lines out{report_line("frames.left",
                                           verify_frame_consistency(original, authoritative_left_table(Frame::final)),
                                           "generators", Status::fail)};
                     const ActionTable& primary = action_table(Side::left, Frame::final, Variant::primary);
                     if (&primary != &authoritative_left_table(Frame::final))
                       out.push_back(report_line("frames.left.primary", verify_frame_consistency(original, primary),
                                                 "generators", Status::note));
                     return out;
                   }});
  tasks.push_back({"frames.round-trip", [seed = c.seed] {
                     Rng rng(derive_seed(seed, "frames.round-trip"));
                     StructureCheck r;
                     for (unsigned i = 0; i < 20; ++i) {
                       ++r.checked;
                       const Frame f = i % 2 ? Frame::final : Frame::original;
                       DiffOp a = random_diffop(rng, f, 4, 3);
                       DiffOp back = f == Frame::original ? transform_to_original(transform_to_final(a))
                                                          : transform_to_final(transform_to_original(a));
                       if (back != a) r.failures.push_back("sample " + std::to_string(i));
                     }
                     return Lines{structure_line("frames.round-trip", r, "random operators")};
                   }});
}

void simplified_suite(const RunConfig&, std::vector<NamedTask>& tasks) {
  tasks.push_back({"simplified", [] {
                     SimplifiedReport r = verify_simplified_forms();
                     Lines out;
                     for (const auto& d : r.differences)
                       out.push_back({"simplified." + d.id, d.value.is_zero() ? Status::ok : Status::note,
                                      d.value.is_zero() ? "agrees with primary"
                                                        : "simplified - primary = " + d.value.to_string()});
                     out.push_back(report_line("simplified.primary-relations", r.primary_homomorphism, "pairs",
                                               Status::note));
                     out.push_back(report_line("simplified.simplified-relations", r.simplified_homomorphism, "pairs",
                                               Status::note));
                     if (r.authoritative)
                       out.push_back({"simplified.authoritative", Status::ok,
                                      std::string(variant_name(*r.authoritative)) + " variant satisfies the relations"});
                     else
                       out.push_back({"simplified.authoritative", Status::fail, "no variant satisfies the relations"});
                     return out;
                   }});
}

std::string generator_list(const std::vector<Generator>& gs) {
  std::string s;
  for (Generator g : gs) s += (s.empty() ? "" : ",") + std::string(name(g));
  return s;
}

void singular_suite(const RunConfig& c, std::vector<NamedTask>& tasks) {
  for (const SingularVectorSpec& spec : grid(c.max_p, c.max_q)) {
    const std::string id = spec_id(spec);
    tasks.push_back({"singular.symbolic." + id, [spec, id] {
                       auto failing = symbolic_singularity_failures(spec);
                       if (failing.empty()) return Lines{{"singular.symbolic." + id, Status::ok, "annihilated by 6/6 lowering generators"}};
                       return Lines{{"singular.symbolic." + id, Status::fail, "not annihilated by " + generator_list(failing)}};
                     }});
    tasks.push_back({"singular.oracle." + id, [spec, id, seed = c.seed] {
                       OracleReport r = oracle_check(spec, seed);
                       return Lines{{"singular.oracle." + id, r.ok() ? Status::ok : Status::fail, r.summary()}};
                     }});
  }
}

void intertwine_suite(const RunConfig& c, std::vector<NamedTask>& tasks) {
  auto mode = parse_central_mode(c.central);
  if (!mode) throw UsageError("invalid --central '" + c.central + "' (expected fixed:<rational> or symbolic)");
  for (const SingularVectorSpec& spec : grid(c.max_p, c.max_q))
    for (Frame f : frames_of(c)) {
      const std::string id = "intertwine." + std::string(frame_name(f)) + "." + spec_id(spec);
      tasks.push_back({id, [spec, f, id, central = *mode] {
                         IntertwinerReport r = verify_intertwining(spec, f, central);
                         const std::size_t ok = r.residuals.size() - r.failing().size();
                         std::string detail = counted(ok, r.residuals.size(), "generators");
                         if (r.pass) return Lines{{id, Status::ok, detail + " (" + central.to_string() + ")"}};
                         detail += "; nonzero for " + generator_list(r.failing());
                         if (!central.symbolic) return Lines{{id, Status::fail, detail}};
                         // Symbolic Lh: report where the residuals vanish.
                         CentralSolution sol = solve_central_charge(spec, f);
                         detail += "; vanishes on " + sol.to_string();
                         return Lines{{id, sol.kind == CentralSolution::Kind::empty ? Status::fail : Status::note, detail}};
                       }});
    }
}

// -------------------------------------------------------------- scheduling

unsigned worker_count(unsigned requested, std::size_t tasks) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

std::vector<Lines> run_pool(const std::vector<NamedTask>& tasks, unsigned jobs) {
  std::vector<Lines> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        results[i] = {{tasks[i].id, Status::fail, std::string("error: ") + e.what()}};
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < worker_count(jobs, tasks.size()); ++i) pool.emplace_back(work);
  work();
  return results;
}

}  // namespace

std::vector<SummaryLine> run_verify(const RunConfig& c) {
  static const std::vector<std::pair<std::string, void (*)(const RunConfig&, std::vector<NamedTask>&)>> suites{
      {"relations", relations_suite}, {"lr-commute", lr_commute_suite}, {"frames", frames_suite},
      {"simplified", simplified_suite}, {"singular", singular_suite}, {"intertwine", intertwine_suite}};
  if (c.max_p < 1 || c.max_q < 1) throw UsageError("grid bounds must be at least 1");
  std::vector<NamedTask> tasks;
  bool known = c.suite == "all";
  for (const auto& [name, add] : suites)
    if (c.suite == "all" || c.suite == name) {
      add(c, tasks);
      known = true;
    }
  if (!known) throw UsageError("unknown suite '" + c.suite + "'");
  if (!c.table.empty() && c.suite != "relations") throw UsageError("--table applies to --suite relations only");
  // Parse the built-in tables before the workers start.
  if (c.table.empty()) (void)authoritative_left_table(Frame::final);
  Lines out;
  for (auto& lines : run_pool(tasks, c.jobs)) out.insert(out.end(), lines.begin(), lines.end());
  return out;
}

namespace {

// "a,b" -> two rationals
std::pair<Rational, Rational> parse_pair(const std::string& text, const std::string& what) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw UsageError("malformed " + what + " '" + text + "' (expected a,b)");
  try {
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed " + what + " '" + text + "' (expected two rationals)");
  }
}

SingularVectorSpec spec_of(const RunConfig& c) {
  auto kind = parse_family_kind(c.family);
  if (!kind) throw SpecError("unknown family '" + c.family + "'");
  return validate_spec(*kind, c.p, c.q);
}

TextFormat parse_format(const std::string& s) {
  if (s == "plain") return TextFormat::plain;
  if (s == "latex") return TextFormat::latex;
  if (s == "machine") return TextFormat::machine;
  throw UsageError("unknown format '" + s + "'");
}

int cmd_emit(const RunConfig& c, std::ostream& out) {
  const SingularVectorSpec spec = spec_of(c);
  const Frame f = frames_of(c).front();
  const TextFormat fmt = parse_format(c.format);
  std::string text = serialize(build_operator(spec, f), fmt);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  Lines lines = run_verify(c);
  std::size_t failed = 0, notes = 0;
  std::string text;
  for (const auto& l : lines) {
    failed += l.status == Status::fail;
    notes += l.status == Status::note;
    text += l.to_string() + "\n";
  }
  text += SummaryLine{"total", failed ? Status::fail : Status::ok,
                      std::to_string(lines.size()) + " checks, " + std::to_string(failed) + " failed, " +
                          std::to_string(notes) + " notes"}
              .to_string() +
          "\n";
  out << text;
  std::string path = c.output;
  if (path.empty())
    if (const char* dir = std::getenv("JIDO_OUTPUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / "verify-summary.txt").string();
  if (!path.empty()) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
  }
  return failed ? 1 : 0;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  if (!c.family.empty()) {
    const SingularVectorSpec spec = spec_of(c);
    OracleReport r = oracle_check(spec, c.seed);
    for (const auto& s : r.samples)
      out << "lambda " << to_string(s.lambda1) << "," << to_string(s.lambda2) << ": dimension " << s.dimension
          << (s.contains_closed_form ? "; contains closed form" : "; closed form missing") << "\n";
    std::set<std::size_t> dims;
    for (const auto& s : r.samples) dims.insert(s.dimension);
    out << "dimension ";
    for (auto it = dims.begin(); it != dims.end(); ++it) out << (it == dims.begin() ? "" : "/") << *it;
    const bool matches = std::all_of(r.samples.begin(), r.samples.end(), [](const auto& s) { return s.contains_closed_form; });
    out << (matches ? "; matches closed form" : "; does not match closed form") << "\n";
    return r.ok() ? 0 : 1;
  }
  if (c.lambda.empty() || c.mu.empty()) throw UsageError("search needs --lambda and --mu, or --family");
  auto [l1, l2] = parse_pair(c.lambda, "--lambda");
  auto [m1, m2] = parse_pair(c.mu, "--mu");
  Rational central = 1;
  if (auto mode = parse_central_mode(c.central); mode && !mode->symbolic) central = mode->value;
  auto basis = brute_force_singular(l1, l2, WeightVector{m1, m2}, central);
  out << "dimension " << basis.size() << "\n";
  for (const auto& v : basis) out << v.to_string() << "\n";
  return 0;
}

int cmd_table(const RunConfig& c, const std::string& side, const std::string& variant, std::ostream& out) {
  Side s;
  if (side == "left") s = Side::left;
  else if (side == "right") s = Side::right;
  else throw UsageError("unknown side '" + side + "'");
  Variant v;
  if (variant == "primary") v = Variant::primary;
  else if (variant == "simplified") v = Variant::simplified;
  else if (variant == "authoritative") {
    if (s != Side::left) throw UsageError("authoritative applies to left tables");
    out << dump_table(authoritative_left_table(frames_of(c).front()));
    return 0;
  } else throw UsageError("unknown variant '" + variant + "'");
  const Frame f = frames_of(c).front();
  if (c.format == "machine") {
    out << dump_table(action_table(s, f, v));
    return 0;
  }
  const ActionTable& t = action_table(s, f, v);
  const TextFormat fmt = parse_format(c.format);
  for (const auto& [g, op] : t.entries) out << "[" << name(g) << "] " << op.to_string(fmt) << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string side = "left", variant = "primary";
  CLI::App app{"Exact verification of intertwining operators for the Jacobi algebra G2", "jido"};
  app.require_subcommand(1);

  auto add_spec = [&c](CLI::App* s) {
    s->add_option("--family", c.family, "i, ii, iii, iv or v");
    s->add_option("--p", c.p, "positive integer");
    s->add_option("--q", c.q, "positive integer (family iii)");
  };
  auto frames = CLI::IsMember({"original", "final", "both"});

  auto* emit = app.add_subcommand("emit", "print the intertwining operator of a family");
  add_spec(emit);
  emit->get_option("--family")->required();
  emit->add_option("--frame", c.frame, "coordinate frame")->check(CLI::IsMember({"original", "final"}));
  emit->add_option("--format", c.format, "plain, latex or machine")->check(CLI::IsMember({"plain", "latex", "machine"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", c.suite, "relations, lr-commute, frames, simplified, singular, intertwine or all")
      ->check(CLI::IsMember({"relations", "lr-commute", "frames", "simplified", "singular", "intertwine", "all"}));
  verify->add_option("--frame", c.frame, "original, final or both")->check(frames);
  verify->add_option("--max-p", c.max_p, "grid bound for p")->check(CLI::PositiveNumber);
  verify->add_option("--max-q", c.max_q, "grid bound for q")->check(CLI::PositiveNumber);
  verify->add_option("--central", c.central, "fixed:<rational> or symbolic");
  verify->add_option("--seed", c.seed, "seed for oracle sampling");
  verify->add_option("--output", c.output, "summary file (default $JIDO_OUTPUT_DIR/verify-summary.txt)");
  verify->add_option("--table", c.table, "check this table file instead of the built-in ones");
  verify->add_option("--jobs", c.jobs, "worker threads (0: all cores)");

  auto* search = app.add_subcommand("search", "brute-force singular vector search");
  add_spec(search);
  search->add_option("--lambda", c.lambda, "lowest weight L1,L2");
  search->add_option("--mu", c.mu, "weight shift m1,m2");
  search->add_option("--central", c.central, "fixed:<rational>");
  search->add_option("--seed", c.seed, "seed for sampling free weight components");

  auto* table = app.add_subcommand("table", "print a built-in action table");
  table->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  table->add_option("--frame", c.frame, "coordinate frame")->check(CLI::IsMember({"original", "final"}));
  table->add_option("--variant", variant, "primary, simplified or authoritative");
  table->add_option("--format", c.format, "plain, latex or machine")->check(CLI::IsMember({"plain", "latex", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (emit->parsed()) {
      if (c.frame.empty()) c.frame = "final";
      return cmd_emit(c, out);
    }
    if (verify->parsed()) return cmd_verify(c, out);
    if (search->parsed()) return cmd_search(c, out);
    if (table->parsed()) {
      if (c.frame.empty()) c.frame = "final";
      return cmd_table(c, side, variant, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace jido::cli
