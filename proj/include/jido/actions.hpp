#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jido/generator.hpp"
#include "jido/uea.hpp"
#include "jido/weyl.hpp"

namespace jido {

enum class Side : std::uint8_t { left, right };
enum class Variant : std::uint8_t { primary, simplified };

std::string_view side_name(Side s);
std::string_view variant_name(Variant v);

/// Generator -> differential operator. Right tables cover G2+, left tables all
/// fifteen generators. A simplified table only lists the entries it replaces.
struct ActionTable {
  Side side = Side::left;
  Frame frame = Frame::original;
  Variant variant = Variant::primary;
  std::map<Generator, DiffOp> entries;

  bool has(Generator g) const { return entries.count(g) != 0; }
  const DiffOp& at(Generator g) const;
  std::string label() const;  // e.g. "left/final/primary"
};

class TableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Source text of a built-in table. Throws TableError for combinations
/// without a table (simplified exists for left/final only).
std::string_view table_source(Side side, Frame frame, Variant variant = Variant::primary);

/// Built-in tables, parsed once.
const ActionTable& action_table(Side side, Frame frame, Variant variant = Variant::primary);

/// Parses a table file. Each `[gen]` section holds either an operator
/// expression (may span lines) or machine-format term lines. `pi(gen)`
/// references resolve within the file, then in `fallback`. Validates that
/// the header matches the sections present.
ActionTable load_table(std::string_view text, const ActionTable* fallback = nullptr);
ActionTable load_table_file(const std::string& path, const ActionTable* fallback = nullptr);

/// Machine-format dump of a table, loadable by load_table.
std::string dump_table(const ActionTable& table);

/// Primary table with the entries of `overlay` substituted.
ActionTable merge_tables(const ActionTable& base, const ActionTable& overlay);

/// pi applied linearly to a combination of generators.
DiffOp pi_of(const ActionTable& table, const LinearCombination& combination);

enum class HatGenerator : std::uint8_t { b1, b2, c };
std::string_view hat_name(HatGenerator h);  // "b1hat+", ...

/// pi_R of b_k^ = b_k+ - (a_k+)^2/2 and c^ = c+ - a1+ a2+/2 from a right table.
DiffOp hat_right_action(HatGenerator h, const ActionTable& right);
DiffOp hat_right_action(HatGenerator h, Frame frame);

struct Residual {
  std::string id;  // "a2+,d+" or "b2-"
  DiffOp value;
};

struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Residual> failures;
  bool ok() const { return failures.empty(); }
};

/// [pi(X), pi(Y)] - pi([X, Y]) over all pairs of the table's domain.
CheckReport verify_homomorphism(const ActionTable& table);

/// [pi_L(X), pi_R(Y)] for every X in the left table and Y in the right one.
CheckReport verify_left_right_commute(const ActionTable& left, const ActionTable& right);

/// Weight-covariant form: [pi_L(X), pi_R(Y)] - pi_R(Y) * (lambda_X(Y)), where
/// lambda_X(Y) is the weight of Y paired with h_i for X = h_i, and zero for
/// X in G2+ or X = Z. Lowering X are reported only.
CheckReport verify_covariant_commute(const ActionTable& left, const ActionTable& right);

/// transform_to_final(original entry) == final entry, per generator.
CheckReport verify_frame_consistency(const ActionTable& original, const ActionTable& final_table);

struct SimplifiedReport {
  /// simplified - primary, per generator listed in the simplified table.
  std::vector<Residual> differences;
  CheckReport primary_homomorphism;
  CheckReport simplified_homomorphism;
  /// Variant whose full left/final table satisfies the relations, if any.
  std::optional<Variant> authoritative;
};

SimplifiedReport verify_simplified_forms();

/// Left table used downstream. For the final frame this is the variant that
/// passes verify_homomorphism, decided at first use.
const ActionTable& authoritative_left_table(Frame frame);

}  // namespace jido
