#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jido::cli {

/// One line of the verification summary: `check-id status detail`.
struct SummaryLine {
  enum class Status { ok, fail, note };
  std::string id;
  Status status = Status::ok;
  std::string detail;

  std::string to_string() const;
};

struct RunConfig {
  std::string command;
  std::string family;
  unsigned p = 1;
  std::optional<unsigned> q;
  std::string frame;  // "original", "final" or "" for both (verify)
  std::string format = "plain";
  std::string suite = "all";
  unsigned max_p = 3;
  unsigned max_q = 3;
  std::string central = "fixed:1";
  std::uint64_t seed = 20240229;
  std::string output;
  std::string table;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::string lambda;
  std::string mu;
};

/// Runs the suites selected by `config` and returns their lines in a fixed
/// order independent of scheduling.
std::vector<SummaryLine> run_verify(const RunConfig& config);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jido::cli
