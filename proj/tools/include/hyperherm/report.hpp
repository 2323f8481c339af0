#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperherm/hypercomplex_space.hpp"
#include "hyperherm/scalar.hpp"

namespace hyperherm::report {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitInternal = 3;

/// Malformed command-line input (bad parameter list, wrong matrix shape).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Symbolic, Numeric };
enum class Format { Json, Text };

struct AnalysisRequest {
  std::optional<ParameterPoint> lambda;  ///< required in numeric mode
  Mode mode = Mode::Symbolic;
  Format format = Format::Json;
};

/// Parses "l1,l2,l3,l4" where each entry is an integer or p/q.
ParameterPoint parse_lambda(std::string_view text);

/// Runs the full family pipeline and assembles the report document.
Json analyze(const AnalysisRequest& request);

/// Byte-deterministic serialization (2-space indent, trailing newline).
std::string to_json_string(const Json& doc);

std::string render_analysis_text(const Json& report);

// ---------------------------------------------------------------------------
// verify

enum class Status { Pass, Flag, Fail };

std::string to_string(Status s);

struct VerifyItem {
  std::string suite;
  std::string name;
  Status status = Status::Pass;
  std::string detail;

  [[nodiscard]] std::string key() const { return suite + "/" + name; }
};

struct VerifyOptions {
  bool strict = false;
  std::set<std::string> skip;            ///< suite names
  std::set<std::string> expected_flags;  ///< "suite/name" keys
};

struct VerifySummary {
  std::vector<VerifyItem> items;
  std::size_t passed = 0;
  std::size_t flagged = 0;
  std::size_t failed = 0;
  std::vector<std::string> unexpected_flags;
  int exit_code = kExitOk;
};

const std::vector<std::string>& verify_suites();

/// Baseline format: one "suite/name" per line; '#' starts a comment.
std::set<std::string> parse_baseline(std::string_view text);
std::set<std::string> default_baseline();

VerifySummary run_verify(const VerifyOptions& options);
std::string render_verify_text(const VerifySummary& summary);
Json verify_to_json(const VerifySummary& summary);

// ---------------------------------------------------------------------------
// decompose

/// Whitespace-separated rationals, one row per line, 4n x 4n.
BilinearForm<Rational> read_form(std::istream& in, std::size_t n);

Json decompose(const BilinearForm<Rational>& form);
std::string render_decompose_text(const Json& doc);

}  // namespace hyperherm::report
