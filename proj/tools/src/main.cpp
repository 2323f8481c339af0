#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hyperherm/errors.hpp"
#include "hyperherm/report.hpp"

namespace hr = hyperherm::report;

namespace {

hr::Format parse_format(const std::string& s) { return s == "text" ? hr::Format::Text : hr::Format::Json; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hr::UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of almost hypercomplex pseudo-Hermitian structures"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "text"});

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline on the four-parameter Lie family");
  std::string lambda_text;
  bool symbolic = false;
  std::string analyze_format = "json";
  auto* lambda_opt = analyze->add_option("--lambda", lambda_text, "Parameters l1,l2,l3,l4 (integers or p/q)");
  auto* symbolic_opt = analyze->add_flag("--symbolic", symbolic, "Keep the parameters as polynomial variables");
  lambda_opt->excludes(symbolic_opt);
  analyze->add_option("--format", analyze_format, "Output format")->check(formats);

  auto* verify = app.add_subcommand("verify", "Run the exact verification suite");
  bool strict = false;
  std::vector<std::string> skip;
  std::string baseline_path;
  std::string verify_format = "text";
  verify->add_flag("--strict", strict, "Treat expected flags as failures");
  verify->add_option("--skip", skip, "Suite to skip (repeatable)");
  verify->add_option("--baseline", baseline_path, "File of expected flags (suite/item per line)");
  verify->add_option("--format", verify_format, "Output format")->check(formats);

  auto* decompose = app.add_subcommand("decompose", "Split a bilinear form into its four projections");
  std::size_t n = 0;
  std::string input_path;
  std::uint64_t seed = 0;
  std::string decompose_format = "text";
  decompose->add_option("--n", n, "Quaternionic dimension (matrix side 4n)")->required()->check(CLI::PositiveNumber);
  auto* input_opt = decompose->add_option("--input", input_path, "Matrix file, one row per line");
  auto* seed_opt = decompose->add_option("--seed", seed, "Seed for a random rational form");
  input_opt->excludes(seed_opt);
  decompose->add_option("--format", decompose_format, "Output format")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? hr::kExitOk : hr::kExitUsage;
  }

  try {
    if (*analyze) {
      if (lambda_text.empty() && !symbolic) throw hr::UsageError("analyze: give --lambda or --symbolic");
      hr::AnalysisRequest req;
      req.format = parse_format(analyze_format);
      if (symbolic) {
        req.mode = hr::Mode::Symbolic;
      } else {
        req.mode = hr::Mode::Numeric;
        req.lambda = hr::parse_lambda(lambda_text);
      }
      const auto doc = hr::analyze(req);
      std::cout << (req.format == hr::Format::Json ? hr::to_json_string(doc) : hr::render_analysis_text(doc));
      return hr::kExitOk;
    }

    if (*verify) {
      hr::VerifyOptions opts;
      opts.strict = strict;
      opts.skip.insert(skip.begin(), skip.end());
      opts.expected_flags = baseline_path.empty() ? hr::default_baseline() : hr::parse_baseline(read_file(baseline_path));
      const auto summary = hr::run_verify(opts);
      if (parse_format(verify_format) == hr::Format::Json) std::cout << hr::to_json_string(hr::verify_to_json(summary));
      else std::cout << hr::render_verify_text(summary);
      return summary.exit_code;
    }

    if (*decompose) {
      if (input_path.empty() && seed_opt->count() == 0) throw hr::UsageError("decompose: give --input or --seed");
      hyperherm::BilinearForm<hyperherm::Rational> form;
      if (!input_path.empty()) {
        std::istringstream in(read_file(input_path));
        form = hr::read_form(in, n);
      } else {
        std::mt19937_64 rng(seed);
        form = hyperherm::random_form(n, rng);
      }
      const auto doc = hr::decompose(form);
      std::cout << (parse_format(decompose_format) == hr::Format::Json ? hr::to_json_string(doc)
                                                                        : hr::render_decompose_text(doc));
      return doc["reconstruction_exact"].get<bool>() ? hr::kExitOk : hr::kExitVerification;
    }
  } catch (const hr::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hr::kExitUsage;
  } catch (const hyperherm::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return hr::kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return hr::kExitInternal;
  }
  return hr::kExitUsage;
}
