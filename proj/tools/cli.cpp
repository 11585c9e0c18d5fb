#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "permfft/adapted_basis.hpp"
#include "permfft/bounds.hpp"
#include "permfft/io.hpp"
#include "permfft/transform.hpp"

namespace permfft::cli {

namespace {

using nlohmann::json;

enum class Format { human, json };

// Thrown for failed checks that should exit with code 2.
struct VerificationFailure {};

void emit(std::ostream& out, Format format, const json& doc, const std::string& human) {
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
  } else {
    out << human;
  }
}

Partition parse_shape(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--shape", std::string("invalid shape '") + text + "': " + e.what());
  }
}

int cmd_enumerate(const std::string& shape, Format format, std::ostream& out) {
  const TabloidSpace space(parse_shape(shape));
  emit(out, format, tabloids_to_json(space), render_tabloids(space));
  return 0;
}

int cmd_plan(const std::string& shape, bool orthonormal, const std::string& path, Format format, std::ostream& out) {
  const auto p = plan(parse_shape(shape), orthonormal ? Normalization::orthonormal : Normalization::leading_one);
  if (!path.empty()) save_plan(p, path);
  json doc = {{"shape", partition_to_json(p.shape)},
              {"size", p.size},
              {"normalization", to_string(p.normalization)},
              {"nnz", p.nnz()},
              {"total_nnz", p.total_nnz()}};
  if (!path.empty()) doc["saved"] = path;
  std::ostringstream human;
  human << "plan for " << p.shape.to_string() << ": " << p.size << " tabloids, " << to_string(p.normalization)
        << " basis\n";
  for (std::size_t i = 0; i < p.factors.size(); ++i)
    human << "  C(B" << i + 2 << ",B" << i + 1 << ") nnz " << p.factors[i].nnz() << '\n';
  human << "  total nnz " << p.total_nnz() << '\n';
  if (!path.empty()) human << "saved to " << path << '\n';
  emit(out, format, doc, human.str());
  return 0;
}

int cmd_analyze(const std::string& data_path, const std::string& shape, const std::string& mode,
                const std::string& plan_path, bool orthonormal, std::size_t cap, Format format, std::ostream& out) {
  std::optional<DatasetMode> mode_override;
  if (!mode.empty()) mode_override = parse_mode(mode);
  const Dataset data = load_dataset(data_path, mode_override);
  AnalyzeOptions options;
  if (!shape.empty()) options.shape = parse_shape(shape);
  if (!plan_path.empty()) options.plan_path = plan_path;
  options.normalization = orthonormal ? Normalization::orthonormal : Normalization::leading_one;
  options.size_cap = cap;
  const auto doc = run_analyze(data, options);
  emit(out, format, report_document_to_json(doc), render_report_document(doc));
  return doc.ok() ? 0 : 2;
}

int cmd_bounds_table(int k_max_value, Format format, std::ostream& out) {
  if (k_max_value < 2) throw CLI::ValidationError("--k-max", "must be at least 2");
  json rows = json::array();
  std::ostringstream human;
  human << std::left << std::setw(5) << "k" << std::setw(32) << "N(k)(n-1)(n)_k" << "naive\n";
  for (int k = 2; k <= k_max_value; ++k) {
    const BigInt nk = n_bound(k);
    const std::string sub = k < 10 ? std::to_string(k) : "{" + std::to_string(k) + "}";
    const std::string bound = to_string(nk) + "(n-1)(n)_" + sub;
    const std::string naive = "((n)_" + sub + ")^2";
    rows.push_back({{"k", k}, {"N", to_string(nk)}, {"bound", bound}, {"naive", naive}});
    human << std::setw(5) << k << std::setw(32) << bound << naive << '\n';
  }
  emit(out, format, json{{"rows", rows}}, human.str());
  return 0;
}

int cmd_bounds_verify(const std::string& shape, Format format, std::ostream& out) {
  const auto p = plan(parse_shape(shape));
  const std::vector<double> ones(p.size, 1.0);
  const auto ops = permfft::apply(p, ones).second;
  const auto report = verify(p, ops);
  emit(out, format, report_to_json(report), render_report(report));
  return report.ok() ? 0 : 2;
}

int cmd_selftest(int max_n, Format format, std::ostream& out) {
  if (max_n < 1) throw CLI::ValidationError("--max-n", "must be at least 1");
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> small(-9, 9);
  json results = json::array();
  std::ostringstream human;
  bool all_ok = true;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::vector<std::string> problems;
      const auto chain = build_chain(lambda, Normalization::leading_one);
      for (int j = 1; j <= n; ++j) {
        const auto rep = verify_adapted(chain, j);
        for (const auto& f : rep.failures) problems.push_back("adapted level " + std::to_string(j) + ": " + f);
      }
      const auto p = plan_from_chain(chain);
      std::vector<Rational> f(p.size);
      for (auto& v : f) v = small(rng);
      const auto [spectrum, ops] = apply_exact(p, f);
      if (inverse_exact(p, spectrum) != f) problems.push_back("exact round trip failed");
      const auto report = verify(p, ops);
      for (const auto& msg : report.failures) problems.push_back(msg);
      if (n <= kOracleMaxDegree) {
        for (const auto& mu : partitions_of(n)) {
          if (kostka(mu, lambda) != multiplicity_oracle(lambda, mu, n)) {
            problems.push_back("kostka disagrees with the character oracle at " + mu.to_string());
          }
        }
      }
      all_ok = all_ok && problems.empty();
      results.push_back({{"shape", partition_to_json(lambda)}, {"ok", problems.empty()}, {"problems", problems}});
      human << (problems.empty() ? "PASS " : "FAIL ") << lambda.to_string() << '\n';
      for (const auto& msg : problems) human << "     " << msg << '\n';
    }
  }
  emit(out, format, json{{"results", results}, {"ok", all_ok}}, human.str());
  return all_ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factored harmonic transforms for permutation modules of S_n", "permfft"};
  app.require_subcommand(1);
  std::string format_name = "human";
  app.add_option("--format", format_name, "Output rendering")->check(CLI::IsMember({"human", "json"}));

  std::string shape, out_path, data_path, mode, plan_path;
  bool orthonormal = false;
  std::size_t cap = 1'000'000;
  int k_max_value = 13, max_n = 5;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the tabloids of a shape");
  enumerate_cmd->add_option("--shape", shape, "Comma-separated parts, e.g. 3,1,1")->required();

  auto* plan_cmd = app.add_subcommand("plan", "Build a transform plan");
  plan_cmd->add_option("--shape", shape, "Comma-separated parts")->required();
  plan_cmd->add_flag("--orthonormal", orthonormal, "Orthonormal basis instead of leading-one");
  plan_cmd->add_option("--out", out_path, "Write the plan to this file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Spectral analysis of a survey dataset");
  analyze_cmd->add_option("--data", data_path, "Dataset file")->required();
  analyze_cmd->add_option("--shape", shape, "Expected shape");
  analyze_cmd->add_option("--mode", mode, "Override the dataset mode")->check(CLI::IsMember({"subset", "ranking"}));
  analyze_cmd->add_option("--plan", plan_path, "Use a saved plan");
  analyze_cmd->add_flag("--orthonormal", orthonormal, "Orthonormal basis (energies obey Parseval)");
  analyze_cmd->add_option("--size-cap", cap, "Refuse spaces larger than this");

  auto* bounds_cmd = app.add_subcommand("bounds", "Bound tables and checks");
  bounds_cmd->require_subcommand(1);
  auto* table_cmd = bounds_cmd->add_subcommand("table", "Rows of the N(k) table");
  table_cmd->add_option("--k-max", k_max_value, "Largest k")->required();
  auto* verify_cmd = bounds_cmd->add_subcommand("verify", "Check a plan against every bound");
  verify_cmd->add_option("--shape", shape, "Comma-separated parts")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Verify every shape up to a size");
  selftest_cmd->add_option("--max-n", max_n, "Largest n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Format format = format_name == "json" ? Format::json : Format::human;
  try {
    if (*enumerate_cmd) return cmd_enumerate(shape, format, out);
    if (*plan_cmd) return cmd_plan(shape, orthonormal, out_path, format, out);
    if (*analyze_cmd) return cmd_analyze(data_path, shape, mode, plan_path, orthonormal, cap, format, out);
    if (*table_cmd) return cmd_bounds_table(k_max_value, format, out);
    if (*verify_cmd) return cmd_bounds_verify(shape, format, out);
    if (*selftest_cmd) return cmd_selftest(max_n, format, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return 2;
  } catch (const DatasetError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace permfft::cli
