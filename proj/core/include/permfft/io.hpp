#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permfft/bounds.hpp"
#include "permfft/tabloids.hpp"
#include "permfft/transform.hpp"

namespace permfft {

enum class DatasetMode { subset, ranking };

std::string to_string(DatasetMode mode);
DatasetMode parse_mode(const std::string& text);

struct DatasetRecord {
  std::vector<int> selection;  // 1-based item ids; ranked order in ranking mode
  double weight = 1.0;
};

/// Survey data: every record picks k of the n items.
struct Dataset {
  int n = 0;
  int k = 0;
  DatasetMode mode = DatasetMode::subset;
  std::vector<DatasetRecord> records;
};

/// Malformed input. record() is the offending record index, or -1 when the
/// problem is with the document as a whole.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(const std::string& message, int record = -1);
  int record() const { return record_; }

 private:
  int record_;
};

/// Reads {"n", "k", "mode", "records": [{"selection": [...], "weight": w}]}.
/// `mode_override` replaces (or supplies) the document's mode.
Dataset parse_dataset(const nlohmann::json& doc, std::optional<DatasetMode> mode_override = std::nullopt);
Dataset load_dataset(const std::string& path, std::optional<DatasetMode> mode_override = std::nullopt);

/// (n-k, k) in subset mode, (n-k, 1^k) in ranking mode. Validates the records.
Partition dataset_shape(const Dataset& data);

/// f(x) = total weight of the records that map to tabloid x. Subset mode puts
/// the chosen items in row 2; ranking mode puts the item of rank r in row r+1.
std::vector<double> ingest(const Dataset& data, const TabloidSpace& space);
std::vector<double> ingest(const Dataset& data);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// Factors are lists of [row, col, numerator, denominator] for exact plans and
/// [row, col, value] for orthonormal ones.
nlohmann::json plan_to_json(const TransformPlan& plan);
TransformPlan plan_from_json(const nlohmann::json& doc);
void save_plan(const TransformPlan& plan, const std::string& path);
TransformPlan load_plan(const std::string& path);

nlohmann::json tabloids_to_json(const TabloidSpace& space);
nlohmann::json ops_to_json(const OpCount& ops);
nlohmann::json spectrum_to_json(const Spectrum& spectrum);
nlohmann::json report_to_json(const BoundReport& report);

std::string render_tabloids(const TabloidSpace& space);
std::string render_spectrum(const Spectrum& spectrum);
std::string render_report(const BoundReport& report);

struct AnalyzeOptions {
  std::optional<Partition> shape;  // must agree with the dataset when given
  std::optional<std::string> plan_path;  // overrides normalization
  Normalization normalization = Normalization::leading_one;
  std::size_t size_cap = 1'000'000;
};

struct ComponentEnergy {
  Partition shape;
  int copy = 0;
  double energy = 0;
};

struct ReportDocument {
  Partition shape;
  std::size_t size = 0;
  Normalization normalization = Normalization::orthonormal;
  double input_energy = 0;  // sum of f(x)^2
  std::vector<ComponentEnergy> energies;  // label order: shapes reverse lexicographic, then copy
  Spectrum spectrum;
  OpCount ops;
  BoundReport bounds;

  bool ok() const { return bounds.ok(); }
};

class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ingest -> plan -> apply -> verify.
ReportDocument run_analyze(const Dataset& data, const AnalyzeOptions& options = {});

nlohmann::json report_document_to_json(const ReportDocument& doc);
std::string render_report_document(const ReportDocument& doc);

}  // namespace permfft
