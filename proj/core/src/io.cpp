#include "permfft/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace permfft {

using nlohmann::json;

namespace {

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected an integer");
}

json exact_factor_to_json(const SparseMatrix<Rational>& f) {
  json entries = json::array();
  for (const auto& t : f.triplets())
    entries.push_back({t.row, t.col, big_to_json(t.value.get_num()), big_to_json(t.value.get_den())});
  return entries;
}

json double_factor_to_json(const SparseMatrix<double>& f) {
  json entries = json::array();
  for (const auto& t : f.triplets()) entries.push_back({t.row, t.col, t.value});
  return entries;
}

SparseMatrix<Rational> exact_factor_from_json(const json& entries, std::size_t m) {
  std::vector<Triplet<Rational>> t;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("exact plan entries need 4 fields");
    Rational v(big_from_json(e[2]), big_from_json(e[3]));
    v.canonicalize();
    t.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), v});
  }
  return SparseMatrix<Rational>(m, m, std::move(t));
}

SparseMatrix<double> double_factor_from_json(const json& entries, std::size_t m) {
  std::vector<Triplet<double>> t;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("orthonormal plan entries need 3 fields");
    t.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()});
  }
  return SparseMatrix<double>(m, m, std::move(t));
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

std::string to_string(DatasetMode mode) { return mode == DatasetMode::subset ? "subset" : "ranking"; }

DatasetMode parse_mode(const std::string& text) {
  if (text == "subset") return DatasetMode::subset;
  if (text == "ranking") return DatasetMode::ranking;
  throw DatasetError("unknown mode '" + text + "' (expected subset or ranking)");
}

DatasetError::DatasetError(const std::string& message, int record)
    : std::runtime_error(record >= 0 ? "record " + std::to_string(record) + ": " + message : message),
      record_(record) {}

Dataset parse_dataset(const json& doc, std::optional<DatasetMode> mode_override) {
  if (!doc.is_object()) throw DatasetError("dataset must be an object");
  Dataset data;
  try {
    data.n = doc.at("n").get<int>();
    data.k = doc.at("k").get<int>();
  } catch (const json::exception&) {
    throw DatasetError("dataset needs integer fields n and k");
  }
  if (mode_override) {
    data.mode = *mode_override;
  } else if (doc.contains("mode") && doc["mode"].is_string()) {
    data.mode = parse_mode(doc["mode"].get<std::string>());
  } else {
    throw DatasetError("dataset needs a mode (subset or ranking)");
  }
  if (doc.contains("records")) {
    if (!doc["records"].is_array()) throw DatasetError("records must be a list");
    int index = 0;
    for (const auto& r : doc["records"]) {
      DatasetRecord rec;
      if (!r.is_object() || !r.contains("selection") || !r["selection"].is_array()) {
        throw DatasetError("record needs a selection list", index);
      }
      for (const auto& item : r["selection"]) {
        if (!item.is_number_integer()) throw DatasetError("items must be integers", index);
        rec.selection.push_back(item.get<int>());
      }
      if (r.contains("weight")) {
        if (!r["weight"].is_number()) throw DatasetError("weight must be a number", index);
        rec.weight = r["weight"].get<double>();
      }
      data.records.push_back(std::move(rec));
      ++index;
    }
  }
  dataset_shape(data);
  return data;
}

Dataset load_dataset(const std::string& path, std::optional<DatasetMode> mode_override) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DatasetError(std::string("malformed JSON: ") + e.what());
  }
  return parse_dataset(doc, mode_override);
}

Partition dataset_shape(const Dataset& data) {
  if (data.n < 1) throw DatasetError("n must be at least 1");
  if (data.k < 0 || data.k > data.n) throw DatasetError("k must satisfy 0 <= k <= n");
  if (data.mode == DatasetMode::subset && 2 * data.k > data.n) {
    throw DatasetError("subset mode requires k <= n/2");
  }
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    const auto& rec = data.records[i];
    const int index = static_cast<int>(i);
    if (static_cast<int>(rec.selection.size()) != data.k) {
      throw DatasetError("selection has " + std::to_string(rec.selection.size()) + " items, expected k = " +
                             std::to_string(data.k),
                         index);
    }
    std::vector<bool> seen(static_cast<std::size_t>(data.n) + 1, false);
    for (int item : rec.selection) {
      if (item < 1 || item > data.n) {
        throw DatasetError("item " + std::to_string(item) + " outside 1.." + std::to_string(data.n), index);
      }
      if (seen[static_cast<std::size_t>(item)]) throw DatasetError("duplicate item " + std::to_string(item), index);
      seen[static_cast<std::size_t>(item)] = true;
    }
    if (!std::isfinite(rec.weight) || rec.weight < 0) throw DatasetError("weight must be nonnegative", index);
  }
  std::vector<int> parts;
  if (data.n - data.k > 0) parts.push_back(data.n - data.k);
  if (data.mode == DatasetMode::subset) {
    if (data.k > 0) parts.push_back(data.k);
  } else {
    for (int r = 0; r < data.k; ++r) parts.push_back(1);
  }
  return Partition(std::move(parts));
}

std::vector<double> ingest(const Dataset& data, const TabloidSpace& space) {
  const Partition shape = dataset_shape(data);
  if (!(space.shape() == shape)) throw DatasetError("tabloid space shape differs from the dataset shape");
  std::vector<double> f(space.size(), 0.0);
  // With k = n the first row is empty and all rows shift up by one.
  const int shift = data.n - data.k > 0 ? 1 : 0;
  std::vector<int> word(static_cast<std::size_t>(data.n));
  for (const auto& rec : data.records) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t r = 0; r < rec.selection.size(); ++r) {
      const int row = data.mode == DatasetMode::subset ? shift : static_cast<int>(r) + shift;
      word[static_cast<std::size_t>(rec.selection[r] - 1)] = row;
    }
    f[space.index_of_word(word)] += rec.weight;
  }
  return f;
}

std::vector<double> ingest(const Dataset& data) { return ingest(data, TabloidSpace(dataset_shape(data))); }

json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json plan_to_json(const TransformPlan& plan) {
  json labels = json::array();
  for (const auto& l : plan.labels)
    labels.push_back({{"shape", partition_to_json(l.shape)}, {"copy", l.copy}, {"tableau", l.tableau.row_word()}});
  json factors = json::array();
  json inverses = json::array();
  for (std::size_t i = 0; i < plan.factors.size(); ++i) {
    const int level = static_cast<int>(i) + 2;
    if (plan.exact()) {
      factors.push_back({{"level", level}, {"entries", exact_factor_to_json(plan.exact_factors[i])}});
      inverses.push_back({{"level", level}, {"entries", exact_factor_to_json(plan.exact_inverse_factors[i])}});
    } else {
      factors.push_back({{"level", level}, {"entries", double_factor_to_json(plan.factors[i])}});
      inverses.push_back({{"level", level}, {"entries", double_factor_to_json(plan.inverse_factors[i])}});
    }
  }
  return {{"format", "permfft-plan"},
          {"version", 1},
          {"shape", partition_to_json(plan.shape)},
          {"size", plan.size},
          {"normalization", to_string(plan.normalization)},
          {"labels", labels},
          {"factors", factors},
          {"inverse_factors", inverses}};
}

TransformPlan plan_from_json(const json& doc) {
  try {
    if (doc.at("format") != "permfft-plan") throw std::invalid_argument("not a plan document");
    TransformPlan plan;
    plan.shape = partition_from_json(doc.at("shape"));
    plan.size = doc.at("size").get<std::size_t>();
    plan.normalization = parse_normalization(doc.at("normalization").get<std::string>());
    const int n = plan.shape.size();
    const OrbitKey top{n, {}};
    for (const auto& l : doc.at("labels")) {
      Partition mu = partition_from_json(l.at("shape"));
      StandardTableau t(mu, l.at("tableau").get<std::vector<int>>());
      plan.labels.push_back({top, mu, l.at("copy").get<int>(), std::move(t)});
    }
    if (plan.labels.size() != plan.size) throw std::invalid_argument("label count differs from size");
    const auto& factors = doc.at("factors");
    const auto& inverses = doc.at("inverse_factors");
    if (factors.size() != static_cast<std::size_t>(std::max(n - 1, 0)) || inverses.size() != factors.size()) {
      throw std::invalid_argument("plan needs n-1 factors and n-1 inverse factors");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (plan.exact()) {
        plan.exact_factors.push_back(exact_factor_from_json(factors[i].at("entries"), plan.size));
        plan.exact_inverse_factors.push_back(exact_factor_from_json(inverses[i].at("entries"), plan.size));
        auto to_d = [](const Rational& v) { return v.get_d(); };
        plan.factors.push_back(plan.exact_factors.back().map<double>(to_d));
        plan.inverse_factors.push_back(plan.exact_inverse_factors.back().map<double>(to_d));
      } else {
        plan.factors.push_back(double_factor_from_json(factors[i].at("entries"), plan.size));
        plan.inverse_factors.push_back(double_factor_from_json(inverses[i].at("entries"), plan.size));
      }
    }
    return plan;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed plan: ") + e.what());
  }
}

void save_plan(const TransformPlan& plan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << plan_to_json(plan).dump() << '\n';
}

TransformPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return plan_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed plan: ") + e.what());
  }
}

json tabloids_to_json(const TabloidSpace& space) {
  json items = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) items.push_back({{"index", i}, {"rows", space.at(i).rows()}});
  return {{"shape", partition_to_json(space.shape())}, {"size", space.size()}, {"tabloids", items}};
}

json ops_to_json(const OpCount& ops) {
  return {{"multiplications", ops.multiplications}, {"additions", ops.additions}, {"total", ops.total()}};
}

json spectrum_to_json(const Spectrum& spectrum) {
  json components = json::array();
  for (const auto& c : spectrum.components) {
    components.push_back({{"shape", partition_to_json(c.shape)},
                          {"copy", c.copy},
                          {"coefficients", c.coefficients},
                          {"energy", c.energy}});
  }
  return {{"components", components}, {"total_energy", spectrum.total_energy()}};
}

json report_to_json(const BoundReport& report) {
  json levels = json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"level", l.level},
                      {"phi", big_to_json(l.phi)},
                      {"k_max", big_to_json(l.k_max)},
                      {"nnz", l.nnz},
                      {"max_column_nnz", l.max_column_nnz},
                      {"slack", big_to_json(l.slack)},
                      {"nnz_ok", l.nnz_ok},
                      {"column_ok", l.column_ok}});
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"bound", big_to_json(c.bound)},
                      {"measured", big_to_json(c.measured)},
                      {"holds", c.holds}});
  }
  json doc = {{"shape", partition_to_json(report.shape)},
              {"size", report.size},
              {"levels", levels},
              {"corollary_bound", big_to_json(report.corollary_bound)},
              {"naive_bound", big_to_json(report.naive_bound)},
              {"checks", checks},
              {"failures", report.failures},
              {"ok", report.ok()}};
  if (report.two_row_bound) doc["two_row_bound"] = big_to_json(*report.two_row_bound);
  if (report.hook_bound) doc["hook_bound"] = big_to_json(*report.hook_bound);
  if (report.refined_hook_bound) doc["refined_hook_bound"] = big_to_json(*report.refined_hook_bound);
  if (report.measured) doc["measured_ops"] = ops_to_json(*report.measured);
  return doc;
}

std::string render_tabloids(const TabloidSpace& space) {
  std::ostringstream os;
  os << "shape " << space.shape().to_string() << ", " << space.size() << " tabloids\n";
  for (std::size_t i = 0; i < space.size(); ++i) os << std::setw(6) << i << "  " << space.at(i).to_string() << '\n';
  return os.str();
}

std::string render_spectrum(const Spectrum& spectrum) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "component" << std::setw(6) << "copy" << "energy\n";
  for (const auto& c : spectrum.components) {
    os << std::setw(18) << c.shape.to_string() << std::setw(6) << c.copy << format_double(c.energy) << '\n';
  }
  os << "total energy " << format_double(spectrum.total_energy()) << '\n';
  return os.str();
}

std::string render_report(const BoundReport& report) {
  std::ostringstream os;
  os << "bounds for " << report.shape.to_string() << " (size " << report.size << ")\n";
  os << std::left << std::setw(7) << "level" << std::setw(12) << "nnz" << std::setw(12) << "phi" << std::setw(10)
     << "max col" << std::setw(6) << "K" << "slack\n";
  for (const auto& l : report.levels) {
    os << std::setw(7) << l.level << std::setw(12) << l.nnz << std::setw(12) << to_string(l.phi) << std::setw(10)
       << l.max_column_nnz << std::setw(6) << to_string(l.k_max) << to_string(l.slack) << '\n';
  }
  os << "2 * sum phi = " << to_string(report.corollary_bound) << ", naive 2m^2 = " << to_string(report.naive_bound)
     << '\n';
  if (report.two_row_bound) os << "two-row bound " << to_string(*report.two_row_bound) << '\n';
  if (report.hook_bound) os << "hook bound " << to_string(*report.hook_bound) << '\n';
  if (report.refined_hook_bound) os << "refined top-level bound " << to_string(*report.refined_hook_bound) << '\n';
  if (report.measured) os << "measured operations " << report.measured->total() << '\n';
  for (const auto& c : report.checks)
    os << (c.holds ? "ok   " : "FAIL ") << c.name << ": " << to_string(c.measured) << " < " << to_string(c.bound) << '\n';
  for (const auto& f : report.failures) os << "violation: " << f << '\n';
  os << (report.ok() ? "all bounds hold" : "BOUND VIOLATION") << '\n';
  return os.str();
}

ReportDocument run_analyze(const Dataset& data, const AnalyzeOptions& options) {
  const Partition shape = dataset_shape(data);
  if (options.shape && !(*options.shape == shape)) {
    throw DatasetError("--shape " + options.shape->to_string() + " does not match the dataset shape " +
                       shape.to_string());
  }
  const BigInt size = factorial(shape.size()) / [&] {
    BigInt d = 1;
    for (int p : shape.parts()) d *= factorial(p);
    return d;
  }();
  if (size > BigInt(static_cast<unsigned long>(options.size_cap))) {
    throw SizeCapExceeded("|X^lambda| = " + to_string(size) + " exceeds the size cap " +
                          std::to_string(options.size_cap));
  }
  TransformPlan p;
  if (options.plan_path) {
    p = load_plan(*options.plan_path);
    if (!(p.shape == shape)) {
      throw DatasetError("plan shape " + p.shape.to_string() + " does not match the dataset shape " +
                         shape.to_string());
    }
  } else {
    p = plan(shape, options.normalization);
  }
  ReportDocument doc;
  doc.shape = shape;
  doc.size = p.size;
  doc.normalization = p.normalization;
  const auto f = ingest(data, TabloidSpace(shape));
  for (double v : f) doc.input_energy += v * v;
  auto [spectrum, ops] = permfft::apply(p, f);
  for (const auto& c : spectrum.components) doc.energies.push_back({c.shape, c.copy, c.energy});
  doc.spectrum = std::move(spectrum);
  doc.ops = ops;
  doc.bounds = verify(p, ops);
  return doc;
}

json report_document_to_json(const ReportDocument& doc) {
  json energies = json::array();
  for (const auto& e : doc.energies)
    energies.push_back({{"shape", partition_to_json(e.shape)}, {"copy", e.copy}, {"energy", e.energy}});
  return {{"shape", partition_to_json(doc.shape)},
          {"size", doc.size},
          {"normalization", to_string(doc.normalization)},
          {"input_energy", doc.input_energy},
          {"energies", energies},
          {"spectrum", spectrum_to_json(doc.spectrum)},
          {"ops", ops_to_json(doc.ops)},
          {"bounds", report_to_json(doc.bounds)},
          {"ok", doc.ok()}};
}

std::string render_report_document(const ReportDocument& doc) {
  std::ostringstream os;
  os << "shape " << doc.shape.to_string() << ", " << doc.size << " tabloids, " << to_string(doc.normalization)
     << " basis\n";
  os << "input energy " << format_double(doc.input_energy) << "\n\n";
  os << render_spectrum(doc.spectrum) << '\n';
  os << "operations: " << doc.ops.multiplications << " multiplications, " << doc.ops.additions << " additions\n\n";
  os << render_report(doc.bounds);
  return os.str();
}

}  // namespace permfft
