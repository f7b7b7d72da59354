#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "syllobench/errors.hpp"
#include "syllobench/model.hpp"
#include "syllobench/models/baselines.hpp"
#include "syllobench/models/rules.hpp"
#include "syllobench/models/table.hpp"
#include "syllobench/recommenders.hpp"

namespace syllobench {

/// Options shared by every model a run constructs. tie_break reaches the
/// recommenders (everything else has a fixed canonical rule); top_k truncates
/// the UBCF neighborhood when set.
struct ModelOptions {
  TieBreak tie_break = TieBreak::Canonical;
  std::optional<int> top_k;
};

inline const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names = {
      "random", "mfa",  "atmosphere", "matching", "conversion",
      "fol",    "ubcf", "ibcf",       "ubcf-fit", "ibcf-fit",
  };
  return names;
}

/// Factory for one model name. Accepts the built-in names plus
/// "table:<path>"; the table file is loaded (and validated) here, once, and
/// shared by all fold instances. Unknown names are usage errors.
inline ModelFactory make_model_factory(const std::string& name, const ModelOptions& opts = {}) {
  if (name == "random") return [] { return make_random_model(); };
  if (name == "mfa") return [] { return make_mfa_model(); };
  if (name == "atmosphere") return [] { return make_atmosphere_model(); };
  if (name == "matching") return [] { return make_matching_model(); };
  if (name == "conversion") return [] { return make_conversion_model(); };
  if (name == "fol") return [] { return make_fol_model(); };
  if (name == "ubcf")
    return [opts] { return make_ubcf_model(false, opts.tie_break, opts.top_k); };
  if (name == "ubcf-fit")
    return [opts] { return make_ubcf_model(true, opts.tie_break, opts.top_k); };
  if (name == "ibcf") return [opts] { return make_ibcf_model(false, opts.tie_break); };
  if (name == "ibcf-fit") return [opts] { return make_ibcf_model(true, opts.tie_break); };
  if (name.starts_with("table:")) {
    const std::string path = name.substr(6);
    if (path.empty()) throw UsageError("table model needs a file path: table:<path>");
    auto table = std::make_shared<PredictionTable>(load_prediction_table(path));
    const std::string id = "table:" + std::filesystem::path(path).stem().string();
    return [table, id] { return make_table_model(id, *table); };
  }
  std::string valid;
  for (const std::string& n : builtin_model_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw UsageError("unknown model \"" + name + "\"; valid names: " + valid + ", table:<path>");
}

inline std::vector<std::string> split_model_list(std::string_view csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= csv.size(); ++i)
    if (i == csv.size() || csv[i] == ',') {
      std::string_view piece = csv.substr(start, i - start);
      while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
      while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
      if (!piece.empty()) names.emplace_back(piece);
      start = i + 1;
    }
  return names;
}

/// Builds one factory per requested name. The resulting model ids must be
/// distinct, since every output keys on them.
inline std::vector<ModelFactory> make_model_factories(const std::vector<std::string>& names,
                                                      const ModelOptions& opts = {}) {
  if (names.empty()) throw UsageError("no models requested");
  std::vector<ModelFactory> factories;
  std::unordered_set<std::string> ids;
  for (const std::string& name : names) {
    ModelFactory factory = make_model_factory(name, opts);
    const std::string id = factory()->id();
    if (!ids.insert(id).second) throw UsageError("duplicate model id \"" + id + "\" in request");
    factories.push_back(std::move(factory));
  }
  return factories;
}

}  // namespace syllobench
