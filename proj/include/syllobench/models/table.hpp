#pragma once

#include <array>
#include <fstream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "syllobench/domain.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/model.hpp"

namespace syllobench {

/// Per-task preference-ordered response lists. Total by construction once
/// validated: every task maps to a non-empty list.
struct PredictionTable {
  std::array<std::vector<ResponseOption>, kTaskCount> rows;

  const std::vector<ResponseOption>& row(const SyllogisticTask& task) const {
    return rows[task_index(task)];
  }
};

/// Parses a prediction-table JSON object. Keys must cover exactly the 64
/// task codes; values must be non-empty arrays of distinct response codes.
inline PredictionTable parse_prediction_table(const nlohmann::json& doc,
                                              const std::string& origin) {
  if (!doc.is_object())
    throw ParseError(origin + ": prediction table must be a JSON object");
  PredictionTable table;
  std::array<bool, kTaskCount> seen{};
  for (const auto& [key, value] : doc.items()) {
    SyllogisticTask task;
    try {
      task = parse_task(key);
    } catch (const ParseError&) {
      throw ValidationError(origin + ": unknown task code \"" + key + "\"");
    }
    const int idx = task_index(task);
    if (!value.is_array() || value.empty())
      throw ValidationError(origin + ": entry \"" + key +
                            "\" must be a non-empty array of response codes");
    std::vector<ResponseOption> row;
    std::array<bool, kResponseCount> listed{};
    for (const auto& item : value) {
      if (!item.is_string())
        throw ValidationError(origin + ": entry \"" + key + "\" holds a non-string element");
      ResponseOption r;
      try {
        r = parse_response(item.get<std::string>());
      } catch (const ParseError&) {
        throw ValidationError(origin + ": entry \"" + key + "\" lists unknown response \"" +
                              item.get<std::string>() + "\"");
      }
      if (listed[static_cast<int>(r)])
        throw ValidationError(origin + ": entry \"" + key + "\" lists " +
                              std::string(response_code(r)) + " twice");
      listed[static_cast<int>(r)] = true;
      row.push_back(r);
    }
    seen[idx] = true;
    table.rows[idx] = std::move(row);
  }
  for (const SyllogisticTask& t : enumerate_tasks())
    if (!seen[task_index(t)])
      throw ValidationError(origin + ": missing entry for task " + task_code(t));
  return table;
}

inline PredictionTable load_prediction_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open prediction table: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_prediction_table(doc, path);
}

/// Static model answering from a prediction table: rank-1 is the first
/// listed response, the ranked view lists the table row followed by the
/// remaining options in canonical order.
class TableModel final : public Model {
public:
  TableModel(std::string id, PredictionTable table)
      : id_(std::move(id)), table_(std::move(table)) {}

  std::string id() const override { return id_; }

  ResponseOption predict(const SyllogisticTask& task) override {
    return table_.row(task).front();
  }

  std::array<ResponseOption, kResponseCount> predict_ranked(const SyllogisticTask& task) override {
    std::array<ResponseOption, kResponseCount> ranked{};
    std::array<bool, kResponseCount> used{};
    int n = 0;
    for (ResponseOption r : table_.row(task)) {
      ranked[n++] = r;
      used[static_cast<int>(r)] = true;
    }
    for (ResponseOption r : all_responses())
      if (!used[static_cast<int>(r)]) ranked[n++] = r;
    return ranked;
  }

private:
  std::string id_;
  PredictionTable table_;
};

inline std::unique_ptr<Model> make_table_model(std::string id, PredictionTable table) {
  return std::make_unique<TableModel>(std::move(id), std::move(table));
}

}  // namespace syllobench
