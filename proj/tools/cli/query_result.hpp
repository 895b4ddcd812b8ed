#pragma once

#include <string>

#include <json.hpp>

namespace invforms::cli {

inline constexpr int kSchemaVersion = 1;

/// One answered query: the parsed arguments, the result payload (a verdict
/// or table rows), the deciding rule and the wall time.
struct QueryResult {
  std::string command;
  nlohmann::json query = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  std::string provenance;
  double elapsed_ms = 0.0;

  /// Keys come out sorted, so equal results dump to equal text.
  nlohmann::json to_json() const;
  /// Throws InputError on a missing field or a schema mismatch.
  static QueryResult from_json(const nlohmann::json& j);

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

}  // namespace invforms::cli
