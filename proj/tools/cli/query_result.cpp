#include "cli/query_result.hpp"

#include "invforms/errors.hpp"

namespace invforms::cli {

nlohmann::json QueryResult::to_json() const {
  return {{"schema", kSchemaVersion}, {"command", command},       {"query", query},
          {"result", payload},        {"provenance", provenance}, {"elapsed_ms", elapsed_ms}};
}

QueryResult QueryResult::from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw InputError("unsupported schema version");
    QueryResult r;
    r.command = j.at("command").get<std::string>();
    r.query = j.at("query");
    r.payload = j.at("result");
    r.provenance = j.at("provenance").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed query result: ") + e.what());
  }
}

}  // namespace invforms::cli
