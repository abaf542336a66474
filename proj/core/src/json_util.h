#ifndef GENSPECT_SRC_JSON_UTIL_H_
#define GENSPECT_SRC_JSON_UTIL_H_

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "genspect/error.h"

namespace genspect::internal {

inline nlohmann::json ParseJsonObject(std::string_view line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kMalformedLine, "invalid JSON");
  if (!j.is_object()) throw Error(ErrorCode::kMalformedLine, "expected a JSON object");
  return j;
}

template <typename T>
T Field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::kMalformedLine, std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kMalformedLine, std::string("field '") + key + "' has the wrong type");
  }
}

template <typename Parse>
auto RequireEnum(const nlohmann::json& j, const char* key, Parse parse) {
  const auto s = Field<std::string>(j, key);
  const auto v = parse(s);
  if (!v) throw Error(ErrorCode::kMalformedLine, std::string("bad ") + key + " '" + s + "'");
  return *v;
}

}  // namespace genspect::internal

#endif  // GENSPECT_SRC_JSON_UTIL_H_
