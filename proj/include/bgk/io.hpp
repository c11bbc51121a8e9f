#pragma once

#include <string>

#include "bgk/core.hpp"
#include "json.hpp"

namespace bgk {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bgk/1";

// input that does not match the interchange format; path points into the document
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

RawGSet raw_from_json(const json& doc);
json to_json(const RawGSet& raw);
json to_json(const BrauerGSet& E);
BrauerGSet gset_from_json(const json& doc);

json parse_text(const std::string& text);  // SchemaError on syntax errors
std::string read_source(const std::string& path);  // "-" reads stdin
BrauerGSet load_gset(const std::string& path);

}  // namespace bgk
