#pragma once

#include <string>

#include "bgk/io.hpp"

namespace bgk::test {

inline BrauerGSet fixture(const std::string& name) {
  return load_gset(std::string(BGK_FIXTURES) + "/" + name + ".json");
}

inline RawGSet raw_fixture(const std::string& name) {
  return raw_from_json(parse_text(read_source(std::string(BGK_FIXTURES) + "/" + name + ".json")));
}

inline Walk W(const BrauerGSet& E, const std::string& text) { return parse_walk(E, text); }

}  // namespace bgk::test
