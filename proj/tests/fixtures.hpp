#pragma once

#include <string>

#include "cpgset/io.hpp"

inline std::string fixture_path(std::string const& name) { return std::string(CPGSET_FIXTURE_DIR) + "/" + name; }

inline cpgset::GSet fixture_gset(std::string const& name) {
  return cpgset::parse_gset(cpgset::read_file(fixture_path(name + ".gset")));
}
