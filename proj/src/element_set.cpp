#include "cpgset/element_set.hpp"

#include <algorithm>

namespace cpgset {

bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto const am = a.members();
  auto const bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

std::string to_string(ElementSet s) { return format_set(s.members()); }

std::string format_set(std::span<Element const> members) {
  std::string out = "{";
  bool first = true;
  for (Element x : members) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace cpgset
