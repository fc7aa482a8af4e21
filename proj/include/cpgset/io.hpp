#pragma once

#include <string>
#include <string_view>

#include "cpgset/group.hpp"
#include "cpgset/gset.hpp"
#include "cpgset/semigroup.hpp"

namespace cpgset {

// Line-oriented text formats. Blank lines and lines whose first non-blank
// character is '#' are skipped.
//
//   group <n>          gset <m> <n>           semigroup <n>
//   n rows of n        group <n>              n rows of n
//                      n rows of n            [zero <index>]
//                      m rows of n            [roles <tag>...]
//
// Role tags are g<element>, x<point> and z. Malformed input throws
// Error(FormatError) with the offending 1-based line number as witness;
// well-formed but invalid structures throw the validation errors.

enum class FileKind { Group, GSet, Semigroup };

FileKind detect_kind(std::string_view text);

FiniteGroup parse_group(std::string_view text);
GSet parse_gset(std::string_view text);
FiniteSemigroup parse_semigroup(std::string_view text);

// Serialization re-indexes group identities to 0.
std::string serialize(FiniteGroup const& group);
std::string serialize(GSet const& x);
std::string serialize(FiniteSemigroup const& s);

// Serialization on one line, rows separated by "; ", for report witnesses.
std::string serialize_inline(GSet const& x);

// Throws Error(FileNotFound).
std::string read_file(std::string const& path);

}  // namespace cpgset
