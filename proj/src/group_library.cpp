#include "cpgset/group_library.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "cpgset/error.hpp"

namespace cpgset {

namespace {

using Table = std::vector<std::vector<Element>>;

std::vector<Element> compose(std::vector<Element> const& first, std::vector<Element> const& then) {
  std::vector<Element> out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = then[first[x]];
  return out;
}

}  // namespace

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  }
  return validate_group(t);
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  // Pair (x, y) gets index x * |B| + y; with both identities at 0 the
  // product's identity is 0 too.
  std::size_t const na = a.order();
  std::size_t const nb = b.order();
  Table t(na * nb, std::vector<Element>(na * nb));
  for (Element x1 = 0; x1 < na; ++x1) {
    for (Element y1 = 0; y1 < nb; ++y1) {
      for (Element x2 = 0; x2 < na; ++x2) {
        for (Element y2 = 0; y2 < nb; ++y2) {
          t[x1 * nb + y1][x2 * nb + y2] =
              static_cast<Element>(a.product(x1, x2) * nb + b.product(y1, y2));
        }
      }
    }
  }
  return validate_group(t);
}

FiniteGroup permutation_group(Table const& generators, Table* elements) {
  std::size_t const degree = generators.empty() ? 0 : generators.front().size();
  std::vector<Element> id(degree);
  for (Element i = 0; i < degree; ++i) id[i] = i;
  std::vector<std::vector<Element>> found{id};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& gen : generators) {
      auto next = compose(found[i], gen);
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  std::map<std::vector<Element>, Element> index;
  for (Element i = 0; i < found.size(); ++i) index.emplace(found[i], i);
  Table t(found.size(), std::vector<Element>(found.size()));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < found.size(); ++j) t[i][j] = index.at(compose(found[i], found[j]));
  }
  if (elements != nullptr) *elements = found;
  return validate_group(t);
}

FiniteGroup symmetric_group_3(Table* elements) {
  return permutation_group({{1, 0, 2}, {1, 2, 0}}, elements);
}

FiniteGroup dihedral_group_8(Table* elements) {
  // Rotation and a reflection of the square with vertices 0..3.
  return permutation_group({{1, 2, 3, 0}, {3, 2, 1, 0}}, elements);
}

FiniteGroup quaternion_group() {
  // Index = 4 * sign + unit, units ordered 1, i, j, k.
  // unit_product[u][v] = (sign, unit) of u*v.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_product{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  Table t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto const [s, u] = unit_product[a % 4][b % 4];
      int const sign = (a / 4 + b / 4 + s) % 2;
      t[a][b] = static_cast<Element>(4 * sign + u);
    }
  }
  return validate_group(t);
}

std::span<NamedGroup const> builtin_groups() {
  static std::vector<NamedGroup> const groups = [] {
    auto z = [](std::size_t n) { return cyclic_group(n); };
    std::vector<NamedGroup> g;
    g.push_back({"Z1", z(1)});
    g.push_back({"Z2", z(2)});
    g.push_back({"Z3", z(3)});
    g.push_back({"Z2xZ2", direct_product(z(2), z(2))});
    g.push_back({"Z4", z(4)});
    g.push_back({"Z5", z(5)});
    g.push_back({"S3", symmetric_group_3()});
    g.push_back({"Z6", z(6)});
    g.push_back({"Z7", z(7)});
    g.push_back({"D4", dihedral_group_8()});
    g.push_back({"Q8", quaternion_group()});
    g.push_back({"Z2xZ2xZ2", direct_product(z(2), direct_product(z(2), z(2)))});
    g.push_back({"Z2xZ4", direct_product(z(2), z(4))});
    g.push_back({"Z8", z(8)});
    return g;
  }();
  return groups;
}

FiniteGroup const& builtin_group(std::string_view name) {
  for (auto const& g : builtin_groups()) {
    if (g.name == name) return g.group;
  }
  throw Error(ErrorKind::FormatError, {}, "unknown built-in group '" + std::string(name) + "'");
}

}  // namespace cpgset
