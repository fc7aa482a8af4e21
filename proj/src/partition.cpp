#include "cpgset/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cpgset/error.hpp"

namespace cpgset {

namespace {

void require_same_carrier(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::CarrierMismatch, {a, b}, "carrier sizes differ");
}

Element find(std::vector<Element>& parent, Element x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Union by least root keeps the canonical leader readable from find().
void unite(std::vector<Element>& parent, Element a, Element b) {
  a = find(parent, a);
  b = find(parent, b);
  if (a == b) return;
  if (a < b) parent[b] = a;
  else parent[a] = b;
}

}  // namespace

Partition Partition::identity(std::size_t n) {
  Partition p;
  p.block_id_.resize(n);
  std::iota(p.block_id_.begin(), p.block_id_.end(), Element{0});
  return p;
}

Partition Partition::universal(std::size_t n) {
  Partition p;
  p.block_id_.assign(n, 0);
  return p;
}

Partition Partition::from_labels(std::span<Element const> labels) {
  Partition p;
  p.block_id_.resize(labels.size());
  for (Element x = 0; x < labels.size(); ++x) {
    Element leader = x;
    for (Element y = 0; y < x; ++y) {
      if (labels[y] == labels[x]) {
        leader = p.block_id_[y];
        break;
      }
    }
    p.block_id_[x] = leader;
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks) {
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  for (auto const& block : blocks) {
    for (Element x : block) {
      if (x >= n) throw Error(ErrorKind::OutOfRange, {x}, "block member out of range");
      unite(parent, block.front(), x);
    }
  }
  Partition p;
  p.block_id_.resize(n);
  for (Element x = 0; x < n; ++x) p.block_id_[x] = find(parent, x);
  return p;
}

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(block_id_.size());
  for (Element x = 0; x < block_id_.size(); ++x) {
    if (block_id_[x] == x) {
      slot[x] = out.size();
      out.push_back({x});
    } else {
      out[slot[block_id_[x]]].push_back(x);
    }
  }
  return out;
}

std::vector<Element> Partition::block_of(Element x) const {
  std::vector<Element> out;
  for (Element y = block_id_[x]; y < block_id_.size(); ++y) {
    if (block_id_[y] == block_id_[x]) out.push_back(y);
  }
  return out;
}

std::size_t Partition::block_count() const {
  std::size_t count = 0;
  for (Element x = 0; x < block_id_.size(); ++x) count += block_id_[x] == x ? 1 : 0;
  return count;
}

bool Partition::is_identity() const { return block_count() == block_id_.size(); }

bool Partition::is_universal() const {
  return std::all_of(block_id_.begin(), block_id_.end(), [](Element b) { return b == 0; });
}

bool Partition::refines(Partition const& coarser) const {
  require_same_carrier(carrier_size(), coarser.carrier_size());
  for (Element x = 0; x < block_id_.size(); ++x) {
    if (!coarser.related(x, block_id_[x])) return false;
  }
  return true;
}

Partition join(Partition const& p, Partition const& q) {
  require_same_carrier(p.carrier_size(), q.carrier_size());
  std::size_t const n = p.carrier_size();
  std::vector<Element> parent(p.block_ids());
  for (Element x = 0; x < n; ++x) unite(parent, x, q.leader(x));
  std::vector<Element> labels(n);
  for (Element x = 0; x < n; ++x) labels[x] = find(parent, x);
  return Partition::from_labels(labels);
}

Partition meet(Partition const& p, Partition const& q) {
  require_same_carrier(p.carrier_size(), q.carrier_size());
  std::size_t const n = p.carrier_size();
  std::vector<Element> labels(n);
  for (Element x = 0; x < n; ++x) labels[x] = static_cast<Element>(p.leader(x) * n + q.leader(x));
  return Partition::from_labels(labels);
}

std::string to_string(Partition const& p) {
  std::string out = "{";
  bool first_block = true;
  for (auto const& block : p.blocks()) {
    if (!first_block) out += ',';
    first_block = false;
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

std::string to_string(ElementPair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

BinaryRelation::BinaryRelation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

std::size_t BinaryRelation::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<ElementPair> BinaryRelation::pairs() const {
  std::vector<ElementPair> out;
  for (Element a = 0; a < n_; ++a) {
    for (Element c = 0; c < n_; ++c) {
      if (contains(a, c)) out.push_back({a, c});
    }
  }
  return out;
}

BinaryRelation as_relation(Partition const& p) {
  BinaryRelation r(p.carrier_size());
  for (Element a = 0; a < p.carrier_size(); ++a) {
    for (Element c = 0; c < p.carrier_size(); ++c) {
      if (p.related(a, c)) r.insert(a, c);
    }
  }
  return r;
}

BinaryRelation compose(Partition const& p, Partition const& q) {
  require_same_carrier(p.carrier_size(), q.carrier_size());
  std::size_t const n = p.carrier_size();
  BinaryRelation r(n);
  std::size_t const w = r.words_;
  // Row of c's q-block, indexed by the q-leader.
  std::vector<std::uint64_t> q_rows(n * w, 0);
  for (Element c = 0; c < n; ++c) {
    Element const l = q.leader(c);
    q_rows[l * w + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  // Row of a in p o q = union of q-blocks met by a's p-block; computed once
  // per p-block on its leader, then copied.
  for (Element a = 0; a < n; ++a) {
    Element const l = p.leader(a);
    if (l == a) {
      for (Element b = a; b < n; ++b) {
        if (p.leader(b) != a) continue;
        Element const qb = q.leader(b);
        for (std::size_t k = 0; k < w; ++k) r.bits_[a * w + k] |= q_rows[qb * w + k];
      }
    } else {
      std::copy_n(r.bits_.begin() + static_cast<std::ptrdiff_t>(l * w), w,
                  r.bits_.begin() + static_cast<std::ptrdiff_t>(a * w));
    }
  }
  return r;
}

std::optional<ElementPair> least_nonpermuting_pair(Partition const& p, Partition const& q) {
  BinaryRelation const pq = compose(p, q);
  BinaryRelation const qp = compose(q, p);
  if (pq == qp) return std::nullopt;
  std::size_t const n = p.carrier_size();
  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      if (pq.contains(a, c) != qp.contains(a, c)) return ElementPair{a, c};
    }
  }
  return std::nullopt;
}

std::string describe(NonPermutingWitness const& w) {
  std::string const ab = "compose(alpha,beta)";
  std::string const ba = "compose(beta,alpha)";
  return "alpha=" + to_string(w.alpha) + " beta=" + to_string(w.beta) + " pair=" + to_string(w.pair) + " in " +
         (w.in_alpha_beta ? ab : ba) + " not in " + (w.in_alpha_beta ? ba : ab);
}

PermutabilityVerdict permutable_pair(Partition const& p, Partition const& q) {
  PermutabilityVerdict v;
  v.congruences = 2;
  v.pairs_checked = 1;
  if (auto pair = least_nonpermuting_pair(p, q)) {
    v.permutable = false;
    bool const in_pq = compose(p, q).contains(pair->first, pair->second);
    v.witness = NonPermutingWitness{p, q, *pair, in_pq};
  }
  return v;
}

PermutabilityVerdict all_pairs_permute(std::span<Partition const> congruences) {
  PermutabilityVerdict v;
  v.congruences = congruences.size();
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      ++v.pairs_checked;
      Partition const& a = congruences[i];
      Partition const& b = congruences[j];
      // Comparable partitions always permute: both composites equal the larger.
      if (a.refines(b) || b.refines(a)) continue;
      if (auto pair = least_nonpermuting_pair(a, b)) {
        v.permutable = false;
        v.witness = NonPermutingWitness{a, b, *pair, compose(a, b).contains(pair->first, pair->second)};
        return v;
      }
    }
  }
  return v;
}

}  // namespace cpgset
