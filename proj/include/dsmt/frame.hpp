#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dsmt/element_code.hpp"
#include "dsmt/errors.hpp"

namespace dsmt {

inline constexpr int kMaxFrameSize = 16;

// Bijection between part ids and the non-empty subsets of singleton indices
// {1..n}. Part 1 is always the intersection of all singletons; numbering then
// walks the subsets by descending cardinality, colexicographically ascending
// inside each cardinality group. That ordering is what makes singleton codes
// come out as contiguous-looking integer lists.
class PartSubsetMap {
 public:
  PartSubsetMap() = default;
  explicit PartSubsetMap(int n, std::vector<std::vector<int>> subsets)
      : n_(n), subsets_(std::move(subsets)) {}

  int frame_size() const { return n_; }
  std::size_t part_count() const { return subsets_.size(); }

  // Ascending singleton indices of one part. Unknown ids are an error.
  const std::vector<int>& subset_of(PartId part) const {
    if (part < 1 || part > subsets_.size()) {
      throw EvalError("unknown part id " + std::to_string(part));
    }
    return subsets_[part - 1];
  }

  bool operator==(const PartSubsetMap& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> subsets_;  // subsets_[p - 1]
};

namespace detail {

// a < b in colex order; both strictly ascending and of equal length.
inline bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline void check_frame_size(int n) {
  if (n < 1 || n > kMaxFrameSize) {
    throw FrameError("frame size " + std::to_string(n) +
                     " outside supported range [1, " +
                     std::to_string(kMaxFrameSize) + "]");
  }
}

}  // namespace detail

// Number the 2^n - 1 elementary Venn regions.
inline PartSubsetMap enumerate_parts(int n) {
  detail::check_frame_size(n);
  std::vector<std::vector<int>> subsets;
  subsets.reserve((std::size_t{1} << n) - 1);
  for (int card = n; card >= 1; --card) {
    std::vector<std::vector<int>> group;
    std::vector<int> pick(card);
    for (int i = 0; i < card; ++i) pick[i] = i + 1;
    while (true) {
      group.push_back(pick);
      int i = card - 1;
      while (i >= 0 && pick[i] == n - (card - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(group.begin(), group.end(), detail::colex_less);
    for (auto& s : group) subsets.push_back(std::move(s));
  }
  return PartSubsetMap(n, std::move(subsets));
}

// A discernment frame: the singleton codes (possibly reduced by constraints),
// the part naming map, and the parts already deleted. Immutable value.
struct Frame {
  int n = 0;
  std::vector<ElementCode> singletons;
  PartSubsetMap part_map;
  ElementCode removed_parts;

  const ElementCode& singleton(int index) const {
    if (index < 1 || index > n) {
      throw EvalError("unknown singleton index " + std::to_string(index));
    }
    return singletons[static_cast<std::size_t>(index) - 1];
  }

  // Union of all singleton codes; its cardinality is the number of live
  // Venn parts n_V.
  ElementCode part_universe() const {
    ElementCode u;
    for (const auto& s : singletons) u = code_union(u, s);
    return u;
  }

  std::size_t n_v() const { return part_universe().cardinality(); }

  bool reduced() const { return !removed_parts.empty(); }

  bool operator==(const Frame& other) const = default;
};

// Code every singleton of an n-element frame: singleton i gets every part
// whose subset contains i. Without constraints each code has 2^(n-1) parts.
inline Frame coding_theta(int n) {
  PartSubsetMap map = enumerate_parts(n);
  std::vector<ElementCode> singletons;
  singletons.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<PartId> parts;
    for (PartId p = 1; p <= map.part_count(); ++p) {
      const auto& s = map.subset_of(p);
      if (std::binary_search(s.begin(), s.end(), i)) parts.push_back(p);
    }
    singletons.emplace_back(std::move(parts));
  }
  return Frame{n, std::move(singletons), std::move(map), ElementCode{}};
}

// Render a code in the bracketed part-subset notation, e.g. {<1 2 3>,<1 2>}.
// Parts appear in code order; this never needs any enumeration of the
// hyper power set, which is why it is the cheap display path.
inline std::string smarandache_string(const ElementCode& code,
                                      const PartSubsetMap& map) {
  if (code.empty()) return "{}";
  std::string out = "{";
  bool first_part = true;
  for (PartId p : code.parts()) {
    if (!first_part) out += ',';
    first_part = false;
    out += '<';
    const auto& subset = map.subset_of(p);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(subset[i]);
    }
    out += '>';
  }
  out += '}';
  return out;
}

}  // namespace dsmt
