#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dsmt {

// One elementary region of the Venn diagram, numbered in [1, 2^n - 1].
using PartId = std::uint32_t;

// Canonical code of an element: a strictly ascending, duplicate-free list of
// part ids. The empty code denotes the empty element. Union and intersection
// of elements are plain set operations on their codes, which is the whole
// point of the representation.
class ElementCode {
 public:
  ElementCode() = default;

  explicit ElementCode(std::vector<PartId> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
  }

  ElementCode(std::initializer_list<PartId> parts)
      : ElementCode(std::vector<PartId>(parts)) {}

  const std::vector<PartId>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t cardinality() const { return parts_.size(); }

  bool contains(PartId p) const {
    return std::binary_search(parts_.begin(), parts_.end(), p);
  }

  bool subset_of(const ElementCode& other) const {
    return std::includes(other.parts_.begin(), other.parts_.end(),
                         parts_.begin(), parts_.end());
  }

  bool intersects(const ElementCode& other) const {
    auto a = parts_.begin();
    auto b = other.parts_.begin();
    while (a != parts_.end() && b != other.parts_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        return true;
      }
    }
    return false;
  }

  friend ElementCode code_union(const ElementCode& a, const ElementCode& b) {
    std::vector<PartId> out;
    out.reserve(a.parts_.size() + b.parts_.size());
    std::set_union(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                   b.parts_.end(), std::back_inserter(out));
    return ElementCode(Sorted{}, std::move(out));
  }

  friend ElementCode code_intersection(const ElementCode& a,
                                       const ElementCode& b) {
    std::vector<PartId> out;
    std::set_intersection(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                          b.parts_.end(), std::back_inserter(out));
    return ElementCode(Sorted{}, std::move(out));
  }

  friend ElementCode code_difference(const ElementCode& a,
                                     const ElementCode& b) {
    std::vector<PartId> out;
    std::set_difference(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                        b.parts_.end(), std::back_inserter(out));
    return ElementCode(Sorted{}, std::move(out));
  }

  bool operator==(const ElementCode& other) const = default;

  // "[1 2 5]", "[]" for the empty element.
  std::string to_bracket_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
  }

 private:
  struct Sorted {};  // tag: input already canonical
  ElementCode(Sorted, std::vector<PartId> parts) : parts_(std::move(parts)) {}

  std::vector<PartId> parts_;
};

// DSm cardinality: the number of Venn parts composing the element.
inline std::size_t dsm_cardinality(const ElementCode& code) {
  return code.cardinality();
}

struct ElementCodeHash {
  std::size_t operator()(const ElementCode& code) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (PartId p : code.parts()) {
      h ^= p;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

}  // namespace dsmt
