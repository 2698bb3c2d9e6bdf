#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "resgame/formula.hpp"

namespace resgame {

// Finite multiset of formulas. Iteration is in canonical order
// (lexicographic on printed text); zero multiplicities are never stored.
class ResourceBag {
 public:
  using Map = std::map<Formula, std::size_t>;
  using const_iterator = Map::const_iterator;

  ResourceBag() = default;
  ResourceBag(std::initializer_list<Formula> items);
  explicit ResourceBag(const std::vector<Formula>& items);

  void add(const Formula& f, std::size_t count = 1);
  // Removes `count` copies; returns false (and changes nothing) if fewer are present.
  bool remove(const Formula& f, std::size_t count = 1);

  std::size_t count(const Formula& f) const;
  bool contains(const Formula& f) const { return count(f) > 0; }
  std::size_t size() const noexcept { return size_; }
  std::size_t distinct() const noexcept { return items_.size(); }
  bool empty() const noexcept { return size_ == 0; }

  std::vector<Formula> elements() const;  // with repetitions, canonical order
  std::vector<Formula> support() const;

  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }

  ResourceBag& operator+=(const ResourceBag& other);
  friend ResourceBag operator+(ResourceBag a, const ResourceBag& b) { return a += b; }
  // Multiset difference; multiplicities saturate at zero.
  friend ResourceBag operator-(const ResourceBag& a, const ResourceBag& b);

  friend bool operator==(const ResourceBag&, const ResourceBag&) = default;
  friend std::strong_ordering operator<=>(const ResourceBag& a, const ResourceBag& b);

  std::string to_string() const;  // "{A, A, B}"

 private:
  Map items_;
  std::size_t size_ = 0;
};

// a ⊆ b, multiplicity-wise.
bool subbag(const ResourceBag& a, const ResourceBag& b);
// a ⊂ b.
bool strict_subbag(const ResourceBag& a, const ResourceBag& b);

// All sub-bags: exactly prod(m_k + 1) of them, starting with {} and ending with the bag.
std::vector<ResourceBag> multisubsets(const ResourceBag& bag);
std::uint64_t multisubset_count(const ResourceBag& bag);

// Left-associated tensor in canonical order; {} gives 1.
Formula tensor_fold(const ResourceBag& bag);

std::ostream& operator<<(std::ostream& os, const ResourceBag& bag);

}  // namespace resgame
