#include "resgame/bag.hpp"

#include <ostream>

namespace resgame {

ResourceBag::ResourceBag(std::initializer_list<Formula> items) {
  for (const auto& f : items) add(f);
}

ResourceBag::ResourceBag(const std::vector<Formula>& items) {
  for (const auto& f : items) add(f);
}

void ResourceBag::add(const Formula& f, std::size_t count) {
  if (count == 0) return;
  items_[f] += count;
  size_ += count;
}

bool ResourceBag::remove(const Formula& f, std::size_t count) {
  if (count == 0) return true;
  auto it = items_.find(f);
  if (it == items_.end() || it->second < count) return false;
  it->second -= count;
  if (it->second == 0) items_.erase(it);
  size_ -= count;
  return true;
}

std::size_t ResourceBag::count(const Formula& f) const {
  auto it = items_.find(f);
  return it == items_.end() ? 0 : it->second;
}

std::vector<Formula> ResourceBag::elements() const {
  std::vector<Formula> out;
  out.reserve(size_);
  for (const auto& [f, m] : items_) out.insert(out.end(), m, f);
  return out;
}

std::vector<Formula> ResourceBag::support() const {
  std::vector<Formula> out;
  out.reserve(items_.size());
  for (const auto& [f, m] : items_) out.push_back(f);
  return out;
}

ResourceBag& ResourceBag::operator+=(const ResourceBag& other) {
  for (const auto& [f, m] : other.items_) add(f, m);
  return *this;
}

ResourceBag operator-(const ResourceBag& a, const ResourceBag& b) {
  ResourceBag out;
  for (const auto& [f, m] : a.items_) {
    const std::size_t n = b.count(f);
    if (m > n) out.add(f, m - n);
  }
  return out;
}

std::strong_ordering operator<=>(const ResourceBag& a, const ResourceBag& b) {
  auto i = a.items_.begin();
  auto j = b.items_.begin();
  for (; i != a.items_.end() && j != b.items_.end(); ++i, ++j) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    if (auto c = i->second <=> j->second; c != 0) return c;
  }
  return (i == a.items_.end()) == (j == b.items_.end())
             ? std::strong_ordering::equal
             : (i == a.items_.end() ? std::strong_ordering::less : std::strong_ordering::greater);
}

std::string ResourceBag::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [f, m] : items_) {
    for (std::size_t k = 0; k < m; ++k) {
      if (!first) out += ", ";
      out += f.text();
      first = false;
    }
  }
  return out + "}";
}

bool subbag(const ResourceBag& a, const ResourceBag& b) {
  if (a.size() > b.size()) return false;
  for (const auto& [f, m] : a)
    if (b.count(f) < m) return false;
  return true;
}

bool strict_subbag(const ResourceBag& a, const ResourceBag& b) {
  return a.size() < b.size() && subbag(a, b);
}

std::vector<ResourceBag> multisubsets(const ResourceBag& bag) {
  std::vector<std::pair<Formula, std::size_t>> entries(bag.begin(), bag.end());
  std::vector<std::size_t> pick(entries.size(), 0);
  std::vector<ResourceBag> out;
  out.reserve(static_cast<std::size_t>(multisubset_count(bag)));
  // Mixed-radix counter; the first formula in canonical order varies fastest.
  while (true) {
    ResourceBag sub;
    for (std::size_t k = 0; k < entries.size(); ++k) sub.add(entries[k].first, pick[k]);
    out.push_back(std::move(sub));
    std::size_t k = 0;
    while (k < entries.size() && pick[k] == entries[k].second) pick[k++] = 0;
    if (k == entries.size()) break;
    ++pick[k];
  }
  return out;
}

std::uint64_t multisubset_count(const ResourceBag& bag) {
  std::uint64_t n = 1;
  for (const auto& [f, m] : bag) n *= m + 1;
  return n;
}

Formula tensor_fold(const ResourceBag& bag) {
  if (bag.empty()) return Formula::one();
  auto items = bag.elements();
  Formula acc = items.front();
  for (std::size_t k = 1; k < items.size(); ++k) acc = Formula::tensor(acc, items[k]);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const ResourceBag& bag) { return os << bag.to_string(); }

}  // namespace resgame
