#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hdasculpt {

// Finite set of small non-negative integers. Stored without trailing zero
// words so that equal sets compare equal regardless of history.
class EventSet {
 public:
  EventSet() = default;
  EventSet(std::initializer_list<int> xs) {
    for (int x : xs) insert(x);
  }
  template <class It>
  EventSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }

  bool contains(int e) const {
    std::size_t w = static_cast<std::size_t>(e) / 64;
    return w < words_.size() && (words_[w] >> (e % 64) & 1u);
  }
  void insert(int e) {
    std::size_t w = static_cast<std::size_t>(e) / 64;
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (e % 64);
  }
  void erase(int e) {
    std::size_t w = static_cast<std::size_t>(e) / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (e % 64));
    trim();
  }
  EventSet with(int e) const {
    EventSet c = *this;
    c.insert(e);
    return c;
  }
  EventSet without(int e) const {
    EventSet c = *this;
    c.erase(e);
    return c;
  }

  bool empty() const { return words_.empty(); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const EventSet& o) const {
    if (words_.size() > o.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const EventSet& o) const {
    std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  EventSet operator|(const EventSet& o) const {
    EventSet r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i)
      r.words_[i] = word(i) | o.word(i);
    return r;
  }
  EventSet operator&(const EventSet& o) const {
    EventSet r;
    r.words_.resize(std::min(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    r.trim();
    return r;
  }
  EventSet operator-(const EventSet& o) const {
    EventSet r = *this;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~o.word(i);
    r.trim();
    return r;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  // Image under a map on elements.
  template <class F>
  EventSet map(F&& f) const {
    EventSet r;
    for (int e : members()) r.insert(f(e));
    return r;
  }

  bool operator==(const EventSet&) const = default;
  // Orders by sorted member list, so printed structures come out sorted.
  bool operator<(const EventSet& o) const { return members() < o.members(); }

  std::size_t hash() const {
    std::size_t h = words_.size();
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }
  std::vector<std::uint64_t> words_;
};

struct EventSetHash {
  std::size_t operator()(const EventSet& s) const { return s.hash(); }
};

}  // namespace hdasculpt
