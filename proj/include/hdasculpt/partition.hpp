#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hdasculpt {

// Equivalence relation on {0..n-1}, stored as a restricted-growth string:
// block numbers appear in order of first use.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(int n) {
    Partition p;
    p.labels_.resize(n);
    std::iota(p.labels_.begin(), p.labels_.end(), 0);
    return p;
  }

  static Partition from_labels(const std::vector<int>& labels) {
    Partition p;
    std::vector<std::pair<int, int>> seen;
    for (int l : labels) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto& pr) { return pr.first == l; });
      if (it == seen.end()) {
        seen.push_back({l, static_cast<int>(seen.size())});
        p.labels_.push_back(seen.back().second);
      } else {
        p.labels_.push_back(it->second);
      }
    }
    return p;
  }

  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels(n, -1);
    int next = 0;
    for (const auto& b : blocks) {
      for (int e : b) labels[e] = next;
      ++next;
    }
    for (int& l : labels)
      if (l < 0) l = next++;
    return from_labels(labels);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int block(int e) const { return labels_[e]; }
  bool same(int a, int b) const { return labels_[a] == labels_[b]; }
  int num_blocks() const {
    return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
  }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(num_blocks());
    for (int e = 0; e < size(); ++e) out[labels_[e]].push_back(e);
    return out;
  }

  Partition merged(int a, int b) const {
    int la = labels_[a], lb = labels_[b];
    if (la == lb) return *this;
    std::vector<int> l = labels_;
    for (int& x : l)
      if (x == lb) x = la;
    return from_labels(l);
  }

  bool refines(const Partition& coarser) const {
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (same(a, b) && !coarser.same(a, b)) return false;
    return true;
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> labels_;
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n = 0) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  Partition partition() {
    std::vector<int> l(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) l[i] = find(static_cast<int>(i));
    return Partition::from_labels(l);
  }
};

}  // namespace hdasculpt
