#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bcpc {

/// Disjoint sets over dense integer ids with union by rank and path
/// compression. Not safe for concurrent mutation.
class DisjointSets {
 public:
  DisjointSets() = default;

  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), count_(n) {
    if (n < 0) throw std::invalid_argument("DisjointSets: negative size");
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int size() const { return static_cast<int>(parent_.size()); }

  /// Number of disjoint sets currently represented.
  int count() const { return count_; }

  /// Append one fresh singleton element; returns its id.
  int add() {
    int id = size();
    parent_.push_back(id);
    rank_.push_back(0);
    ++count_;
    return id;
  }

  int find(int i) {
    check(i);
    int root = i;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[i] != root) {
      int next = parent_[i];
      parent_[i] = root;
      i = next;
    }
    return root;
  }

  /// Merge the sets holding i and j. Returns true iff they were distinct.
  bool unite(int i, int j) {
    int a = find(i);
    int b = find(j);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --count_;
    return true;
  }

  /// Structural rank of i's tree node; stays within log2(size)+1.
  int rank_of(int i) const {
    check(i);
    return rank_[i];
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("DisjointSets: element out of range");
  }

  std::vector<int> parent_;
  std::vector<std::uint8_t> rank_;
  int count_ = 0;
};

}  // namespace bcpc
