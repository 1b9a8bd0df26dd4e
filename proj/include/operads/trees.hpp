#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "operads/rational.hpp"

namespace operads {

/// Planar rooted m-ary tree. Every internal vertex has exactly m ordered
/// children; the degree is the number of internal vertices, leaf count is
/// (m-1)*degree + 1. The arity is carried on every value and checked at each
/// combination point.
class MTree {
 public:
  explicit MTree(int arity);                     // leaf
  MTree(int arity, std::vector<MTree> children); // internal vertex

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  bool is_leaf() const { return children_.empty(); }
  const std::vector<MTree>& children() const { return children_; }

  friend bool operator==(const MTree& a, const MTree& b) {
    return a.arity_ == b.arity_ && a.children_ == b.children_;
  }

 private:
  int arity_;
  int degree_ = 0;
  std::vector<MTree> children_;
};

/// Canonical text form: leaf = ".", node = "(" child { " " child } ")".
/// Lexicographic order on keys is the canonical basis order.
using TreeKey = std::string;

MTree corolla(int m);

/// Grafts m subtrees of a common arity under a new root.
MTree graft(std::vector<MTree> children);

/// Mirror image across the central axis: children reversed at every level.
MTree involution(const MTree& t);

int leaf_count(const MTree& t);

TreeKey tree_key(const MTree& t);
MTree parse_tree(int m, std::string_view text);

/// Number of arity-m trees of degree n: (mn)! / (n! ((m-1)n + 1)!).
Integer tree_count(int m, int n);

/// All degree-n arity-m trees, sorted by TreeKey. Memoized; thread-safe.
const std::vector<MTree>& enumerate_trees(int m, int n);

}  // namespace operads
