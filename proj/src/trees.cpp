#include "operads/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace operads {

MTree::MTree(int arity) : arity_(arity) {
  if (arity < 2) throw std::invalid_argument("tree arity must be >= 2");
}

MTree::MTree(int arity, std::vector<MTree> children) : arity_(arity), children_(std::move(children)) {
  if (arity < 2) throw std::invalid_argument("tree arity must be >= 2");
  if (children_.size() != static_cast<std::size_t>(arity))
    throw std::invalid_argument("internal vertex needs exactly m children");
  degree_ = 1;
  for (const MTree& c : children_) {
    if (c.arity() != arity) throw std::invalid_argument("mixed arities under one root");
    degree_ += c.degree();
  }
}

MTree corolla(int m) {
  return MTree(m, std::vector<MTree>(static_cast<std::size_t>(m), MTree(m)));
}

MTree graft(std::vector<MTree> children) {
  if (children.empty()) throw std::invalid_argument("graft: no children");
  int m = children.front().arity();
  return MTree(m, std::move(children));
}

MTree involution(const MTree& t) {
  if (t.is_leaf()) return t;
  std::vector<MTree> rev;
  rev.reserve(t.children().size());
  for (auto it = t.children().rbegin(); it != t.children().rend(); ++it)
    rev.push_back(involution(*it));
  return MTree(t.arity(), std::move(rev));
}

int leaf_count(const MTree& t) { return (t.arity() - 1) * t.degree() + 1; }

namespace {

void append_key(const MTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += '.';
    return;
  }
  out += '(';
  bool first = true;
  for (const MTree& c : t.children()) {
    if (!first) out += ' ';
    first = false;
    append_key(c, out);
  }
  out += ')';
}

MTree parse_node(int m, std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw std::invalid_argument("tree text: unexpected end");
  if (text[pos] == '.') {
    ++pos;
    return MTree(m);
  }
  if (text[pos] != '(') throw std::invalid_argument("tree text: expected '.' or '('");
  ++pos;
  std::vector<MTree> children;
  children.push_back(parse_node(m, text, pos));
  while (pos < text.size() && text[pos] == ' ') {
    ++pos;
    children.push_back(parse_node(m, text, pos));
  }
  if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("tree text: expected ')'");
  ++pos;
  if (children.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("tree text: node child count does not match arity");
  return MTree(m, std::move(children));
}

}  // namespace

TreeKey tree_key(const MTree& t) {
  std::string out;
  append_key(t, out);
  return out;
}

MTree parse_tree(int m, std::string_view text) {
  std::size_t pos = 0;
  MTree t = parse_node(m, text, pos);
  if (pos != text.size()) throw std::invalid_argument("tree text: trailing characters");
  return t;
}

Integer tree_count(int m, int n) {
  if (m < 2 || n < 0) throw std::invalid_argument("tree_count: need m >= 2, n >= 0");
  Integer num = factorial(static_cast<unsigned>(m * n));
  Integer den = factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>((m - 1) * n + 1));
  return num / den;
}

namespace {

// Ordered compositions of `total` into `parts` nonnegative summands.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

void cartesian_graft(int m, const std::vector<int>& degs, std::size_t slot, std::vector<MTree>& picked,
                     std::vector<MTree>& out) {
  if (slot == degs.size()) {
    out.push_back(MTree(m, picked));
    return;
  }
  for (const MTree& t : enumerate_trees(m, degs[slot])) {
    picked.push_back(t);
    cartesian_graft(m, degs, slot + 1, picked, out);
    picked.pop_back();
  }
}

}  // namespace

const std::vector<MTree>& enumerate_trees(int m, int n) {
  if (m < 2 || n < 0) throw std::invalid_argument("enumerate_trees: need m >= 2, n >= 0");
  // Recursive mutex: cartesian_graft re-enters this function for child degrees.
  static std::map<std::pair<int, int>, std::vector<MTree>> cache;
  static std::recursive_mutex mutex;
  std::lock_guard<std::recursive_mutex> lock(mutex);

  auto key = std::make_pair(m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<MTree> trees;
  if (n == 0) {
    trees.push_back(MTree(m));
  } else {
    std::vector<std::vector<int>> degs;
    std::vector<int> cur;
    compositions(n - 1, m, cur, degs);
    for (const auto& d : degs) {
      std::vector<MTree> picked;
      cartesian_graft(m, d, 0, picked, trees);
    }
    std::sort(trees.begin(), trees.end(),
              [](const MTree& a, const MTree& b) { return tree_key(a) < tree_key(b); });
  }
  auto [pos, ignored] = cache.emplace(std::move(key), std::move(trees));
  return pos->second;
}

}  // namespace operads
