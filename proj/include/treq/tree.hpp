#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace treq {

// Hard ceiling on leaf counts for exhaustive enumeration and counting.
inline constexpr int kLeafGuard = 16;

// Full binary tree, stored as its preorder structure word
// (1 = internal node, 0 = leaf).  A single leaf is "0".
class BinaryTree {
 public:
  BinaryTree() : bits_{0}, leaf_count_(1) {}

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree from_structure_bits(const std::string& bits);
  static BinaryTree from_left_depths(const std::vector<int>& seq);

  int leaf_count() const { return leaf_count_; }
  const std::vector<std::uint8_t>& structure() const { return bits_; }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

  friend BinaryTree wedge(const BinaryTree& left, const BinaryTree& right);

 private:
  std::vector<std::uint8_t> bits_;
  int leaf_count_;
};

BinaryTree wedge(const BinaryTree& left, const BinaryTree& right);

// Mirror image: left and right children swapped at every internal node.
BinaryTree opposite(const BinaryTree& t);

// Left depths and right depths of the leaves, in left-to-right order.
// Appends to ld/rd so callers can reuse buffers in hot loops.
void leaf_depths(const BinaryTree& t, std::vector<int>& ld, std::vector<int>& rd);

struct DepthProfile {
  std::vector<int> left_depths;
  std::vector<int> right_depths;
  std::vector<int> total_depths;
  std::vector<std::string> addresses;  // root-to-leaf paths, 0 = left
};

DepthProfile depth_profile(const BinaryTree& t);

// True if seq is the left-depth sequence of some tree: it must end in 0
// and every earlier entry e must satisfy 1 <= e <= next + 1.
bool is_left_depth_sequence(const std::vector<int>& seq);

// Reconstructs all leaf addresses from a valid left-depth sequence alone.
std::vector<std::string> addresses_from_left_depths(const std::vector<int>& seq);

// A bracketing of x1..xn together with the tree it describes.  The text is
// canonical: no whitespace, no parentheses around the whole expression.
struct Bracketing {
  std::string text;
  BinaryTree tree;
};

// Accepts variables x1..xn in order, parentheses around inner products,
// optional whitespace, and an implicit outermost product.
Bracketing parse_bracketing(const std::string& text);

enum class BracketingStyle { variables, structure_bits };

std::string format_bracketing(const BinaryTree& t, BracketingStyle style);

// Calls visit for each tree with n leaves, smaller left subtrees first.
void enumerate_trees(int n, const std::function<void(const BinaryTree&)>& visit,
                     int guard = kLeafGuard);
std::vector<BinaryTree> all_trees(int n, int guard = kLeafGuard);

mpz_class catalan(unsigned long n);

// Depth differences at the first (or last) leaf where two equal-sized trees
// disagree in left or right depth.  Leaves are numbered from 1.
struct Divergence {
  int leaf;
  long long ld_diff;
  long long rd_diff;
};

std::optional<Divergence> first_divergence(const BinaryTree& t, const BinaryTree& u);
std::optional<Divergence> last_divergence(const BinaryTree& t, const BinaryTree& u);

// Probability of reaching each leaf by independent biased coin flips,
// stepping left with probability p.  Exact rationals; the probabilities
// of a tree's leaves always sum to 1.
std::vector<mpq_class> leaf_probabilities(const BinaryTree& t, const mpq_class& p);

// Inverse of leaf_probabilities for fixed p.  Throws std::invalid_argument
// if no tree realises the given probabilities.
BinaryTree tree_from_leaf_probabilities(const std::vector<mpq_class>& probs,
                                        const mpq_class& p);

}  // namespace treq
