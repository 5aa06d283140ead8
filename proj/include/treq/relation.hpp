#pragma once

#include <vector>

#include <gmpxx.h>

#include "treq/grid.hpp"
#include "treq/tree.hpp"

namespace treq {

// Families of congruences on same-sized trees, compared leafwise through
// their left/right depth vectors.
enum class RelationKind { depth, left, right, left_right, weighted, grid };

struct RelationSpec {
  RelationKind kind;
  long long k = 0;
  long long l = 0;
  long long a = 0;
  long long b = 0;
  long long m = 0;
  Grid lattice;

  // d(i) mod k equal at every leaf; k == 0 compares exact depths.
  static RelationSpec depth(long long k);
  // ld(i) mod k equal at every leaf.
  static RelationSpec left(long long k);
  // rd(i) mod k equal at every leaf.
  static RelationSpec right(long long k);
  // ld(i) mod k and rd(i) mod l equal at every leaf.
  static RelationSpec left_right(long long k, long long l);
  // a*ld(i) + b*rd(i) mod m equal at every leaf.
  static RelationSpec weighted(long long a, long long b, long long m);
  // (ld(i), rd(i)) equal modulo an arbitrary subgroup of Z^2.
  static RelationSpec from_grid(Grid g);
};

// Every relation is either tree equality or congruence modulo a
// two-dimensional grid.
struct NormalizedRelation {
  bool equality;
  Grid grid;  // two-dimensional exactly when equality is false
};

NormalizedRelation normalize_relation(const RelationSpec& spec);

// Flattened per-leaf invariant; two equal-sized trees are related exactly
// when their keys coincide.
std::vector<long long> leaf_key(const BinaryTree& t, const RelationSpec& spec);

bool equivalent(const BinaryTree& t, const BinaryTree& u, const RelationSpec& spec);

// Number of classes of trees with n leaves.  threads == 0 uses all cores.
mpz_class count_classes(int n, const RelationSpec& spec, int threads = 0,
                        int guard = kLeafGuard);

// The classes themselves, ordered by first appearance in enumeration order.
std::vector<std::vector<BinaryTree>> classes(int n, const RelationSpec& spec,
                                             int guard = kLeafGuard);

// Closed form for the number of depth-relation classes:
// sum over j of (-1)^j/n * C(n,j) * C(2n-jk, n+1).
mpz_class modular_catalan(long long k, long long n);

}  // namespace treq
