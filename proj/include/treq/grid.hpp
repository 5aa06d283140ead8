#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "treq/tree.hpp"

namespace treq {

struct GridPoint {
  long long r = 0;
  long long s = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Subgroup of Z^2 in canonical form.  Dimension 2 is stored as the
// lower-triangular basis Z(u,v) + Z(w,0) with v > 0, w > 0, 0 <= u < w;
// dimension 1 as a single sign-normalised generator; dimension 0 is {0}.
class Grid {
 public:
  Grid() = default;  // the zero grid

  static Grid zero() { return Grid(); }
  static Grid line(GridPoint generator);
  static Grid lattice(long long u, long long v, long long w);
  static Grid full() { return lattice(0, 1, 1); }

  int dimension() const { return dim_; }

  // Dimension 1 only.
  GridPoint generator() const;
  GridPoint direction() const;  // generator divided by its content
  long long content() const;

  // Dimension 2 only.
  long long u() const;
  long long v() const;
  long long w() const;

  // The canonical generators: none, one, or {(u,v), (w,0)}.
  std::vector<GridPoint> generators() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int dim_ = 0;
  long long u_ = 0;
  long long v_ = 0;
  long long w_ = 0;
  long long g1_ = 0;
  long long g2_ = 0;
};

// Canonical form of the subgroup generated by arbitrary points.
Grid canonical_grid(const std::vector<GridPoint>& gens);

bool contains(const Grid& g, GridPoint pt);

// Index of the subgroup in Z^2; nullopt when infinite.
std::optional<mpz_class> grid_index(const Grid& g);

// Intersection and generated join; both closed under canonical form.
Grid meet(const Grid& a, const Grid& b);
Grid join(const Grid& a, const Grid& b);

bool subgrid(const Grid& inner, const Grid& outer);

// Canonical representative of pt modulo the grid.  Two points get the same
// key exactly when their difference lies in the grid.
GridPoint coset_key(const Grid& g, GridPoint pt);

// Smith invariants d1 | d2 of the finite quotient Z^2/grid (dimension 2 only).
std::pair<mpz_class, mpz_class> quotient_invariants(const Grid& g);

// The maximal proper subgrids of Z^2: the p+1 subgroups of prime index p.
std::vector<Grid> coatoms(long long p);

// {(r,s) : a*r + b*s == 0 (mod m)} in canonical form.  m == 0 means exact
// equality over the integers.
Grid modular_kernel_grid(long long a, long long b, long long m);

// Commuting pair acting componentwise on Z_m1 x ... x Z_mk, either by
// translation (x -> x + a) or by unit multiplication (x -> a * x).
struct PairAction {
  enum class Kind { translation, multiplication };

  Kind kind;
  std::vector<long long> moduli;
  std::vector<long long> a;
  std::vector<long long> b;

  static PairAction translation(std::vector<long long> moduli,
                                std::vector<long long> a,
                                std::vector<long long> b);
  static PairAction multiplication(std::vector<long long> moduli,
                                   std::vector<long long> a,
                                   std::vector<long long> b);
};

// The grid of exponent pairs (r,s) with a^r b^s = id.
Grid kernel_of_pair(const PairAction& action);

// Differences of leaf depth vectors of two equal-sized trees, as a grid.
Grid span_difference(const BinaryTree& t, const BinaryTree& u);

bool is_treealisable(const Grid& g);

// A pair of equal-sized trees whose span_difference is exactly g.
// Defined for two-dimensional grids.
std::pair<BinaryTree, BinaryTree> treealise(const Grid& g);

// "0", "Z(g1,g2)" or "Z(u,v)+Z(w,0)".
std::string grid_literal(const Grid& g);

// "r,s" and "r1,s1;r2,s2;..." with optional spaces.
GridPoint parse_point(const std::string& text);
std::vector<GridPoint> parse_points(const std::string& text);

}  // namespace treq
