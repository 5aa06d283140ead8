#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "treq/grid.hpp"
#include "treq/tree.hpp"

namespace treq {

// One cyclic factor Z_m with x * y = a*x + b*y, where a and b are units.
struct QuasigroupComponent {
  long long m;
  long long a;
  long long b;
};

// Finite product of such factors, multiplied componentwise.
class LinearQuasigroup {
 public:
  using Element = std::vector<long long>;

  explicit LinearQuasigroup(std::vector<QuasigroupComponent> components);

  const std::vector<QuasigroupComponent>& components() const {
    return components_;
  }
  mpz_class size() const;

  Element multiply(const Element& x, const Element& y) const;

 private:
  std::vector<QuasigroupComponent> components_;
};

// "m:a,b;m:a,b;..." with optional spaces.
LinearQuasigroup parse_quasigroup(const std::string& literal);
std::string quasigroup_literal(const LinearQuasigroup& q);

// Both sides bracket the same variables x1..xn.
struct Identity {
  Bracketing lhs;
  Bracketing rhs;
};

Identity make_identity(const std::string& lhs, const std::string& rhs);

// Value of the bracketing under the given leaf assignment.  Computed twice,
// by structural recursion and from the closed-form leaf coefficients
// a^ld * b^rd; a disagreement throws OracleError.
LinearQuasigroup::Element evaluate(const BinaryTree& t, const LinearQuasigroup& q,
                                   const std::vector<LinearQuasigroup::Element>& leaves);

enum class CheckMethod { closed_form, brute_force };

inline constexpr long long kDefaultBudget = 10000000;

// Whether the identity holds for every assignment.  brute_force tries all
// assignments (throwing BudgetError past the budget); closed_form compares
// leaf coefficients.
bool satisfies(const LinearQuasigroup& q, const Identity& id, CheckMethod method,
               long long budget = kDefaultBudget);

// Meet over components of the exponent kernels of (a, b): the grid whose
// congruence matches exactly the identities the quasigroup satisfies.
Grid fine_spectrum_grid(const LinearQuasigroup& q);

// Number of n-leaf bracketings distinguishable inside the quasigroup.
mpz_class spectrum(const LinearQuasigroup& q, int n, int threads = 0,
                   int guard = kLeafGuard);

struct Classification {
  bool associative;
  Grid grid;
};

Classification classify(const LinearQuasigroup& q);

// Whether every linear quasigroup satisfying `from` also satisfies `to`.
bool consequence(const Identity& from, const Identity& to);

// Cross-checks brute force, closed form and grid membership against each
// other: every unit pair (a,b) mod m, every ordered pair of n-leaf
// bracketings.  Throws OracleError on any disagreement.
struct OracleReport {
  long long unit_pairs;
  long long bracketing_pairs;
};

OracleReport cross_check(int n, long long m, long long budget = kDefaultBudget,
                         int threads = 0);

}  // namespace treq
