#include "treq/quasigroup.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "treq/errors.hpp"
#include "treq/relation.hpp"

namespace treq {

namespace {

long long mod_floor(__int128 a, long long m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<long long>(r);
}

long long pow_mod(long long base, long long exp, long long m) {
  base = mod_floor(base, m);
  long long result = 1 % m;
  while (exp > 0) {
    if (exp & 1) result = mod_floor((__int128)result * base, m);
    base = mod_floor((__int128)base * base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

LinearQuasigroup::LinearQuasigroup(std::vector<QuasigroupComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("a quasigroup needs at least one component");
  }
  for (QuasigroupComponent& c : components_) {
    if (c.m < 1) throw std::invalid_argument("component modulus must be positive");
    c.a = mod_floor(c.a, c.m);
    c.b = mod_floor(c.b, c.m);
    if (std::gcd(c.a, c.m) != 1 || std::gcd(c.b, c.m) != 1) {
      throw std::invalid_argument("component multipliers must be units");
    }
  }
}

mpz_class LinearQuasigroup::size() const {
  mpz_class total = 1;
  for (const QuasigroupComponent& c : components_) total *= static_cast<long>(c.m);
  return total;
}

LinearQuasigroup::Element LinearQuasigroup::multiply(const Element& x,
                                                     const Element& y) const {
  if (x.size() != components_.size() || y.size() != components_.size()) {
    throw std::invalid_argument("element has the wrong number of components");
  }
  Element out(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const QuasigroupComponent& c = components_[i];
    out[i] = mod_floor((__int128)c.a * x[i] + (__int128)c.b * y[i], c.m);
  }
  return out;
}

LinearQuasigroup parse_quasigroup(const std::string& literal) {
  std::vector<QuasigroupComponent> components;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < literal.size() && literal[pos] == ' ') ++pos;
  };
  auto parse_integer = [&]() -> long long {
    skip_spaces();
    std::size_t start = pos;
    if (pos < literal.size() && (literal[pos] == '+' || literal[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < literal.size() &&
           std::isdigit(static_cast<unsigned char>(literal[pos]))) {
      ++pos;
    }
    if (pos == digits) throw ParseError("expected an integer", start);
    try {
      return std::stoll(literal.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  };
  auto expect = [&](char c) {
    skip_spaces();
    if (pos >= literal.size() || literal[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  while (true) {
    QuasigroupComponent c;
    c.m = parse_integer();
    expect(':');
    c.a = parse_integer();
    expect(',');
    c.b = parse_integer();
    components.push_back(c);
    skip_spaces();
    if (pos >= literal.size()) break;
    expect(';');
  }
  return LinearQuasigroup(std::move(components));
}

std::string quasigroup_literal(const LinearQuasigroup& q) {
  std::string out;
  for (const QuasigroupComponent& c : q.components()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c.m) + ":" + std::to_string(c.a) + "," +
           std::to_string(c.b);
  }
  return out;
}

Identity make_identity(const std::string& lhs, const std::string& rhs) {
  Identity id{parse_bracketing(lhs), parse_bracketing(rhs)};
  if (id.lhs.tree.leaf_count() != id.rhs.tree.leaf_count()) {
    throw std::invalid_argument("identity sides must bracket the same variables");
  }
  return id;
}

namespace {

LinearQuasigroup::Element evaluate_recursive(
    const std::vector<std::uint8_t>& bits, std::size_t& i, std::size_t& leaf,
    const LinearQuasigroup& q, const std::vector<LinearQuasigroup::Element>& leaves) {
  if (bits[i] == 0) {
    ++i;
    return leaves[leaf++];
  }
  ++i;
  LinearQuasigroup::Element left = evaluate_recursive(bits, i, leaf, q, leaves);
  LinearQuasigroup::Element right = evaluate_recursive(bits, i, leaf, q, leaves);
  return q.multiply(left, right);
}

}  // namespace

LinearQuasigroup::Element evaluate(const BinaryTree& t, const LinearQuasigroup& q,
                                   const std::vector<LinearQuasigroup::Element>& leaves) {
  std::size_t n = t.leaf_count();
  if (leaves.size() != n) {
    throw std::invalid_argument("assignment size does not match the leaf count");
  }
  std::vector<LinearQuasigroup::Element> reduced(leaves);
  for (LinearQuasigroup::Element& x : reduced) {
    if (x.size() != q.components().size()) {
      throw std::invalid_argument("element has the wrong number of components");
    }
    for (std::size_t c = 0; c < x.size(); ++c) {
      x[c] = mod_floor(x[c], q.components()[c].m);
    }
  }

  std::size_t i = 0;
  std::size_t leaf = 0;
  LinearQuasigroup::Element by_recursion =
      evaluate_recursive(t.structure(), i, leaf, q, reduced);

  std::vector<int> ld, rd;
  leaf_depths(t, ld, rd);
  LinearQuasigroup::Element by_coefficients(q.components().size());
  for (std::size_t c = 0; c < q.components().size(); ++c) {
    const QuasigroupComponent& comp = q.components()[c];
    __int128 acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      long long coeff = mod_floor((__int128)pow_mod(comp.a, ld[j], comp.m) *
                                      pow_mod(comp.b, rd[j], comp.m),
                                  comp.m);
      acc += (__int128)coeff * reduced[j][c];
    }
    by_coefficients[c] = mod_floor(acc, comp.m);
  }

  if (by_recursion != by_coefficients) {
    throw OracleError("recursive and coefficient evaluation disagree");
  }
  return by_recursion;
}

namespace {

bool satisfies_closed_form(const LinearQuasigroup& q, const Identity& id) {
  std::vector<int> ld_l, rd_l, ld_r, rd_r;
  leaf_depths(id.lhs.tree, ld_l, rd_l);
  leaf_depths(id.rhs.tree, ld_r, rd_r);
  for (const QuasigroupComponent& c : q.components()) {
    for (std::size_t i = 0; i < ld_l.size(); ++i) {
      long long lhs = mod_floor((__int128)pow_mod(c.a, ld_l[i], c.m) *
                                    pow_mod(c.b, rd_l[i], c.m),
                                c.m);
      long long rhs = mod_floor((__int128)pow_mod(c.a, ld_r[i], c.m) *
                                    pow_mod(c.b, rd_r[i], c.m),
                                c.m);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool satisfies_brute_force(const LinearQuasigroup& q, const Identity& id,
                           long long budget) {
  int n = id.lhs.tree.leaf_count();
  mpz_class assignments;
  mpz_pow_ui(assignments.get_mpz_t(), q.size().get_mpz_t(), n);
  if (assignments > static_cast<long>(budget)) {
    throw BudgetError("brute force needs " + assignments.get_str() +
                      " assignments, budget is " + std::to_string(budget));
  }

  std::size_t k = q.components().size();
  std::vector<LinearQuasigroup::Element> leaves(
      n, LinearQuasigroup::Element(k, 0));
  const std::vector<std::uint8_t>& lhs_bits = id.lhs.tree.structure();
  const std::vector<std::uint8_t>& rhs_bits = id.rhs.tree.structure();
  for (;;) {
    std::size_t i = 0, leaf = 0;
    LinearQuasigroup::Element lhs = evaluate_recursive(lhs_bits, i, leaf, q, leaves);
    i = 0;
    leaf = 0;
    LinearQuasigroup::Element rhs = evaluate_recursive(rhs_bits, i, leaf, q, leaves);
    if (lhs != rhs) return false;

    // Odometer over all leaf digits.
    std::size_t digit = 0;
    for (; digit < leaves.size() * k; ++digit) {
      long long& x = leaves[digit / k][digit % k];
      if (++x < q.components()[digit % k].m) break;
      x = 0;
    }
    if (digit == leaves.size() * k) return true;
  }
}

}  // namespace

bool satisfies(const LinearQuasigroup& q, const Identity& id, CheckMethod method,
               long long budget) {
  return method == CheckMethod::closed_form ? satisfies_closed_form(q, id)
                                            : satisfies_brute_force(q, id, budget);
}

Grid fine_spectrum_grid(const LinearQuasigroup& q) {
  std::vector<long long> moduli, a, b;
  for (const QuasigroupComponent& c : q.components()) {
    moduli.push_back(c.m);
    a.push_back(c.a);
    b.push_back(c.b);
  }
  return kernel_of_pair(PairAction::multiplication(moduli, a, b));
}

mpz_class spectrum(const LinearQuasigroup& q, int n, int threads, int guard) {
  return count_classes(n, RelationSpec::from_grid(fine_spectrum_grid(q)), threads,
                       guard);
}

Classification classify(const LinearQuasigroup& q) {
  Grid g = fine_spectrum_grid(q);
  return {g == Grid::full(), g};
}

bool consequence(const Identity& from, const Identity& to) {
  Grid from_span = span_difference(from.lhs.tree, from.rhs.tree);
  Grid to_span = span_difference(to.lhs.tree, to.rhs.tree);
  return subgrid(to_span, from_span);
}

namespace {

// Single-component evaluation used by the cross-check inner loop.
long long evaluate_single(const std::vector<std::uint8_t>& bits, std::size_t& i,
                          std::size_t& leaf, const long long* x, long long a,
                          long long b, long long m) {
  if (bits[i] == 0) {
    ++i;
    return x[leaf++];
  }
  ++i;
  long long left = evaluate_single(bits, i, leaf, x, a, b, m);
  long long right = evaluate_single(bits, i, leaf, x, a, b, m);
  return mod_floor((__int128)a * left + (__int128)b * right, m);
}

std::string assignment_text(const std::vector<long long>& digits) {
  std::string out = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(digits[i]);
  }
  return out + ")";
}

// All ordered tree pairs for one unit pair (a,b); returns an error message
// or the empty string.
std::string cross_check_unit_pair(int n, long long m, long long a, long long b,
                                  const std::vector<BinaryTree>& trees) {
  std::size_t count = trees.size();

  // Brute force: evaluate every tree under every assignment and mark the
  // pairs that ever differ.
  std::vector<char> brute(count * count, 1);
  std::vector<long long> digits(n, 0);
  std::vector<long long> values(count);
  for (;;) {
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t i = 0, leaf = 0;
      values[t] =
          evaluate_single(trees[t].structure(), i, leaf, digits.data(), a, b, m);
    }
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t t = s + 1; t < count; ++t) {
        if (values[s] != values[t]) {
          brute[s * count + t] = 0;
          brute[t * count + s] = 0;
        }
      }
    }
    int digit = 0;
    for (; digit < n; ++digit) {
      if (++digits[digit] < m) break;
      digits[digit] = 0;
    }
    if (digit == n) break;
  }

  LinearQuasigroup q({{m, a, b}});
  Grid kernel = fine_spectrum_grid(q);
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = 0; t < count; ++t) {
      Identity id{Bracketing{format_bracketing(trees[s], BracketingStyle::variables),
                             trees[s]},
                  Bracketing{format_bracketing(trees[t], BracketingStyle::variables),
                             trees[t]}};
      bool by_closed = satisfies_closed_form(q, id);
      bool by_grid = subgrid(span_difference(trees[s], trees[t]), kernel);
      bool by_brute = brute[s * count + t] != 0;
      if (by_brute != by_closed || by_closed != by_grid) {
        std::ostringstream msg;
        msg << "methods disagree for quasigroup " << quasigroup_literal(q)
            << " on " << id.lhs.text << " vs " << id.rhs.text
            << ": brute=" << (by_brute ? "true" : "false")
            << " closed=" << (by_closed ? "true" : "false")
            << " grid=" << (by_grid ? "true" : "false");
        if (!by_brute) {
          // Recover the first assignment telling the two sides apart.
          std::fill(digits.begin(), digits.end(), 0);
          for (;;) {
            std::size_t i = 0, leaf = 0;
            long long lhs = evaluate_single(trees[s].structure(), i, leaf,
                                            digits.data(), a, b, m);
            i = 0;
            leaf = 0;
            long long rhs = evaluate_single(trees[t].structure(), i, leaf,
                                            digits.data(), a, b, m);
            if (lhs != rhs) {
              msg << "; first differing assignment " << assignment_text(digits)
                  << " gives " << lhs << " vs " << rhs;
              break;
            }
            int digit = 0;
            for (; digit < n; ++digit) {
              if (++digits[digit] < m) break;
              digits[digit] = 0;
            }
            if (digit == n) break;
          }
        }
        return msg.str();
      }
    }
  }
  return std::string();
}

}  // namespace

OracleReport cross_check(int n, long long m, long long budget, int threads) {
  if (n < 1) throw std::invalid_argument("leaf count must be positive");
  if (m < 1) throw std::invalid_argument("modulus must be positive");

  std::vector<long long> units;
  for (long long a = 0; a < std::max<long long>(m, 1); ++a) {
    if (std::gcd(a, m) == 1) units.push_back(a);
  }

  // Total brute-force work: one evaluation per unit pair, assignment and tree.
  mpz_class assignments;
  mpz_class base(static_cast<long>(m));
  mpz_pow_ui(assignments.get_mpz_t(), base.get_mpz_t(), n);
  mpz_class work = assignments * catalan(n - 1) * units.size() * units.size();
  if (work > static_cast<long>(budget)) {
    throw BudgetError("oracle needs " + work.get_str() +
                      " evaluations, budget is " + std::to_string(budget));
  }

  std::vector<BinaryTree> trees = all_trees(n);

  std::vector<std::pair<long long, long long>> pairs;
  for (long long a : units) {
    for (long long b : units) pairs.push_back({a, b});
  }

  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  std::vector<std::string> failures(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= pairs.size()) return;
      failures[i] =
          cross_check_unit_pair(n, m, pairs[i].first, pairs[i].second, trees);
    }
  };
  std::vector<std::thread> pool;
  int worker_count = std::min<int>(threads, static_cast<int>(pairs.size()));
  for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (const std::string& failure : failures) {
    if (!failure.empty()) throw OracleError(failure);
  }

  long long unit_pairs = static_cast<long long>(pairs.size());
  long long bracketing_pairs = static_cast<long long>(trees.size()) *
                               static_cast<long long>(trees.size());
  return {unit_pairs, bracketing_pairs};
}

}  // namespace treq
