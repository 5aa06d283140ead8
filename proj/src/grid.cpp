#include "treq/grid.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "treq/errors.hpp"

namespace treq {

namespace {

using Wide = __int128;

mpz_class to_mpz(long long x) { return mpz_class(static_cast<long>(x)); }

long long narrow(Wide x) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("grid arithmetic overflow");
  }
  return static_cast<long long>(x);
}

long long mod_floor(Wide a, long long m) {
  Wide r = a % m;
  if (r < 0) r += m;
  return static_cast<long long>(r);
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  long long g = std::gcd(a, b);
  return narrow((Wide)(a / g) * b);
}

struct ExtGcd {
  long long g;
  long long x;
  long long y;
};

ExtGcd extgcd(long long a, long long b) {
  long long old_r = a, r = b;
  long long old_x = 1, x = 0;
  long long old_y = 0, y = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long t;
    t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

long long mod_inverse(long long a, long long m) {
  ExtGcd e = extgcd(mod_floor(a, m), m);
  if (e.g != 1) throw std::invalid_argument("element is not invertible");
  return mod_floor(e.x, m);
}

long long mul_mod(long long a, long long b, long long m) {
  return mod_floor((Wide)a * b, m);
}

// x == a1 (mod w1), x == a2 (mod w2); caller guarantees compatibility.
long long crt(long long a1, long long w1, long long a2, long long w2) {
  long long g = std::gcd(w1, w2);
  if ((a2 - a1) % g != 0) throw OracleError("incompatible congruences in meet");
  long long m2 = w2 / g;
  if (m2 == 1) return a1;
  long long t = mul_mod((a2 - a1) / g, mod_inverse(w1 / g, m2), m2);
  return narrow(a1 + (Wide)w1 * t);
}

}  // namespace

Grid Grid::line(GridPoint generator) {
  if (generator.r == 0 && generator.s == 0) {
    throw std::invalid_argument("a line grid needs a nonzero generator");
  }
  if (generator.s < 0 || (generator.s == 0 && generator.r < 0)) {
    generator.r = -generator.r;
    generator.s = -generator.s;
  }
  Grid g;
  g.dim_ = 1;
  g.g1_ = generator.r;
  g.g2_ = generator.s;
  return g;
}

Grid Grid::lattice(long long u, long long v, long long w) {
  if (v <= 0 || w <= 0) {
    throw std::invalid_argument("a two-dimensional grid needs v > 0 and w > 0");
  }
  Grid g;
  g.dim_ = 2;
  g.u_ = mod_floor(u, w);
  g.v_ = v;
  g.w_ = w;
  return g;
}

GridPoint Grid::generator() const {
  if (dim_ != 1) throw std::logic_error("generator() needs a one-dimensional grid");
  return {g1_, g2_};
}

GridPoint Grid::direction() const {
  GridPoint g = generator();
  long long c = std::gcd(g.r, g.s);
  return {g.r / c, g.s / c};
}

long long Grid::content() const {
  GridPoint g = generator();
  return std::gcd(g.r, g.s);
}

long long Grid::u() const {
  if (dim_ != 2) throw std::logic_error("u() needs a two-dimensional grid");
  return u_;
}

long long Grid::v() const {
  if (dim_ != 2) throw std::logic_error("v() needs a two-dimensional grid");
  return v_;
}

long long Grid::w() const {
  if (dim_ != 2) throw std::logic_error("w() needs a two-dimensional grid");
  return w_;
}

std::vector<GridPoint> Grid::generators() const {
  switch (dim_) {
    case 0:
      return {};
    case 1:
      return {{g1_, g2_}};
    default:
      return {{u_, v_}, {w_, 0}};
  }
}

Grid canonical_grid(const std::vector<GridPoint>& gens) {
  // Fold the generators with nonzero s into one by extended gcd on the
  // s-components; every leftover is a pure x-vector and joins the x pool.
  bool have_p = false;
  GridPoint p{0, 0};
  long long x_pool = 0;
  for (GridPoint g : gens) {
    if (g.r == 0 && g.s == 0) continue;
    if (g.s == 0) {
      x_pool = std::gcd(x_pool, g.r);
      continue;
    }
    if (g.s < 0) {
      g.r = -g.r;
      g.s = -g.s;
    }
    if (!have_p) {
      p = g;
      have_p = true;
      continue;
    }
    ExtGcd e = extgcd(p.s, g.s);
    long long leftover = narrow((Wide)(g.s / e.g) * p.r - (Wide)(p.s / e.g) * g.r);
    GridPoint folded{narrow((Wide)e.x * p.r + (Wide)e.y * g.r), e.g};
    x_pool = std::gcd(x_pool, leftover);
    p = folded;
  }
  if (!have_p) {
    if (x_pool == 0) return Grid::zero();
    return Grid::line({x_pool, 0});
  }
  if (x_pool == 0) return Grid::line(p);
  return Grid::lattice(p.r, p.s, x_pool);
}

bool contains(const Grid& g, GridPoint pt) {
  switch (g.dimension()) {
    case 0:
      return pt.r == 0 && pt.s == 0;
    case 1: {
      GridPoint gen = g.generator();
      if ((Wide)pt.r * gen.s != (Wide)pt.s * gen.r) return false;
      return gen.s != 0 ? pt.s % gen.s == 0 : pt.r % gen.r == 0;
    }
    default: {
      if (pt.s % g.v() != 0) return false;
      Wide rest = (Wide)g.v() * pt.r - (Wide)g.u() * pt.s;
      return rest % ((Wide)g.v() * g.w()) == 0;
    }
  }
}

std::optional<mpz_class> grid_index(const Grid& g) {
  if (g.dimension() != 2) return std::nullopt;
  return to_mpz(g.v()) * to_mpz(g.w());
}

namespace {

Grid meet_lines(const Grid& a, const Grid& b) {
  if (a.direction() != b.direction()) return Grid::zero();
  GridPoint d = a.direction();
  long long c = lcm_ll(a.content(), b.content());
  return Grid::line({narrow((Wide)c * d.r), narrow((Wide)c * d.s)});
}

Grid meet_line_lattice(const Grid& line, const Grid& lat) {
  GridPoint g = line.generator();
  long long v = lat.v(), w = lat.w(), u = lat.u();
  long long vw = narrow((Wide)v * w);
  long long t1 = v / std::gcd(v, g.s);
  Wide c = (Wide)v * g.r - (Wide)u * g.s;
  long long t2 = c == 0 ? 1 : narrow((Wide)vw / gcd_wide(vw, c));
  long long t = lcm_ll(t1, t2);
  return Grid::line({narrow((Wide)t * g.r), narrow((Wide)t * g.s)});
}

Grid meet_lattices(const Grid& a, const Grid& b) {
  long long u1 = a.u(), v1 = a.v(), w1 = a.w();
  long long u2 = b.u(), v2 = b.v(), w2 = b.w();
  long long V = lcm_ll(v1, v2);
  long long g = std::gcd(w1, w2);
  long long c = mod_floor((Wide)u1 * (V / v1) - (Wide)u2 * (V / v2), g);
  long long j0 = g / std::gcd(c, g);
  long long s_min = narrow((Wide)V * j0);
  long long a1 = mul_mod(u1, mod_floor(s_min / v1, w1), w1);
  long long a2 = mul_mod(u2, mod_floor(s_min / v2, w2), w2);
  long long W = lcm_ll(w1, w2);
  return Grid::lattice(crt(a1, w1, a2, w2), s_min, W);
}

}  // namespace

Grid meet(const Grid& a, const Grid& b) {
  if (a.dimension() == 0 || b.dimension() == 0) return Grid::zero();
  if (a.dimension() == 1 && b.dimension() == 1) return meet_lines(a, b);
  if (a.dimension() == 1) return meet_line_lattice(a, b);
  if (b.dimension() == 1) return meet_line_lattice(b, a);
  return meet_lattices(a, b);
}

Grid join(const Grid& a, const Grid& b) {
  std::vector<GridPoint> gens = a.generators();
  std::vector<GridPoint> more = b.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return canonical_grid(gens);
}

bool subgrid(const Grid& inner, const Grid& outer) {
  for (GridPoint g : inner.generators()) {
    if (!contains(outer, g)) return false;
  }
  return true;
}

GridPoint coset_key(const Grid& g, GridPoint pt) {
  switch (g.dimension()) {
    case 0:
      return pt;
    case 1: {
      GridPoint gen = g.generator();
      if (gen.s == 0) return {mod_floor(pt.r, gen.r), pt.s};
      long long k = floor_div(pt.s, gen.s);
      return {narrow(pt.r - (Wide)k * gen.r), pt.s - k * gen.s};
    }
    default: {
      long long s0 = mod_floor(pt.s, g.v());
      long long k = (pt.s - s0) / g.v();
      long long r0 = mod_floor(pt.r - (Wide)k * g.u(), g.w());
      return {r0, s0};
    }
  }
}

std::pair<mpz_class, mpz_class> quotient_invariants(const Grid& g) {
  if (g.dimension() != 2) {
    throw std::invalid_argument("quotient invariants need a two-dimensional grid");
  }
  long long d1 = std::gcd(g.u(), std::gcd(g.v(), g.w()));
  mpz_class d2 = to_mpz(g.v()) * to_mpz(g.w()) / to_mpz(d1);
  return {to_mpz(d1), d2};
}

std::vector<Grid> coatoms(long long p) {
  if (p < 2) throw std::invalid_argument("coatoms need a prime index");
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("coatoms need a prime index");
  }
  if (p > 1000000) throw GuardError("coatom list too large");
  std::vector<Grid> out;
  out.reserve(p + 1);
  for (long long u = 0; u < p; ++u) out.push_back(Grid::lattice(u, 1, p));
  out.push_back(Grid::lattice(0, p, 1));
  return out;
}

Grid modular_kernel_grid(long long a, long long b, long long m) {
  if (m < 0) m = -m;
  if (m == 0) {
    if (a == 0 && b == 0) return Grid::full();
    long long g = std::gcd(a, b);
    return Grid::line({b / g, -(a / g)});
  }
  if (m == 1) return Grid::full();
  long long aa = mod_floor(a, m);
  long long bb = mod_floor(b, m);
  long long ga = std::gcd(aa, m);
  long long w = m / ga;
  long long v = ga / std::gcd(bb % ga, ga);
  long long c = mod_floor(-(Wide)bb * v, m);
  long long u = w == 1 ? 0 : mul_mod(c / ga, mod_inverse(aa / ga, w), w);
  return Grid::lattice(u, v, w);
}

PairAction PairAction::translation(std::vector<long long> moduli,
                                   std::vector<long long> a,
                                   std::vector<long long> b) {
  if (moduli.size() != a.size() || moduli.size() != b.size() || moduli.empty()) {
    throw std::invalid_argument("pair action needs matching nonempty component lists");
  }
  for (long long m : moduli) {
    if (m < 1) throw std::invalid_argument("component moduli must be positive");
  }
  return PairAction{Kind::translation, std::move(moduli), std::move(a), std::move(b)};
}

PairAction PairAction::multiplication(std::vector<long long> moduli,
                                      std::vector<long long> a,
                                      std::vector<long long> b) {
  PairAction act = translation(std::move(moduli), std::move(a), std::move(b));
  act.kind = Kind::multiplication;
  for (std::size_t i = 0; i < act.moduli.size(); ++i) {
    if (std::gcd(mod_floor(act.a[i], act.moduli[i]), act.moduli[i]) != 1 ||
        std::gcd(mod_floor(act.b[i], act.moduli[i]), act.moduli[i]) != 1) {
      throw std::invalid_argument("multiplication action needs unit multipliers");
    }
  }
  return act;
}

namespace {

long long multiplicative_order(long long a, long long m) {
  long long cur = a % m;
  long long ord = 1;
  while (cur != 1) {
    cur = mul_mod(cur, a, m);
    ++ord;
    if (ord > m) throw std::logic_error("order computation ran away");
  }
  return ord;
}

Grid multiplication_kernel(long long m, long long a, long long b) {
  if (m == 1) return Grid::full();
  a = mod_floor(a, m);
  b = mod_floor(b, m);
  long long ord_a = multiplicative_order(a, m);
  long long ord_b = multiplicative_order(b, m);
  std::unordered_map<long long, long long> b_power_to_exp;
  long long cur = 1;
  for (long long s = 0; s < ord_b; ++s) {
    b_power_to_exp.emplace(cur, s);
    cur = mul_mod(cur, b, m);
  }
  std::vector<GridPoint> gens{{ord_a, 0}, {0, ord_b}};
  cur = 1;
  for (long long r = 1; r < ord_a; ++r) {
    cur = mul_mod(cur, a, m);
    auto it = b_power_to_exp.find(mod_inverse(cur, m));
    if (it != b_power_to_exp.end()) gens.push_back({r, it->second});
  }
  return canonical_grid(gens);
}

}  // namespace

Grid kernel_of_pair(const PairAction& action) {
  Grid result = Grid::full();
  for (std::size_t i = 0; i < action.moduli.size(); ++i) {
    Grid component =
        action.kind == PairAction::Kind::translation
            ? modular_kernel_grid(action.a[i], action.b[i], action.moduli[i])
            : multiplication_kernel(action.moduli[i], action.a[i], action.b[i]);
    result = meet(result, component);
  }
  return result;
}

Grid span_difference(const BinaryTree& t, const BinaryTree& u) {
  if (t.leaf_count() != u.leaf_count()) {
    throw std::invalid_argument("trees must have the same number of leaves");
  }
  std::vector<int> lt, rt, lu, ru;
  leaf_depths(t, lt, rt);
  leaf_depths(u, lu, ru);
  std::vector<GridPoint> gens;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (lt[i] != lu[i] || rt[i] != ru[i]) {
      gens.push_back({lt[i] - lu[i], rt[i] - ru[i]});
    }
  }
  return canonical_grid(gens);
}

bool is_treealisable(const Grid& g) { return g.dimension() == 2; }

std::pair<BinaryTree, BinaryTree> treealise(const Grid& g) {
  if (g.dimension() != 2) {
    throw std::invalid_argument("only two-dimensional grids come from tree pairs");
  }
  long long p = g.v();
  long long q = narrow((Wide)g.v() * g.w());
  long long r = g.w();
  long long s = g.w() - g.u();
  long long leaves = p + q + r + s + 1;
  if (leaves > 1000000) throw GuardError("grid needs more than 10^6 leaves");

  std::vector<int> ld_a;
  ld_a.reserve(leaves);
  ld_a.insert(ld_a.end(), p, 2);
  ld_a.insert(ld_a.end(), q, static_cast<int>(r) + 1);
  for (long long d = r; d >= 1; --d) ld_a.push_back(static_cast<int>(d));
  for (long long d = s; d >= 0; --d) ld_a.push_back(static_cast<int>(d));

  std::vector<int> ld_b;
  ld_b.reserve(leaves);
  ld_b.insert(ld_b.end(), p, 2);
  ld_b.push_back(1);
  ld_b.insert(ld_b.end(), q - 1, static_cast<int>(s) + 1);
  for (long long d = r + s; d >= s + 1; --d) ld_b.push_back(static_cast<int>(d));
  for (long long d = s; d >= 0; --d) ld_b.push_back(static_cast<int>(d));

  std::pair<BinaryTree, BinaryTree> trees{BinaryTree::from_left_depths(ld_a),
                                          BinaryTree::from_left_depths(ld_b)};
  if (span_difference(trees.first, trees.second) != g) {
    throw OracleError("tree pair does not span the requested grid");
  }
  return trees;
}

std::string grid_literal(const Grid& g) {
  switch (g.dimension()) {
    case 0:
      return "0";
    case 1: {
      GridPoint gen = g.generator();
      return "Z(" + std::to_string(gen.r) + "," + std::to_string(gen.s) + ")";
    }
    default:
      return "Z(" + std::to_string(g.u()) + "," + std::to_string(g.v()) +
             ")+Z(" + std::to_string(g.w()) + ",0)";
  }
}

std::vector<GridPoint> parse_points(const std::string& text) {
  std::vector<GridPoint> pts;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto parse_integer = [&]() -> long long {
    skip_spaces();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == digits) throw ParseError("expected an integer", start);
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  };
  while (true) {
    GridPoint pt;
    pt.r = parse_integer();
    skip_spaces();
    if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    pt.s = parse_integer();
    pts.push_back(pt);
    skip_spaces();
    if (pos >= text.size()) break;
    if (text[pos] != ';') throw ParseError("expected ';'", pos);
    ++pos;
  }
  return pts;
}

GridPoint parse_point(const std::string& text) {
  std::vector<GridPoint> pts = parse_points(text);
  if (pts.size() != 1) throw ParseError("expected a single point", 0);
  return pts[0];
}

}  // namespace treq
