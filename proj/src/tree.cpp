#include "treq/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "treq/errors.hpp"

namespace treq {

namespace {

// Number of leaves in the subtree starting at bits[i], or 0 if the word is
// malformed.  On success, end receives the index one past the subtree.
int subtree_leaves(const std::vector<std::uint8_t>& bits, std::size_t i,
                   std::size_t& end) {
  int open = 1;
  int leaves = 0;
  std::size_t j = i;
  while (open > 0) {
    if (j >= bits.size()) return 0;
    if (bits[j] == 1) {
      ++open;
    } else {
      --open;
      ++leaves;
    }
    ++j;
  }
  end = j;
  return leaves;
}

void check_guard(int n, int guard) {
  if (n > guard) {
    throw GuardError("leaf count " + std::to_string(n) +
                     " exceeds guard " + std::to_string(guard));
  }
}

}  // namespace

BinaryTree BinaryTree::from_structure_bits(const std::string& bits) {
  BinaryTree t;
  t.bits_.clear();
  t.bits_.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '0') {
      t.bits_.push_back(0);
    } else if (bits[i] == '1') {
      t.bits_.push_back(1);
    } else {
      throw ParseError("structure word may contain only '0' and '1'", i);
    }
  }
  if (t.bits_.empty()) throw ParseError("empty structure word", 0);
  std::size_t end = 0;
  int leaves = subtree_leaves(t.bits_, 0, end);
  if (leaves == 0 || end != t.bits_.size()) {
    throw ParseError("structure word is not a preorder tree encoding",
                     leaves == 0 ? t.bits_.size() : end);
  }
  t.leaf_count_ = leaves;
  return t;
}

BinaryTree BinaryTree::from_left_depths(const std::vector<int>& seq) {
  if (!is_left_depth_sequence(seq)) {
    throw std::invalid_argument("not a left-depth sequence");
  }
  BinaryTree t;
  t.bits_.clear();
  t.bits_.reserve(2 * seq.size() - 1);
  // Walking the leaves left to right first visits ld(1) internal nodes, then
  // before leaf i+1 exactly ld(i+1) - ld(i) + 1 new ones, in preorder.
  for (int j = 0; j < seq[0]; ++j) t.bits_.push_back(1);
  t.bits_.push_back(0);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (int j = 0; j < seq[i] - seq[i - 1] + 1; ++j) t.bits_.push_back(1);
    t.bits_.push_back(0);
  }
  t.leaf_count_ = static_cast<int>(seq.size());
  return t;
}

BinaryTree wedge(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree t;
  t.bits_.clear();
  t.bits_.reserve(1 + left.bits_.size() + right.bits_.size());
  t.bits_.push_back(1);
  t.bits_.insert(t.bits_.end(), left.bits_.begin(), left.bits_.end());
  t.bits_.insert(t.bits_.end(), right.bits_.begin(), right.bits_.end());
  t.leaf_count_ = left.leaf_count_ + right.leaf_count_;
  return t;
}

BinaryTree opposite(const BinaryTree& t) {
  std::vector<int> ld;
  std::vector<int> rd;
  leaf_depths(t, ld, rd);
  std::reverse(rd.begin(), rd.end());
  return BinaryTree::from_left_depths(rd);
}

void leaf_depths(const BinaryTree& t, std::vector<int>& ld, std::vector<int>& rd) {
  // Pending right turns: (left depth, right depth) at the right child we
  // still have to visit.
  std::vector<std::pair<int, int>> pending;
  int l = 0;
  int r = 0;
  for (std::uint8_t bit : t.structure()) {
    if (bit == 1) {
      pending.emplace_back(l, r + 1);
      ++l;
    } else {
      ld.push_back(l);
      rd.push_back(r);
      if (!pending.empty()) {
        std::tie(l, r) = pending.back();
        pending.pop_back();
      }
    }
  }
}

DepthProfile depth_profile(const BinaryTree& t) {
  DepthProfile p;
  leaf_depths(t, p.left_depths, p.right_depths);
  p.total_depths.reserve(p.left_depths.size());
  for (std::size_t i = 0; i < p.left_depths.size(); ++i) {
    p.total_depths.push_back(p.left_depths[i] + p.right_depths[i]);
  }
  p.addresses = addresses_from_left_depths(p.left_depths);
  return p;
}

bool is_left_depth_sequence(const std::vector<int>& seq) {
  if (seq.empty()) return false;
  if (seq.back() != 0) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] < 1 || seq[i] > seq[i + 1] + 1) return false;
  }
  return true;
}

std::vector<std::string> addresses_from_left_depths(const std::vector<int>& seq) {
  if (!is_left_depth_sequence(seq)) {
    throw std::invalid_argument("not a left-depth sequence");
  }
  std::vector<std::string> addrs;
  addrs.reserve(seq.size());
  addrs.push_back(std::string(seq[0], '0'));
  for (std::size_t i = 1; i < seq.size(); ++i) {
    // Strip the trailing 1s and one 0, then branch right and descend left.
    std::string a = addrs.back();
    while (!a.empty() && a.back() == '1') a.pop_back();
    a.pop_back();
    a.push_back('1');
    a.append(seq[i] - seq[i - 1] + 1, '0');
    addrs.push_back(std::move(a));
  }
  return addrs;
}

namespace {

class BracketingParser {
 public:
  explicit BracketingParser(const std::string& text) : text_(text) {}

  BinaryTree parse() {
    BinaryTree first = parse_term();
    skip_spaces();
    if (pos_ < text_.size()) {
      BinaryTree second = parse_term();
      skip_spaces();
      if (pos_ < text_.size()) {
        throw ParseError("unexpected trailing input", pos_);
      }
      return wedge(first, second);
    }
    return first;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
  }

  BinaryTree parse_term() {
    skip_spaces();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    if (text_[pos_] == '(') {
      ++pos_;
      BinaryTree left = parse_term();
      BinaryTree right = parse_term();
      skip_spaces();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return wedge(left, right);
    }
    if (text_[pos_] == 'x') {
      std::size_t var_pos = pos_;
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9') {
        throw ParseError("expected a variable index after 'x'", pos_);
      }
      long index = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        index = index * 10 + (text_[pos_] - '0');
        if (index > 1000000) throw ParseError("variable index too large", var_pos);
        ++pos_;
      }
      if (index != next_var_) {
        throw ParseError("expected variable x" + std::to_string(next_var_),
                         var_pos);
      }
      ++next_var_;
      return BinaryTree::leaf();
    }
    throw ParseError("expected 'x' or '('", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  long next_var_ = 1;
};

void format_variables(const std::vector<std::uint8_t>& bits, std::size_t& i,
                      int& next_var, bool root, std::string& out) {
  if (bits[i] == 0) {
    ++i;
    out += 'x';
    out += std::to_string(next_var++);
    return;
  }
  ++i;
  if (!root) out += '(';
  format_variables(bits, i, next_var, false, out);
  format_variables(bits, i, next_var, false, out);
  if (!root) out += ')';
}

}  // namespace

Bracketing parse_bracketing(const std::string& text) {
  BinaryTree t = BracketingParser(text).parse();
  return Bracketing{format_bracketing(t, BracketingStyle::variables), t};
}

std::string format_bracketing(const BinaryTree& t, BracketingStyle style) {
  if (style == BracketingStyle::structure_bits) {
    std::string out;
    out.reserve(t.structure().size());
    for (std::uint8_t bit : t.structure()) out += static_cast<char>('0' + bit);
    return out;
  }
  std::string out;
  std::size_t i = 0;
  int next_var = 1;
  format_variables(t.structure(), i, next_var, true, out);
  return out;
}

namespace {

void enumerate_rec(int n, std::string& buf, const std::function<void()>& done) {
  if (n == 1) {
    buf.push_back('0');
    done();
    buf.pop_back();
    return;
  }
  buf.push_back('1');
  for (int k = 1; k < n; ++k) {
    enumerate_rec(k, buf, [&] { enumerate_rec(n - k, buf, done); });
  }
  buf.pop_back();
}

}  // namespace

void enumerate_trees(int n, const std::function<void(const BinaryTree&)>& visit,
                     int guard) {
  if (n < 1) throw std::invalid_argument("leaf count must be positive");
  check_guard(n, guard);
  std::string buf;
  buf.reserve(2 * n - 1);
  enumerate_rec(n, buf, [&] { visit(BinaryTree::from_structure_bits(buf)); });
}

std::vector<BinaryTree> all_trees(int n, int guard) {
  std::vector<BinaryTree> out;
  enumerate_trees(n, [&](const BinaryTree& t) { out.push_back(t); }, guard);
  return out;
}

mpz_class catalan(unsigned long n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  mpz_class result;
  mpz_divexact_ui(result.get_mpz_t(), binom.get_mpz_t(), n + 1);
  return result;
}

namespace {

std::optional<Divergence> divergence_scan(const BinaryTree& t, const BinaryTree& u,
                                          bool from_front) {
  if (t.leaf_count() != u.leaf_count()) {
    throw std::invalid_argument("trees must have the same number of leaves");
  }
  std::vector<int> lt, rt, lu, ru;
  leaf_depths(t, lt, rt);
  leaf_depths(u, lu, ru);
  int n = t.leaf_count();
  for (int step = 0; step < n; ++step) {
    int i = from_front ? step : n - 1 - step;
    if (lt[i] != lu[i] || rt[i] != ru[i]) {
      return Divergence{i + 1, lt[i] - lu[i], rt[i] - ru[i]};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Divergence> first_divergence(const BinaryTree& t, const BinaryTree& u) {
  return divergence_scan(t, u, true);
}

std::optional<Divergence> last_divergence(const BinaryTree& t, const BinaryTree& u) {
  return divergence_scan(t, u, false);
}

std::vector<mpq_class> leaf_probabilities(const BinaryTree& t, const mpq_class& p) {
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("step probability must lie strictly between 0 and 1");
  }
  std::vector<int> ld, rd;
  leaf_depths(t, ld, rd);
  mpq_class q = 1 - p;
  std::vector<mpq_class> probs;
  probs.reserve(ld.size());
  mpq_class total = 0;
  for (std::size_t i = 0; i < ld.size(); ++i) {
    mpq_class prob = 1;
    for (int j = 0; j < ld[i]; ++j) prob *= p;
    for (int j = 0; j < rd[i]; ++j) prob *= q;
    total += prob;
    probs.push_back(std::move(prob));
  }
  if (total != 1) throw OracleError("leaf probabilities do not sum to 1");
  return probs;
}

namespace {

BinaryTree tree_from_probs_rec(const std::vector<mpq_class>& probs, std::size_t lo,
                               std::size_t hi, const mpq_class& mass,
                               const mpq_class& p) {
  if (hi - lo == 1) {
    if (probs[lo] != mass) {
      throw std::invalid_argument("probabilities are not realisable by a tree");
    }
    return BinaryTree::leaf();
  }
  // The left subtree's leaves are a prefix carrying exactly p times the mass.
  // Prefix sums are strictly increasing, so the split point is unique.
  mpq_class target = mass * p;
  mpq_class acc = 0;
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    acc += probs[mid - 1];
    if (acc == target) {
      return wedge(tree_from_probs_rec(probs, lo, mid, target, p),
                   tree_from_probs_rec(probs, mid, hi, mass - target, p));
    }
    if (acc > target) break;
  }
  throw std::invalid_argument("probabilities are not realisable by a tree");
}

}  // namespace

BinaryTree tree_from_leaf_probabilities(const std::vector<mpq_class>& probs,
                                        const mpq_class& p) {
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("step probability must lie strictly between 0 and 1");
  }
  if (probs.empty()) {
    throw std::invalid_argument("probabilities are not realisable by a tree");
  }
  mpq_class total = 0;
  for (const mpq_class& prob : probs) {
    if (prob <= 0) {
      throw std::invalid_argument("probabilities are not realisable by a tree");
    }
    total += prob;
  }
  if (total != 1) {
    throw std::invalid_argument("probabilities are not realisable by a tree");
  }
  return tree_from_probs_rec(probs, 0, probs.size(), 1, p);
}

}  // namespace treq
