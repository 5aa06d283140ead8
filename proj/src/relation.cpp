#include "treq/relation.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "treq/errors.hpp"

namespace treq {

namespace {

void require_nonnegative(long long k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

}  // namespace

RelationSpec RelationSpec::depth(long long k) {
  require_nonnegative(k, "depth period");
  return RelationSpec{RelationKind::depth, k, 0, 0, 0, 0, Grid::zero()};
}

RelationSpec RelationSpec::left(long long k) {
  require_nonnegative(k, "left period");
  return RelationSpec{RelationKind::left, k, 0, 0, 0, 0, Grid::zero()};
}

RelationSpec RelationSpec::right(long long k) {
  require_nonnegative(k, "right period");
  return RelationSpec{RelationKind::right, k, 0, 0, 0, 0, Grid::zero()};
}

RelationSpec RelationSpec::left_right(long long k, long long l) {
  require_nonnegative(k, "left period");
  require_nonnegative(l, "right period");
  return RelationSpec{RelationKind::left_right, k, l, 0, 0, 0, Grid::zero()};
}

RelationSpec RelationSpec::weighted(long long a, long long b, long long m) {
  require_nonnegative(m, "modulus");
  return RelationSpec{RelationKind::weighted, 0, 0, a, b, m, Grid::zero()};
}

RelationSpec RelationSpec::from_grid(Grid g) {
  return RelationSpec{RelationKind::grid, 0, 0, 0, 0, 0, std::move(g)};
}

NormalizedRelation normalize_relation(const RelationSpec& spec) {
  Grid g;
  switch (spec.kind) {
    case RelationKind::depth:
      g = modular_kernel_grid(1, 1, spec.k);
      break;
    case RelationKind::left:
      g = modular_kernel_grid(1, 0, spec.k);
      break;
    case RelationKind::right:
      g = modular_kernel_grid(0, 1, spec.k);
      break;
    case RelationKind::left_right:
      g = canonical_grid({{spec.k, 0}, {0, spec.l}});
      break;
    case RelationKind::weighted:
      g = modular_kernel_grid(spec.a, spec.b, spec.m);
      break;
    case RelationKind::grid:
      g = spec.lattice;
      break;
  }
  return {g.dimension() != 2, g};
}

namespace {

std::vector<long long> leaf_key_normalized(const BinaryTree& t,
                                           const NormalizedRelation& norm) {
  std::vector<int> ld, rd;
  leaf_depths(t, ld, rd);
  std::vector<long long> key;
  key.reserve(2 * ld.size());
  for (std::size_t i = 0; i < ld.size(); ++i) {
    if (norm.equality) {
      key.push_back(ld[i]);
      key.push_back(rd[i]);
    } else {
      GridPoint rep = coset_key(norm.grid, {ld[i], rd[i]});
      key.push_back(rep.r);
      key.push_back(rep.s);
    }
  }
  return key;
}

}  // namespace

std::vector<long long> leaf_key(const BinaryTree& t, const RelationSpec& spec) {
  return leaf_key_normalized(t, normalize_relation(spec));
}

bool equivalent(const BinaryTree& t, const BinaryTree& u, const RelationSpec& spec) {
  if (t.leaf_count() != u.leaf_count()) return false;
  NormalizedRelation norm = normalize_relation(spec);
  return leaf_key_normalized(t, norm) == leaf_key_normalized(u, norm);
}

namespace {

using Token = unsigned __int128;

int bits_for(Token max_value) {
  int bits = 0;
  while (max_value > 0) {
    ++bits;
    max_value >>= 1;
  }
  return bits == 0 ? 1 : bits;
}

struct EqualityToken {
  long long n;
  Token operator()(int ld, int rd) const {
    return static_cast<Token>(ld) * n + rd;
  }
};

struct GridToken {
  long long u, v, w;
  Token operator()(int ld, int rd) const {
    long long s0 = rd % v;
    long long k = (rd - s0) / v;
    long long r0 = static_cast<long long>((ld - (__int128)k * u) % w);
    if (r0 < 0) r0 += w;
    return static_cast<Token>(s0) * w + r0;
  }
};

struct NarrowKey {
  using Value = unsigned __int128;
  int bits;
  Value key = 0;
  std::vector<Value> saved;
  std::vector<Value>* out = nullptr;

  void push(Token token) {
    saved.push_back(key);
    key = (key << bits) | static_cast<Value>(token);
  }
  void pop() {
    key = saved.back();
    saved.pop_back();
  }
  void done() { out->push_back(key); }
};

struct ByteKey {
  using Value = std::string;
  int width;
  std::string key;
  std::vector<Value>* out = nullptr;

  void push(Token token) {
    for (int i = width - 1; i >= 0; --i) {
      key.push_back(static_cast<char>((token >> (8 * i)) & 0xff));
    }
  }
  void pop() { key.resize(key.size() - width); }
  void done() { out->push_back(key); }
};

// Enumerates left-depth sequences and streams one key per tree into the key
// state.  Right depths come from a run-length encoding of the current leaf
// address: the trailing 1-run of length p gives rd(i+1) = rd(i) - p + 1.
template <class TokenFn, class Key>
class ClassDfs {
 public:
  ClassDfs(int n, TokenFn token, Key* key) : n_(n), token_(token), key_(key) {}

  void run(const std::vector<int>& forced) {
    forced_ = &forced;
    if (n_ == 1) {
      key_->push(token_(0, 0));
      key_->done();
      key_->pop();
      return;
    }
    int lo = 1, hi = n_ - 1;
    if (!forced.empty()) lo = hi = forced[0];
    for (int c = lo; c <= hi; ++c) {
      runs_.clear();
      runs_.push_back({0, c});
      key_->push(token_(c, 0));
      dfs(1, c, 0);
      key_->pop();
    }
  }

 private:
  struct Run {
    int bit;
    int len;
  };

  void dfs(int i, int ld, int rd) {
    if (i == n_) {
      key_->done();
      return;
    }
    int p = 0;
    if (runs_.back().bit == 1) {
      p = runs_.back().len;
      runs_.pop_back();
    }
    bool zero_run_gone = --runs_.back().len == 0;
    if (zero_run_gone) runs_.pop_back();
    int rd_next = rd - p + 1;

    int lo, hi;
    if (i + 1 == n_) {
      lo = 0;
      hi = ld <= 1 ? 0 : -1;
    } else {
      lo = std::max(1, ld - 1);
      hi = n_ - (i + 1);
    }
    if (i < static_cast<int>(forced_->size())) {
      int f = (*forced_)[i];
      if (f < lo || f > hi) {
        lo = 1;
        hi = 0;
      } else {
        lo = hi = f;
      }
    }
    for (int c = lo; c <= hi; ++c) {
      int q = c - ld + 1;
      bool merged = !runs_.empty() && runs_.back().bit == 1;
      if (merged) {
        ++runs_.back().len;
      } else {
        runs_.push_back({1, 1});
      }
      if (q > 0) runs_.push_back({0, q});
      key_->push(token_(c, rd_next));
      dfs(i + 1, c, rd_next);
      key_->pop();
      if (q > 0) runs_.pop_back();
      if (merged) {
        --runs_.back().len;
      } else {
        runs_.pop_back();
      }
    }

    if (zero_run_gone) {
      runs_.push_back({0, 1});
    } else {
      ++runs_.back().len;
    }
    if (p > 0) runs_.push_back({1, p});
  }

  int n_;
  TokenFn token_;
  Key* key_;
  const std::vector<int>* forced_ = nullptr;
  std::vector<Run> runs_;
};

// Forced first two left depths, covering the whole search space disjointly.
std::vector<std::vector<int>> partition_tasks(int n) {
  std::vector<std::vector<int>> tasks;
  for (int c1 = 1; c1 <= n - 1; ++c1) {
    for (int c2 = std::max(1, c1 - 1); c2 <= n - 2; ++c2) {
      tasks.push_back({c1, c2});
    }
  }
  return tasks;
}

template <class TokenFn, class Key>
unsigned long count_distinct(int n, TokenFn token, Key key_proto, int threads) {
  std::vector<std::vector<int>> tasks;
  if (threads > 1 && n >= 8) tasks = partition_tasks(n);

  std::vector<typename Key::Value> keys;
  if (tasks.empty()) {
    Key key = key_proto;
    key.out = &keys;
    ClassDfs<TokenFn, Key> dfs(n, token, &key);
    dfs.run({});
  } else {
    std::vector<std::vector<typename Key::Value>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          Key key = key_proto;
          key.out = &results[i];
          ClassDfs<TokenFn, Key> dfs(n, token, &key);
          dfs.run(tasks[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    int worker_count = std::min<int>(threads, static_cast<int>(tasks.size()));
    pool.reserve(worker_count);
    for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::size_t total = 0;
    for (const auto& part : results) total += part.size();
    keys.reserve(total);
    for (auto& part : results) {
      keys.insert(keys.end(), part.begin(), part.end());
      part.clear();
      part.shrink_to_fit();
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys.size();
}

}  // namespace

mpz_class count_classes(int n, const RelationSpec& spec, int threads, int guard) {
  if (n < 1) throw std::invalid_argument("leaf count must be positive");
  if (n > guard) {
    throw GuardError("leaf count " + std::to_string(n) + " exceeds guard " +
                     std::to_string(guard));
  }
  if (n <= 2) return 1;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }

  NormalizedRelation norm = normalize_relation(spec);
  Token token_count;
  if (norm.equality) {
    token_count = static_cast<Token>(n) * n;
  } else {
    token_count = static_cast<Token>(norm.grid.v()) * norm.grid.w();
  }
  int bits = bits_for(token_count - 1);

  unsigned long distinct;
  if (n * bits <= 128) {
    NarrowKey key{bits};
    distinct = norm.equality
                   ? count_distinct(n, EqualityToken{n}, key, threads)
                   : count_distinct(n,
                                    GridToken{norm.grid.u(), norm.grid.v(),
                                              norm.grid.w()},
                                    key, threads);
  } else {
    ByteKey key{(bits + 7) / 8};
    distinct = norm.equality
                   ? count_distinct(n, EqualityToken{n}, key, threads)
                   : count_distinct(n,
                                    GridToken{norm.grid.u(), norm.grid.v(),
                                              norm.grid.w()},
                                    key, threads);
  }
  return mpz_class(distinct);
}

std::vector<std::vector<BinaryTree>> classes(int n, const RelationSpec& spec,
                                             int guard) {
  NormalizedRelation norm = normalize_relation(spec);
  std::map<std::vector<long long>, std::size_t> index;
  std::vector<std::vector<BinaryTree>> out;
  enumerate_trees(
      n,
      [&](const BinaryTree& t) {
        auto [it, inserted] =
            index.try_emplace(leaf_key_normalized(t, norm), out.size());
        if (inserted) out.emplace_back();
        out[it->second].push_back(t);
      },
      guard);
  return out;
}

mpz_class modular_catalan(long long k, long long n) {
  if (k < 1) throw std::invalid_argument("period must be positive");
  if (n < 0) throw std::invalid_argument("leaf count must be nonnegative");
  if (n <= 1) return 1;
  mpz_class sum = 0;
  for (long long j = 0; j * k <= n - 1; ++j) {
    mpz_class choose_j, choose_top;
    mpz_bin_uiui(choose_j.get_mpz_t(), n, j);
    mpz_bin_uiui(choose_top.get_mpz_t(), 2 * n - j * k, n + 1);
    mpz_class term = choose_j * choose_top;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
    throw OracleError("class-count closed form is not integral");
  }
  return sum / static_cast<long>(n);
}

}  // namespace treq
