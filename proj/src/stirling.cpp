#include "stirnum/stirling.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirnum {

namespace {

// One triangular memo table for a (kind, r) pair. rows_[i][j] holds the
// value at n = r + i, k = r + j; everything outside the triangle is 0.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, long r) : kind_(kind), r_(r) { rows_.push_back({Int(1)}); }

  Int value(long n, long k) {
    if (n < r_ || k < r_ || k > n) return 0;
    ensure_rows(n);
    return rows_[static_cast<std::size_t>(n - r_)][static_cast<std::size_t>(k - r_)];
  }

  void poke(long n, long k, const Int& delta) {
    if (n < r_ || k < r_ || k > n)
      throw std::invalid_argument("corrupt_table_for_testing: (n,k) outside the triangle");
    ensure_rows(n);
    rows_[static_cast<std::size_t>(n - r_)][static_cast<std::size_t>(k - r_)] += delta;
  }

 private:
  void ensure_rows(long n) {
    for (long m = r_ + static_cast<long>(rows_.size()); m <= n; ++m) {
      const auto& prev = rows_.back();
      std::vector<Int> row(prev.size() + 1);
      for (std::size_t j = 0; j < row.size(); ++j) {
        const long k = r_ + static_cast<long>(j);
        const Int mult = kind_ == StirlingKind::second ? Int(k) : Int(m - 1);
        if (j < prev.size()) row[j] = mult * prev[j];
        if (j > 0) row[j] += prev[j - 1];
      }
      rows_.push_back(std::move(row));
    }
  }

  StirlingKind kind_;
  long r_;
  std::vector<std::vector<Int>> rows_;
};

std::mutex g_tables_mutex;
std::map<std::pair<int, long>, std::unique_ptr<StirlingTable>>& tables() {
  static std::map<std::pair<int, long>, std::unique_ptr<StirlingTable>> t;
  return t;
}

Int table_value(StirlingKind kind, long r, long n, long k) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto& slot = tables()[{static_cast<int>(kind), r}];
  if (!slot) slot = std::make_unique<StirlingTable>(kind, r);
  return slot->value(n, k);
}

void check_nonnegative(long v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

}  // namespace

Int stirling2(long n, long k) {
  check_nonnegative(n, "stirling2: n");
  return table_value(StirlingKind::second, 0, n, k);
}

Int stirling2_explicit(long n, long k) {
  check_nonnegative(n, "stirling2_explicit: n");
  if (k < 0 || k > n) throw std::invalid_argument("stirling2_explicit: requires 0 <= k <= n");
  Int sum = 0;
  for (long j = 0; j <= k; ++j) {
    const Int term = binomial(k, j) * int_pow(Int(j), static_cast<unsigned long>(n));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (k % 2 != 0) sum = -sum;
  // sum is now k! S(n,k); the division must be exact
  const Int kfact = factorial(static_cast<unsigned long>(k));
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), kfact.get_mpz_t());
  if (rem != 0) throw std::logic_error("stirling2_explicit: alternating sum not divisible by k!");
  return quot;
}

Int stirling1_unsigned(long n, long k) {
  check_nonnegative(n, "stirling1_unsigned: n");
  return table_value(StirlingKind::first_unsigned, 0, n, k);
}

Int stirling1_signed(long n, long k) {
  Int v = stirling1_unsigned(n, k);
  return (n - k) % 2 == 0 ? v : Int(-v);
}

Int rstirling2(long r, long n, long k) {
  check_nonnegative(r, "rstirling2: r");
  check_nonnegative(n, "rstirling2: n");
  return table_value(StirlingKind::second, r, n, k);
}

Int rstirling2_via_broder(long r, long n, long k) {
  check_nonnegative(r, "rstirling2_via_broder: r");
  check_nonnegative(n, "rstirling2_via_broder: n");
  check_nonnegative(k, "rstirling2_via_broder: k");
  Int sum = 0;
  for (long p = 0; p <= n; ++p)
    sum += binomial(n, p) * stirling2(p, k) * int_pow(Int(r), static_cast<unsigned long>(n - p));
  return sum;
}

Int rstirling1_unsigned(long r, long n, long k) {
  check_nonnegative(r, "rstirling1_unsigned: r");
  check_nonnegative(n, "rstirling1_unsigned: n");
  return table_value(StirlingKind::first_unsigned, r, n, k);
}

Int rstirling1_signed(long r, long n, long k) {
  Int v = rstirling1_unsigned(r, n, k);
  return (n - k) % 2 == 0 ? v : Int(-v);
}

namespace {

// Counts partitions of {0..n-1} into exactly k blocks, elements 0..r-1
// pairwise separated. The first r elements are forced into blocks 0..r-1
// (restricted-growth canonical form); recursion covers the rest.
long count_partitions(int n, int k, int r, int element, int used) {
  if (used > k) return 0;
  if (n - element < k - used) return 0;  // not enough elements left to open blocks
  if (element == n) return used == k ? 1 : 0;
  long total = count_partitions(n, k, r, element + 1, used + 1);  // open a block
  for (int b = 0; b < used; ++b) {
    if (element < r && b < r) continue;  // would merge two of the separated elements
    total += count_partitions(n, k, r, element + 1, used);
  }
  return total;
}

}  // namespace

Int brute_partitions(int n, int k, int r) {
  if (n < 0 || n > 12) throw std::invalid_argument("brute_partitions: n exceeds enumeration bound (12)");
  if (k < 0 || r < 0) return 0;
  if (r > n) return 0;  // triangle convention: too few elements to separate 1..r
  if (k > n) return 0;
  return Int(count_partitions(n, k, r, 0, 0));
}

Int brute_cycle_permutations(int n, int k, int r) {
  if (n < 0 || n > 9) throw std::invalid_argument("brute_cycle_permutations: n exceeds enumeration bound (9)");
  if (k < 0 || r < 0) return 0;
  if (r > n) return 0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> cycle_id(static_cast<std::size_t>(n));
  long count = 0;
  do {
    int cycles = 0;
    std::fill(cycle_id.begin(), cycle_id.end(), -1);
    for (int s = 0; s < n; ++s) {
      if (cycle_id[s] != -1) continue;
      for (int x = s; cycle_id[x] == -1; x = perm[x]) cycle_id[x] = cycles;
      ++cycles;
    }
    if (cycles != k) continue;
    bool separated = true;
    for (int a = 1; a < r && separated; ++a)
      for (int b = 0; b < a; ++b)
        if (cycle_id[a] == cycle_id[b]) {
          separated = false;
          break;
        }
    if (separated) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Int(count);
}

void corrupt_table_for_testing(StirlingKind kind, long r, long n, long k, long delta) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto& slot = tables()[{static_cast<int>(kind), r}];
  if (!slot) slot = std::make_unique<StirlingTable>(kind, r);
  slot->poke(n, k, Int(delta));
}

void reset_tables_for_testing() {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  tables().clear();
}

}  // namespace stirnum
