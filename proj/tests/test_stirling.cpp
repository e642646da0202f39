#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "stirnum/polynomial.hpp"
#include "stirnum/stirling.hpp"

using stirnum::Int;
using stirnum::StirlingKind;

TEST_CASE("second kind: anchor values and triangle edges") {
  CHECK(stirnum::stirling2(0, 0) == 1);
  CHECK(stirnum::stirling2(4, 2) == 7);
  CHECK(stirnum::stirling2(5, 2) == 15);
  CHECK(stirnum::stirling2(6, 3) == 90);
  CHECK(stirnum::stirling2(3, 0) == 0);
  for (long n = 0; n <= 12; ++n) CHECK(stirnum::stirling2(n, n) == 1);
  CHECK(stirnum::stirling2(5, -1) == 0);
  CHECK(stirnum::stirling2(5, 6) == 0);
  CHECK_THROWS_AS(stirnum::stirling2(-1, 0), std::invalid_argument);
}

TEST_CASE("second kind: recurrence equals explicit alternating sum") {
  for (long n = 0; n <= 25; ++n)
    for (long k = 0; k <= n; ++k) CHECK(stirnum::stirling2(n, k) == stirnum::stirling2_explicit(n, k));
  CHECK(stirnum::stirling2_explicit(0, 0) == 1);
  CHECK_THROWS_AS(stirnum::stirling2_explicit(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(stirnum::stirling2_explicit(3, -1), std::invalid_argument);
}

TEST_CASE("second kind: matches brute-force partition counts") {
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirnum::stirling2(n, k) == stirnum::brute_partitions(n, k, 0));
}

TEST_CASE("row sums equal enumerated Bell numbers") {
  for (int n = 0; n <= 11; ++n) {
    Int row_sum = 0, enumerated = 0;
    for (int k = 0; k <= n; ++k) {
      row_sum += stirnum::stirling2(n, k);
      enumerated += stirnum::brute_partitions(n, k, 0);
    }
    CHECK(row_sum == enumerated);
  }
  // spot anchors: Bell(5) = 52, Bell(11) = 678570
  Int bell5 = 0, bell11 = 0;
  for (int k = 0; k <= 5; ++k) bell5 += stirnum::stirling2(5, k);
  for (int k = 0; k <= 11; ++k) bell11 += stirnum::stirling2(11, k);
  CHECK(bell5 == 52);
  CHECK(bell11 == 678570);
}

TEST_CASE("r-Stirling second kind") {
  CHECK(stirnum::rstirling2(2, 3, 2) == 2);
  for (long r = 0; r <= 5; ++r) CHECK(stirnum::rstirling2(r, r, r) == 1);
  CHECK(stirnum::rstirling2(2, 1, 1) == 0);  // n < r
  CHECK(stirnum::rstirling2(2, 4, 1) == 0);  // k < r
  CHECK(stirnum::rstirling2(2, 4, 5) == 0);  // k > n
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) CHECK(stirnum::rstirling2(0, n, k) == stirnum::stirling2(n, k));
  CHECK_THROWS_AS(stirnum::rstirling2(-1, 3, 2), std::invalid_argument);
}

TEST_CASE("r-Stirling second kind matches brute force") {
  for (int r = 0; r <= 4; ++r)
    for (int n = r; n <= 9; ++n)
      for (int k = r; k <= n; ++k)
        CHECK(stirnum::rstirling2(r, n, k) == stirnum::brute_partitions(n, k, r));
}

TEST_CASE("Broder expansion agrees with the r-Stirling recurrence") {
  CHECK(stirnum::rstirling2_via_broder(1, 2, 1) == 3);  // S_1(3,2)
  CHECK(stirnum::rstirling2_via_broder(2, 1, 0) == 2);  // S_2(3,2)
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(stirnum::rstirling2_via_broder(0, n, k) == stirnum::stirling2(n, k));
      for (long r = 1; r <= 3; ++r)
        CHECK(stirnum::rstirling2_via_broder(r, n, k) == stirnum::rstirling2(r, n + r, k + r));
    }
}

TEST_CASE("first kind: anchors, signs, and falling-factorial coefficients") {
  CHECK(stirnum::stirling1_unsigned(3, 1) == 2);
  CHECK(stirnum::stirling1_unsigned(3, 2) == 3);
  CHECK(stirnum::stirling1_signed(3, 1) == 2);
  CHECK(stirnum::stirling1_signed(3, 2) == -3);
  for (long n = 0; n <= 10; ++n) {
    CHECK(stirnum::stirling1_unsigned(n, n) == 1);
    CHECK(stirnum::stirling1_signed(n, n) == 1);
  }
  CHECK(stirnum::stirling1_unsigned(4, 0) == 0);
  for (long n = 0; n <= 15; ++n) {
    const stirnum::Polynomial f = stirnum::falling_factorial(static_cast<unsigned long>(n));
    for (long k = 0; k <= n; ++k)
      CHECK(stirnum::Rational(stirnum::stirling1_signed(n, k)) ==
            f.coeff(static_cast<std::size_t>(k)));
  }
}

TEST_CASE("r-Stirling first kind") {
  CHECK(stirnum::rstirling1_unsigned(1, 2, 1) == 1);
  CHECK(stirnum::rstirling1_unsigned(1, 2, 2) == 1);
  for (long r = 0; r <= 4; ++r) CHECK(stirnum::rstirling1_unsigned(r, r, r) == 1);
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(stirnum::rstirling1_unsigned(0, n, k) == stirnum::stirling1_unsigned(n, k));
      CHECK(stirnum::rstirling1_signed(0, n, k) == stirnum::stirling1_signed(n, k));
    }
  CHECK(stirnum::rstirling1_signed(1, 3, 2) == -3);
}

TEST_CASE("first kind matches brute-force cycle counts") {
  CHECK(stirnum::brute_cycle_permutations(3, 1, 0) == 2);
  CHECK(stirnum::brute_cycle_permutations(2, 1, 1) == 1);
  for (int n = 0; n <= 6; ++n) CHECK(stirnum::brute_cycle_permutations(n, n, n) == 1);
  for (int r = 0; r <= 3; ++r)
    for (int n = r; n <= 7; ++n)
      for (int k = r; k <= n; ++k)
        CHECK(stirnum::rstirling1_unsigned(r, n, k) == stirnum::brute_cycle_permutations(n, k, r));
}

TEST_CASE("brute-force bounds and degenerate inputs") {
  CHECK_THROWS_AS(stirnum::brute_partitions(13, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(stirnum::brute_cycle_permutations(10, 2, 0), std::invalid_argument);
  CHECK(stirnum::brute_partitions(5, 2, 3) == 0);   // r > k: pigeonhole
  CHECK(stirnum::brute_partitions(2, 2, 3) == 0);   // r > n
  CHECK(stirnum::brute_partitions(0, 0, 0) == 1);
  CHECK(stirnum::brute_cycle_permutations(0, 0, 0) == 1);
  CHECK(stirnum::brute_cycle_permutations(4, 2, 3) == 0);
}

TEST_CASE("memo tables are safe under concurrent growth") {
  stirnum::reset_tables_for_testing();
  constexpr int kThreads = 8;
  constexpr long kMaxN = 40;
  std::vector<std::vector<Int>> seen(kThreads);
  std::vector<std::thread> workers;
  workers.reserve(kThreads);
  for (int t = 0; t < kThreads; ++t)
    workers.emplace_back([t, &seen] {
      for (long n = 0; n <= kMaxN; ++n)
        for (long k = 0; k <= n; ++k) {
          seen[t].push_back(stirnum::stirling2(n, k));
          seen[t].push_back(stirnum::rstirling2(2, n + 2, k + 2));
          seen[t].push_back(stirnum::rstirling1_unsigned(1, n + 1, k + 1));
        }
    });
  for (auto& w : workers) w.join();
  for (int t = 1; t < kThreads; ++t) CHECK(seen[t] == seen[0]);
  CHECK(stirnum::stirling2(40, 2) == stirnum::stirling2_explicit(40, 2));
}

TEST_CASE("corruption hook and reset (test harness plumbing)") {
  stirnum::reset_tables_for_testing();
  const Int clean = stirnum::stirling2(5, 2);
  stirnum::corrupt_table_for_testing(StirlingKind::second, 0, 5, 2, 3);
  CHECK(stirnum::stirling2(5, 2) == clean + 3);
  CHECK(stirnum::stirling2_explicit(5, 2) == clean);  // independent route unaffected
  stirnum::reset_tables_for_testing();
  CHECK(stirnum::stirling2(5, 2) == clean);
  CHECK_THROWS_AS(stirnum::corrupt_table_for_testing(StirlingKind::second, 2, 1, 1, 1),
                  std::invalid_argument);
}
