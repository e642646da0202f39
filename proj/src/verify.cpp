#include "stirnum/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stirnum/bernoulli.hpp"
#include "stirnum/bigint.hpp"
#include "stirnum/cauchy.hpp"
#include "stirnum/polybernoulli.hpp"
#include "stirnum/polynomial.hpp"
#include "stirnum/series.hpp"
#include "stirnum/stirling.hpp"

namespace stirnum {

namespace {

using Params = std::vector<std::pair<std::string, Rational>>;

const std::vector<Rational>& bernoulli_samples() {
  static const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                           Rational(-2)};
  return xs;
}

const std::vector<Rational>& polybernoulli_samples() {
  static const std::vector<Rational> xs = {Rational(0),      Rational(1),       Rational(-1),
                                           Rational(1, 2),   Rational(-1, 2),   Rational(2)};
  return xs;
}

std::string samples_str(const std::vector<Rational>& xs) {
  std::ostringstream os;
  os << "x in {";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].str();
  os << '}';
  return os.str();
}

// Records the first disagreement; returns true while the report stays clean.
bool expect_equal(VerifyReport& rep, const Params& params, const std::string& lhs_route,
                  const Rational& lhs, const std::string& rhs_route, const Rational& rhs) {
  if (lhs == rhs) return true;
  rep.pass = false;
  rep.counterexample = {SequenceRecord{lhs_route, params, lhs}, SequenceRecord{rhs_route, params, rhs}};
  return false;
}

// Coefficientwise comparison; a mismatch is reported at the first differing
// power, recorded as the extra parameter "i".
bool expect_poly_equal(VerifyReport& rep, Params params, const std::string& lhs_route,
                       const Polynomial& lhs, const std::string& rhs_route, const Polynomial& rhs) {
  if (lhs == rhs) return true;
  long i = 0;
  const long top = std::max(lhs.degree(), rhs.degree());
  for (long d = 0; d <= top; ++d)
    if (lhs.coeff(static_cast<std::size_t>(d)) != rhs.coeff(static_cast<std::size_t>(d))) {
      i = d;
      break;
    }
  params.emplace_back("i", Rational(i));
  return expect_equal(rep, params, lhs_route, lhs.coeff(static_cast<std::size_t>(i)), rhs_route,
                      rhs.coeff(static_cast<std::size_t>(i)));
}

long k_limit(const VerifyBounds& b, long n) { return b.max_k < 0 ? n : std::min(n, b.max_k); }

std::string k_range_str(const VerifyBounds& b) {
  return b.max_k < 0 ? std::string("k<=n") : "k<=min(n," + std::to_string(b.max_k) + ")";
}

std::size_t series_order(const VerifyBounds& b, long max_n) {
  return b.order == 0 ? static_cast<std::size_t>(max_n) + 2 : static_cast<std::size_t>(b.order);
}

// (-1)^k k!/(k+1)^q
Rational poly_weight(long k, long q) {
  Rational w(factorial(static_cast<unsigned long>(k)),
             int_pow(Int(k + 1), static_cast<unsigned long>(q)));
  return k % 2 == 0 ? w : -w;
}

void id_eq2_vs_egf(const VerifyBounds& b, VerifyReport& rep) {
  const std::size_t N = series_order(b, b.max_n);
  std::ostringstream rng;
  rng << "n<=" << b.max_n << ", " << samples_str(bernoulli_samples()) << ", order=" << N;
  rep.range = rng.str();
  for (const Rational& x : bernoulli_samples()) {
    const TruncatedEGF s = bernoulli_gf_series(x, N);
    for (long n = 0; n <= b.max_n; ++n) {
      const Rational gf = s.egf_coefficient(static_cast<std::size_t>(n));
      const Params ps{{"n", Rational(n)}, {"x", x}};
      if (x.is_zero()) {
        if (!expect_equal(rep, ps, "bernoulli-stirling-sum", bernoulli_number(n), "bernoulli-egf",
                          gf))
          return;
      } else {
        if (!expect_equal(rep, ps, "bernoulli-nielsen", bernoulli_nielsen(n, x), "bernoulli-egf",
                          gf))
          return;
      }
    }
  }
}

void id_eq3_vs_definition(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n);
  for (long n = 0; n <= b.max_n; ++n)
    if (!expect_poly_equal(rep, {{"n", Rational(n)}}, "bernoulli-poly-definition",
                           bernoulli_polynomial(n), "bernoulli-poly-stirling",
                           bernoulli_polynomial_stirling(n)))
      return;
}

void id_eq6_nielsen(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", " + samples_str(bernoulli_samples());
  for (long n = 0; n <= b.max_n; ++n) {
    const Polynomial poly = bernoulli_polynomial(n);
    for (const Rational& x : bernoulli_samples()) {
      const Params ps{{"n", Rational(n)}, {"x", x}};
      const Rational nielsen = bernoulli_nielsen(n, x);
      const Rational todorov = bernoulli_todorov(n, x);
      if (!expect_equal(rep, ps, "bernoulli-nielsen", nielsen, "bernoulli-todorov", todorov))
        return;
      if (!expect_equal(rep, ps, "bernoulli-todorov", todorov, "bernoulli-poly-eval", poly.eval(x)))
        return;
    }
  }
}

void id_eq4(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", r<=" + std::to_string(b.max_r);
  for (long n = 0; n <= b.max_n; ++n) {
    const Polynomial poly = bernoulli_polynomial(n);
    for (long r = 0; r <= b.max_r; ++r) {
      const Params ps{{"n", Rational(n)}, {"r", Rational(r)}};
      if (!expect_equal(rep, ps, "bernoulli-rstirling", bernoulli_at_integer_rstirling(n, r),
                        "bernoulli-poly-eval", poly.eval(Rational(r))))
        return;
    }
  }
}

void id_eq5_broder(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", " + k_range_str(b) +
              ", r<=" + std::to_string(b.max_r);
  for (long r = 0; r <= b.max_r; ++r)
    for (long n = 0; n <= b.max_n; ++n)
      for (long k = 0; k <= k_limit(b, n); ++k) {
        const Params ps{{"r", Rational(r)}, {"n", Rational(n + r)}, {"k", Rational(k + r)}};
        if (!expect_equal(rep, ps, "rstirling2-recurrence", Rational(rstirling2(r, n + r, k + r)),
                          "rstirling2-broder", Rational(rstirling2_via_broder(r, n, k))))
          return;
      }
}

void id_lemma2(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", " + k_range_str(b) +
              ", r<=" + std::to_string(b.max_r);
  for (long n = 0; n <= b.max_n; ++n) {
    // (x+j)^n for j = 0..n, shared across the k loop
    std::vector<Polynomial> shifted;
    shifted.reserve(static_cast<std::size_t>(n) + 1);
    const Polynomial xn = Polynomial::monomial(static_cast<std::size_t>(n));
    for (long j = 0; j <= n; ++j) shifted.push_back(xn.translated(Rational(j)));
    for (long k = 0; k <= k_limit(b, n); ++k) {
      // polynomial form: identity in x
      Polynomial lhs;
      for (long j = 0; j <= k; ++j) {
        const Rational c(j % 2 == 0 ? binomial(k, j) : Int(-binomial(k, j)));
        lhs += c * shifted[static_cast<std::size_t>(j)];
      }
      Polynomial rhs;
      for (long p = 0; p <= n; ++p)
        rhs += Polynomial::monomial(static_cast<std::size_t>(n - p),
                                    Rational(binomial(n, p) * stirling2(p, k)));
      Rational scale(factorial(static_cast<unsigned long>(k)));
      if (k % 2 != 0) scale = -scale;
      rhs = scale * rhs;
      if (!expect_poly_equal(rep, {{"n", Rational(n)}, {"k", Rational(k)}}, "lemma2-binomial-sum",
                             lhs, "lemma2-stirling-sum", rhs))
        return;
      // integer form: numeric identity at integer r
      for (long r = 0; r <= b.max_r; ++r) {
        Int num = 0;
        for (long j = 0; j <= k; ++j) {
          const Int term = binomial(k, j) * int_pow(Int(r + j), static_cast<unsigned long>(n));
          if (j % 2 == 0)
            num += term;
          else
            num -= term;
        }
        Int expected = factorial(static_cast<unsigned long>(k)) * rstirling2(r, n + r, k + r);
        if (k % 2 != 0) expected = -expected;
        const Params ps{{"r", Rational(r)}, {"n", Rational(n)}, {"k", Rational(k)}};
        if (!expect_equal(rep, ps, "lemma2-binomial-sum", Rational(num), "lemma2-rstirling",
                          Rational(expected)))
          return;
      }
    }
  }
}

void id_prop4_vs_bayad(const VerifyBounds& b, VerifyReport& rep) {
  const std::size_t N = series_order(b, b.max_n);
  std::ostringstream rng;
  rng << "n<=" << b.max_n << ", q<=" << b.max_q << ", " << samples_str(polybernoulli_samples())
      << ", order=" << N;
  rep.range = rng.str();
  for (long q = 1; q <= b.max_q; ++q) {
    std::vector<TruncatedEGF> gf;
    gf.reserve(polybernoulli_samples().size());
    for (const Rational& x : polybernoulli_samples()) gf.push_back(polybernoulli_gf_series(q, x, N));
    for (long n = 0; n <= b.max_n; ++n) {
      const Polynomial poly = polybernoulli_polynomial(n, q);
      for (std::size_t xi = 0; xi < polybernoulli_samples().size(); ++xi) {
        const Rational& x = polybernoulli_samples()[xi];
        const Params ps{{"q", Rational(q)}, {"n", Rational(n)}, {"x", x}};
        const Rational bayad = polybernoulli_bayad(n, q, x);
        if (!expect_equal(rep, ps, "polybernoulli-prop4-eval", poly.eval(x), "polybernoulli-bayad",
                          bayad))
          return;
        if (!expect_equal(rep, ps, "polybernoulli-bayad", bayad, "polybernoulli-gf",
                          gf[xi].egf_coefficient(static_cast<std::size_t>(n))))
          return;
      }
    }
  }
}

void id_cor5(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", q<=" + std::to_string(b.max_q) +
              ", r<=" + std::to_string(b.max_r);
  for (long q = 1; q <= b.max_q; ++q)
    for (long n = 0; n <= b.max_n; ++n) {
      const Polynomial poly = polybernoulli_polynomial(n, q);
      for (long r = 0; r <= b.max_r; ++r) {
        Rational sum;
        for (long k = 0; k <= n; ++k)
          sum += poly_weight(k, q) * Rational(rstirling2(r, n + r, k + r));
        if (n % 2 != 0) sum = -sum;
        const Params ps{{"q", Rational(q)}, {"r", Rational(r)}, {"n", Rational(n)}};
        if (!expect_equal(rep, ps, "polybernoulli-cor5-rstirling", sum, "polybernoulli-prop4-eval",
                          poly.eval(Rational(-r))))
          return;
      }
    }
}

void id_cauchy_routes(const VerifyBounds& b, VerifyReport& rep) {
  const std::size_t N = series_order(b, b.max_n);
  rep.range = "n<=" + std::to_string(b.max_n) + ", order=" + std::to_string(N);
  const TruncatedEGF s = cauchy_gf_series(N);
  for (long n = 0; n <= b.max_n; ++n) {
    const Params ps{{"n", Rational(n)}};
    const Rational sum = cauchy_number(n);
    const Rational integral = cauchy_number_integral(n);
    if (!expect_equal(rep, ps, "cauchy-stirling-sum", sum, "cauchy-integral", integral)) return;
    if (!expect_equal(rep, ps, "cauchy-integral", integral, "cauchy-egf",
                      s.egf_coefficient(static_cast<std::size_t>(n))))
      return;
  }
}

void id_komatsu_mezo(const VerifyBounds& b, VerifyReport& rep) {
  const std::size_t N = series_order(b, b.max_n);
  rep.range = "n<=" + std::to_string(b.max_n) + ", r<=" + std::to_string(b.max_r) +
              ", order=" + std::to_string(N);
  for (long r = 0; r <= b.max_r; ++r) {
    const TruncatedEGF s = cauchy_polynomial_gf_series(r, N);
    for (long n = 0; n <= b.max_n; ++n) {
      const Params ps{{"r", Rational(r)}, {"n", Rational(n)}};
      if (!expect_equal(rep, ps, "cauchypoly-rstirling", cauchy_polynomial_at_integer(n, r),
                        "cauchypoly-egf", s.egf_coefficient(static_cast<std::size_t>(n))))
        return;
    }
  }
}

void id_stirling2_explicit(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", " + k_range_str(b);
  for (long n = 0; n <= b.max_n; ++n)
    for (long k = 0; k <= k_limit(b, n); ++k) {
      const Params ps{{"n", Rational(n)}, {"k", Rational(k)}};
      if (!expect_equal(rep, ps, "stirling2-recurrence", Rational(stirling2(n, k)),
                        "stirling2-explicit-sum", Rational(stirling2_explicit(n, k))))
        return;
    }
}

void id_rstirling2_brute(const VerifyBounds& b, VerifyReport& rep) {
  const long n_hi = std::min(b.max_n, 11L);
  const long r_hi = std::min(b.max_r, 4L);
  rep.range = "n<=" + std::to_string(n_hi) + ", " + k_range_str(b) +
              ", r<=" + std::to_string(r_hi);
  for (long r = 0; r <= r_hi; ++r)
    for (long n = r; n <= n_hi; ++n)
      for (long k = r; k <= k_limit(b, n); ++k) {
        const Params ps{{"r", Rational(r)}, {"n", Rational(n)}, {"k", Rational(k)}};
        if (!expect_equal(rep, ps, "rstirling2-recurrence", Rational(rstirling2(r, n, k)),
                          "partition-enumeration",
                          Rational(brute_partitions(static_cast<int>(n), static_cast<int>(k),
                                                    static_cast<int>(r)))))
          return;
      }
}

void id_stirling1_falling(const VerifyBounds& b, VerifyReport& rep) {
  rep.range = "n<=" + std::to_string(b.max_n) + ", " + k_range_str(b);
  for (long n = 0; n <= b.max_n; ++n) {
    const Polynomial p = falling_factorial(static_cast<unsigned long>(n));
    for (long k = 0; k <= k_limit(b, n); ++k) {
      const Params ps{{"n", Rational(n)}, {"k", Rational(k)}};
      if (!expect_equal(rep, ps, "stirling1-recurrence", Rational(stirling1_signed(n, k)),
                        "falling-factorial-coeff", p.coeff(static_cast<std::size_t>(k))))
        return;
    }
  }
}

void id_rstirling1_brute(const VerifyBounds& b, VerifyReport& rep) {
  const long n_hi = std::min(b.max_n, 8L);
  const long r_hi = std::min(b.max_r, 3L);
  rep.range = "n<=" + std::to_string(n_hi) + ", " + k_range_str(b) +
              ", r<=" + std::to_string(r_hi);
  for (long r = 0; r <= r_hi; ++r)
    for (long n = r; n <= n_hi; ++n)
      for (long k = r; k <= k_limit(b, n); ++k) {
        const Params ps{{"r", Rational(r)}, {"n", Rational(n)}, {"k", Rational(k)}};
        if (!expect_equal(rep, ps, "rstirling1-recurrence", Rational(rstirling1_unsigned(r, n, k)),
                          "cycle-enumeration",
                          Rational(brute_cycle_permutations(static_cast<int>(n),
                                                            static_cast<int>(k),
                                                            static_cast<int>(r)))))
          return;
      }
}

using IdentityFn = void (*)(const VerifyBounds&, VerifyReport&);

const std::vector<std::pair<std::string, IdentityFn>>& identity_table() {
  static const std::vector<std::pair<std::string, IdentityFn>> table = {
      {"eq2-vs-egf", id_eq2_vs_egf},
      {"eq3-vs-definition", id_eq3_vs_definition},
      {"eq6-nielsen", id_eq6_nielsen},
      {"eq4", id_eq4},
      {"eq5-broder", id_eq5_broder},
      {"lemma2", id_lemma2},
      {"prop4-vs-bayad", id_prop4_vs_bayad},
      {"cor5", id_cor5},
      {"cauchy-routes", id_cauchy_routes},
      {"komatsu-mezo", id_komatsu_mezo},
      {"stirling2-explicit", id_stirling2_explicit},
      {"rstirling2-brute", id_rstirling2_brute},
      {"stirling1-falling", id_stirling1_falling},
      {"rstirling1-brute", id_rstirling1_brute},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : identity_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerifyReport run_identity(std::string_view id, const VerifyBounds& bounds) {
  if (bounds.max_n < 0) throw UsageError("--max-n must be non-negative");
  if (bounds.max_r < 0) throw UsageError("--max-r must be non-negative");
  if (bounds.max_q < 1) throw UsageError("--max-q must be at least 1");
  if (bounds.order < 0) throw UsageError("--order must be non-negative");
  if (bounds.order != 0 && bounds.order <= bounds.max_n)
    throw UsageError("--order must exceed --max-n");
  for (const auto& [name, fn] : identity_table())
    if (name == id) {
      VerifyReport rep;
      rep.identity = name;
      fn(bounds, rep);
      return rep;
    }
  throw UsageError("unknown identity id: " + std::string(id));
}

nlohmann::ordered_json report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["range"] = report.range;
  j["status"] = report.pass ? "pass" : "fail";
  if (report.counterexample) {
    nlohmann::ordered_json ce;
    ce["lhs"] = record_to_json(report.counterexample->first);
    ce["rhs"] = record_to_json(report.counterexample->second);
    j["counterexample"] = std::move(ce);
  }
  return j;
}

}  // namespace stirnum
