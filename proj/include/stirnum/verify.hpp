#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stirnum/sequences.hpp"

namespace stirnum {

// Cross-route identity verification. Each identity compares two or more
// independent computation routes over a parameter range and reports the
// first disagreement, if any, as a counterexample naming both routes.

struct VerifyBounds {
  long max_n = 20;
  long max_k = -1;  // -1: up to n
  long max_r = 4;
  long max_q = 4;
  long order = 0;  // series truncation; 0 means n+2
};

struct VerifyReport {
  std::string identity;
  std::string range;  // the bounds actually tested
  bool pass = true;
  // Present iff !pass: the same cell computed by the two disagreeing
  // routes (SequenceRecord::sequence holds the route name).
  std::optional<std::pair<SequenceRecord, SequenceRecord>> counterexample;
};

/// The documented identity ids, in the order `verify all` runs them:
/// eq2-vs-egf, eq3-vs-definition, eq6-nielsen, eq4, eq5-broder, lemma2,
/// prop4-vs-bayad, cor5, cauchy-routes, komatsu-mezo, stirling2-explicit,
/// rstirling2-brute, stirling1-falling, rstirling1-brute.
const std::vector<std::string>& identity_ids();

/// Runs one identity; throws UsageError for an unknown id.
VerifyReport run_identity(std::string_view id, const VerifyBounds& bounds);

nlohmann::ordered_json report_to_json(const VerifyReport& report);

}  // namespace stirnum
