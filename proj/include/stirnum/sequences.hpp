#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stirnum/rational.hpp"

namespace stirnum {

/// Bad sequence/identity id, bad or missing parameter, bounds outside the
/// documented caps, or an invalid format combination. The CLI maps this to
/// exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One output row: a sequence id, its fully instantiated parameters (in the
// documented iteration order), and the exact value. Parameters are integers
// everywhere except verification sample points, which may be rational; JSON
// keeps integer parameters as numbers and renders the rest as strings.
struct SequenceRecord {
  std::string sequence;
  std::vector<std::pair<std::string, Rational>> params;
  Rational value;
};

struct SequenceInfo {
  std::string id;
  std::vector<std::string> param_names;  // iteration order for tables
  bool triangle = false;                 // (n,k) triangle, row-major
  bool integer_valued = false;           // eligible for b-file output
  long max_n_cap = 200;                  // 200 linear, 100 triangles
};

struct TableBounds {
  long max_n = 10;
  long max_k = -1;  // -1: full rows
  long max_r = 4;
  long max_q = 4;
};

/// Every sequence the CLI can emit, in documented order: bernoulli,
/// stirling2, stirling1, rstirling2, rstirling1, polybernoulli, cauchy,
/// polycauchy, cauchypoly.
const std::vector<SequenceInfo>& sequence_catalog();

/// Throws UsageError for an unknown id.
const SequenceInfo& find_sequence(std::string_view id);

/// All records of a sequence within bounds, in deterministic parameter
/// order (q, then r, then n, then k, each ascending). Throws UsageError if
/// bounds exceed the documented caps.
std::vector<SequenceRecord> sequence_table(const SequenceInfo& info, const TableBounds& bounds);

/// Single value from named parameters; requires exactly the sequence's
/// parameter set (UsageError otherwise).
SequenceRecord sequence_eval(const SequenceInfo& info, const std::map<std::string, long>& params);

nlohmann::ordered_json record_to_json(const SequenceRecord& rec);
std::string record_to_csv_row(const SequenceRecord& rec);
std::string csv_header(const SequenceInfo& info);

}  // namespace stirnum
