// stirnum: exact tables, identity verification, and point evaluation for
// Bernoulli, poly-Bernoulli, Cauchy, and poly-Cauchy numbers/polynomials and
// the Stirling / r-Stirling triangles backing them.
//
// Exit codes: 0 success (verify: all pass), 1 verification failure, 2 usage
// error. Output is deterministic: identical invocations produce byte-identical
// bytes.

#include <algorithm>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirnum/sequences.hpp"
#include "stirnum/stirling.hpp"
#include "stirnum/verify.hpp"

namespace {

using nlohmann::ordered_json;

void emit_json(const std::vector<ordered_json>& rows, bool pretty) {
  if (pretty) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(row);
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& row : rows) std::cout << row.dump() << '\n';
  }
}

int run_table(const std::string& sequence, const stirnum::TableBounds& bounds,
              const std::string& format, bool pretty) {
  const stirnum::SequenceInfo& info = stirnum::find_sequence(sequence);
  if (format == "bfile" && !info.integer_valued)
    throw stirnum::UsageError("bfile output requires an integer-valued sequence; '" + info.id +
                              "' is rational-valued");
  const std::vector<stirnum::SequenceRecord> records = stirnum::sequence_table(info, bounds);
  if (format == "csv") {
    std::cout << stirnum::csv_header(info) << '\n';
    for (const auto& rec : records) std::cout << stirnum::record_to_csv_row(rec) << '\n';
  } else if (format == "bfile") {
    long index = 0;
    for (const auto& rec : records) std::cout << index++ << ' ' << rec.value.str() << '\n';
  } else {
    std::vector<ordered_json> rows;
    rows.reserve(records.size());
    for (const auto& rec : records) rows.push_back(stirnum::record_to_json(rec));
    emit_json(rows, pretty);
  }
  return 0;
}

// --corrupt kind:r:n:k[:delta] — test hook that adds delta (default 1) to one
// memoized table entry before verification runs.
void apply_corruption(const std::string& target) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto colon = target.find(':', start);
    fields.push_back(target.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (fields.size() < 4 || fields.size() > 5)
    throw stirnum::UsageError("--corrupt expects kind:r:n:k[:delta]");
  stirnum::StirlingKind kind;
  if (fields[0] == "stirling2" || fields[0] == "rstirling2")
    kind = stirnum::StirlingKind::second;
  else if (fields[0] == "stirling1" || fields[0] == "rstirling1")
    kind = stirnum::StirlingKind::first_unsigned;
  else
    throw stirnum::UsageError("--corrupt kind must be one of stirling2, stirling1, rstirling2, rstirling1");
  long values[4] = {0, 0, 0, 1};
  for (std::size_t i = 1; i < fields.size(); ++i) {
    try {
      std::size_t pos = 0;
      values[i - 1] = std::stol(fields[i], &pos);
      if (pos != fields[i].size()) throw std::invalid_argument(fields[i]);
    } catch (const std::exception&) {
      throw stirnum::UsageError("--corrupt: '" + fields[i] + "' is not an integer");
    }
  }
  try {
    stirnum::corrupt_table_for_testing(kind, values[0], values[1], values[2], values[3]);
  } catch (const std::invalid_argument& e) {
    throw stirnum::UsageError(std::string("--corrupt: ") + e.what());
  }
}

int run_verify(std::vector<std::string> ids, const stirnum::VerifyBounds& bounds,
               const std::string& corrupt, bool pretty) {
  if (ids.empty()) ids = {"all"};
  if (ids.size() == 1 && ids[0] == "all") ids = stirnum::identity_ids();
  const auto& known = stirnum::identity_ids();
  for (const auto& id : ids) {
    if (id == "all")
      throw stirnum::UsageError("'all' cannot be combined with other identity ids");
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw stirnum::UsageError("unknown identity id: " + id);
  }
  if (!corrupt.empty()) apply_corruption(corrupt);
  bool all_pass = true;
  std::vector<ordered_json> rows;
  rows.reserve(ids.size());
  for (const auto& id : ids) {
    const stirnum::VerifyReport report = stirnum::run_identity(id, bounds);
    all_pass = all_pass && report.pass;
    rows.push_back(stirnum::report_to_json(report));
  }
  emit_json(rows, pretty);
  return all_pass ? 0 : 1;
}

int run_eval(const std::string& sequence, const std::vector<std::string>& assignments,
             bool pretty) {
  const stirnum::SequenceInfo& info = stirnum::find_sequence(sequence);
  std::map<std::string, long> params;
  for (const std::string& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0)
      throw stirnum::UsageError("eval parameters take the form name=value, got '" + a + "'");
    const std::string name = a.substr(0, eq);
    const std::string value = a.substr(eq + 1);
    long parsed = 0;
    try {
      std::size_t pos = 0;
      parsed = std::stol(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw stirnum::UsageError("eval parameter '" + name + "' needs an integer value, got '" +
                                value + "'");
    }
    if (!params.emplace(name, parsed).second)
      throw stirnum::UsageError("duplicate eval parameter '" + name + "'");
  }
  const stirnum::SequenceRecord rec = stirnum::sequence_eval(info, params);
  const ordered_json row = stirnum::record_to_json(rec);
  std::cout << (pretty ? row.dump(2) : row.dump()) << '\n';
  return 0;
}

std::string catalog_help() {
  std::string ids;
  for (const auto& info : stirnum::sequence_catalog()) {
    if (!ids.empty()) ids += ", ";
    ids += info.id;
  }
  return ids;
}

std::string identity_help() {
  std::string ids;
  for (const auto& id : stirnum::identity_ids()) {
    if (!ids.empty()) ids += ", ";
    ids += id;
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bernoulli / poly-Bernoulli / Cauchy / Stirling tables and identity checks"};
  app.require_subcommand(1);

  std::string table_sequence;
  stirnum::TableBounds table_bounds;
  std::string format = "json";
  bool table_pretty = false;
  CLI::App* table = app.add_subcommand("table", "emit a sequence table");
  table->add_option("sequence", table_sequence, "sequence id: " + catalog_help())->required();
  table->add_option("--max-n", table_bounds.max_n, "largest n")->capture_default_str();
  table->add_option("--max-k", table_bounds.max_k, "largest k (-1: full rows)")->capture_default_str();
  table->add_option("--max-r", table_bounds.max_r, "largest r")->capture_default_str();
  table->add_option("--max-q", table_bounds.max_q, "largest q")->capture_default_str();
  table->add_option("--format", format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "bfile"}));
  table->add_flag("--pretty", table_pretty, "JSON array instead of one record per line");

  std::vector<std::string> verify_ids;
  stirnum::VerifyBounds verify_bounds;
  std::string corrupt;
  bool verify_pretty = false;
  CLI::App* verify = app.add_subcommand("verify", "cross-check identities between routes");
  verify->add_option("identities", verify_ids, "identity ids or 'all': " + identity_help());
  verify->add_option("--max-n", verify_bounds.max_n, "largest n")->capture_default_str();
  verify->add_option("--max-k", verify_bounds.max_k, "largest k (-1: up to n)")->capture_default_str();
  verify->add_option("--max-r", verify_bounds.max_r, "largest r")->capture_default_str();
  verify->add_option("--max-q", verify_bounds.max_q, "largest q")->capture_default_str();
  verify->add_option("--order", verify_bounds.order, "series truncation order (0: max-n + 2)")
      ->capture_default_str();
  verify->add_flag("--pretty", verify_pretty, "JSON array instead of one report per line");
  verify->add_option("--corrupt", corrupt, "test hook: corrupt one table entry (kind:r:n:k[:delta])")
      ->group("");

  std::string eval_sequence;
  std::vector<std::string> eval_params;
  bool eval_pretty = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a single value");
  eval->add_option("sequence", eval_sequence, "sequence id: " + catalog_help())->required();
  eval->add_option("params", eval_params, "parameters as name=value (e.g. n=4 k=2)");
  eval->add_flag("--pretty", eval_pretty, "indented JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) return run_table(table_sequence, table_bounds, format, table_pretty);
    if (verify->parsed()) return run_verify(verify_ids, verify_bounds, corrupt, verify_pretty);
    return run_eval(eval_sequence, eval_params, eval_pretty);
  } catch (const stirnum::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "run '" << argv[0] << " --help' for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
