#include "stirnum/sequences.hpp"

#include <algorithm>
#include <sstream>

#include "stirnum/bernoulli.hpp"
#include "stirnum/cauchy.hpp"
#include "stirnum/polybernoulli.hpp"
#include "stirnum/stirling.hpp"

namespace stirnum {

const std::vector<SequenceInfo>& sequence_catalog() {
  static const std::vector<SequenceInfo> catalog = {
      {"bernoulli", {"n"}, false, false, 200},
      {"stirling2", {"n", "k"}, true, true, 100},
      {"stirling1", {"n", "k"}, true, true, 100},
      {"rstirling2", {"r", "n", "k"}, true, true, 100},
      {"rstirling1", {"r", "n", "k"}, true, true, 100},
      {"polybernoulli", {"q", "n"}, false, false, 200},
      {"cauchy", {"n"}, false, false, 200},
      {"polycauchy", {"q", "n"}, false, false, 200},
      {"cauchypoly", {"r", "n"}, false, false, 200},
  };
  return catalog;
}

const SequenceInfo& find_sequence(std::string_view id) {
  for (const SequenceInfo& info : sequence_catalog())
    if (info.id == id) return info;
  throw UsageError("unknown sequence id: " + std::string(id));
}

namespace {

bool has_param(const SequenceInfo& info, const char* name) {
  return std::find(info.param_names.begin(), info.param_names.end(), name) !=
         info.param_names.end();
}

Rational compute(const SequenceInfo& info, long q, long r, long n, long k) {
  if (info.id == "bernoulli") return bernoulli_number(n);
  if (info.id == "stirling2") return Rational(stirling2(n, k));
  if (info.id == "stirling1") return Rational(stirling1_signed(n, k));
  if (info.id == "rstirling2") return Rational(rstirling2(r, n, k));
  if (info.id == "rstirling1") return Rational(rstirling1_signed(r, n, k));
  if (info.id == "polybernoulli") return polybernoulli_number(n, q);
  if (info.id == "cauchy") return cauchy_number(n);
  if (info.id == "polycauchy") return poly_cauchy_number(n, q);
  return cauchy_polynomial_at_integer(n, r);  // cauchypoly
}

SequenceRecord make_record(const SequenceInfo& info, long q, long r, long n, long k) {
  SequenceRecord rec;
  rec.sequence = info.id;
  for (const std::string& name : info.param_names) {
    long v = 0;
    if (name == "q")
      v = q;
    else if (name == "r")
      v = r;
    else if (name == "n")
      v = n;
    else
      v = k;
    rec.params.emplace_back(name, Rational(v));
  }
  rec.value = compute(info, q, r, n, k);
  return rec;
}

void check_bounds(const SequenceInfo& info, const TableBounds& bounds) {
  if (bounds.max_n < 0) throw UsageError("--max-n must be non-negative");
  if (bounds.max_n > info.max_n_cap)
    throw UsageError("--max-n exceeds the cap for " + info.id + " (" +
                     std::to_string(info.max_n_cap) + ")");
  if (has_param(info, "r") && bounds.max_r < 0) throw UsageError("--max-r must be non-negative");
  if (has_param(info, "q") && bounds.max_q < 1) throw UsageError("--max-q must be at least 1");
}

}  // namespace

std::vector<SequenceRecord> sequence_table(const SequenceInfo& info, const TableBounds& bounds) {
  check_bounds(info, bounds);
  std::vector<SequenceRecord> out;
  const long q_lo = has_param(info, "q") ? 1 : 0;
  const long q_hi = has_param(info, "q") ? bounds.max_q : 0;
  const long r_hi = has_param(info, "r") ? bounds.max_r : 0;
  for (long q = q_lo; q <= q_hi; ++q)
    for (long r = 0; r <= r_hi; ++r) {
      const long n_lo = info.triangle ? r : 0;
      for (long n = n_lo; n <= bounds.max_n; ++n) {
        if (!info.triangle) {
          out.push_back(make_record(info, q, r, n, 0));
          continue;
        }
        const long k_hi = bounds.max_k < 0 ? n : std::min(n, bounds.max_k);
        for (long k = r; k <= k_hi; ++k) out.push_back(make_record(info, q, r, n, k));
      }
    }
  return out;
}

SequenceRecord sequence_eval(const SequenceInfo& info, const std::map<std::string, long>& params) {
  for (const auto& [name, value] : params)
    if (!has_param(info, name.c_str()))
      throw UsageError("sequence " + info.id + " takes no parameter '" + name + "'");
  long q = 1, r = 0, n = 0, k = 0;
  for (const std::string& name : info.param_names) {
    auto it = params.find(name);
    if (it == params.end())
      throw UsageError("sequence " + info.id + " requires parameter '" + name + "'");
    if (name == "q")
      q = it->second;
    else if (name == "r")
      r = it->second;
    else if (name == "n")
      n = it->second;
    else
      k = it->second;
  }
  if (n < 0) throw UsageError("n must be non-negative");
  if (n > info.max_n_cap)
    throw UsageError("n exceeds the cap for " + info.id + " (" + std::to_string(info.max_n_cap) + ")");
  if (has_param(info, "r") && r < 0) throw UsageError("r must be non-negative");
  if (has_param(info, "q") && q < 1) throw UsageError("q must be at least 1");
  if (has_param(info, "k") && (k < 0 || k > n)) throw UsageError("k must satisfy 0 <= k <= n");
  return make_record(info, q, r, n, k);
}

nlohmann::ordered_json record_to_json(const SequenceRecord& rec) {
  nlohmann::ordered_json j;
  j["sequence"] = rec.sequence;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : rec.params) {
    if (value.is_integer() && value.num().fits_slong_p())
      params[name] = static_cast<long long>(value.num().get_si());
    else
      params[name] = value.str();
  }
  j["params"] = std::move(params);
  j["value"] = rec.value.str();
  return j;
}

std::string record_to_csv_row(const SequenceRecord& rec) {
  std::ostringstream os;
  os << rec.sequence;
  for (const auto& [name, value] : rec.params) os << ',' << value.str();
  os << ',' << rec.value.str();
  return os.str();
}

std::string csv_header(const SequenceInfo& info) {
  std::ostringstream os;
  os << "sequence";
  for (const std::string& name : info.param_names) os << ',' << name;
  os << ",value";
  return os.str();
}

}  // namespace stirnum
