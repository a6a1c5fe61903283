#include "lucaskit/reports.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "lucaskit/algebraic_numbers.hpp"
#include "lucaskit/closed_forms.hpp"
#include "lucaskit/diophantine_bounds.hpp"
#include "lucaskit/errors.hpp"
#include "lucaskit/exact_engine.hpp"
#include "lucaskit/reduction.hpp"
#include "lucaskit/zero_census.hpp"

namespace lucaskit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parameter:
      return "parameter";
    case ErrorCode::Domain:
      return "domain";
    case ErrorCode::Range:
      return "range";
    case ErrorCode::Integrality:
      return "integrality";
    case ErrorCode::Certification:
      return "certification";
    case ErrorCode::PrecisionExhausted:
      return "precision-exhausted";
    case ErrorCode::ReductionFailure:
      return "reduction-failure";
    case ErrorCode::Feasibility:
      return "feasibility";
    case ErrorCode::Parity:
      return "parity";
    case ErrorCode::Usage:
      return "usage";
    case ErrorCode::ScanLimit:
      return "scan-limit";
  }
  return "unknown";
}

namespace {

constexpr const char* kDefaultM = "1.5e46";
constexpr long kLongRunScan = 200000;
constexpr long kLongRunSweep = 20000;

// ---- errata -----------------------------------------------------------------

const std::map<std::string, std::string>& errata_catalog() {
  static const std::map<std::string, std::string> c = {
      {"char_poly", "characteristic polynomial taken as x^k - x^(k-1) - ... - x - 1; a leading -2x^(k-1) term "
                    "does not reproduce the sequence"},
      {"zero_predicate", "Q_{mk+r} = 0 exactly when 0 <= m < r <= k-2 (strict m < r; m = r gives nonzero values)"},
      {"small_block_origin", "the small-block form excludes (m, r) = (0, 0); Q_0 = 2 comes from the recurrence"},
      {"block_diag_limit", "the block-diagonal sum for Q starts at j = r-1, including the Q_0 term when r = 1"},
      {"block_index", "the block series equals Q at index b*k*(k-1) - 1 + (j-1)*k + r"},
      {"inner_root_floor", "the inner-root lower bound 3^(1/k) exceeds 1; only |g_i| < 1 is asserted and the "
                           "minimum modulus is reported"},
      {"psi_valuation", "the 2-adic bound for 4*psi(y,z-1) + psi(y,z) is measured, not assumed; valuations of a "
                        "sum can exceed the minimum of the parts"},
      {"matveev_log_term", "the (1 + log tB) factor is evaluated as stated; a variant with log(2n+2) differs by a "
                           "few percent"},
      {"reduction_retry", "when eps <= 0 at the first q > 6M later convergents are tried, up to 50"},
      {"gap_bracket", "the gap cap 2H log H is not tight: the inequality already fails at the cap and holds a "
                      "decade below it"},
      {"even_ck_range", "C_k computed from certified roots falls outside [415, 9293983] for k = 4 and for large k"},
      {"band_range", "log|f_k(g_k)/30| and log|g_{k-2}/g_k| leave the published bands near k = 885"},
  };
  return c;
}

Json errata(std::initializer_list<const char*> ids) {
  Json out = Json::array();
  for (const char* id : ids) out.push_back({{"id", id}, {"note", errata_catalog().at(id)}});
  return out;
}

// ---- helpers ----------------------------------------------------------------

std::string s(const Real& x, int digits = 25) { return x.str(digits); }
std::string s(const ExactInt& x) { return x.get_str(); }

Json interval_json(const Interval& x, int digits = 25) {
  return {{"mid", x.mid().str(digits)}, {"rad", x.rad().str(3)}};
}

Json log_json(const LogMagnitude& x) {
  Json j = {{"value", x.str(8)}, {"log10", x.log10().str(12)}};
  return j;
}

[[noreturn]] void usage(const std::string& msg) { fail(ErrorCode::Usage, msg); }

int exit_code_for(ErrorCode c) {
  return c == ErrorCode::ReductionFailure || c == ErrorCode::Integrality ? 1 : 2;
}

PrecisionPolicy policy_for(const RunConfig& c) {
  PrecisionPolicy p;
  p.start_digits = c.digits.value_or(default_digits());
  p.max_doublings = 4;
  return p;
}

std::vector<int> k_values(const RunConfig& c) {
  std::vector<int> out;
  for (int k = c.k->first; k <= c.k->second; ++k) out.push_back(k);
  return out;
}

// Runs f over items on up to `workers` threads; results keep item order and
// the first failing item (by order) rethrows.
template <class T, class F>
std::vector<Json> parallel_map(const std::vector<T>& items, int workers, F f) {
  std::vector<Json> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = f(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

bool all_pass(const Json& results) {
  for (const Json& r : results) {
    if (r.contains("pass") && !r["pass"].get<bool>()) return false;
  }
  return true;
}

// ---- commands -----------------------------------------------------------------

Json zeros_item(int k, const RunConfig& c) {
  const long limit = c.limit.value_or(4L * k * k);
  ZeroSet z = census(k, limit);
  Json intervals = Json::array();
  for (const IntervalSpec& iv : predicted_intervals(k)) intervals.push_back({iv.lo, iv.hi});
  Json l_indices = Json::array();
  for (long n : z.zeros) l_indices.push_back(-n);
  const long expected = multiplicity_formula(k);
  return {{"k", k},
          {"scanned_range", {0, limit}},
          {"zeros", z.zeros},
          {"l_indices", l_indices},
          {"zero_count", z.zeros.size()},
          {"multiplicity_formula", expected},
          {"predicted_intervals", intervals},
          {"sporadic", z.sporadic},
          {"missing", z.missing},
          {"pass", z.consistent() && static_cast<long>(z.zeros.size()) == expected}};
}

Json closed_forms_item(int k, const RunConfig& c) {
  const long n_max = c.n_max.value_or(2000);
  Json forms = Json::array();
  bool ok = true;
  long checked = 0;
  for (const FormCheck& f : closed_form_sweep(k, n_max)) {
    Json j = {{"form", f.form}, {"checked", f.checked}, {"mismatches", f.mismatches}};
    if (f.mismatches > 0) j["first_mismatch"] = f.first_mismatch;
    ok = ok && f.mismatches == 0;
    checked += f.checked;
    forms.push_back(j);
  }
  return {{"k", k}, {"n_max", n_max}, {"checked", checked}, {"forms", forms}, {"pass", ok}};
}

Json identities_item(int k, const RunConfig& c) {
  IdentityAudit a = identity_audit(SeqParams(k), c.n_max.value_or(5000));
  Json j = {{"k", k}, {"limit", a.limit}, {"checked", a.checked}, {"pass", a.pass()}};
  if (!a.pass()) {
    j["first_failure"] = *a.first_failure;
    j["identity"] = a.failed_identity;
  }
  return j;
}

Json signs_item(int k, const RunConfig& c) {
  const long lo = static_cast<long>(k) * k - 2L * k - 1;
  const long hi = c.n_max.value_or(10L * k * k);
  SignAudit a = even_sign_audit(k, lo, hi);
  Json j = {{"k", k}, {"range", {a.n_lo, a.n_hi}}, {"checked", a.checked}, {"pass", a.pass()}};
  if (a.first_violation) j["first_violation"] = *a.first_violation;
  return j;
}

Json roots_item(int k, const RunConfig& c) {
  const RootSystem& rs = *shared_roots(k, policy_for(c));
  Json list = Json::array();
  for (int i = 1; i <= k; ++i) {
    const RootEnclosure& r = rs.at(i);
    CInterval f = f_value(k, r.box);
    list.push_back({{"label", i},
                    {"re", s(r.box.re.mid())},
                    {"im", s(r.box.im.mid())},
                    {"radius", s(max(r.box.re.rad(), r.box.im.rad()), 3)},
                    {"modulus", s(r.modulus.mid())},
                    {"real", r.real},
                    {"conjugate", r.conjugate},
                    {"f_re", s(f.re.mid())},
                    {"f_im", s(f.im.mid())},
                    {"f_abs", s(abs(f).mid())}});
  }
  const bool in_bracket =
      rs.gamma().lo() > (Real::from_long(1, rs.bits) - pow(Real::from_double(0.5, rs.bits), static_cast<long>(k))) * 2L &&
      rs.gamma().hi() < Real::from_long(2, rs.bits);
  return {{"k", k},
          {"digits", rs.digits},
          {"gamma", interval_json(rs.gamma(), 40)},
          {"real_roots", rs.real_count},
          {"trace", interval_json(rs.trace)},
          {"modulus_product", interval_json(rs.modulus_product)},
          {"roots", list},
          {"pass", in_bracket && rs.trace.contains(Real::from_long(1, rs.bits)) &&
                       rs.modulus_product.contains(Real::from_long(1, rs.bits))}};
}

bool within(const LogMagnitude& x, double lo, double hi) {
  return x >= LogMagnitude::from_real(Real::from_double(lo, LogMagnitude::kBits)) &&
         x <= LogMagnitude::from_real(Real::from_double(hi, LogMagnitude::kBits));
}

Json bounds_item(int k, const RunConfig& c) {
  Json j = {{"k", k}};
  bool ok = true;
  if (k >= 2) j["matveev_k9_coefficient"] = s(matveev_k9_coefficient(k, 1.0), 8);
  if (k % 2 == 0 && k >= 4) {
    LogMagnitude even = even_k_bound(k);
    j["even_bound"] = log_json(even);
    if (k <= 500) {
      long ck = even_Ck(k, policy_for(c));
      const bool in_range = ck >= 415 && ck <= 9293983;
      j["C_k"] = ck;
      j["C_k_in_published_range"] = in_range;
      j["C_k_below_even_bound"] = LogMagnitude::from_int(ck) < even;
      ok = in_range && j["C_k_below_even_bound"].get<bool>();
    }
  }
  if (k % 2 == 1 && k >= 5) {
    LogMagnitude chain = odd_chain_bound(k);
    LogMagnitude floor = odd_k_zero_floor(k);
    j["odd_bound"] = log_json(odd_k_bound(k));
    j["odd_chain_bound"] = log_json(chain);
    j["zero_floor"] = log_json(floor);
    j["floor_within_chain"] = floor <= chain;
  }
  j["pass"] = ok;
  return j;
}

Json chain_item() {
  const int k_cap = k_cap_scan();
  const double c_log = 7.93e44, c_const = -10.48, c_lin = 1.78e-8;
  LogMagnitude n_cap = gap_solve(c_log, c_const, c_lin);
  const long floor_cap = floor_k_cap(n_cap);
  const bool at_cap = gap_inequality_holds(c_log, c_const, c_lin, n_cap);
  const bool decade_above =
      gap_inequality_holds(c_log, c_const, c_lin, LogMagnitude::from_log10(n_cap.log10() + 1));
  const bool decade_below =
      gap_inequality_holds(c_log, c_const, c_lin, LogMagnitude::from_log10(n_cap.log10() - 1));
  const bool ok = std::abs(k_cap - 886) <= 2 && within(n_cap, 1.0e55, 1.2e55) && floor_cap >= 365 && floor_cap <= 367 &&
                  !decade_above;
  return {{"item", "odd_chain"},
          {"k_cap", k_cap},
          {"gap_inputs", {c_log, c_const, c_lin}},
          {"n_cap", log_json(n_cap)},
          {"holds_at_cap", at_cap},
          {"holds_decade_above", decade_above},
          {"holds_decade_below", decade_below},
          {"floor_k_cap", floor_cap},
          {"pass", ok}};
}

Json reduce_item(int k, const RunConfig& c) {
  const ExactInt M = parse_decimal_integer(c.M.value_or(kDefaultM));
  OddReduction o = reduce_odd_k(k, M, policy_for(c));
  const ReductionProblem& p = o.problem;
  const ReductionResult& r = o.result;
  Json attempts = Json::array();
  for (const ReductionAttempt& a : r.attempts) {
    attempts.push_back({{"index", a.index}, {"q", s(a.q)}, {"epsilon", s(a.epsilon.mid(), 12)}});
  }
  const mpfr_prec_t bits = p.tau.value.bits();
  auto in = [bits](const Real& v, const char* lo, const char* hi) {
    return v >= Real::from_string(lo, bits) && v <= Real::from_string(hi, bits);
  };
  Json checks = {{"tau_band", in(p.tau.value, "1.59", "1.99")},
                 {"mu_band", in(p.mu.value, "0.70", "1.99")},
                 {"epsilon_positive", r.epsilon.positive()},
                 {"R_below_cap", o.R <= 445906682970649L}};
  if (M == parse_decimal_integer(kDefaultM)) {
    checks["q_band"] = r.q > parse_decimal_integer("9e46") && r.q < parse_decimal_integer("3e57");
  }
  bool ok = true;
  for (const auto& [key, v] : checks.items()) ok = ok && v.get<bool>();
  return {{"k", k},
          {"M", s(M)},
          {"digits", reduction_digits(M, policy_for(c))},
          {"tau", s(p.tau.value, 30)},
          {"mu", s(p.mu.value, 30)},
          {"A", s(p.A.mid(), 15)},
          {"B", s(p.B.mid(), 30)},
          {"convergent_index", r.convergent_index},
          {"q", s(r.q)},
          {"epsilon", s(r.epsilon.mid(), 15)},
          {"w_cap", r.w_cap},
          {"R", o.R},
          {"attempts", attempts},
          {"checks", checks},
          {"pass", ok}};
}

Json kummer_item(const RunConfig& c) {
  KummerReport rep = kummer_audit(c.limit.value_or(256));
  Json v = Json::array();
  for (const KummerViolation& x : rep.violations) v.push_back({{"y", x.y}, {"z", x.z}, {"valuation", x.valuation}});
  return {{"y_max", rep.y_max},
          {"evaluated", rep.evaluated},
          {"zero_values", rep.zero_values},
          {"max_valuation", rep.max_valuation},
          {"max_at", {{"y", rep.max_at_y}, {"z", rep.max_at_z}}},
          {"violation_count", rep.violations.size()},
          {"violations", v},
          {"pass", true}};
}

Json root_properties_item(int k, const RunConfig& c) {
  RootPropertyAudit a = root_property_audit(k, policy_for(c));
  Json items = Json::array();
  for (const AuditItem& it : a.items) {
    items.push_back({{"id", it.id}, {"statement", it.statement}, {"status", check_status_name(it.status)}, {"detail", it.detail}});
  }
  return {{"k", k},
          {"digits", a.digits},
          {"real_roots", a.real_roots},
          {"min_inner_modulus", s(a.min_inner_modulus.mid(), 15)},
          {"items", items},
          {"pass", a.pass()}};
}

Json band_item(int k, const RunConfig& c) {
  BandAudit b = band_constants_audit({k}, policy_for(c));
  const BandSample& x = b.samples.front();
  return {{"k", k},
          {"log_f_over_30", s(x.log_f.mid(), 12)},
          {"log_ratio", s(x.log_ratio.mid(), 12)},
          {"f_band", {b.f_lo, b.f_hi}},
          {"ratio_band", {b.ratio_lo, b.ratio_hi}},
          {"f_in_band", x.f_in_band},
          {"ratio_in_band", x.ratio_in_band},
          {"pass", x.f_in_band && x.ratio_in_band}};
}

// Table cells in the negative-index convention: runs of consecutive zeros of
// Q become [-hi, -lo], single zeros -n.
std::string table_cell(const std::vector<long>& zeros) {
  if (zeros.empty()) return "--";
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < zeros.size()) {
    std::size_t j = i;
    while (j + 1 < zeros.size() && zeros[j + 1] == zeros[j] + 1) ++j;
    if (i == j) {
      parts.push_back(std::to_string(-zeros[i]));
    } else {
      parts.push_back("[" + std::to_string(-zeros[j]) + ", " + std::to_string(-zeros[i]) + "]");
    }
    i = j + 1;
  }
  std::string out;
  for (std::size_t p = 0; p < parts.size(); ++p) out += (p ? ", " : "") + parts[p];
  return out;
}

Json table1_results() {
  static const std::map<int, std::pair<std::string, long>> expected = {
      {2, {"--", 0}},
      {3, {"-1", 1}},
      {4, {"[-2, -1], -6", 3}},
      {5, {"[-3, -1], [-8, -7], -13", 6}},
      {6, {"[-4, -1], [-10, -8], [-16, -15], -22", 10}},
      {7, {"[-5, -1], [-12, -9], [-19, -17], [-26, -25], -33", 15}},
  };
  Json rows = Json::array();
  for (const auto& [k, want] : expected) {
    ZeroSet z = census(k, 4L * k * k);
    const std::string cell = table_cell(z.zeros);
    const long mult = static_cast<long>(z.zeros.size());
    rows.push_back({{"k", k},
                    {"indices", cell},
                    {"multiplicity", mult},
                    {"expected_indices", want.first},
                    {"expected_multiplicity", want.second},
                    {"pass", cell == want.first && mult == want.second && z.sporadic.empty()}});
  }
  return rows;
}

Json selftest_results() {
  Json out = Json::array();
  auto add = [&](const char* name, const std::function<bool()>& f) {
    bool ok = false;
    std::string err;
    try {
      ok = f();
    } catch (const std::exception& e) {
      err = e.what();
    }
    Json j = {{"check", name}, {"pass", ok}};
    if (!err.empty()) j["error"] = err;
    out.push_back(j);
  };
  add("psi conventions", [] { return psi(7, -1) == 1 && psi(1, 3) == 0 && psi(2, 0) == 4 && psi(2, 1) == 5; });
  add("negative-index values", [] {
    SeqParams p(4);
    return q_at(p, 7) == -2 && q_at(p, 8) == 7 && q_at(p, 15) == -10 && lucas_at(SeqParams(2), 10) == 123;
  });
  add("closed forms", [] {
    return q_closed_small(4, 2, 0) == 7 && q_closed_general(4, 6, 0) == 195 && q_block_diag(5, 3, 1) == -21 &&
           h_closed(5, 3, 1) == 5 && block_value(4, 2, 1, 0) == -105;
  });
  add("census k=5", [] { return census(5, 100).zeros == std::vector<long>{1, 2, 3, 7, 8, 13}; });
  add("dominant root k=2", [] {
    PrecisionPolicy p;
    Interval g = shared_roots(2, p)->gamma();
    return g.contains(Real::from_string("1.6180339887498948482045868343656381177203", g.bits())) ||
           abs(g.mid() - Real::from_string("1.6180339887498948482045868343656381177203", g.bits())) <
               Real::from_string("1e-39", g.bits());
  });
  add("toy reduction", [] {
    const mpfr_prec_t b = digits_to_bits(60);
    ReductionProblem pr{ValidatedReal::from(sqrt(Interval::from_long(2, b))), ValidatedReal::from(Interval::from_ratio(1, 2, b)),
                        Interval::from_long(10, b), Interval::from_long(2, b), ExactInt(100)};
    ReductionResult r = bd_reduce(pr);
    return r.q == 985 && r.w_cap == 14;
  });
  add("even bound k=4", [] {
    double v = even_k_bound(4).to_double();
    return v > 7.69e10 && v < 7.71e10;
  });
  add("kummer carries", [] { return nu2_binom(4, 1) == 2 && nu2_binom(4, 2) == 1 && nu2_psi(3, 1) == 0L; });
  return out;
}

struct CommandSpec {
  bool needs_k;
  bool takes_k;
  std::set<std::string> flags;
};

const std::map<std::string, CommandSpec>& command_specs() {
  static const std::map<std::string, CommandSpec> specs = {
      {"zeros", {true, true, {"limit"}}},
      {"verify closed-forms", {true, true, {"n_max"}}},
      {"verify identities", {true, true, {"n_max"}}},
      {"verify signs", {true, true, {"n_max"}}},
      {"roots", {true, true, {"digits"}}},
      {"bounds", {false, true, {"digits"}}},
      {"reduce", {true, true, {"M", "digits"}}},
      {"audit kummer", {false, false, {"limit"}}},
      {"audit root-properties", {true, true, {"digits"}}},
      {"audit bands", {false, true, {"digits"}}},
      {"report table1", {false, false, {}}},
      {"selftest", {false, false, {}}},
  };
  return specs;
}

Json run_per_k(const RunConfig& c, const std::function<Json(int)>& f, const std::function<bool(int)>& keep = {}) {
  std::vector<int> ks;
  for (int k : k_values(c)) {
    if (!keep || keep(k)) ks.push_back(k);
  }
  if (ks.empty()) usage("no k in the requested range applies to " + c.full_command());
  Json out = Json::array();
  for (Json& j : parallel_map(ks, c.workers, f)) out.push_back(std::move(j));
  return out;
}

}  // namespace

// ---- config -------------------------------------------------------------------

std::pair<int, int> parse_k_range(const std::string& text) {
  static const std::regex single(R"(\s*(\d+)\s*)");
  static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  int a = 0, b = 0;
  try {
    if (std::regex_match(text, m, single)) {
      a = b = std::stoi(m[1]);
    } else if (std::regex_match(text, m, range)) {
      a = std::stoi(m[1]);
      b = std::stoi(m[2]);
    } else {
      usage("--k expects K or A..B, got '" + text + "'");
    }
  } catch (const std::out_of_range&) {
    usage("--k value out of range: '" + text + "'");
  }
  if (a < 2 || b < a) usage("--k needs 2 <= A <= B, got '" + text + "'");
  if (b > 5000) usage("--k is limited to 5000");
  return {a, b};
}

ExactInt parse_decimal_integer(const std::string& text) {
  static const std::regex number(R"(\s*(\d+)(?:\.(\d*))?(?:[eE]\+?(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, number)) usage("expected a positive integer such as 100 or 1.5e46, got '" + text + "'");
  std::string digits = m[1].str() + m[2].str();
  long exp = m[3].matched ? std::stol(m[3]) : 0;
  exp -= static_cast<long>(m[2].length());
  if (exp > 100000) usage("integer too large: '" + text + "'");
  while (exp < 0 && !digits.empty() && digits.back() == '0') {
    digits.pop_back();
    ++exp;
  }
  if (exp < 0) usage("'" + text + "' is not an integer");
  ExactInt v(digits.empty() ? "0" : digits);
  ExactInt ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(exp));
  return v * ten;
}

int default_digits() {
  const char* env = std::getenv("LUCASKIT_DIGITS");
  if (!env || !*env) return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 32 || v > 100000) usage("LUCASKIT_DIGITS must be an integer in [32, 100000]");
  return static_cast<int>(v);
}

RunConfig RunConfig::from_json(const Json& j) {
  static const std::set<std::string> keys = {"command", "subcommand", "k", "limit", "n_max", "digits",
                                             "M", "format", "long_run", "workers"};
  if (!j.is_object()) usage("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (!keys.count(key)) usage("unknown config key '" + key + "'");
  }
  RunConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    if (j.contains("subcommand")) c.subcommand = j["subcommand"].get<std::string>();
    if (j.contains("k")) c.k = parse_k_range(j["k"].is_string() ? j["k"].get<std::string>() : std::to_string(j["k"].get<int>()));
    if (j.contains("limit")) c.limit = j["limit"].get<long>();
    if (j.contains("n_max")) c.n_max = j["n_max"].get<long>();
    if (j.contains("digits")) c.digits = j["digits"].get<int>();
    if (j.contains("M")) c.M = j["M"].is_string() ? j["M"].get<std::string>() : j["M"].dump();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("long_run")) c.long_run = j["long_run"].get<bool>();
    if (j.contains("workers")) c.workers = j["workers"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    usage(std::string("bad config value: ") + e.what());
  }

  const std::string full = c.full_command();
  auto it = command_specs().find(full);
  if (it == command_specs().end()) usage("unknown command '" + full + "'");
  const CommandSpec& spec = it->second;
  if (spec.needs_k && !c.k) usage(full + " needs --k");
  if (!spec.takes_k && c.k) usage(full + " does not take --k");
  auto check_flag = [&](bool present, const char* name, const char* flag) {
    if (present && !spec.flags.count(name)) usage(full + " does not take " + flag);
  };
  check_flag(c.limit.has_value(), "limit", "--limit");
  check_flag(c.n_max.has_value(), "n_max", "--n-max");
  check_flag(c.digits.has_value(), "digits", "--digits");
  check_flag(c.M.has_value(), "M", "--M");

  if (c.format != "json" && c.format != "tsv" && c.format != "text") usage("--format must be json, tsv or text");
  if (c.workers < 1 || c.workers > 64) usage("--workers must be in [1, 64]");
  if (c.digits && (*c.digits < 32 || *c.digits > 100000)) usage("--digits must be in [32, 100000]");
  if (c.limit && *c.limit < 0) usage("--limit must be >= 0");
  if (c.n_max && *c.n_max < 1) usage("--n-max must be >= 1");
  if (c.M) parse_decimal_integer(*c.M);
  if (!c.long_run) {
    if (c.limit && full == "zeros" && *c.limit > kLongRunScan) usage("--limit above 200000 needs --long-run");
    if (c.n_max && full == "verify closed-forms" && *c.n_max > kLongRunSweep) usage("--n-max above 20000 needs --long-run");
    if (c.limit && full == "audit kummer" && *c.limit > 2000) usage("--limit above 2000 needs --long-run");
  }
  return c;
}

Json RunConfig::to_json() const {
  Json j = {{"command", command}};
  if (!subcommand.empty()) j["subcommand"] = subcommand;
  if (k) j["k"] = k->first == k->second ? std::to_string(k->first) : std::to_string(k->first) + ".." + std::to_string(k->second);
  if (limit) j["limit"] = *limit;
  if (n_max) j["n_max"] = *n_max;
  if (digits) j["digits"] = *digits;
  if (M) j["M"] = *M;
  j["format"] = format;
  j["long_run"] = long_run;
  j["workers"] = workers;
  return j;
}

// ---- dispatch ------------------------------------------------------------------

Report dispatch(const RunConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  const std::string full = c.full_command();
  Json results = Json::array();
  Json notes = Json::array();

  if (full == "zeros") {
    results = run_per_k(c, [&](int k) { return zeros_item(k, c); });
    notes = errata({"zero_predicate"});
  } else if (full == "verify closed-forms") {
    results = run_per_k(c, [&](int k) { return closed_forms_item(k, c); });
    notes = errata({"zero_predicate", "small_block_origin", "block_diag_limit", "block_index"});
  } else if (full == "verify identities") {
    results = run_per_k(c, [&](int k) { return identities_item(k, c); });
  } else if (full == "verify signs") {
    if (c.k->first == c.k->second && c.k->first % 2 == 1) fail(ErrorCode::Parity, "the sign pattern holds for even k only");
    results = run_per_k(c, [&](int k) { return signs_item(k, c); }, [](int k) { return k % 2 == 0; });
  } else if (full == "roots") {
    results = run_per_k(c, [&](int k) { return roots_item(k, c); });
    notes = errata({"char_poly", "inner_root_floor"});
  } else if (full == "bounds") {
    if (c.k) results = run_per_k(c, [&](int k) { return bounds_item(k, c); });
    results.push_back(chain_item());
    notes = errata({"matveev_log_term", "gap_bracket", "even_ck_range"});
  } else if (full == "reduce") {
    if (c.k->first == c.k->second && c.k->first % 2 == 0) fail(ErrorCode::Parity, "the reduction instance is built for odd k");
    if (!c.long_run && c.k->second - c.k->first > 200) usage("reducing more than 100 values of k needs --long-run");
    results = run_per_k(c, [&](int k) { return reduce_item(k, c); }, [](int k) { return k % 2 == 1 && k >= 5; });
    notes = errata({"reduction_retry"});
  } else if (full == "audit kummer") {
    results.push_back(kummer_item(c));
    notes = errata({"psi_valuation"});
  } else if (full == "audit root-properties") {
    results = run_per_k(c, [&](int k) { return root_properties_item(k, c); });
    notes = errata({"char_poly", "inner_root_floor"});
  } else if (full == "audit bands") {
    RunConfig cc = c;
    if (!cc.k) cc.k = std::make_pair(501, 885);
    std::set<int> sample = {501, 885};
    const bool all = c.long_run || c.k;
    if (c.k && c.k->second - c.k->first > 40 && !c.long_run) usage("auditing a wide k range needs --long-run");
    results = run_per_k(
        cc, [&](int k) { return band_item(k, cc); },
        [&](int k) { return k % 2 == 1 && k >= 501 && k <= 885 && (all || sample.count(k)); });
    notes = errata({"band_range"});
  } else if (full == "report table1") {
    results = table1_results();
  } else if (full == "selftest") {
    results = selftest_results();
  } else {
    usage("unknown command '" + full + "'");
  }

  const bool ok = all_pass(results);
  Report r;
  r.exit_code = ok ? 0 : 1;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.doc = {{"schema_version", kSchemaVersion},
           {"tool", {{"name", "lucaskit"}, {"version", kVersion}}},
           {"command", full},
           {"params", c.to_json()},
           {"results", results},
           {"errata", notes},
           {"status", ok ? "pass" : "fail"},
           {"timing", {{"seconds", seconds}}}};
  return r;
}

Report run_json(const std::string& config_json) {
  Json cfg_echo = Json::object();
  std::string command = "";
  try {
    Json j = Json::parse(config_json);
    if (j.is_object()) {
      cfg_echo = j;
      if (j.contains("command") && j["command"].is_string()) command = j["command"].get<std::string>();
      if (j.contains("subcommand") && j["subcommand"].is_string()) command += " " + j["subcommand"].get<std::string>();
    }
    return dispatch(RunConfig::from_json(j));
  } catch (const Error& e) {
    Report r;
    r.exit_code = exit_code_for(e.code());
    r.doc = {{"schema_version", kSchemaVersion},
             {"tool", {{"name", "lucaskit"}, {"version", kVersion}}},
             {"command", command},
             {"params", cfg_echo},
             {"results", Json::array()},
             {"errata", Json::array()},
             {"status", "error"},
             {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    return r;
  } catch (const nlohmann::json::exception& e) {
    Report r;
    r.exit_code = 2;
    r.doc = {{"schema_version", kSchemaVersion},
             {"tool", {{"name", "lucaskit"}, {"version", kVersion}}},
             {"command", command},
             {"params", cfg_echo},
             {"results", Json::array()},
             {"errata", Json::array()},
             {"status", "error"},
             {"error", {{"code", "usage"}, {"message", std::string("config is not valid JSON: ") + e.what()}}}};
    return r;
  }
}

// ---- rendering ------------------------------------------------------------------

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_tsv(const Json& doc) {
  std::vector<std::string> columns;
  for (const Json& r : doc["results"]) {
    for (const auto& [key, v] : r.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::ostringstream out;
  if (doc["status"] == "error") {
    out << "status\terror\tmessage\n" << "error\t" << cell(doc["error"]["code"]) << '\t' << cell(doc["error"]["message"]) << '\n';
    return out.str();
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << columns[i];
  out << '\n';
  for (const Json& r : doc["results"]) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "\t" : "");
      if (r.contains(columns[i])) out << cell(r[columns[i]]);
    }
    out << '\n';
  }
  return out.str();
}

void text_value(std::ostringstream& out, const std::string& indent, const std::string& key, const Json& v) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k2, v2] : v.items()) text_value(out, indent + "  ", k2, v2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    out << indent << key << ":\n";
    for (const Json& e : v) {
      bool first = true;
      for (const auto& [k2, v2] : e.items()) {
        text_value(out, indent + (first ? "  - " : "    "), k2, v2);
        first = false;
      }
    }
  } else {
    out << indent << key << ": " << cell(v) << '\n';
  }
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  out << "lucaskit " << kVersion << "  " << cell(doc["command"]) << "  status: " << cell(doc["status"]) << '\n';
  if (doc["status"] == "error") {
    out << "error (" << cell(doc["error"]["code"]) << "): " << cell(doc["error"]["message"]) << '\n';
    return out.str();
  }
  if (doc["command"] == "report table1") {
    out << "k\tindices\tmultiplicity\n";
    for (const Json& r : doc["results"]) out << r["k"] << '\t' << cell(r["indices"]) << '\t' << r["multiplicity"] << '\n';
    return out.str();
  }
  for (const Json& r : doc["results"]) {
    out << '\n';
    for (const auto& [key, v] : r.items()) text_value(out, "", key, v);
  }
  if (!doc["errata"].empty()) {
    out << '\n';
    for (const Json& e : doc["errata"]) out << "note: " << cell(e["note"]) << '\n';
  }
  return out.str();
}

}  // namespace

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.doc.dump(2) + "\n";
  if (format == "tsv") return render_tsv(report.doc);
  if (format == "text") return render_text(report.doc);
  usage("--format must be json, tsv or text");
}

}  // namespace lucaskit
