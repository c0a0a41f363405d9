// stanley_lab: enumeration, bijections, generating functions and checking
// suites from the command line. Output is JSON lines on stdout; diagnostics
// go to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "stanleylab/bijections.hpp"
#include "stanleylab/catalog.hpp"
#include "stanleylab/enumerate.hpp"
#include "stanleylab/error.hpp"
#include "stanleylab/json_io.hpp"
#include "stanleylab/verify.hpp"

using namespace stanleylab;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3, kBadInput = 4, kInternal = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string cache_dir;
  int jobs = 1;
};

// key=value lines, '#' starts a comment.
Config load_config() {
  Config cfg;
  const char* path = std::getenv("STANLEY_LAB_CONFIG");
  if (path == nullptr || *path == '\0') return cfg;
  std::ifstream in(path);
  if (!in) throw UsageError(std::string("cannot read config file ") + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "cache_dir") {
      cfg.cache_dir = value;
    } else if (key == "jobs") {
      try {
        cfg.jobs = std::stoi(value);
      } catch (const std::exception&) {
        throw UsageError("config line " + std::to_string(lineno) + ": jobs must be an integer");
      }
    } else {
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  return cfg;
}

struct Common {
  std::optional<std::string> cache_dir;
  std::optional<int> jobs;

  EnumerateOptions options(const Config& cfg) const {
    EnumerateOptions o;
    o.cache_dir = cache_dir.value_or(cfg.cache_dir);
    o.jobs = jobs.value_or(cfg.jobs);
    if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--cache-dir", c.cache_dir, "Directory for cached enumeration streams");
  cmd->add_option("--jobs", c.jobs, "Worker threads for enumeration");
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  Common common;
  std::string family;
  std::string measure;
  int value = 0;
  std::optional<std::string> group_by;
  std::optional<std::uint64_t> limit;
  std::uint64_t cap = kDefaultCap;
};

int cmd_enumerate(const EnumerateArgs& a, const Config& cfg) {
  FamilyBound bound;
  try {
    bound = {parse_family(a.family), parse_measure(a.measure), a.value};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (!supported(bound.family, bound.measure)) {
    throw UsageError("measure " + a.measure + " is not available for family " + a.family);
  }
  if (bound.value < 0) throw UsageError("--value must be nonnegative");
  EnumerateOptions opts = a.common.options(cfg);
  opts.cap = a.cap;
  if (a.group_by) {
    std::map<std::int64_t, std::uint64_t> groups;
    try {
      groups = count_grouped(bound, *a.group_by, opts);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedPair) throw UsageError(e.what());
      throw;
    }
    Json out = Json::object();
    for (const auto& [k, v] : groups) out[std::to_string(k)] = v;
    std::cout << out.dump() << '\n';
    return kOk;
  }
  const std::vector<Object> objects = enumerate(bound, opts);
  std::uint64_t emitted = 0;
  for (const Object& o : objects) {
    if (a.limit && emitted >= *a.limit) break;
    std::cout << to_json(o).dump() << '\n';
    ++emitted;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// map

struct MapArgs {
  std::string bijection;
  std::optional<std::string> in;
  bool skip_invalid = false;
};

struct BijectionInfo {
  const char* name;
  Family source;
  Object (*apply)(const Object&);
};

const BijectionInfo kBijections[] = {
    {"phi", Family::Stanley, [](const Object& o) { return Object(phi(std::get<StanleyPolyomino>(o))); }},
    {"phi-inv", Family::Dyck, [](const Object& o) { return Object(phi_inv(std::get<DyckPath>(o))); }},
    {"chi", Family::PeaklessMotzkin, [](const Object& o) { return Object(chi(std::get<MotzkinPath>(o))); }},
    {"chi-prime", Family::Dyck, [](const Object& o) { return Object(chi_prime(std::get<DyckPath>(o))); }},
    {"f", Family::Fountain, [](const Object& o) { return Object(f_map(std::get<CoinFountain>(o))); }},
    {"f-inv", Family::Stanley, [](const Object& o) { return Object(f_inv(std::get<StanleyPolyomino>(o))); }},
    {"h", Family::Parallelogram, [](const Object& o) { return Object(h_map(std::get<ParallelogramPolyomino>(o))); }},
    {"psi", Family::Parallelogram, [](const Object& o) { return Object(psi(std::get<ParallelogramPolyomino>(o))); }},
};

int cmd_map(const MapArgs& a) {
  const BijectionInfo* bij = nullptr;
  for (const auto& b : kBijections) {
    if (a.bijection == b.name) bij = &b;
  }
  if (bij == nullptr) throw UsageError("unknown bijection " + a.bijection);

  std::ifstream file;
  if (a.in) {
    file.open(*a.in);
    if (!file) throw UsageError("cannot open " + *a.in);
  }
  std::istream& in = a.in ? static_cast<std::istream&>(file) : std::cin;

  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json j;
      try {
        j = Json::parse(line);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
      }
      const Object input = object_from_json(bij->source, j);
      const Object output = bij->apply(input);
      Json id = (j.is_object() && j.contains("id")) ? j["id"] : Json(lineno);
      Json rec = {{"id", id},
                  {"in", to_json(input)},
                  {"out", to_json(output)},
                  {"stats_in", to_json(stat_record(input))},
                  {"stats_out", to_json(stat_record(output))}};
      std::cout << rec.dump() << '\n';
    } catch (const Error& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      if (!a.skip_invalid) return kBadInput;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// series

struct SeriesArgs {
  Common common;
  std::string gf;
  int order = 0;
  std::optional<int> depth;
  bool verify = false;
};

// Enumeration counts of `bound.value = 1..order`, grouped by a statistic.
std::map<std::int64_t, std::map<std::int64_t, std::uint64_t>> grouped_range(Family f, Measure m, int from, int order,
                                                                           const char* stat,
                                                                           const EnumerateOptions& opts) {
  std::map<std::int64_t, std::map<std::int64_t, std::uint64_t>> out;
  for (int n = from; n <= order; ++n) out[n] = count_grouped({f, m, n}, stat, opts);
  return out;
}

bool kernel_matches(const KernelGf& g, Measure m, int from, int order, const EnumerateOptions& opts) {
  const auto groups = grouped_range(Family::Stanley, m, from, order, "first", opts);
  for (int n = 1; n <= order; ++n) {
    for (int k = 0; k <= order; ++k) {
      std::uint64_t expected = 0;
      if (auto it = groups.find(n); it != groups.end()) {
        if (auto jt = it->second.find(k); jt != it->second.end()) expected = jt->second;
      }
      if (g.g_u.coeff({{"x", n}, {"u", k}}) != Rational(static_cast<unsigned long>(expected))) return false;
    }
  }
  return true;
}

bool univariate_matches(const Series& s, const char* var, const std::vector<std::uint64_t>& counts) {
  const std::vector<Rational> c = coefficients(s, var);
  for (std::size_t n = 1; n < counts.size(); ++n) {
    const Rational got = n < c.size() ? c[n] : Rational(0);
    if (got != Rational(static_cast<unsigned long>(counts[n]))) return false;
  }
  return true;
}

int cmd_series(const SeriesArgs& a, const Config& cfg) {
  if (a.order < 1) throw UsageError("--order must be at least 1");
  if (a.depth && *a.depth < 1) throw UsageError("--depth must be at least 1");
  const EnumerateOptions opts = a.common.options(cfg);
  Json out = {{"gf", a.gf}, {"order", a.order}};
  std::optional<bool> verified;

  // Dyck statistics up to the order; sump <= order forces semilength <= order.
  auto dyck_counts = [&](auto weight) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(a.order) + 1);
    for (int n = 1; n <= a.order; ++n) {
      for_each_object({Family::Dyck, Measure::Semilength, n}, [&](const Object& o) {
        const DyckStats s = dyck_stats(std::get<DyckPath>(o));
        const std::optional<int> w = weight(s);
        if (w && *w <= a.order) ++counts[static_cast<std::size_t>(*w)];
      }, opts.cap);
    }
    return counts;
  };

  if (a.gf == "full") {
    const Series f = gf_full(a.order);
    out["series"] = to_json(f);
    if (a.verify) {
      Series oracle = f.zero();
      const Marks marks = {{"col", "x"}, {"row", "y"}, {"area", "z"}, {"edgint", "p"}, {"point", "q"}};
      for (int c = 1; c <= a.order; ++c) oracle += aggregate_polynomial({Family::Stanley, Measure::Columns, c}, marks, f, opts);
      verified = oracle == f;
    }
  } else if (a.gf == "columns" || a.gf == "semiperimeter") {
    const bool cols = a.gf == "columns";
    const KernelGf g = cols ? gf_columns(a.order) : gf_semiperimeter(a.order);
    out["G_u"] = to_json(g.g_u);
    out["G_1"] = to_json(g.g_1);
    if (a.verify) {
      verified = kernel_matches(g, cols ? Measure::Columns : Measure::Semiperimeter, cols ? 1 : 2, a.order, opts);
    }
  } else if (a.gf == "area") {
    const Series s = gf_area(a.order);
    out["series"] = to_json(s);
    if (a.verify) {
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(a.order) + 1);
      for (int n = 1; n <= a.order; ++n) counts[n] = count({Family::Stanley, Measure::Area, n}, opts);
      verified = univariate_matches(s, "z", counts);
    }
  } else if (a.gf == "cf-a") {
    const Series s = cf_a(a.order, a.depth);
    out["series"] = to_json(s);
    if (a.verify) {
      Series oracle = s.zero();
      for (int n = 1; n <= a.order; ++n) {
        oracle += aggregate_polynomial({Family::Dyck, Measure::Semilength, n},
                                       {{"nbp", "p"}, {"sump", "q"}, {"sumv", "v"}}, s, opts);
      }
      verified = oracle == s;
    }
  } else if (a.gf == "cf-specializations") {
    const CfRecord rec = gf_continued_fractions(a.order, a.depth);
    out["A(q,q,1)"] = to_json(rec.a_qq1);
    out["A(1,q,1)"] = to_json(rec.a_1q1);
    out["A(1,q,q)"] = to_json(rec.a_1qq);
    out["A(p,p,0)"] = to_json(rec.a_pp0);
    if (a.verify) {
      const auto qq1 = dyck_counts([](const DyckStats& s) { return std::optional<int>(s.sump + s.nbp); });
      const auto one_q1 = dyck_counts([](const DyckStats& s) { return std::optional<int>(s.sump); });
      const auto one_qq = dyck_counts([](const DyckStats& s) { return std::optional<int>(s.sump + s.sumv); });
      const auto pp0 = dyck_counts([](const DyckStats& s) {
        return s.sumv == 0 ? std::optional<int>(s.sump + s.nbp) : std::nullopt;
      });
      verified = univariate_matches(rec.a_qq1, "q", qq1) && univariate_matches(rec.a_1q1, "q", one_q1) &&
                 univariate_matches(rec.a_1qq, "q", one_qq) && univariate_matches(rec.a_pp0, "p", pp0);
    }
  } else if (a.gf == "corollaries") {
    const ColumnsCorollaries c = gf_columns_corollaries(a.order);
    const SemiperimeterCorollaries s = gf_semiperimeter_corollaries(a.order);
    Json mean = Json::array();
    for (const auto& r : c.mean_first_row) mean.push_back(r.get_str());
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    auto sequence_is = [&](const Series& g, int from, auto expected) {
      const std::vector<Rational> v = coefficients(g, "x");
      for (int n = from; n <= a.order; ++n) {
        if (v[static_cast<std::size_t>(n)] != Rational(expected(n))) return false;
      }
      return true;
    };
    out["corollaries"] = {
        {"columns-first-row-total",
         {{"series", to_json(c.first_row_total)},
          {"verdict", verdict(sequence_is(c.first_row_total, 1, [](int n) { return catalan(n); }))}}},
        {"columns-mean-first-row", {{"ratios", mean}}},
        {"columns-edgint-free",
         {{"series", to_json(c.edgint_free)},
          {"verdict", verdict(sequence_is(c.edgint_free, 2, [](int n) { return fibonacci(2 * n - 3); }))}}},
        {"columns-point-free",
         {{"series", to_json(c.point_free)},
          {"verdict", verdict(sequence_is(c.point_free, 2, [](int n) { return mpz_class(mpz_class(1) << (n - 2)); }))}}},
        {"semiperimeter-first-row-total",
         {{"series", to_json(s.first_row_total)}, {"verdict", verdict(s.first_row_total == s.convolution_square)}}},
        {"semiperimeter-edgint-free",
         {{"series", to_json(s.edgint_free)},
          {"verdict", verdict(sequence_is(s.edgint_free, 2, [](int n) { return fibonacci(n - 1); }))}}},
    };
    bool all = true;
    for (const auto& [k, v] : out["corollaries"].items()) {
      if (v.contains("verdict") && v["verdict"] != "pass") all = false;
    }
    if (!all) {
      std::cout << out.dump() << '\n';
      std::cerr << "a verdict failed\n";
      return kInternal;
    }
    if (a.verify) {
      std::vector<std::uint64_t> totals(static_cast<std::size_t>(a.order) + 1), ef(totals.size()), pf(totals.size());
      bool ok = true;
      for (int n = 1; n <= a.order; ++n) {
        for (const auto& [k, v] : count_grouped({Family::Stanley, Measure::Columns, n}, "first", opts)) {
          totals[n] += static_cast<std::uint64_t>(k) * v;
        }
        ef[n] = count_grouped({Family::Stanley, Measure::Columns, n}, "edgint", opts)[0];
        pf[n] = count_grouped({Family::Stanley, Measure::Columns, n}, "point", opts)[0];
      }
      ok = univariate_matches(c.first_row_total, "x", totals) && univariate_matches(c.edgint_free, "x", ef) &&
           univariate_matches(c.point_free, "x", pf);
      std::vector<std::uint64_t> stot(totals.size()), sef(totals.size());
      for (int n = 2; n <= a.order; ++n) {
        for (const auto& [k, v] : count_grouped({Family::Stanley, Measure::Semiperimeter, n}, "first", opts)) {
          stot[n] += static_cast<std::uint64_t>(k) * v;
        }
        sef[n] = count_grouped({Family::Stanley, Measure::Semiperimeter, n}, "edgint", opts)[0];
      }
      verified = ok && univariate_matches(s.first_row_total, "x", stot) && univariate_matches(s.edgint_free, "x", sef);
    }
  } else {
    throw UsageError("unknown --gf " + a.gf);
  }

  if (verified) out["verified_against_oracle"] = *verified;
  std::cout << out.dump() << '\n';
  if (verified && !*verified) {
    std::cerr << "series disagrees with the enumeration oracle\n";
    return kInternal;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  Common common;
  std::string suite;
  std::optional<int> max_size;
};

int cmd_verify(const VerifyArgs& a, const Config& cfg) {
  if (a.suite != "all") {
    try {
      default_max_size(a.suite);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (a.max_size && *a.max_size < 1) throw UsageError("--max-size must be at least 1");
  const Report r = run_suite(a.suite, a.max_size, a.common.options(cfg));
  std::cout << r.to_json().dump() << '\n';
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  std::cerr << r.suite << ": " << passed << "/" << r.checks.size() << " checks passed\n";
  for (const auto& c : r.checks) {
    if (!c.pass) std::cerr << "FAIL " << c.name << '\n';
  }
  return r.passed() ? kOk : kCheckFailed;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CapExceeded:
      return kCap;
    case ErrorCode::MismatchBetweenForms:
    case ErrorCode::CancellationFailure:
    case ErrorCode::Unstable:
    case ErrorCode::NoContraction:
    case ErrorCode::NotInvertible:
    case ErrorCode::UnsoundSubstitution:
      return kInternal;
    case ErrorCode::UnsupportedPair:
    case ErrorCode::OutOfRange:
    case ErrorCode::ParseError:
      return kUsage;
    default:
      return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley polyominoes: enumeration, bijections, generating functions and checks"};
  app.require_subcommand(1);
  bool timestamps = false;
  app.add_flag("--timestamps", timestamps, "Report elapsed time on stderr");

  EnumerateArgs en;
  auto* c_en = app.add_subcommand("enumerate", "List the objects of one size, or count them by a statistic");
  c_en->add_option("--family", en.family, "stanley|dyck|peaklessMotzkin|fountain|parallelogram")->required();
  c_en->add_option("--measure", en.measure, "columns|semiperimeter|area|semilength|steps|diagonals|evenCoins|coins")
      ->required();
  c_en->add_option("--value", en.value, "Size")->required();
  c_en->add_option("--group-by", en.group_by, "Statistic to count by");
  c_en->add_option("--limit", en.limit, "Emit at most this many objects");
  c_en->add_option("--cap", en.cap, "Fail when more objects than this would be generated");
  add_common(c_en, en.common);

  MapArgs mp;
  auto* c_map = app.add_subcommand("map", "Apply a bijection to JSON-lines input");
  c_map->add_option("--bijection", mp.bijection, "phi|phi-inv|chi|chi-prime|f|f-inv|h|psi")->required();
  c_map->add_option("--in", mp.in, "Input file (default: standard input)");
  c_map->add_flag("--skip-invalid", mp.skip_invalid, "Report and skip invalid lines");

  SeriesArgs se;
  auto* c_se = app.add_subcommand("series", "Compute a generating function");
  c_se->add_option("--gf", se.gf, "full|columns|semiperimeter|area|cf-a|cf-specializations|corollaries")->required();
  c_se->add_option("--order", se.order, "Truncation order")->required();
  c_se->add_option("--depth", se.depth, "Continued-fraction depth");
  c_se->add_flag("--verify", se.verify, "Compare with exhaustive enumeration");
  add_common(c_se, se.common);

  VerifyArgs ve;
  auto* c_ve = app.add_subcommand("verify", "Run checking suites");
  c_ve->add_option("--suite", ve.suite, "table1|bijections|thm-full|columns|semiperimeter|area|cf|corollary-2-13|all")
      ->required();
  c_ve->add_option("--max-size", ve.max_size, "Largest size checked by the suite");
  add_common(c_ve, ve.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    const Config cfg = load_config();
    if (*c_en) code = cmd_enumerate(en, cfg);
    if (*c_map) code = cmd_map(mp);
    if (*c_se) code = cmd_series(se, cfg);
    if (*c_ve) code = cmd_verify(ve, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  if (timestamps) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << dt.count() << " s\n";
  }
  return code;
}
