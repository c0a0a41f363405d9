#include "stanleylab/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <thread>

#include "stanleylab/error.hpp"
#include "stanleylab/json_io.hpp"

namespace stanleylab {

namespace {

constexpr const char* kCacheVersion = "1";

struct MeasureName {
  Measure measure;
  const char* name;
};

constexpr MeasureName kMeasures[] = {
    {Measure::Columns, "columns"},     {Measure::Semiperimeter, "semiperimeter"}, {Measure::Area, "area"},
    {Measure::Semilength, "semilength"}, {Measure::Steps, "steps"},             {Measure::Diagonals, "diagonals"},
    {Measure::EvenCoins, "evenCoins"}, {Measure::Coins, "coins"},
};

// Splits the search tree between workers: subtrees rooted at `depth` are dealt
// out round-robin, and anything completed above that depth belongs to part 0.
struct Split {
  int depth = -1;
  int jobs = 1;
  int part = 0;
  std::uint64_t seen = 0;

  bool take_subtree(int d) {
    if (depth < 0 || d != depth) return true;
    return (seen++ % static_cast<std::uint64_t>(jobs)) == static_cast<std::uint64_t>(part);
  }
  bool owns_shallow(int d) const { return depth < 0 || d >= depth || part == 0; }
};

using Emit = std::function<void(Object)>;

class Generator {
 public:
  Generator(const FamilyBound& b, Split split, Emit emit) : n_(b.value), split_(split), emit_(std::move(emit)) {}

  void run(const FamilyBound& b) {
    switch (b.family) {
      case Family::Stanley: stanley(b.measure); break;
      case Family::Dyck: word_ = {}; dyck(0); break;
      case Family::PeaklessMotzkin: word_ = {}; motzkin(0); break;
      case Family::Fountain: fountain(b.measure); break;
      case Family::Parallelogram: parallelogram(); break;
    }
  }

 private:
  void emit(int depth, Object o) {
    if (split_.owns_shallow(depth)) emit_(std::move(o));
  }

  // Stanley polyominoes --------------------------------------------------

  void stanley(Measure m) {
    measure_ = m;
    if (n_ < 1) return;
    for (int len = 1; len <= n_; ++len) {
      if (!stanley_fits(len, 1, len)) continue;
      rows_.assign(1, Row{0, len});
      if (split_.take_subtree(1)) stanley_rec(len);
    }
  }

  // Whether a prefix with last end `end`, `rows` rows and `area` cells can
  // still be completed, or is complete.
  bool stanley_fits(int end, int rows, int area) const {
    switch (measure_) {
      case Measure::Columns: return end <= n_;
      case Measure::Semiperimeter: return end + rows <= n_;
      default: return area <= n_;
    }
  }
  bool stanley_done(int end, int rows, int area) const {
    switch (measure_) {
      case Measure::Columns: return end == n_;
      case Measure::Semiperimeter: return end + rows == n_;
      default: return area == n_;
    }
  }

  void stanley_rec(int area) {
    const Row last = rows_.back();
    const int k = static_cast<int>(rows_.size());
    if (stanley_done(last.end(), k, area)) emit(k, make_stanley(rows_));
    for (int s = last.start + 1; s <= last.end() - 1; ++s) {
      for (int e = last.end() + 1;; ++e) {
        if (!stanley_fits(e, k + 1, area + e - s)) break;
        rows_.push_back({s, e - s});
        if (split_.take_subtree(k + 1)) stanley_rec(area + e - s);
        rows_.pop_back();
      }
    }
  }

  // Paths -------------------------------------------------------------------

  void dyck(int h) {
    const int len = static_cast<int>(word_.size());
    if (len == 2 * n_) {
      emit(len, make_dyck(word_));
      return;
    }
    const int remaining = 2 * n_ - len;
    if (h > 0) push_step('D', h - 1, &Generator::dyck);
    if (h + 1 <= remaining - 1) push_step('U', h + 1, &Generator::dyck);
  }

  void motzkin(int h) {
    const int len = static_cast<int>(word_.size());
    if (len == n_) {
      if (h == 0) emit(len, make_motzkin(word_));
      return;
    }
    const int remaining = n_ - len;
    const bool after_up = !word_.empty() && word_.back() == 'U';
    if (h > 0 && !after_up) push_step('D', h - 1, &Generator::motzkin);
    if (h <= remaining - 1) push_step('F', h, &Generator::motzkin);
    if (h + 1 <= remaining - 1) push_step('U', h + 1, &Generator::motzkin);
  }

  void push_step(char c, int h, void (Generator::*next)(int)) {
    word_.push_back(c);
    if (split_.take_subtree(static_cast<int>(word_.size()))) (this->*next)(h);
    word_.pop_back();
  }

  // Fountains ---------------------------------------------------------------

  static int tail_even(int d) {
    int t = 0;
    for (int i = 1; i < d; ++i) t += (i + 1) / 2;
    return t;
  }

  void fountain(Measure m) {
    measure_ = m;
    if (n_ < 1) return;
    diags_.clear();
    fountain_rec(0);
  }

  // `used` is the measure consumed so far (coins, even coins, or diagonals).
  void fountain_rec(int used) {
    const int depth = static_cast<int>(diags_.size());
    if (depth > 0 && diags_.back() == 1 && used == n_) {
      emit(depth, make_fountain(diags_));
      return;
    }
    const int lo = depth == 0 ? 1 : std::max(1, diags_.back() - 1);
    for (int d = lo;; ++d) {
      int next = used;
      int tail = 0;
      switch (measure_) {
        case Measure::Diagonals:
          next = used + 1;
          tail = d - 1;  // at least d-1 further diagonals to reach size 1
          break;
        case Measure::Coins:
          next = used + d;
          tail = d * (d - 1) / 2;
          break;
        default:
          next = used + (d + 1) / 2;
          tail = tail_even(d);
          break;
      }
      if (next + tail > n_) break;
      diags_.push_back(d);
      if (split_.take_subtree(depth + 1)) fountain_rec(next);
      diags_.pop_back();
    }
  }

  // Parallelogram polyominoes ----------------------------------------------

  void parallelogram() {
    if (n_ < 1) return;
    for (int h = 1; h <= n_; ++h) {
      cols_.assign(1, Column{0, h});
      if (split_.take_subtree(1)) parallelogram_rec(h);
    }
  }

  void parallelogram_rec(int area) {
    const int k = static_cast<int>(cols_.size());
    if (area == n_) {
      emit(k, make_parallelogram(cols_));
      return;
    }
    const Column last = cols_.back();
    for (int b = last.bottom; b <= last.top(); ++b) {
      for (int t = last.top();; ++t) {
        const int h = t - b + 1;
        if (area + h > n_) break;
        cols_.push_back({b, h});
        if (split_.take_subtree(k + 1)) parallelogram_rec(area + h);
        cols_.pop_back();
      }
    }
  }

  int n_;
  Split split_;
  Emit emit_;
  Measure measure_ = Measure::Columns;
  std::vector<Row> rows_;
  std::vector<Column> cols_;
  std::vector<int> diags_;
  std::string word_;
};

void check_bound(const FamilyBound& b) {
  if (!supported(b.family, b.measure)) {
    throw Error(ErrorCode::UnsupportedPair,
                "family " + family_name(b.family) + " cannot be enumerated by " + measure_name(b.measure));
  }
  if (b.value < 0) throw Error(ErrorCode::OutOfRange, "size must be nonnegative");
}

class CapCounter {
 public:
  explicit CapCounter(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++n_ > cap_) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap_) + " objects");
  }

 private:
  std::uint64_t cap_;
  std::uint64_t n_ = 0;
};

std::vector<Object> enumerate_parallel(const FamilyBound& bound, const EnumerateOptions& opts) {
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    std::vector<Object> out;
    for_each_object(bound, [&](const Object& o) { out.push_back(o); }, opts.cap);
    return out;
  }
  std::vector<std::vector<Object>> parts(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int p = 0; p < jobs; ++p) {
    threads.emplace_back([&, p] {
      try {
        auto& out = parts[static_cast<std::size_t>(p)];
        CapCounter cap(opts.cap);
        Generator g(bound, Split{2, jobs, p, 0}, [&](Object o) {
          cap.tick();
          out.push_back(std::move(o));
        });
        g.run(bound);
      } catch (...) {
        errors[static_cast<std::size_t>(p)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Object> out;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  if (out.size() > opts.cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(opts.cap) + " objects");
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Object>> read_cache(const std::filesystem::path& file, Family family) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::vector<Object> out;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.push_back(object_from_json(family, Json::parse(line)));
    }
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
  return out;
}

void write_cache(const std::filesystem::path& file, const std::vector<Object>& objs) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    for (const Object& o : objs) out << to_json(o).dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

std::string measure_name(Measure m) {
  for (const auto& e : kMeasures) {
    if (e.measure == m) return e.name;
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (const auto& e : kMeasures) {
    if (name == e.name) return e.measure;
  }
  throw Error(ErrorCode::ParseError, "unknown measure " + std::string(name));
}

bool supported(Family f, Measure m) noexcept {
  switch (f) {
    case Family::Stanley: return m == Measure::Columns || m == Measure::Semiperimeter || m == Measure::Area;
    case Family::Dyck: return m == Measure::Semilength;
    case Family::PeaklessMotzkin: return m == Measure::Steps;
    case Family::Fountain: return m == Measure::Diagonals || m == Measure::EvenCoins || m == Measure::Coins;
    case Family::Parallelogram: return m == Measure::Area;
  }
  return false;
}

void for_each_object(const FamilyBound& bound, const std::function<void(const Object&)>& visit, std::uint64_t cap) {
  check_bound(bound);
  CapCounter counter(cap);
  Generator g(bound, Split{}, [&](Object o) {
    counter.tick();
    visit(o);
  });
  g.run(bound);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const FamilyBound& bound) {
  return dir / (family_name(bound.family) + "-" + measure_name(bound.measure) + "-" + std::to_string(bound.value) +
                "-v" + kCacheVersion + ".jsonl");
}

std::vector<Object> enumerate(const FamilyBound& bound, const EnumerateOptions& opts) {
  check_bound(bound);
  std::filesystem::path file;
  if (!opts.cache_dir.empty()) {
    file = cache_file(opts.cache_dir, bound);
    if (auto cached = read_cache(file, bound.family)) {
      if (cached->size() > opts.cap) {
        throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(opts.cap) + " objects");
      }
      return std::move(*cached);
    }
  }
  std::vector<Object> out = enumerate_parallel(bound, opts);
  if (!file.empty()) write_cache(file, out);
  return out;
}

std::uint64_t count(const FamilyBound& bound, const EnumerateOptions& opts) {
  if (opts.jobs > 1 || !opts.cache_dir.empty()) return enumerate(bound, opts).size();
  std::uint64_t n = 0;
  for_each_object(bound, [&](const Object&) { ++n; }, opts.cap);
  return n;
}

namespace {

std::int64_t lookup(const StatRecord& rec, std::string_view name, Family f) {
  for (const auto& [k, v] : rec) {
    if (k == name) return v;
  }
  throw Error(ErrorCode::UnsupportedPair, "family " + family_name(f) + " has no statistic " + std::string(name));
}

void visit_all(const FamilyBound& bound, const EnumerateOptions& opts, const std::function<void(const Object&)>& f) {
  if (opts.jobs > 1 || !opts.cache_dir.empty()) {
    for (const Object& o : enumerate(bound, opts)) f(o);
  } else {
    for_each_object(bound, f, opts.cap);
  }
}

}  // namespace

std::map<std::int64_t, std::uint64_t> count_grouped(const FamilyBound& bound, std::string_view statistic,
                                                    const EnumerateOptions& opts) {
  std::map<std::int64_t, std::uint64_t> out;
  visit_all(bound, opts, [&](const Object& o) { ++out[lookup(stat_record(o), statistic, bound.family)]; });
  return out;
}

Series aggregate_polynomial(const FamilyBound& bound, const Marks& marks, const Series& box,
                            const EnumerateOptions& opts) {
  Series out = box.zero();
  std::vector<std::size_t> idx;
  for (const auto& [stat, var] : marks) idx.push_back(box.space().index(var));
  visit_all(bound, opts, [&](const Object& o) {
    const StatRecord rec = stat_record(o);
    Exponents e{};
    e.fill(0);
    for (std::size_t i = 0; i < marks.size(); ++i) {
      e[idx[i]] += static_cast<int>(lookup(rec, marks[i].first, bound.family));
    }
    out.add_term(e, 1);
  });
  return out;
}

}  // namespace stanleylab
