#include "stanleylab/objects.hpp"

#include <algorithm>
#include <numeric>

#include "stanleylab/error.hpp"

namespace stanleylab {

namespace {

std::string at(std::size_t i) { return " at index " + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------------------
// Stanley polyominoes

int StanleyPolyomino::area() const noexcept {
  int a = 0;
  for (const Row& r : rows_) a += r.len;
  return a;
}

StanleyPolyomino make_stanley(std::vector<Row> rows) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "a Stanley polyomino needs at least one row");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].len < 1) throw Error(ErrorCode::NegativeOrZeroLength, "row length < 1" + at(i));
  }
  if (rows.front().start != 0) throw Error(ErrorCode::NotAnchored, "bottom row must start at column 0");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Row& lo = rows[i - 1];
    const Row& hi = rows[i];
    if (hi.start <= lo.start) throw Error(ErrorCode::NotLeftShifted, "row start does not increase" + at(i));
    if (hi.end() <= lo.end()) throw Error(ErrorCode::NotRightShifted, "row end does not increase" + at(i));
    if (hi.start > lo.end() - 1) throw Error(ErrorCode::RowsDisconnected, "row shares no column with the row below" + at(i));
  }
  return StanleyPolyomino(std::move(rows));
}

StanleyStats stanley_stats(const StanleyPolyomino& p) {
  const auto& rows = p.rows();
  StanleyStats s;
  s.col = p.columns();
  s.row = p.row_count();
  s.sper = s.col + s.row;
  s.area = p.area();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const int overlap = rows[i].end() - rows[i + 1].start;
    s.point += overlap - 1;
    s.edgint += std::max(overlap - 2, 0);
    s.adja += overlap;
  }
  s.first = rows.front().len;
  s.firstD = 0;
  while (s.firstD < s.row && rows[s.firstD].start == s.firstD) ++s.firstD;
  return s;
}

AbSequences ab_sequences(const StanleyPolyomino& p) {
  const auto& rows = p.rows();
  const std::size_t k = rows.size();
  AbSequences ab;
  ab.a.resize(k);
  ab.b.resize(k);
  ab.a[0] = rows[0].len - 1;
  for (std::size_t i = 1; i < k; ++i) ab.a[i] = rows[i].end() - rows[i - 1].end();
  for (std::size_t i = 0; i + 1 < k; ++i) ab.b[i] = rows[i + 1].start - rows[i].start;
  ab.b[k - 1] = rows[k - 1].len - 1;
  return ab;
}

StanleyPolyomino stanley_from_ab(const AbSequences& ab) {
  if (ab.a.empty() || ab.a.size() != ab.b.size()) {
    throw Error(ErrorCode::EmptyInput, "a/b sequences must be nonempty and of equal length");
  }
  std::vector<Row> rows;
  rows.reserve(ab.a.size());
  int start = 0;
  int end = ab.a[0] + 1;
  rows.push_back({start, end - start});
  for (std::size_t i = 1; i < ab.a.size(); ++i) {
    start += ab.b[i - 1];
    end += ab.a[i];
    rows.push_back({start, end - start});
  }
  return make_stanley(std::move(rows));
}

// ---------------------------------------------------------------------------
// Lattice paths

namespace {

void check_path(std::string_view word, std::string_view alphabet) {
  int h = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (alphabet.find(c) == std::string_view::npos) {
      throw Error(ErrorCode::InvalidStep, std::string("unexpected step '") + c + "'" + at(i));
    }
    if (c == 'U') ++h;
    if (c == 'D') --h;
    if (h < 0) throw Error(ErrorCode::Unbalanced, "path goes below the axis" + at(i));
  }
  if (h != 0) throw Error(ErrorCode::Unbalanced, "path ends at height " + std::to_string(h));
}

}  // namespace

DyckPath make_dyck(std::string_view word) {
  check_path(word, "UD");
  return DyckPath(std::string(word));
}

DyckStats dyck_stats(const DyckPath& d) {
  const std::string& w = d.word();
  DyckStats s;
  s.semilength = d.semilength();
  int h = 0;
  bool seen_peak = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += (w[i] == 'U') ? 1 : -1;
    if (i + 1 >= w.size()) break;
    if (w[i] == 'U' && w[i + 1] == 'D') {
      ++s.nbp;
      s.sump += h;
      if (h == 1) ++s.hills;
      if (!seen_peak) {
        s.firstPeakHeight = h;
        seen_peak = true;
      }
    } else if (w[i] == 'D' && w[i + 1] == 'U') {
      ++s.nbv;
      s.sumv += h;
      if (h >= 1) {
        ++s.oneValleys;
        s.sumOneValleys += h;
      }
    }
    if (i + 2 < w.size() && w[i] == w[i + 1] && w[i + 1] == w[i + 2]) s.avoids3 = false;
  }
  return s;
}

MotzkinPath make_motzkin(std::string_view word) {
  check_path(word, "UDF");
  return MotzkinPath(std::string(word));
}

bool MotzkinPath::peakless() const noexcept {
  return word_.find("UD") == std::string::npos;
}

int MotzkinPath::axis_steps() const noexcept {
  int h = 0;
  int n = 0;
  for (char c : word_) {
    if (c == 'U') ++h;
    if (c == 'D') --h;
    if (h == 0) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Coin fountains

int CoinFountain::coins() const noexcept {
  return std::accumulate(diagonals_.begin(), diagonals_.end(), 0);
}

CoinFountain make_fountain(std::vector<int> diagonals) {
  if (diagonals.empty()) throw Error(ErrorCode::EmptyInput, "a fountain needs at least one diagonal");
  for (std::size_t j = 0; j < diagonals.size(); ++j) {
    if (diagonals[j] < 1) throw Error(ErrorCode::NegativeOrZeroLength, "diagonal size < 1" + at(j));
  }
  for (std::size_t j = 0; j + 1 < diagonals.size(); ++j) {
    if (diagonals[j] > diagonals[j + 1] + 1) {
      throw Error(ErrorCode::DiagonalDrop, "diagonal exceeds its right neighbour by more than one" + at(j));
    }
  }
  if (diagonals.back() != 1) throw Error(ErrorCode::BadLastDiagonal, "last diagonal must hold exactly one coin");
  return CoinFountain(std::move(diagonals));
}

FountainStats fountain_stats(const CoinFountain& c) {
  FountainStats s;
  for (int d : c.diagonals()) {
    s.e += (d + 1) / 2;
    s.o += d / 2;
  }
  s.m = c.diagonal_count();
  s.firstDiag = c.diagonals().front();
  return s;
}

std::vector<std::vector<int>> fountain_levels(const CoinFountain& c) {
  const auto& d = c.diagonals();
  const int height = *std::max_element(d.begin(), d.end());
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(height));
  for (int level = 0; level < height; ++level) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (level < d[j]) levels[static_cast<std::size_t>(level)].push_back(static_cast<int>(j));
    }
  }
  return levels;
}

// ---------------------------------------------------------------------------
// Parallelogram polyominoes

int ParallelogramPolyomino::area() const noexcept {
  int a = 0;
  for (const Column& c : columns_) a += c.height;
  return a;
}

ParallelogramPolyomino make_parallelogram(std::vector<Column> columns) {
  if (columns.empty()) throw Error(ErrorCode::EmptyInput, "a parallelogram polyomino needs at least one column");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].height < 1) throw Error(ErrorCode::NegativeOrZeroLength, "column height < 1" + at(i));
  }
  if (columns.front().bottom != 0) throw Error(ErrorCode::NotAnchored, "first column must start at row 0");
  for (std::size_t i = 1; i < columns.size(); ++i) {
    const Column& l = columns[i - 1];
    const Column& r = columns[i];
    if (r.bottom < l.bottom || r.top() < l.top()) {
      throw Error(ErrorCode::NonMonotoneBoundary, "column boundary decreases" + at(i));
    }
    if (r.bottom > l.top()) throw Error(ErrorCode::DisconnectedColumns, "column shares no row with its left neighbour" + at(i));
  }
  return ParallelogramPolyomino(std::move(columns));
}

ParallelogramStats parallelogram_stats(const ParallelogramPolyomino& p) {
  const auto& cols = p.columns();
  ParallelogramStats s;
  s.area = p.area();
  s.colCount = p.column_count();
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) s.overlaps.push_back(cols[i].top() - cols[i + 1].bottom + 1);
  return s;
}

// ---------------------------------------------------------------------------

StatRecord stat_record(const StanleyPolyomino& p) {
  const StanleyStats s = stanley_stats(p);
  return {{"col", s.col},       {"row", s.row},   {"sper", s.sper},
          {"area", s.area},     {"point", s.point}, {"edgint", s.edgint},
          {"adja", s.adja},     {"first", s.first}, {"firstD", s.firstD}};
}

StatRecord stat_record(const DyckPath& d) {
  const DyckStats s = dyck_stats(d);
  return {{"semilength", s.semilength},
          {"nbp", s.nbp},
          {"sump", s.sump},
          {"nbv", s.nbv},
          {"sumv", s.sumv},
          {"hills", s.hills},
          {"oneValleys", s.oneValleys},
          {"sumOneValleys", s.sumOneValleys},
          {"firstPeakHeight", s.firstPeakHeight},
          {"avoids3", s.avoids3 ? 1 : 0}};
}

StatRecord stat_record(const MotzkinPath& m) {
  return {{"steps", m.length()}, {"axisSteps", m.axis_steps()}, {"peakless", m.peakless() ? 1 : 0}};
}

StatRecord stat_record(const CoinFountain& c) {
  const FountainStats s = fountain_stats(c);
  return {{"e", s.e}, {"o", s.o}, {"m", s.m}, {"firstDiag", s.firstDiag}, {"coins", s.e + s.o}};
}

StatRecord stat_record(const ParallelogramPolyomino& p) {
  return {{"area", p.area()}, {"colCount", p.column_count()}};
}

StatRecord stat_record(const Object& obj) {
  return std::visit([](const auto& o) { return stat_record(o); }, obj);
}

Family family_of(const Object& obj) noexcept {
  switch (obj.index()) {
    case 0: return Family::Stanley;
    case 1: return Family::Dyck;
    case 2: return Family::PeaklessMotzkin;
    case 3: return Family::Fountain;
    default: return Family::Parallelogram;
  }
}

}  // namespace stanleylab
