#pragma once

// Validated value types for the five combinatorial families and their
// statistics. All types are immutable after construction; the only way to
// obtain one is through the checking factory functions below.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace stanleylab {

/// Ordered (name, value) pairs; the flat statistics record of an object.
using StatRecord = std::vector<std::pair<std::string, std::int64_t>>;

// ---------------------------------------------------------------------------
// Stanley polyominoes

/// One row of cells, `start` is the column of its leftmost cell.
struct Row {
  int start = 0;
  int len = 0;

  int end() const noexcept { return start + len; }
  auto operator<=>(const Row&) const = default;
};

/// A parallelogram polyomino whose rows, read bottom to top, begin and end
/// strictly to the right of the previous row. Rows are stored bottom first
/// and the bottom row starts at column 0.
class StanleyPolyomino {
 public:
  const std::vector<Row>& rows() const noexcept { return rows_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }
  int columns() const noexcept { return rows_.back().end(); }
  int area() const noexcept;

  auto operator<=>(const StanleyPolyomino&) const = default;

 private:
  explicit StanleyPolyomino(std::vector<Row> rows) : rows_(std::move(rows)) {}
  friend StanleyPolyomino make_stanley(std::vector<Row> rows);

  std::vector<Row> rows_;
};

/// Throws Error{EmptyInput, NegativeOrZeroLength, NotAnchored,
/// NotLeftShifted, NotRightShifted, RowsDisconnected}.
StanleyPolyomino make_stanley(std::vector<Row> rows);

struct StanleyStats {
  int col = 0;
  int row = 0;
  int sper = 0;
  int area = 0;
  int point = 0;
  int edgint = 0;
  int adja = 0;
  int first = 0;
  int firstD = 0;

  bool operator==(const StanleyStats&) const = default;
};

StanleyStats stanley_stats(const StanleyPolyomino& p);

/// a_1 = len_1 - 1, a_i = end_i - end_{i-1}; b_i = start_{i+1} - start_i,
/// b_k = len_k - 1.
struct AbSequences {
  std::vector<int> a;
  std::vector<int> b;

  bool operator==(const AbSequences&) const = default;
};

AbSequences ab_sequences(const StanleyPolyomino& p);

/// Rebuilds the polyomino from its a/b sequences. The sequences must have
/// equal nonzero length; the result is validated.
StanleyPolyomino stanley_from_ab(const AbSequences& ab);

// ---------------------------------------------------------------------------
// Lattice paths

/// Nonnegative path over {U, D} returning to height 0.
class DyckPath {
 public:
  const std::string& word() const noexcept { return word_; }
  int semilength() const noexcept { return static_cast<int>(word_.size() / 2); }
  bool empty() const noexcept { return word_.empty(); }

  auto operator<=>(const DyckPath&) const = default;

 private:
  explicit DyckPath(std::string word) : word_(std::move(word)) {}
  friend DyckPath make_dyck(std::string_view word);

  std::string word_;
};

/// Throws Error{InvalidStep, Unbalanced}.
DyckPath make_dyck(std::string_view word);

struct DyckStats {
  int semilength = 0;
  int nbp = 0;
  int sump = 0;
  int nbv = 0;
  int sumv = 0;
  int hills = 0;
  int oneValleys = 0;
  int sumOneValleys = 0;
  int firstPeakHeight = 0;
  bool avoids3 = true;

  bool operator==(const DyckStats&) const = default;
};

DyckStats dyck_stats(const DyckPath& d);

/// Nonnegative path over {U, D, F} returning to height 0.
class MotzkinPath {
 public:
  const std::string& word() const noexcept { return word_; }
  int length() const noexcept { return static_cast<int>(word_.size()); }
  /// No U immediately followed by D.
  bool peakless() const noexcept;
  /// Number of steps whose endpoint lies on the x-axis.
  int axis_steps() const noexcept;

  auto operator<=>(const MotzkinPath&) const = default;

 private:
  explicit MotzkinPath(std::string word) : word_(std::move(word)) {}
  friend MotzkinPath make_motzkin(std::string_view word);

  std::string word_;
};

/// Throws Error{InvalidStep, Unbalanced}.
MotzkinPath make_motzkin(std::string_view word);

// ---------------------------------------------------------------------------
// Coin fountains

/// A fountain of coins stored as the sizes of its north-east diagonals, left
/// to right. The coin at level l >= 1 on diagonal j rests on the coins at
/// level l-1 of diagonals j and j+1, so a sequence is a fountain exactly when
/// d_j <= d_{j+1} + 1 and the last diagonal holds a single coin.
class CoinFountain {
 public:
  const std::vector<int>& diagonals() const noexcept { return diagonals_; }
  int diagonal_count() const noexcept { return static_cast<int>(diagonals_.size()); }
  int coins() const noexcept;

  auto operator<=>(const CoinFountain&) const = default;

 private:
  explicit CoinFountain(std::vector<int> d) : diagonals_(std::move(d)) {}
  friend CoinFountain make_fountain(std::vector<int> diagonals);

  std::vector<int> diagonals_;
};

/// Throws Error{EmptyInput, NegativeOrZeroLength, BadLastDiagonal, DiagonalDrop}.
CoinFountain make_fountain(std::vector<int> diagonals);

/// Levels are numbered from 0 at the bottom row; level 0 counts as even.
struct FountainStats {
  int e = 0;
  int o = 0;
  int m = 0;
  int firstDiag = 0;

  bool operator==(const FountainStats&) const = default;
};

FountainStats fountain_stats(const CoinFountain& c);

/// Level-set view: entry l lists the diagonal offsets (0-based) of the coins
/// at level l.
std::vector<std::vector<int>> fountain_levels(const CoinFountain& c);

// ---------------------------------------------------------------------------
// Parallelogram polyominoes

struct Column {
  int bottom = 0;
  int height = 0;

  int top() const noexcept { return bottom + height - 1; }
  auto operator<=>(const Column&) const = default;
};

class ParallelogramPolyomino {
 public:
  const std::vector<Column>& columns() const noexcept { return columns_; }
  int column_count() const noexcept { return static_cast<int>(columns_.size()); }
  int area() const noexcept;

  auto operator<=>(const ParallelogramPolyomino&) const = default;

 private:
  explicit ParallelogramPolyomino(std::vector<Column> c) : columns_(std::move(c)) {}
  friend ParallelogramPolyomino make_parallelogram(std::vector<Column> columns);

  std::vector<Column> columns_;
};

/// Throws Error{EmptyInput, NegativeOrZeroLength, NotAnchored,
/// NonMonotoneBoundary, DisconnectedColumns}.
ParallelogramPolyomino make_parallelogram(std::vector<Column> columns);

struct ParallelogramStats {
  int area = 0;
  int colCount = 0;
  /// o_i = top_i - bottom_{i+1} + 1, the rows shared by columns i and i+1.
  std::vector<int> overlaps;

  bool operator==(const ParallelogramStats&) const = default;
};

ParallelogramStats parallelogram_stats(const ParallelogramPolyomino& p);

// ---------------------------------------------------------------------------
// Flat statistic records, keyed by the field names above.

StatRecord stat_record(const StanleyPolyomino& p);
StatRecord stat_record(const DyckPath& d);
StatRecord stat_record(const MotzkinPath& m);
StatRecord stat_record(const CoinFountain& c);
StatRecord stat_record(const ParallelogramPolyomino& p);

// ---------------------------------------------------------------------------
// Type-erased objects

enum class Family { Stanley, Dyck, PeaklessMotzkin, Fountain, Parallelogram };

using Object = std::variant<StanleyPolyomino, DyckPath, MotzkinPath, CoinFountain, ParallelogramPolyomino>;

StatRecord stat_record(const Object& obj);
Family family_of(const Object& obj) noexcept;

}  // namespace stanleylab
