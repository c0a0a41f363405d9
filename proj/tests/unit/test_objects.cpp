#include <doctest.h>

#include "../oracle.hpp"
#include "stanleylab/error.hpp"
#include "stanleylab/objects.hpp"

using namespace stanleylab;

namespace {

StanleyPolyomino sample_polyomino() { return make_stanley({{0, 6}, {3, 6}, {4, 7}, {10, 3}, {11, 5}}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("objects") {
  TEST_CASE("Stanley validation") {
    CHECK_NOTHROW(sample_polyomino());
    CHECK(make_stanley({{0, 1}}).columns() == 1);
    CHECK(code_of([] { make_stanley({{0, 3}, {3, 2}}); }) == ErrorCode::RowsDisconnected);
    CHECK(code_of([] { make_stanley({}); }) == ErrorCode::EmptyInput);
    CHECK(code_of([] { make_stanley({{1, 2}}); }) == ErrorCode::NotAnchored);
    CHECK(code_of([] { make_stanley({{0, 2}, {0, 3}}); }) == ErrorCode::NotLeftShifted);
    CHECK(code_of([] { make_stanley({{0, 3}, {1, 2}}); }) == ErrorCode::NotRightShifted);
    CHECK(code_of([] { make_stanley({{0, 0}}); }) == ErrorCode::NegativeOrZeroLength);
  }

  TEST_CASE("Stanley statistics of the sample polyomino") {
    const StanleyStats s = stanley_stats(sample_polyomino());
    CHECK(s.col == 16);
    CHECK(s.row == 5);
    CHECK(s.sper == 21);
    CHECK(s.area == 27);
    CHECK(s.point == 7);
    CHECK(s.edgint == 4);
    CHECK(s.adja == 11);
  }

  TEST_CASE("small Stanley statistics") {
    const StanleyStats one = stanley_stats(make_stanley({{0, 1}}));
    CHECK(one == StanleyStats{1, 1, 2, 1, 0, 0, 0, 1, 1});
    const StanleyStats two = stanley_stats(make_stanley({{0, 2}, {1, 3}}));
    CHECK(two.firstD == 2);
    CHECK(two.first == 2);
  }

  TEST_CASE("overlap formulas agree with a cell scan up to 7 columns") {
    long n = 0;
    oracle::stanley_all(7, 1 << 20, [&](const oracle::Rows& rows) {
      std::vector<Row> r;
      for (auto [s, l] : rows) r.push_back({s, l});
      const StanleyStats s = stanley_stats(make_stanley(r));
      const oracle::Geometry g = oracle::geometry(rows);
      ++n;
      CHECK(s.point == g.point);
      CHECK(s.edgint == g.edgint);
      CHECK(s.adja == g.adja);
      CHECK(s.firstD == g.firstD);
      CHECK(s.sper == s.col + s.row);
      CHECK(s.adja == s.point + s.row - 1);
    });
    CHECK(n == 1 + 1 + 2 + 5 + 14 + 42 + 132);
  }

  TEST_CASE("a/b sequences") {
    const AbSequences ab = ab_sequences(sample_polyomino());
    CHECK(ab.a == std::vector<int>{5, 3, 2, 2, 3});
    CHECK(ab.b == std::vector<int>{3, 1, 6, 1, 4});
    CHECK(ab_sequences(make_stanley({{0, 1}})) == AbSequences{{0}, {0}});
    CHECK(ab_sequences(make_stanley({{0, 2}, {1, 2}})) == AbSequences{{1, 1}, {1, 1}});
    CHECK(stanley_from_ab(ab) == sample_polyomino());
  }

  TEST_CASE("Dyck statistics") {
    const DyckStats s = dyck_stats(make_dyck("UUUUUDDDUUUDUUDDDDDDUUDUUUDDDD"));
    CHECK(s.semilength == 15);
    CHECK(s.nbp == 5);
    CHECK(s.sump == 22);  // peaks 5, 5, 6, 2, 4
    CHECK(s.sumv == 7);   // valleys 2, 4, 0, 1
    CHECK(s.nbv == s.nbp - 1);
    CHECK(s.sump - s.sumv == s.semilength);

    const DyckStats ud = dyck_stats(make_dyck("UD"));
    CHECK(ud.nbp == 1);
    CHECK(ud.sump == 1);
    CHECK(ud.sumv == 0);
    CHECK(ud.hills == 1);

    const DyckStats u2 = dyck_stats(make_dyck("UUDUDD"));
    CHECK(u2.nbp == 2);
    CHECK(u2.sump == 4);
    CHECK(u2.sumv == 1);
    CHECK(u2.oneValleys == 1);
    CHECK(u2.sumOneValleys == 1);
    CHECK(u2.avoids3);
    CHECK_FALSE(dyck_stats(make_dyck("UUUDDD")).avoids3);
  }

  TEST_CASE("path validation") {
    CHECK(code_of([] { make_dyck("DU"); }) == ErrorCode::Unbalanced);
    CHECK(code_of([] { make_dyck("UUD"); }) == ErrorCode::Unbalanced);
    CHECK(code_of([] { make_dyck("UF"); }) == ErrorCode::InvalidStep);
    CHECK(make_motzkin("UFDF").peakless());
    CHECK_FALSE(make_motzkin("UDFF").peakless());
    CHECK(make_motzkin("FUFDF").axis_steps() == 3);
  }

  TEST_CASE("fountains") {
    const CoinFountain c = make_fountain({5, 4, 3, 3, 4, 3, 2, 2, 1});
    const FountainStats s = fountain_stats(c);
    CHECK(s.e == 16);
    CHECK(s.o == 11);
    CHECK(2 * s.e - s.o == 21);
    CHECK(fountain_stats(make_fountain({1})) == FountainStats{1, 0, 1, 1});
    CHECK(code_of([] { make_fountain({3, 1}); }) == ErrorCode::DiagonalDrop);
    CHECK(code_of([] { make_fountain({1, 2}); }) == ErrorCode::BadLastDiagonal);
    CHECK(code_of([] { make_fountain({}); }) == ErrorCode::EmptyInput);
  }

  TEST_CASE("fountain levels satisfy coin support") {
    const CoinFountain c = make_fountain({2, 3, 2, 1});
    const auto levels = fountain_levels(c);
    CHECK(levels == std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 2}, {1}});
    CHECK(oracle::diagonals_of(levels) == c.diagonals());
    CHECK(oracle::supported_by_levels(c.diagonals()));
  }

  TEST_CASE("parallelograms") {
    const ParallelogramPolyomino p =
        make_parallelogram({{0, 3}, {0, 4}, {2, 2}, {2, 4}, {3, 4}, {5, 2}, {5, 2}, {5, 3}});
    const ParallelogramStats s = parallelogram_stats(p);
    CHECK(s.area == 24);
    CHECK(s.colCount == 8);
    CHECK(s.overlaps == std::vector<int>{3, 2, 2, 3, 2, 2, 2});
    CHECK(make_parallelogram({{0, 1}}).area() == 1);
    CHECK(parallelogram_stats(make_parallelogram({{0, 1}, {0, 3}})).overlaps == std::vector<int>{1});
    CHECK(code_of([] { make_parallelogram({{0, 2}, {2, 1}}); }) == ErrorCode::DisconnectedColumns);
    CHECK(code_of([] { make_parallelogram({{1, 2}, {1, 1}}); }) == ErrorCode::NotAnchored);
    CHECK(code_of([] { make_parallelogram({{0, 3}, {0, 2}}); }) == ErrorCode::NonMonotoneBoundary);
  }

  TEST_CASE("stat records") {
    const StatRecord r = stat_record(Object{make_fountain({2, 1})});
    CHECK(r == StatRecord{{"e", 2}, {"o", 1}, {"m", 2}, {"firstDiag", 2}, {"coins", 3}});
    CHECK(family_of(Object{make_dyck("")}) == Family::Dyck);
  }
}
