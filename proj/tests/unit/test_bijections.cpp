#include <doctest.h>

#include <set>

#include "../oracle.hpp"
#include "stanleylab/bijections.hpp"
#include "stanleylab/enumerate.hpp"
#include "stanleylab/error.hpp"

using namespace stanleylab;

namespace {

const char* kSampleWord = "UUUUUDDDUUUDUUDDDDDDUUDUUUDDDD";

StanleyPolyomino sample_polyomino() { return make_stanley({{0, 6}, {3, 6}, {4, 7}, {10, 3}, {11, 5}}); }

ParallelogramPolyomino sample_parallelogram() {
  return make_parallelogram({{0, 3}, {0, 4}, {2, 2}, {2, 4}, {3, 4}, {5, 2}, {5, 2}, {5, 3}});
}

std::vector<Row> rows_of(const StanleyPolyomino& p) { return p.rows(); }

}  // namespace

TEST_SUITE("bijections") {
  TEST_CASE("phi on the examples") {
    CHECK(phi(sample_polyomino()).word() == kSampleWord);
    CHECK(phi(make_stanley({{0, 1}})).word().empty());
    CHECK(phi(make_stanley({{0, 2}, {1, 2}})).word() == "UDUD");
    CHECK(phi_inv(make_dyck(kSampleWord)) == sample_polyomino());
    CHECK(phi_inv(make_dyck("")) == make_stanley({{0, 1}}));
    CHECK(phi_inv(make_dyck("UUDD")) == make_stanley({{0, 3}}));
  }

  TEST_CASE("phi round trips through 9 columns") {
    for (int c = 1; c <= 9; ++c) {
      for (const auto& p : enumerate_as<StanleyPolyomino>({Family::Stanley, Measure::Columns, c})) {
        const DyckPath d = phi(p);
        CHECK(d.semilength() == c - 1);
        CHECK(phi_inv(d) == p);
      }
    }
  }

  TEST_CASE("chi on the examples") {
    CHECK(rows_of(chi(make_motzkin("FFFF"))) == std::vector<Row>{{0, 5}});
    CHECK(rows_of(chi(make_motzkin("UFDF"))) == std::vector<Row>{{0, 3}, {1, 3}});
    CHECK(chi(make_motzkin("")) == make_stanley({{0, 1}}));
    CHECK_THROWS_AS(chi(make_motzkin("UDFF")), Error);
  }

  TEST_CASE("chi is a bijection by size") {
    for (int n = 0; n <= 9; ++n) {
      std::set<StanleyPolyomino> img;
      const auto src = enumerate_as<MotzkinPath>({Family::PeaklessMotzkin, Measure::Steps, n});
      for (const auto& m : src) {
        const StanleyPolyomino p = chi(m);
        CHECK(p.columns() + p.row_count() == n + 2);
        img.insert(p);
      }
      CHECK(img.size() == src.size());
      CHECK(img.size() == count({Family::Stanley, Measure::Semiperimeter, n + 2}));
    }
  }

  TEST_CASE("chi prime on the examples") {
    CHECK(rows_of(chi_prime(make_dyck("UDUDUDUD"))) == std::vector<Row>{{0, 6}});
    CHECK(chi_prime(make_dyck("")) == make_stanley({{0, 2}}));
    const StanleyPolyomino p = chi_prime(make_dyck("UUDUDD"));
    CHECK(p.columns() + p.row_count() == 6);
    CHECK(p.rows()[0].len == 2);  // no hills
    CHECK_THROWS_AS(chi_prime(make_dyck("UUUDDD")), Error);
  }

  TEST_CASE("chi prime sizes and first row") {
    for (int n = 0; n <= 9; ++n) {
      for (const auto& d : enumerate_as<DyckPath>({Family::Dyck, Measure::Semilength, n})) {
        const DyckStats s = dyck_stats(d);
        if (!s.avoids3) continue;
        const StanleyPolyomino p = chi_prime(d);
        CHECK(p.columns() + p.row_count() == n + 3);
        CHECK(p.rows()[0].len == s.hills + 2);
      }
    }
  }

  TEST_CASE("chi prime merges two paths of semilength 5") {
    const StanleyPolyomino a = chi_prime(make_dyck("UUDUUDDUDD"));
    const StanleyPolyomino b = chi_prime(make_dyck("UUDUDDUUDD"));
    CHECK(a == b);
    CHECK(rows_of(a) == std::vector<Row>{{0, 2}, {1, 3}, {3, 2}});
  }

  TEST_CASE("f on the examples") {
    CHECK(f_map(make_fountain({1})) == make_stanley({{0, 2}}));
    CHECK(f_map(make_fountain({1, 1})) == make_stanley({{0, 2}, {1, 2}}));
    CHECK_THROWS_AS(make_fountain({2}), Error);
    CHECK(f_map(make_fountain({2, 1})) == make_stanley({{0, 3}}));
    const StanleyPolyomino fig5 = f_map(make_fountain({5, 4, 3, 3, 4, 3, 2, 2, 1}));
    CHECK(rows_of(fig5) == std::vector<Row>{{0, 4}, {1, 4}, {2, 4}, {4, 4}, {5, 5}});
    CHECK(fig5.area() == 21);
    CHECK(f_inv(make_stanley({{0, 2}})) == make_fountain({1}));
    CHECK(f_inv(fig5) == make_fountain({5, 4, 3, 3, 4, 3, 2, 2, 1}));
    CHECK(f_inv(make_stanley({{0, 3}})) == make_fountain({2, 1}));
    CHECK_THROWS_AS(f_inv(make_stanley({{0, 1}})), Error);
  }

  TEST_CASE("f round trips, columns, area and the two cases") {
    for (int m = 1; m <= 9; ++m) {
      for (const auto& c : enumerate_as<CoinFountain>({Family::Fountain, Measure::Diagonals, m})) {
        const StanleyPolyomino p = f_map(c);
        const FountainStats fs = fountain_stats(c);
        CHECK(p.columns() == m + 1);
        CHECK(p.area() == 2 * fs.e - fs.o);
        CHECK(f_inv(p) == c);
        const StanleyStats s = stanley_stats(p);
        const int k = fs.firstDiag;
        const int l = k / 2;
        const bool even_case = s.firstD == l && s.first >= l + 2;
        const bool odd_case = s.firstD >= l + 1 && s.first == l + 2;
        CHECK(even_case != odd_case);
        CHECK(even_case == (k % 2 == 0));
      }
      for (const auto& p : enumerate_as<StanleyPolyomino>({Family::Stanley, Measure::Columns, m + 1})) {
        CHECK(f_map(f_inv(p)) == p);
      }
    }
  }

  TEST_CASE("h on the examples") {
    const DyckStats s = dyck_stats(h_map(sample_parallelogram()));
    CHECK(s.nbp == 8);
    CHECK(s.sump == 24);
    const std::string w = h_map(sample_parallelogram()).word();
    std::vector<int> peaks, valleys;
    int hgt = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      hgt += w[i] == 'U' ? 1 : -1;
      if (i + 1 < w.size() && w[i] == 'U' && w[i + 1] == 'D') peaks.push_back(hgt);
      if (i + 1 < w.size() && w[i] == 'D' && w[i + 1] == 'U') valleys.push_back(hgt);
    }
    CHECK(peaks == std::vector<int>{3, 4, 2, 4, 4, 2, 2, 3});
    CHECK(valleys == std::vector<int>{2, 1, 1, 2, 1, 1, 1});
    CHECK(h_map(make_parallelogram({{0, 1}})).word() == "UD");
    CHECK(h_map(make_parallelogram({{0, 2}, {1, 2}})).word() == "UUDDUUDD");
  }

  TEST_CASE("h and psi by area") {
    for (int n = 1; n <= 9; ++n) {
      std::set<DyckPath> hs;
      std::set<CoinFountain> ps;
      const auto src = enumerate_as<ParallelogramPolyomino>({Family::Parallelogram, Measure::Area, n});
      for (const auto& p : src) {
        const DyckPath d = h_map(p);
        CHECK(dyck_stats(d).sump == n);
        CHECK(dyck_stats(d).nbp == p.column_count());
        hs.insert(d);
        const CoinFountain c = psi(p);
        const FountainStats fs = fountain_stats(c);
        CHECK(fs.e == n);
        CHECK(fs.o == n - p.column_count());
        ps.insert(c);
      }
      CHECK(hs.size() == src.size());
      CHECK(ps.size() == src.size());
      CHECK(ps.size() == count({Family::Fountain, Measure::EvenCoins, n}));
    }
  }

  TEST_CASE("psi on the examples") {
    const FountainStats s = fountain_stats(psi(sample_parallelogram()));
    CHECK(s.e == 24);
    CHECK(s.o == 16);
    CHECK(psi(make_parallelogram({{0, 1}})) == make_fountain({1}));
    const CoinFountain dom = psi(make_parallelogram({{0, 2}}));
    CHECK(dom == make_fountain({2, 1}));
    CHECK(fountain_stats(dom) == FountainStats{2, 1, 2, 2});
  }

  TEST_CASE("table inverses") {
    CHECK(std::get<MotzkinPath>(table_inverse(TableMap::Chi, make_stanley({{0, 5}}), 10)).word() == "FFFF");
    CHECK(std::get<DyckPath>(table_inverse(TableMap::ChiPrime, make_stanley({{0, 6}}), 10)).word() == "UDUDUDUD");
    CHECK(std::get<MotzkinPath>(table_inverse(TableMap::Chi, make_stanley({{0, 1}}), 10)).word().empty());
    auto code = [](const std::function<void()>& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::ParseError;
    };
    CHECK(code([] { table_inverse(TableMap::Chi, make_stanley({{0, 5}}), 4); }) == ErrorCode::OutOfRange);
    CHECK(code([] { table_inverse(TableMap::ChiPrime, make_stanley({{0, 2}, {1, 3}, {3, 2}}), 10); }) ==
          ErrorCode::MultiplePreimages);
    CHECK(code([] { table_inverse(TableMap::ChiPrime, make_stanley({{0, 1}}), 10); }) == ErrorCode::NoPreimage);
  }
}
