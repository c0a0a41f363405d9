#include "stanleylab/bijections.hpp"

#include <optional>

#include "stanleylab/enumerate.hpp"
#include "stanleylab/error.hpp"

namespace stanleylab {

namespace {

// Polyomino edits on plain row lists. Each keeps the bottom row anchored at
// column 0.

void prepend_to_first_rows(std::vector<Row>& rows, std::size_t count) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < count) {
      rows[i].len += 1;
    } else {
      rows[i].start += 1;
    }
  }
}

void add_bottom_row(std::vector<Row>& rows, int k) {
  for (Row& r : rows) r.start += 1;
  rows.insert(rows.begin(), Row{0, k});
}

// Index of the step closing the first return to the axis.
std::size_t first_return(const std::string& w) {
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += (w[i] == 'U') ? 1 : (w[i] == 'D' ? -1 : 0);
    if (h == 0) return i;
  }
  return w.size();
}

int axis_endings(const std::string& w) {
  int h = 0;
  int n = 0;
  for (char c : w) {
    h += (c == 'U') ? 1 : (c == 'D' ? -1 : 0);
    if (h == 0) ++n;
  }
  return n;
}

int hills(const std::string& w) {
  int h = 0;
  int n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (h == 0 && w[i] == 'U' && w[i + 1] == 'D') ++n;
    h += (w[i] == 'U') ? 1 : -1;
  }
  return n;
}

// A recorded edit: 0 prepends a cell to the first row, k > 0 adds a bottom
// row of k cells.
using Edits = std::vector<int>;

StanleyPolyomino replay(std::vector<Row> rows, const Edits& edits) {
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    if (*it == 0) {
      prepend_to_first_rows(rows, 1);
    } else {
      add_bottom_row(rows, *it);
    }
  }
  return make_stanley(std::move(rows));
}

}  // namespace

DyckPath phi(const StanleyPolyomino& p) {
  const AbSequences ab = ab_sequences(p);
  std::string w;
  for (std::size_t i = 0; i < ab.a.size(); ++i) {
    w.append(static_cast<std::size_t>(ab.a[i]), 'U');
    w.append(static_cast<std::size_t>(ab.b[i]), 'D');
  }
  return make_dyck(w);
}

StanleyPolyomino phi_inv(const DyckPath& d) {
  const std::string& w = d.word();
  AbSequences ab;
  std::size_t i = 0;
  if (w.empty()) return stanley_from_ab({{0}, {0}});
  while (i < w.size()) {
    int a = 0;
    int b = 0;
    while (i < w.size() && w[i] == 'U') ++a, ++i;
    while (i < w.size() && w[i] == 'D') ++b, ++i;
    ab.a.push_back(a);
    ab.b.push_back(b);
  }
  return stanley_from_ab(ab);
}

StanleyPolyomino chi(const MotzkinPath& m) {
  if (!m.peakless()) throw Error(ErrorCode::NotPeakless, "path " + m.word() + " has a peak");
  std::string w = m.word();
  Edits edits;
  while (!w.empty()) {
    if (w[0] == 'F') {
      edits.push_back(0);
      w.erase(0, 1);
      continue;
    }
    const std::size_t j = first_return(w);
    edits.push_back(axis_endings(w) + 1);
    // u beta d gamma -> beta gamma
    w = w.substr(1, j - 1) + w.substr(j + 1);
  }
  return replay({Row{0, 1}}, edits);
}

StanleyPolyomino chi_prime(const DyckPath& d) {
  std::string w = d.word();
  if (w.find("UUU") != std::string::npos || w.find("DDD") != std::string::npos) {
    throw Error(ErrorCode::ContainsTriple, "path " + w + " contains UUU or DDD");
  }
  Edits edits;
  while (!w.empty()) {
    if (w.compare(0, 2, "UD") == 0) {
      edits.push_back(0);
      w.erase(0, 2);
      continue;
    }
    // u beta ud d gamma
    const std::size_t j = first_return(w);
    const std::string beta = w.substr(1, j - 3);
    const std::string gamma = w.substr(j + 1);
    edits.push_back(hills(gamma) + 2);
    w = beta + gamma;
  }
  return replay({Row{0, 2}}, edits);
}

StanleyPolyomino f_map(const CoinFountain& c) {
  const auto& d = c.diagonals();
  std::vector<Row> rows{Row{0, 2}};
  // The last diagonal is the base case; earlier ones are added right to left.
  for (std::size_t j = d.size() - 1; j-- > 0;) {
    const int k = d[j];
    const int l = k / 2;
    if (k % 2 == 1) {
      add_bottom_row(rows, l + 2);
    } else {
      if (static_cast<std::size_t>(l) > rows.size()) {
        throw Error(ErrorCode::OutOfRange, "fountain diagonal exceeds the available rows");
      }
      prepend_to_first_rows(rows, static_cast<std::size_t>(l));
    }
  }
  return make_stanley(std::move(rows));
}

CoinFountain f_inv(const StanleyPolyomino& p) {
  if (p.columns() < 2) throw Error(ErrorCode::TooSmall, "f_inv needs at least two columns");
  std::vector<int> diags;
  std::vector<Row> rows = p.rows();
  while (!(rows.size() == 1 && rows[0].len == 2)) {
    const StanleyStats s = stanley_stats(make_stanley(rows));
    const int d = s.firstD;
    const int r = s.first;
    if (r >= d + 2) {
      diags.push_back(2 * d);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i < static_cast<std::size_t>(d)) {
          rows[i].len -= 1;
        } else {
          rows[i].start -= 1;
        }
      }
    } else {
      if (r < 2 || d < r - 1 || rows.size() < 2) {
        throw Error(ErrorCode::NoPreimage, "polyomino is outside the image of f");
      }
      diags.push_back(2 * r - 3);
      rows.erase(rows.begin());
      for (Row& row : rows) row.start -= 1;
    }
  }
  diags.push_back(1);
  return make_fountain(std::move(diags));
}

DyckPath h_map(const ParallelogramPolyomino& p) {
  const auto& cols = p.columns();
  const ParallelogramStats s = parallelogram_stats(p);
  std::string w(static_cast<std::size_t>(cols[0].height), 'U');
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
    const int o = s.overlaps[i];
    w.append(static_cast<std::size_t>(cols[i].height - o + 1), 'D');
    w.append(static_cast<std::size_t>(cols[i + 1].height - o + 1), 'U');
  }
  w.append(static_cast<std::size_t>(cols.back().height), 'D');
  return make_dyck(w);
}

CoinFountain psi(const ParallelogramPolyomino& p) { return f_inv(phi_inv(h_map(p))); }

std::variant<MotzkinPath, DyckPath> table_inverse(TableMap map, const StanleyPolyomino& target, int size_bound) {
  const int sper = stanley_stats(target).sper;
  if (sper > size_bound) {
    throw Error(ErrorCode::OutOfRange, "semiperimeter " + std::to_string(sper) + " exceeds the bound");
  }
  std::optional<std::variant<MotzkinPath, DyckPath>> found;
  auto consider = [&](const auto& source, const StanleyPolyomino& image) {
    if (image != target) return;
    if (found) throw Error(ErrorCode::MultiplePreimages, "two source paths share the same image");
    found = source;
  };
  if (map == TableMap::Chi) {
    if (sper >= 2) {
      for_each_object({Family::PeaklessMotzkin, Measure::Steps, sper - 2}, [&](const Object& o) {
        const auto& m = std::get<MotzkinPath>(o);
        consider(m, chi(m));
      });
    }
  } else if (sper >= 3) {
    for_each_object({Family::Dyck, Measure::Semilength, sper - 3}, [&](const Object& o) {
      const auto& d = std::get<DyckPath>(o);
      const std::string& w = d.word();
      if (w.find("UUU") != std::string::npos || w.find("DDD") != std::string::npos) return;
      consider(d, chi_prime(d));
    });
  }
  if (!found) throw Error(ErrorCode::NoPreimage, "no source path maps onto the target");
  return *found;
}

}  // namespace stanleylab
