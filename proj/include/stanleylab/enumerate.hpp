#pragma once

// Exhaustive generation of each family by a size measure. Objects come out
// once each, in lexicographic order of their canonical encoding (rows or
// columns as (start, len) pairs, path words with D < F < U, diagonal
// sequences).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stanleylab/objects.hpp"
#include "stanleylab/series.hpp"

namespace stanleylab {

enum class Measure { Columns, Semiperimeter, Area, Semilength, Steps, Diagonals, EvenCoins, Coins };

std::string measure_name(Measure m);
/// Throws ParseError.
Measure parse_measure(std::string_view name);

struct FamilyBound {
  Family family = Family::Stanley;
  Measure measure = Measure::Columns;
  int value = 0;
};

/// stanley: columns, semiperimeter, area; dyck: semilength;
/// peaklessMotzkin: steps; fountain: diagonals, evenCoins, coins;
/// parallelogram: area.
bool supported(Family f, Measure m) noexcept;

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

struct EnumerateOptions {
  std::uint64_t cap = kDefaultCap;
  /// Worker threads; the canonical-prefix split is merged and re-sorted.
  int jobs = 1;
  /// Directory for cached JSON-lines streams; empty disables the cache.
  std::filesystem::path cache_dir;
};

/// Streams objects in canonical order on the calling thread. Throws
/// UnsupportedPair, OutOfRange (negative value) and CapExceeded once more
/// than `cap` objects have been produced.
void for_each_object(const FamilyBound& bound, const std::function<void(const Object&)>& visit,
                     std::uint64_t cap = kDefaultCap);

std::vector<Object> enumerate(const FamilyBound& bound, const EnumerateOptions& opts = {});

template <class T>
std::vector<T> enumerate_as(const FamilyBound& bound, const EnumerateOptions& opts = {}) {
  std::vector<T> out;
  for_each_object(bound, [&](const Object& o) { out.push_back(std::get<T>(o)); }, opts.cap);
  return out;
}

std::uint64_t count(const FamilyBound& bound, const EnumerateOptions& opts = {});

/// Counts per value of a statistic from the family's stat record. Throws
/// UnsupportedPair for a statistic the family does not have.
std::map<std::int64_t, std::uint64_t> count_grouped(const FamilyBound& bound, std::string_view statistic,
                                                    const EnumerateOptions& opts = {});

/// (statistic, variable) pairs; each object contributes the monomial
/// prod variable^statistic.
using Marks = std::vector<std::pair<std::string, std::string>>;

/// Sum of the marked monomials over all objects, truncated to `box`'s space
/// and bounds.
Series aggregate_polynomial(const FamilyBound& bound, const Marks& marks, const Series& box,
                            const EnumerateOptions& opts = {});

/// The cache file used for `bound` inside `dir`.
std::filesystem::path cache_file(const std::filesystem::path& dir, const FamilyBound& bound);

}  // namespace stanleylab
