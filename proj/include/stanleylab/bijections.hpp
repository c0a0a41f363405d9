#pragma once

// Maps between Stanley polyominoes, lattice paths, coin fountains and
// parallelogram polyominoes. All recursions run iteratively.

#include "stanleylab/objects.hpp"

namespace stanleylab {

/// U^{a_1} D^{b_1} ... U^{a_k} D^{b_k}; semilength col(P) - 1.
DyckPath phi(const StanleyPolyomino& p);
StanleyPolyomino phi_inv(const DyckPath& d);

/// Peakless Motzkin paths of length n to polyominoes of semiperimeter n + 2.
/// Throws NotPeakless.
StanleyPolyomino chi(const MotzkinPath& m);

/// Dyck paths avoiding UUU and DDD of semilength n to polyominoes of
/// semiperimeter n + 3. Throws ContainsTriple.
StanleyPolyomino chi_prime(const DyckPath& d);

/// Fountains with m diagonals to polyominoes with m + 1 columns and area
/// 2e - o.
StanleyPolyomino f_map(const CoinFountain& c);
/// Throws TooSmall for single-column input.
CoinFountain f_inv(const StanleyPolyomino& p);

/// Peak heights are the column heights, valley heights the overlaps minus one.
DyckPath h_map(const ParallelogramPolyomino& p);

/// f_inv(phi_inv(h_map(p))): area n, k columns go to e = n, o = n - k.
CoinFountain psi(const ParallelogramPolyomino& p);

enum class TableMap { Chi, ChiPrime };

/// Finds the unique source path mapped onto `target` by searching the whole
/// source class of the matching size. Throws OutOfRange when the target's
/// semiperimeter exceeds `size_bound`, NoPreimage or MultiplePreimages.
std::variant<MotzkinPath, DyckPath> table_inverse(TableMap map, const StanleyPolyomino& target, int size_bound);

}  // namespace stanleylab
