#pragma once
// Brute-force enumeration oracles. These recompute weight data by direct
// exhaustive enumeration -- every codeword, every subcode -- without using
// matroid structure, resolutions, or closed forms, so the fast routes can
// be checked against counts that cannot share their bugs.
//
// Both oracles are deterministic: the thread count only splits the scan
// into chunks that are merged in a fixed order.

#include <cstdint>
#include <vector>

#include "veronese/code.hpp"
#include "veronese/common.hpp"

namespace veronese {

// Feasibility guards (see GuardExceeded): the word scan visits
// cardinality^rank messages, the subcode scan visits one row-echelon basis
// per subspace.
inline constexpr uint64_t kDefaultWordGuard = 20'000'000;
inline constexpr uint64_t kDefaultSubcodeGuard = 1'000'000;

// Number of weight-w words of the row space, w = 0..n, by scanning every
// message over a row basis. Works on any generator matrix (dependent rows
// are eliminated first).
std::vector<BigInt> word_weight_distribution(const LinearCode& C, unsigned threads = 1,
                                             uint64_t guard = kDefaultWordGuard);

// Support-weight distribution of the r-dimensional subcodes: entry w counts
// the r-dimensional subspaces of the code whose support has size w.
// Enumerates each subspace exactly once through its reduced row-echelon
// basis. Requires a full-row-rank generator.
std::vector<BigInt> subcode_support_distribution(const LinearCode& C, uint32_t r,
                                                 unsigned threads = 1,
                                                 uint64_t guard = kDefaultSubcodeGuard);

// The full table A[w][r] for r = 0..rmax, assembled from per-rank scans.
std::vector<std::vector<BigInt>> subcode_support_spectra(const LinearCode& C, uint32_t rmax,
                                                         unsigned threads = 1,
                                                         uint64_t guard = kDefaultSubcodeGuard);

}  // namespace veronese
