#pragma once
// Graded Betti numbers of the Stanley-Reisner rings of a matroid and its
// elongations, by two independent routes:
//
//  * exhaustive: walk the whole subset lattice, compute the reduced Euler
//    characteristic of every restriction via a subset-sum transform, and read
//    beta_{i,j} off the nullity strata (any matroid, n bounded by a guard);
//
//  * structural: for the parity-check matroids of the plane quadric
//    evaluation codes with q >= 4, place the known minimal-set strata, pin
//    the entries forced by counting (circuit families contribute 1 apiece,
//    the line-plus-point stratum contributes the alternating-sum value), and
//    solve the alternating power-sum constraints exactly for the rest.
//
// Both routes must agree wherever both are feasible.

#include "veronese/common.hpp"
#include "veronese/matroid.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace veronese {

struct BettiTable {
  uint32_t level = 0;  // elongation level of the matroid resolved
  uint32_t k_eff = 0;  // number of alternating power-sum constraints satisfied
  uint64_t n = 0;      // ground-set size (top internal degree)
  std::map<std::pair<uint32_t, uint64_t>, BigInt> entries;  // (i, j) -> beta > 0

  BigInt at(uint32_t i, uint64_t j) const;
  // phi(w) = sum_i (-1)^i beta_{i,w}, the alternating column sum.
  BigInt phi(uint64_t w) const;
  uint32_t max_i() const;
  bool operator==(const BettiTable&) const = default;
};

// Betti table of M at its own elongation level.
BettiTable exhaustive_betti(const Matroid& M, uint64_t guard = kDefaultExhaustiveGuard);

// Betti tables of every elongation of the base matroid, levels 0 .. n - rank.
// The whole-lattice nullity profile is computed once and reused.
std::vector<BettiTable> exhaustive_betti_levels(const Matroid& M,
                                                uint64_t guard = kDefaultExhaustiveGuard);

// Alternating power-sum residuals sum_{i,j} (-1)^i j^s beta_{i,j} for
// s = 0 .. k_eff - 1 (with 0^0 = 1, so the (0,0) entry feeds s = 0 only).
// Every residual of a genuine Betti table is zero.
std::vector<BigInt> hk_residuals(const BettiTable& T);
bool hk_consistent(const BettiTable& T);

// Magnitude of the alternating sum that pins the line-plus-point stratum:
//   sum_{z=q^2-q}^{q^2-2} (-1)^z (q+1) C(q-1, q^2-1-z)  +  (-1)^{q^2-1}.
// Equals q for every order q >= 2; the structural route relies on it.
BigInt dz_local_check(uint32_t q);

// One potential nonzero position of a Betti table: homological degree i,
// internal degree j, and the entry's value when forced by counting.
struct HkStratum {
  uint32_t i = 0;
  uint64_t j = 0;
  std::optional<BigInt> pinned;
};

// Solve sum (-1)^i j^s beta_{i,j} + [s == 0] = 0 for s = 0 .. k_eff - 1 over
// the given strata (the implied (0,0) entry is 1). Unpinned strata must have
// pairwise distinct j. Exact rational elimination; every equation is
// re-verified on the solution, which must be a positive integer per stratum.
// Returns the complete table including (0,0) -> 1. Throws std::runtime_error
// on an underdetermined, inconsistent, or non-integral system.
std::map<std::pair<uint32_t, uint64_t>, BigInt> hk_solve(const std::vector<HkStratum>& strata,
                                                         uint32_t k_eff);

// Structural tables for the plane quadric evaluation code of order q at all
// elongation levels 0..6. Requires q >= 4: below that the strata collide
// (conic complements degenerate) and the placement assumptions fail.
std::vector<BettiTable> structural_betti_tables(uint32_t q);

}  // namespace veronese
