#pragma once

// Known closed forms for the plane-quadric evaluation code family.
//
// Everything in this header is an independent transcription of published
// results: conic/configuration counts, the graded Betti tables of the
// parity-check matroid and its elongations, the generalized weight
// polynomials, the higher weight spectra, and the support-weight ladder.
// Nothing here is computed by the engine; these tables exist so the two
// computational routes (exhaustive lattice scan, structural solve) can be
// cross-checked against fixed external values.

#include <cstdint>
#include <vector>

#include "veronese/betti.hpp"
#include "veronese/plane.hpp"
#include "veronese/weights.hpp"

namespace veronese {

// Conic counts by projective class: (q^2+q+1) repeated lines,
// q(q+1)(q^2+q+1)/2 line pairs, q^5-q^2 irreducible conics, and
// q(q-1)(q^2+q+1)/2 conics with a single rational point.
ConicCensus reference_conic_census(uint32_t q);

// Closed forms for the point/line configurations counted by
// count_configurations().
ConfigurationCounts reference_configuration_counts(uint32_t q);

// Closed-form graded Betti tables for the matroid and all six elongations,
// one table per nullity level 0..6 (the level-6 complex is trivial and
// contributes only the empty-set entry).  Valid for q >= 4; the closed
// forms over-count two strata at q = 2 and q = 3, where degenerate conic
// geometry makes some listed generators non-minimal.
std::vector<BettiTable> reference_betti_tables(uint32_t q);

// Closed-form generalized weight polynomials P_w(Z), indexed by weight
// 0..q^2+q+1.  Exactly nine are nonzero: w = 0, q^2-q, q^2-1, q^2,
// q^2+q-3, q^2+q-2, q^2+q-1, q^2+q, q^2+q+1.  Valid for q >= 4.
std::vector<IntPolynomial> reference_weight_polynomials(uint32_t q);

// Closed-form higher weight spectra A_w^(r) as a table indexed
// [w][r], w in 0..q^2+q+1, r in 0..6.  For q >= 4 the 21 nonzero
// entries with r >= 1 come from polynomial formulas; q = 2 and q = 3
// are stored as literal tables (the generic formulas break on the
// degenerate strata).  A_0^(0) = 1 (the zero subcode) in all cases.
std::vector<std::vector<BigInt>> reference_spectra(uint32_t q);

// Support-weight ladder d_1..d_6 = q^2-q, q^2-1, q^2, q^2+q-1, q^2+q,
// q^2+q+1.  Valid for every prime power q >= 2.
std::vector<uint64_t> reference_support_weight_ladder(uint32_t q);

}  // namespace veronese
