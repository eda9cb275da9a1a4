#pragma once
// Cross-check orchestration. run_verification() executes every comparison
// that is feasible under the configured guards for one q and reports
// per-check outcomes: the four independent routes to the same quantities
// (exhaustive lattice scan, structural solve, closed forms, brute-force
// enumeration) are compared pairwise wherever at least two of them apply,
// together with the internal consistency properties (linear constraints,
// polynomial identities, determinism under modulus change).

#include <cstdint>
#include <string>
#include <vector>

#include "veronese/betti.hpp"
#include "veronese/code.hpp"
#include "veronese/report.hpp"

namespace veronese {

struct VerifyOptions {
  unsigned threads = 1;
  uint64_t exhaustive_guard = kDefaultExhaustiveGuard;
  uint64_t word_guard = 0;     // 0 = library default
  uint64_t subcode_guard = 0;  // 0 = library default
};

std::vector<CheckResult> run_verification(uint32_t q, const VerifyOptions& opt = {});

// Focused re-checks of a computed spectra table, for selective use by the
// CLI: comparison against the closed forms, and per-rank comparison against
// the brute-force subcode scan (one result per rank; ranks whose subspace
// count exceeds the guard come back "skipped"). Both catch internally and
// report exceptions as failures.
CheckResult check_spectra_closed_form(const std::vector<std::vector<BigInt>>& spectra, uint32_t q);
std::vector<CheckResult> check_spectra_oracle(const LinearCode& C,
                                              const std::vector<std::vector<BigInt>>& spectra,
                                              unsigned threads, uint64_t subcode_guard);

// True iff q = p^d for a prime p and d >= 1; outputs the factorization.
bool factor_prime_power(uint32_t q, uint32_t& p, uint32_t& d);

// Field / code construction from the order alone (throws on non-prime-powers).
FieldPtr build_field_for_order(uint32_t q);
LinearCode build_code_for_order(uint32_t q);

// Betti tables by route name: "auto" (exhaustive for q <= 3, structural
// beyond), "exhaustive", or "structural". Throws std::invalid_argument for
// unknown names or routes that cannot apply (structural needs q >= 4), and
// GuardExceeded when the exhaustive lattice is larger than the guard.
std::vector<BettiTable> betti_tables_by_method(const LinearCode& C, uint32_t q,
                                               const std::string& method,
                                               uint64_t exhaustive_guard);

}  // namespace veronese
