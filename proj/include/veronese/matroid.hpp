#pragma once
// Matroids realized by matrices over a finite field, with the operations the
// Stanley-Reisner Betti machinery needs: nullity of arbitrary subsets,
// elongation, whole-lattice nullity profiles, reduced Euler characteristics
// of independence complexes, and minimal sets of the nullity families N_i.
//
// The parity-check matroid of a code C stores only the generator matrix G and
// evaluates nullity through the dual identity n(X) = k - rank_G(E \ X); an
// explicit null-space realization (column matroid of H) exists for
// cross-checks and must agree everywhere.
//
// Ground sets are bitmasks (n <= 64 for subset queries; whole-lattice scans
// are bounded by an explicit feasibility guard, default 24 elements).

#include "veronese/code.hpp"
#include "veronese/common.hpp"

#include <map>
#include <memory>
#include <vector>

namespace veronese {

inline constexpr uint64_t kDefaultExhaustiveGuard = 24;

class Matroid {
 public:
  // Matroid of the parity-check matrix of C (no H is materialized).
  static Matroid parity_check(const LinearCode& C);
  // Column matroid: X independent iff the columns indexed by X are.
  static Matroid from_columns(FieldPtr field, size_t rows, size_t cols,
                              std::vector<uint32_t> row_major);

  size_t size() const { return n_; }
  uint32_t level() const { return level_; }  // elongation offset
  const FieldPtr& field() const { return field_; }

  // Nullity/rank at this matroid's elongation level.
  uint32_t nullity(uint64_t mask) const;
  uint32_t rank_of(uint64_t mask) const { return popcount(mask) - nullity(mask); }
  size_t rank() const { return rank_of(full_mask()); }

  // Nullity before elongation is applied.
  uint32_t base_nullity(uint64_t mask) const;

  // M^(level + dl); requires level + dl <= n - base rank.
  Matroid elongated(uint32_t dl) const;

  uint64_t full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }
  static uint32_t popcount(uint64_t m) { return static_cast<uint32_t>(__builtin_popcountll(m)); }

  // Base-matroid nullity for every subset of the ground set (index = mask).
  // Computed once per realization and shared across elongations. Throws
  // GuardExceeded when n exceeds the guard.
  const std::vector<uint8_t>& base_profile(uint64_t guard = kDefaultExhaustiveGuard) const;

 private:
  friend int64_t euler_characteristic(const Matroid&, uint64_t);
  Matroid() = default;

  FieldPtr field_;
  size_t n_ = 0;
  bool parity_mode_ = false;
  size_t kdim_ = 0;   // parity mode: code dimension
  size_t rows_ = 0;   // matrix rows
  std::vector<uint32_t> cols_;  // column-major rows_ x n_ matrix
  uint32_t level_ = 0;
  std::shared_ptr<std::vector<uint8_t>> profile_cache_ = std::make_shared<std::vector<uint8_t>>();

  uint32_t rank_of_columns(uint64_t mask) const;
};

// Restriction M|X: same rank function on subsets of X.
struct MatroidRestriction {
  const Matroid* m = nullptr;
  uint64_t ground = 0;
  uint32_t nullity(uint64_t mask) const;
  uint32_t rank_of(uint64_t mask) const;
  size_t size() const { return Matroid::popcount(ground); }
};
MatroidRestriction restrict(const Matroid& M, uint64_t mask);

// Reduced Euler characteristic of the independence complex of M|sigma:
// sum over independent tau <= sigma of (-1)^|tau| (the empty set counts +1).
// Signs stay here; Betti numbers downstream use magnitudes only.
int64_t euler_characteristic(const Matroid& M, uint64_t sigma);

// |euler_characteristic|, which for sigma in N_i equals the local Betti
// number beta_{i, sigma}.
uint64_t local_betti(const Matroid& M, uint64_t sigma);

// Whole-lattice nullity summary at the matroid's level: counts per
// (cardinality, nullity).
struct NullityProfile {
  size_t n = 0;
  uint32_t level = 0;
  std::map<std::pair<uint32_t, uint32_t>, uint64_t> counts;  // (|X|, nullity) -> #
};
NullityProfile nullity_profile(const Matroid& M, uint64_t guard = kDefaultExhaustiveGuard);

// Inclusion-minimal members of N_i = {X : nullity(X) = i}, 1 <= i <= n - rank.
struct CycleFamily {
  uint32_t i = 0;
  std::vector<uint64_t> sets;                 // masks, ascending
  std::map<size_t, uint64_t> census;          // cardinality -> count
};
CycleFamily cycles(const Matroid& M, uint32_t i, uint64_t guard = kDefaultExhaustiveGuard);

}  // namespace veronese
