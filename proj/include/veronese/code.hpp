#pragma once
// Linear codes given by generator matrices, and the degree-2 Veronese code
// C_q: generator columns are the quadric monomials (x^2, xy, xz, y^2, yz, z^2)
// of the q^2+q+1 points of PG(2, q), in the plane's point order. Codeword
// supports are complements of conic point sets, which is what ties the
// code's weight data to plane geometry.

#include "veronese/field.hpp"
#include "veronese/plane.hpp"

#include <array>
#include <optional>
#include <vector>

namespace veronese {

struct LinearCode {
  FieldPtr field;
  size_t k = 0, n = 0;
  std::vector<uint32_t> gen;  // row-major k x n generator entries (encodings)

  uint32_t at(size_t r, size_t c) const { return gen[r * n + c]; }

  // Set when the code was built from plane geometry.
  struct Provenance {
    uint32_t q = 0;  // base plane order (preserved by scalar extension)
    std::vector<std::array<uint32_t, 3>> points;
    uint64_t point_order_hash = 0;
  };
  std::optional<Provenance> veronese;
};

LinearCode build_veronese_code(const Plane& P);
LinearCode build_veronese_code(const FieldPtr& f);

// Same generator entries over the degree-m extension field (the coefficient
// embedding is the identity on encodings, so entries carry over unchanged).
// m = 1 returns the code itself.
LinearCode extend_scalars(const LinearCode& C, uint32_t m,
                          uint64_t cardinality_cap = kDefaultCardinalityCap);

struct Codeword {
  std::vector<uint32_t> symbols;
  std::vector<uint16_t> support;  // sorted nonzero positions
  size_t weight = 0;
};

Codeword encode_support(const LinearCode& C, const std::vector<uint32_t>& message);

// Rank of the generator matrix.
size_t code_rank(const LinearCode& C);

// Basis of {v in F^n : G v = 0}, as n - rank row vectors. The rows form a
// parity-check matrix of the code.
std::vector<std::vector<uint32_t>> null_space(const LinearCode& C);

}  // namespace veronese
