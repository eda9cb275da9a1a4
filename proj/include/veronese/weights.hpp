#pragma once
// Weight analytics derived from the elongation Betti tables:
//
//  * generalized weight polynomials P_w(Z), which at Z = q^m count the
//    weight-w words of the scalar extension to F_{q^m};
//
//  * higher support-weight spectra A_w^(r), the numbers of r-dimensional
//    subcodes of support weight w, obtained from P_w by the exact
//    change of basis into prod_{i<r} (Z - q^i);
//
//  * the support-weight ladder d_1 <= ... <= d_k read off either side.
//
// Everything is exact integer arithmetic; any division that appears must
// leave no remainder or the operation throws.

#include "veronese/betti.hpp"
#include "veronese/common.hpp"

#include <string>
#include <vector>

namespace veronese {

// Dense polynomial with arbitrary-precision integer coefficients,
// c[t] = coefficient of Z^t, normalized to carry no trailing zeros.
struct IntPolynomial {
  std::vector<BigInt> c;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigInt> coeffs) : c(coeffs) { normalize(); }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 when zero
  BigInt coeff(size_t t) const { return t < c.size() ? c[t] : BigInt(0); }
  BigInt eval(const BigInt& x) const;

  bool operator==(const IntPolynomial&) const = default;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial& operator*=(const BigInt& s);

  std::string str(const std::string& var = "Z") const;
};

// P_w for w = 0..n from the elongation tables (levels 0..k, in order):
// P_0 = 1 and P_w = sum_l phi_w^(l) (Z^l - Z^(l+1)) otherwise.
std::vector<IntPolynomial> weight_polynomials(const std::vector<BettiTable>& levels);

// The same polynomials through the telescoped form
// P_w = sum_l (phi_w^(l) - phi_w^(l-1)) Z^l; an independent code path kept
// for cross-checking the direct one.
std::vector<IntPolynomial> weight_polynomials_telescoped(const std::vector<BettiTable>& levels);

// A[w][r] for r = 0..rmax: expansion of P_w in the monic basis
// G_r(Z) = prod_{i<r} (Z - q^i). No division occurs; entries must come out
// nonnegative (they count subcodes) or the call throws.
std::vector<std::vector<BigInt>> subcode_spectra(const std::vector<IntPolynomial>& P, uint32_t q,
                                                 uint32_t rmax);

// Inverse of subcode_spectra: P_w = sum_r A[w][r] G_r(Z).
std::vector<IntPolynomial> weight_polynomials_from_spectra(
    const std::vector<std::vector<BigInt>>& A, uint32_t q);

// Number of r-dimensional subspaces of an m-dimensional space over F_q.
BigInt gaussian_binomial(uint32_t m, uint32_t r, uint32_t q);

// d_r = the smallest internal degree in the i = 1 row of the level-(r-1)
// table; one entry per r = 1..(#levels - 1).
std::vector<uint64_t> support_weight_ladder(const std::vector<BettiTable>& levels);

// d_r = the smallest w with A[w][r] > 0, r = 1..rmax.
std::vector<uint64_t> support_weight_ladder(const std::vector<std::vector<BigInt>>& A);

}  // namespace veronese
