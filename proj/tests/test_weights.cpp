#include "veronese/weights.hpp"

#include <map>

#include "doctest.h"
#include "veronese/code.hpp"
#include "veronese/field.hpp"
#include "veronese/matroid.hpp"

using namespace veronese;

namespace {

FieldPtr field_for_order(uint32_t q) {
  uint32_t p = 2;
  while (q % p) ++p;
  uint32_t d = 0, t = q;
  while (t % p == 0) t /= p, ++d;
  REQUIRE(t == 1);
  return build_field(p, d);
}

const std::vector<BettiTable>& levels_for(uint32_t q) {
  static std::map<uint32_t, std::vector<BettiTable>> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    Matroid M = Matroid::parity_check(build_veronese_code(field_for_order(q)));
    it = cache.emplace(q, exhaustive_betti_levels(M)).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("integer polynomial arithmetic") {
  IntPolynomial zm1{-1, 1};  // Z - 1
  IntPolynomial zp1{1, 1};
  CHECK((zm1 * zp1) == IntPolynomial{-1, 0, 1});
  CHECK(zm1.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK((zm1 + zp1) == IntPolynomial{0, 2});
  CHECK((zm1 - zm1).is_zero());

  IntPolynomial p{6, -21, 35, -35, 21, -7, 1};
  CHECK(p.eval(1) == 0);
  CHECK(p.eval(2) == 0);
  CHECK(p.eval(4) == 546);
  CHECK(p.coeff(6) == 1);
  CHECK(p.coeff(9) == 0);

  IntPolynomial s = zm1;
  s *= BigInt(21);
  CHECK(s == IntPolynomial{-21, 21});
  CHECK(s.str() == "21*Z - 21");
  CHECK(IntPolynomial{-1, 0, 1}.str() == "Z^2 - 1");
  CHECK(IntPolynomial{}.str() == "0");
  CHECK(IntPolynomial{5}.str("x") == "5");
}

TEST_CASE("weight polynomials of the binary code") {
  auto P = weight_polynomials(levels_for(2));
  REQUIRE(P.size() == 8);
  CHECK(P[0] == IntPolynomial{1});
  CHECK(P[1].is_zero());

  // Minimum-weight row: 21 supports, one word over F_2 apiece.
  CHECK(P[2] == IntPolynomial{-21, 21});

  // Full-support column, written out once by hand from the alternating sums.
  CHECK(P[7] == IntPolynomial{6, -21, 35, -35, 21, -7, 1});

  // Evaluation at Z = 2 gives the weight distribution of the code itself.
  const BigInt dist[8] = {1, 0, 21, 0, 35, 0, 7, 0};
  for (size_t w = 0; w < 8; ++w) {
    CAPTURE(w);
    CHECK(P[w].eval(2) == dist[w]);
    CHECK(P[w].eval(1) == (w == 0 ? 1 : 0));
  }

  // The P_w partition the message space of every scalar extension.
  IntPolynomial total;
  for (const auto& p : P) total += p;
  CHECK(total == IntPolynomial{0, 0, 0, 0, 0, 0, 1});  // Z^6
}

TEST_CASE("telescoped form agrees with the direct sum") {
  for (uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    auto direct = weight_polynomials(levels_for(q));
    auto tele = weight_polynomials_telescoped(levels_for(q));
    REQUIRE(direct.size() == tele.size());
    for (size_t w = 0; w < direct.size(); ++w) {
      CAPTURE(w);
      CHECK(direct[w] == tele[w]);
    }
  }
}

TEST_CASE("weight polynomials sum to the sixth power across orders") {
  for (uint32_t q : {2u, 3u}) {
    auto P = weight_polynomials(levels_for(q));
    IntPolynomial total;
    for (const auto& p : P) total += p;
    CHECK(total == IntPolynomial{0, 0, 0, 0, 0, 0, 1});
  }
  for (uint32_t q : {4u, 5u}) {
    auto P = weight_polynomials(structural_betti_tables(q));
    IntPolynomial total;
    for (const auto& p : P) total += p;
    CHECK(total == IntPolynomial{0, 0, 0, 0, 0, 0, 1});
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(6, 1, 2) == 63);
  CHECK(gaussian_binomial(6, 2, 3) == 11011);
  CHECK(gaussian_binomial(6, 3, 4) == 376805);
  CHECK(gaussian_binomial(6, 2, 4) == 93093);
  CHECK(gaussian_binomial(6, 0, 5) == 1);
  CHECK(gaussian_binomial(6, 6, 7) == 1);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  // Duality
  for (uint32_t r = 0; r <= 6; ++r) CHECK(gaussian_binomial(6, r, 3) == gaussian_binomial(6, 6 - r, 3));
}

TEST_CASE("subcode spectra at order four") {
  auto P = weight_polynomials(structural_betti_tables(4));
  auto A = subcode_spectra(P, 4, 6);
  REQUIRE(A.size() == 22);

  CHECK(A[0][0] == 1);
  CHECK(A[12][1] == 210);
  CHECK(A[16][1] == 1029);
  CHECK(A[16][2] == 105);
  CHECK(A[16][3] == 21);
  CHECK(A[17][2] == 2520);

  // Rank-r slices total the number of r-dimensional subcodes.
  for (uint32_t r = 0; r <= 6; ++r) {
    BigInt total = 0;
    for (size_t w = 0; w < A.size(); ++w) total += A[w][r];
    CHECK(total == gaussian_binomial(6, r, 4));
  }

  // Round trip through the monic product basis.
  auto back = weight_polynomials_from_spectra(A, 4);
  REQUIRE(back.size() == P.size());
  for (size_t w = 0; w < P.size(); ++w) CHECK(back[w] == P[w]);
}

TEST_CASE("subcode spectra at order five") {
  auto P = weight_polynomials(structural_betti_tables(5));
  auto A = subcode_spectra(P, 5, 6);
  CHECK(A[20][1] == 465);
  CHECK(A[25][1] == 3131);  // irreducible conics (3100) plus repeated lines (31)
  for (uint32_t r = 0; r <= 6; ++r) {
    BigInt total = 0;
    for (size_t w = 0; w < A.size(); ++w) {
      CHECK(A[w][r] >= 0);
      total += A[w][r];
    }
    CHECK(total == gaussian_binomial(6, r, 5));
  }
}

TEST_CASE("support-weight ladders from both sides") {
  using Ladder = std::vector<uint64_t>;
  auto check_both = [](const std::vector<BettiTable>& levels, uint32_t q, const Ladder& want) {
    auto P = weight_polynomials(levels);
    auto A = subcode_spectra(P, q, 6);
    CHECK(support_weight_ladder(levels) == want);
    CHECK(support_weight_ladder(A) == want);
  };
  check_both(levels_for(2), 2, Ladder{2, 3, 4, 5, 6, 7});
  check_both(levels_for(3), 3, Ladder{6, 8, 9, 11, 12, 13});
  check_both(structural_betti_tables(4), 4, Ladder{12, 15, 16, 19, 20, 21});
  check_both(structural_betti_tables(5), 5, Ladder{20, 24, 25, 29, 30, 31});
}

TEST_CASE("spectra reject non-counting inputs") {
  std::vector<IntPolynomial> neg{IntPolynomial{1, -1}};  // 1 - Z: negative top term
  CHECK_THROWS_AS(subcode_spectra(neg, 2, 6), std::runtime_error);
  std::vector<IntPolynomial> big{IntPolynomial{0, 0, 0, 1}};
  CHECK_THROWS_AS(subcode_spectra(big, 2, 2), std::invalid_argument);
}
