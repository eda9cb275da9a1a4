#include "veronese/oracle.hpp"

#include <map>

#include "doctest.h"
#include "veronese/betti.hpp"
#include "veronese/code.hpp"
#include "veronese/field.hpp"
#include "veronese/matroid.hpp"
#include "veronese/plane.hpp"
#include "veronese/reference.hpp"
#include "veronese/weights.hpp"

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

const LinearCode& code_for(uint32_t q) {
  static std::map<uint32_t, LinearCode> cache;
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, build_veronese_code(build_plane(field_for_order(q)))).first;
  return it->second;
}

// Independent expected word counts: P_w evaluated at the extension size,
// with the polynomials produced by the resolution pipeline (the exhaustive
// route where the lattice is small enough, the structural route beyond).
std::vector<IntPolynomial> pipeline_polynomials(uint32_t q) {
  if (q >= 5) return weight_polynomials(structural_betti_tables(q));
  Matroid M = Matroid::parity_check(code_for(q));
  return weight_polynomials(exhaustive_betti_levels(M));
}

}  // namespace

TEST_CASE("word scan: binary base code") {
  auto dist = word_weight_distribution(code_for(2));
  std::vector<BigInt> expect(8, 0);
  expect[0] = 1;
  expect[2] = 21;
  expect[4] = 35;
  expect[6] = 7;
  CHECK(dist == expect);
}

TEST_CASE("word scan matches weight polynomials on scalar extensions") {
  struct Probe {
    uint32_t q;
    uint32_t m;
  };
  for (Probe pr : {Probe{2, 1}, Probe{2, 2}, Probe{2, 3}, Probe{3, 1}, Probe{3, 2},
                   Probe{4, 1}, Probe{5, 1}}) {
    CAPTURE(pr.q);
    CAPTURE(pr.m);
    auto P = pipeline_polynomials(pr.q);
    LinearCode ext = extend_scalars(code_for(pr.q), pr.m);
    BigInt Z = ipow(pr.q, pr.m);
    auto dist = word_weight_distribution(ext);
    REQUIRE(dist.size() == P.size());
    BigInt sum = 0;
    for (size_t w = 0; w < dist.size(); ++w) {
      CAPTURE(w);
      CHECK(dist[w] == P[w].eval(Z));
      sum += dist[w];
    }
    CHECK(sum == ipow(Z, 6));
  }
}

TEST_CASE("word scan: specific extension counts") {
  // Weight-6 words over the quadratic extension of the ternary code:
  // 78 minimal-support classes, each contributing |F_9*| words.
  LinearCode ext = extend_scalars(code_for(3), 2);
  auto dist = word_weight_distribution(ext);
  CHECK(dist[6] == 624);
  // Base quaternary code: 3 * 210 weight-12 words.
  CHECK(word_weight_distribution(code_for(4))[12] == 630);
}

TEST_CASE("word scan handles dependent generator rows") {
  // Two equal rows: the row space is one-dimensional, and the scan must not
  // double-count it.
  LinearCode C;
  C.field = field_for_order(2);
  C.k = 2;
  C.n = 7;
  C.gen = {1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0};
  auto dist = word_weight_distribution(C);
  std::vector<BigInt> expect(8, 0);
  expect[0] = 1;
  expect[2] = 1;
  CHECK(dist == expect);
}

TEST_CASE("subcode scan reproduces the published tables at q=2,3") {
  for (uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    auto A = subcode_support_spectra(code_for(q), 6);
    auto ref = reference_spectra(q);
    REQUIRE(A.size() == ref.size());
    for (size_t w = 0; w < A.size(); ++w) {
      CAPTURE(w);
      for (size_t r = 0; r <= 6; ++r) {
        CAPTURE(r);
        CHECK(A[w][r] == ref[w][r]);
      }
    }
  }
}

TEST_CASE("subcode scan: totals and spot checks at q=4") {
  const LinearCode& C = code_for(4);
  auto ref = reference_spectra(4);

  auto d1 = subcode_support_distribution(C, 1);
  BigInt t1 = 0;
  for (size_t w = 0; w <= C.n; ++w) {
    CAPTURE(w);
    CHECK(d1[w] == ref[w][1]);
    t1 += d1[w];
  }
  CHECK(t1 == gaussian_binomial(6, 1, 4));
  CHECK(d1[16] == 1029);

  auto d2 = subcode_support_distribution(C, 2);
  BigInt t2 = 0;
  for (size_t w = 0; w <= C.n; ++w) {
    CAPTURE(w);
    CHECK(d2[w] == ref[w][2]);
    t2 += d2[w];
  }
  CHECK(t2 == gaussian_binomial(6, 2, 4));
  CHECK(t2 == 93093);
  CHECK(d2[17] == 2520);

  auto d6 = subcode_support_distribution(C, 6);
  CHECK(d6[21] == 1);

  auto d0 = subcode_support_distribution(C, 0);
  CHECK(d0[0] == 1);
}

TEST_CASE("subcode scan: dimension above k yields nothing") {
  LinearCode C;
  C.field = field_for_order(2);
  C.k = 2;
  C.n = 3;
  C.gen = {1, 0, 1, 0, 1, 1};
  auto d = subcode_support_distribution(C, 3);
  for (const auto& v : d) CHECK(v == 0);
}

TEST_CASE("subcode scan rejects rank-deficient generators") {
  LinearCode C;
  C.field = field_for_order(2);
  C.k = 2;
  C.n = 7;
  C.gen = {1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(subcode_support_distribution(C, 1), std::invalid_argument);
}

TEST_CASE("guards turn oversized scans into infeasibility errors") {
  // 27^6 messages is far beyond the default word guard.
  LinearCode ext = extend_scalars(code_for(3), 3);
  CHECK_THROWS_AS(word_weight_distribution(ext), GuardExceeded);
  // Rank-3 subcodes over F_5 exceed the default subcode guard.
  CHECK_THROWS_AS(subcode_support_distribution(code_for(5), 3), GuardExceeded);
  // Custom guards bite too.
  CHECK_THROWS_AS(word_weight_distribution(code_for(2), 1, 63), GuardExceeded);
  CHECK_NOTHROW(word_weight_distribution(code_for(2), 1, 64));
}

TEST_CASE("scans are deterministic across thread counts") {
  for (unsigned threads : {1u, 2u, 5u}) {
    CAPTURE(threads);
    CHECK(word_weight_distribution(code_for(3), threads) ==
          word_weight_distribution(code_for(3), 1));
    CHECK(subcode_support_distribution(code_for(3), 2, threads) ==
          subcode_support_distribution(code_for(3), 2, 1));
  }
}
