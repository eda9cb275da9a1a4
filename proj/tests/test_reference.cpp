#include "veronese/reference.hpp"

#include "doctest.h"

#include <map>

#include "veronese/betti.hpp"
#include "veronese/code.hpp"
#include "veronese/field.hpp"
#include "veronese/matroid.hpp"
#include "veronese/plane.hpp"
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

const Plane& plane_for(uint32_t q) {
  static std::map<uint32_t, Plane> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_plane(field_for_order(q))).first;
  return it->second;
}

const Matroid& matroid_for(uint32_t q) {
  static std::map<uint32_t, Matroid> cache;
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, Matroid::parity_check(build_veronese_code(plane_for(q)))).first;
  return it->second;
}

}  // namespace

TEST_CASE("closed-form conic census and configuration counts") {
  CHECK(reference_conic_census(2) == ConicCensus{7, 21, 28, 7});
  CHECK(reference_conic_census(3) == ConicCensus{13, 78, 234, 39});
  CHECK(reference_conic_census(4) == ConicCensus{21, 210, 1008, 126});
  CHECK(reference_conic_census(5) == ConicCensus{31, 465, 3100, 310});
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    ConicCensus c = reference_conic_census(q);
    // Total = number of conic classes = (q^6 - 1)/(q - 1).
    BigInt classes = exact_div(ipow(q, 6) - 1, BigInt(q) - 1);
    CHECK(BigInt(c.total()) == classes);
  }

  for (uint32_t q : {2u, 3u, 4u}) {
    const Plane& P = plane_for(q);
    CHECK(reference_conic_census(q) == conic_census(P));
    CHECK(reference_configuration_counts(q) == count_configurations(P));
  }
  CHECK(reference_configuration_counts(4) ==
        ConfigurationCounts{21, 210, 1120, 2520, 21, 336});
}

TEST_CASE("closed-form Betti tables match both computational routes at q=4") {
  auto ref = reference_betti_tables(4);
  auto structural = structural_betti_tables(4);
  auto exhaustive = exhaustive_betti_levels(matroid_for(4));
  REQUIRE(ref.size() == 7);
  REQUIRE(structural.size() == 7);
  REQUIRE(exhaustive.size() == 7);
  for (size_t l = 0; l < 7; ++l) {
    CAPTURE(l);
    CHECK(ref[l] == structural[l]);
    CHECK(ref[l] == exhaustive[l]);
  }
}

TEST_CASE("closed-form Betti tables match the structural route for larger q") {
  for (uint32_t q : {5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    auto ref = reference_betti_tables(q);
    auto structural = structural_betti_tables(q);
    REQUIRE(ref.size() == structural.size());
    for (size_t l = 0; l < ref.size(); ++l) {
      CAPTURE(l);
      CHECK(ref[l] == structural[l]);
    }
  }
}

TEST_CASE("closed-form tables satisfy the rank/degree linear constraints") {
  for (uint32_t q : {4u, 5u, 7u, 9u}) {
    CAPTURE(q);
    for (const auto& t : reference_betti_tables(q)) CHECK(hk_consistent(t));
  }
}

TEST_CASE("closed-form weight polynomials match the resolution pipeline") {
  for (uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    auto ref = reference_weight_polynomials(q);
    auto engine = weight_polynomials(structural_betti_tables(q));
    REQUIRE(ref.size() == engine.size());
    for (size_t w = 0; w < ref.size(); ++w) {
      CAPTURE(w);
      CHECK(ref[w] == engine[w]);
    }
  }
}

TEST_CASE("closed-form weight polynomials: structural identities") {
  for (uint32_t q : {4u, 5u, 11u, 13u, 16u}) {
    CAPTURE(q);
    auto P = reference_weight_polynomials(q);
    // Exactly nine nonzero entries.
    size_t nonzero = 0;
    for (const auto& p : P)
      if (!p.is_zero()) ++nonzero;
    CHECK(nonzero == 9);
    // They sum to Z^6, and each vanishes at Z=1 (w >= 1).
    IntPolynomial sum;
    for (const auto& p : P) sum += p;
    IntPolynomial z6{0, 0, 0, 0, 0, 0, 1};
    CHECK(sum == z6);
    for (size_t w = 1; w < P.size(); ++w) CHECK(P[w].eval(1) == 0);
    // Words over the base field live only at the three base weights.
    const uint64_t Q = q;
    for (size_t w = 1; w < P.size(); ++w) {
      BigInt at_q = P[w].eval(q);
      if (w == Q * Q - Q || w == Q * Q || w == Q * Q + Q)
        CHECK(at_q > 0);
      else
        CHECK(at_q == 0);
    }
  }
}

TEST_CASE("closed-form spectra match the full pipeline for q >= 4") {
  for (uint32_t q : {4u, 5u, 7u}) {
    CAPTURE(q);
    auto P = weight_polynomials(structural_betti_tables(q));
    auto engine = subcode_spectra(P, q, 6);
    auto ref = reference_spectra(q);
    REQUIRE(engine.size() == ref.size());
    for (size_t w = 0; w < ref.size(); ++w) {
      CAPTURE(w);
      REQUIRE(engine[w].size() == 7);
      for (size_t r = 0; r < 7; ++r) {
        CAPTURE(r);
        CHECK(engine[w][r] == ref[w][r]);
      }
    }
  }
}

TEST_CASE("literal spectra tables match the exhaustive pipeline at q=2,3") {
  for (uint32_t q : {2u, 3u}) {
    CAPTURE(q);
    auto levels = exhaustive_betti_levels(matroid_for(q));
    auto engine = subcode_spectra(weight_polynomials(levels), q, 6);
    auto ref = reference_spectra(q);
    REQUIRE(engine.size() == ref.size());
    for (size_t w = 0; w < ref.size(); ++w) {
      CAPTURE(w);
      for (size_t r = 0; r < 7; ++r) {
        CAPTURE(r);
        CHECK(engine[w][r] == ref[w][r]);
      }
    }
  }
}

TEST_CASE("spectra row sums count all subcodes of each dimension") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(q);
    auto ref = reference_spectra(q);
    for (uint32_t r = 0; r <= 6; ++r) {
      BigInt sum = 0;
      for (const auto& row : ref) sum += row[r];
      CHECK(sum == gaussian_binomial(6, r, q));
    }
  }
}

TEST_CASE("closed forms stay integral across small prime powers") {
  for (uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    CHECK_NOTHROW(reference_betti_tables(q));
    CHECK_NOTHROW(reference_weight_polynomials(q));
    CHECK_NOTHROW(reference_spectra(q));
    for (const auto& row : reference_spectra(q))
      for (const auto& v : row) CHECK(v >= 0);
  }
}

TEST_CASE("support-weight ladder") {
  CHECK(reference_support_weight_ladder(2) ==
        std::vector<uint64_t>{2, 3, 4, 5, 6, 7});
  CHECK(reference_support_weight_ladder(3) ==
        std::vector<uint64_t>{6, 8, 9, 11, 12, 13});
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    auto ladder = reference_support_weight_ladder(q);
    CHECK(ladder == support_weight_ladder(reference_spectra(q)));
    if (q >= 4)
      CHECK(ladder == support_weight_ladder(reference_betti_tables(q)));
  }
  CHECK(reference_support_weight_ladder(4) ==
        support_weight_ladder(exhaustive_betti_levels(matroid_for(4))));
}

TEST_CASE("closed forms reject out-of-range q") {
  CHECK_THROWS_AS(reference_betti_tables(3), std::invalid_argument);
  CHECK_THROWS_AS(reference_betti_tables(2), std::invalid_argument);
  CHECK_THROWS_AS(reference_weight_polynomials(3), std::invalid_argument);
  CHECK_THROWS_AS(reference_support_weight_ladder(1), std::invalid_argument);
}
