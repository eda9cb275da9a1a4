#include "veronese/matroid.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "veronese/code.hpp"
#include "veronese/field.hpp"
#include "veronese/plane.hpp"

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

const LinearCode& code_for(uint32_t q) {
  static std::map<uint32_t, LinearCode> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_veronese_code(plane_for(q))).first;
  return it->second;
}

// One matroid per q so the whole-lattice profile is computed once per run.
const Matroid& matroid_for(uint32_t q) {
  static std::map<uint32_t, Matroid> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, Matroid::parity_check(code_for(q))).first;
  return it->second;
}

uint64_t mask_of(const std::vector<uint16_t>& pts) {
  uint64_t m = 0;
  for (uint16_t p : pts) m |= 1ull << p;
  return m;
}

uint64_t line_mask(const Plane& P, size_t l) { return mask_of(P.line_points[l]); }

// Complement of the union of the given point masks.
uint64_t complement(const Plane& P, uint64_t covered) {
  uint64_t full = (1ull << P.n_points()) - 1;
  return full & ~covered;
}

// A point not on line 0.
uint16_t off_line_point(const Plane& P, size_t l) {
  for (uint16_t p = 0; p < P.n_points(); ++p)
    if (!P.on(l, p)) return p;
  FAIL("no point off the line");
  return 0;
}

}  // namespace

TEST_CASE("binary parity-check matroid is the rank-one uniform matroid") {
  const Matroid& M = matroid_for(2);
  CHECK(M.size() == 7);
  CHECK(M.level() == 0);
  CHECK(M.rank() == 1);
  CHECK(M.nullity(M.full_mask()) == 6);
  CHECK(M.nullity(0) == 0);
  for (size_t i = 0; i < 7; ++i) CHECK(M.nullity(1ull << i) == 0);
  for (size_t i = 0; i < 7; ++i)
    for (size_t j = i + 1; j < 7; ++j) CHECK(M.nullity((1ull << i) | (1ull << j)) == 1);

  // Every j-subset has nullity max(0, j-1).
  NullityProfile prof = nullity_profile(M);
  CHECK(prof.n == 7);
  uint64_t total = 0;
  for (const auto& [key, cnt] : prof.counts) {
    auto [card, nul] = key;
    CHECK(nul == (card == 0 ? 0u : card - 1));
    CHECK(BigInt(cnt) == binomial(7, card));
    total += cnt;
  }
  CHECK(total == 128);
}

TEST_CASE("minimal nullity sets of the uniform matroid are all (i+1)-subsets") {
  const Matroid& M = matroid_for(2);
  const uint64_t expected_local[7] = {0, 21, 70, 105, 84, 35, 6};  // i * C(7, i+1)
  for (uint32_t i = 1; i <= 6; ++i) {
    CycleFamily fam = cycles(M, i);
    REQUIRE(fam.census.size() == 1);
    CHECK(fam.census.at(i + 1) == static_cast<uint64_t>(binomial(7, i + 1)));
    uint64_t acc = 0;
    for (uint64_t s : fam.sets) {
      CHECK(Matroid::popcount(s) == i + 1);
      acc += local_betti(M, s);
    }
    CHECK(acc == expected_local[i]);
  }
  CHECK_THROWS_AS(cycles(M, 0), std::invalid_argument);
  CHECK_THROWS_AS(cycles(M, 7), std::invalid_argument);
}

TEST_CASE("nullity of geometric subsets at order four") {
  const Plane& P = plane_for(4);
  const Matroid& M = matroid_for(4);
  CHECK(M.size() == 21);
  CHECK(M.rank() == 15);
  CHECK(M.nullity(M.full_mask()) == 6);

  uint64_t two_lines = complement(P, line_mask(P, 0) | line_mask(P, 1));
  CHECK(Matroid::popcount(two_lines) == 12);
  CHECK(M.nullity(two_lines) == 1);

  auto conics = irreducible_conic_point_sets(P);
  REQUIRE(!conics.empty());
  uint64_t conic_comp = complement(P, mask_of(conics[0]));
  CHECK(Matroid::popcount(conic_comp) == 16);
  CHECK(M.nullity(conic_comp) == 1);

  uint64_t one_line = complement(P, line_mask(P, 0));
  CHECK(M.nullity(one_line) == 3);

  uint16_t off = off_line_point(P, 0);
  uint64_t line_point = complement(P, line_mask(P, 0) | (1ull << off));
  CHECK(Matroid::popcount(line_point) == 15);
  CHECK(M.nullity(line_point) == 2);

  // Four points of an irreducible conic: no three collinear.
  uint64_t four = (1ull << conics[0][0]) | (1ull << conics[0][1]) | (1ull << conics[0][2]) |
                  (1ull << conics[0][3]);
  CHECK(M.nullity(complement(P, four)) == 2);

  uint64_t pair = (1ull << 0) | (1ull << 1);
  CHECK(M.nullity(complement(P, pair)) == 4);
  CHECK(M.nullity(complement(P, 1ull << 0)) == 5);
}

TEST_CASE("elongation shifts nullity and respects the rank bound") {
  const Plane& P = plane_for(4);
  const Matroid& M = matroid_for(4);
  Matroid M1 = M.elongated(1);
  CHECK(M1.level() == 1);
  CHECK(M1.rank() == 16);
  CHECK(M1.nullity(M1.full_mask()) == 5);

  uint64_t two_lines = complement(P, line_mask(P, 0) | line_mask(P, 1));
  CHECK(M1.nullity(two_lines) == 0);
  CHECK(M1.base_nullity(two_lines) == 1);

  Matroid M6 = M.elongated(6);
  CHECK(M6.rank() == 21);
  CHECK(M6.nullity(M6.full_mask()) == 0);
  CHECK_THROWS_AS(M.elongated(7), std::invalid_argument);
  CHECK_THROWS_AS(M1.elongated(6), std::invalid_argument);
}

TEST_CASE("euler characteristics of small independence complexes") {
  const Matroid& M2 = matroid_for(2);
  CHECK(euler_characteristic(M2, 0) == 1);          // empty complex: just the empty face
  CHECK(euler_characteristic(M2, 1ull << 3) == 0);  // a simplex
  CHECK(euler_characteristic(M2, 0b101) == -1);     // a circuit
  for (uint64_t s : {0b0000111ull, 0b0101010ull, 0b1100001ull})
    CHECK(euler_characteristic(M2, s) == -2);  // 3-subsets
  CHECK(euler_characteristic(M2, M2.full_mask()) == -6);

  const Plane& P = plane_for(4);
  const Matroid& M4 = matroid_for(4);
  uint64_t two_lines = complement(P, line_mask(P, 0) | line_mask(P, 1));
  CHECK(local_betti(M4, two_lines) == 1);  // circuits always contribute 1

  auto conics = irreducible_conic_point_sets(P);
  CHECK(local_betti(M4, complement(P, mask_of(conics[0]))) == 1);

  uint16_t off = off_line_point(P, 0);
  uint64_t line_point = complement(P, line_mask(P, 0) | (1ull << off));
  CHECK(local_betti(M4, line_point) == 4);

  uint64_t indep = 0b11111;  // any 5 columns: nullity 0, complex is a simplex
  REQUIRE(M4.nullity(indep) == 0);
  CHECK(euler_characteristic(M4, indep) == 0);
}

TEST_CASE("parity-check and explicit null-space realizations agree") {
  for (uint32_t q : {2u, 3u, 4u}) {
    CAPTURE(q);
    const LinearCode& C = code_for(q);
    const Matroid& Mp = matroid_for(q);

    auto H = null_space(C);
    std::vector<uint32_t> flat;
    for (const auto& row : H) flat.insert(flat.end(), row.begin(), row.end());
    Matroid Mc = Matroid::from_columns(C.field, H.size(), C.n, flat);

    CHECK(Mc.size() == Mp.size());
    CHECK(Mc.rank() == Mp.rank());
    CHECK(Mc.nullity(Mc.full_mask()) == Mp.nullity(Mp.full_mask()));

    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 1000; ++t) {
      uint64_t mask = rng() & Mp.full_mask();
      CAPTURE(mask);
      CHECK(Mc.nullity(mask) == Mp.nullity(mask));
      CHECK(Mc.rank_of(mask) == Mp.rank_of(mask));
    }
  }
}

TEST_CASE("rank function satisfies the matroid axioms") {
  const Matroid& M = matroid_for(3);
  std::mt19937_64 rng(0x1234abcd);
  for (int t = 0; t < 300; ++t) {
    uint64_t a = rng() & M.full_mask();
    uint64_t b = rng() & M.full_mask();
    uint32_t ra = M.rank_of(a), rb = M.rank_of(b);
    CHECK(ra <= Matroid::popcount(a));
    CHECK(ra <= M.rank_of(a | b));                          // monotone
    CHECK(M.rank_of(a | b) + M.rank_of(a & b) <= ra + rb);  // submodular
  }
  CHECK(M.rank_of(0) == 0);
}

TEST_CASE("cycle censuses across nullity levels at order four") {
  const Plane& P = plane_for(4);
  const Matroid& M = matroid_for(4);
  using Census = std::map<size_t, uint64_t>;

  CHECK(cycles(M, 1).census == Census{{12, 210}, {16, 1008}});
  CHECK(cycles(M, 2).census == Census{{15, 336}, {17, 2520}});
  CHECK(cycles(M, 3).census == Census{{16, 21}, {18, 1120}});
  CHECK(cycles(M, 4).census == Census{{19, 210}});
  CHECK(cycles(M, 5).census == Census{{20, 21}});
  CHECK(cycles(M, 6).census == Census{{21, 1}});

  CycleFamily fam = cycles(M, 1);
  CHECK(std::is_sorted(fam.sets.begin(), fam.sets.end()));
  uint64_t two_lines = complement(P, line_mask(P, 0) | line_mask(P, 1));
  CHECK(std::binary_search(fam.sets.begin(), fam.sets.end(), two_lines));

  // Minimal sets of the elongation match the shifted family of the base.
  CHECK(cycles(M.elongated(3), 1).sets == cycles(M, 4).sets);
}

TEST_CASE("ternary conic complements drop out of the circuit list") {
  const Plane& P = plane_for(3);
  const Matroid& M = matroid_for(3);
  using Census = std::map<size_t, uint64_t>;

  // Over F_3 an irreducible conic has only 4 points, which impose just 4
  // conditions, so its complement has nullity 2 and properly contains
  // two-line complements: the circuits are the 78 sets of size 6 alone.
  CHECK(cycles(M, 1).census == Census{{6, 78}});
  CHECK(cycles(M, 2).census == Census{{8, 117}, {9, 234}});
  CHECK(cycles(M, 3).census == Census{{9, 13}, {10, 234}});

  auto conics = irreducible_conic_point_sets(P);
  REQUIRE(!conics.empty());
  uint64_t conic_comp = complement(P, mask_of(conics[0]));
  CHECK(Matroid::popcount(conic_comp) == 9);
  CHECK(M.nullity(conic_comp) == 2);

  CycleFamily circuits = cycles(M, 1);
  bool contains_circuit = false;
  for (uint64_t c : circuits.sets)
    if ((c & conic_comp) == c && c != conic_comp) contains_circuit = true;
  CHECK(contains_circuit);
}

TEST_CASE("elongated minimal sets match a brute-force subset scan") {
  const Matroid& M = matroid_for(3);
  Matroid Mel = M.elongated(2);
  CycleFamily fam = cycles(Mel, 1);

  std::vector<uint64_t> brute;
  for (uint64_t mask = 1; mask <= Mel.full_mask(); ++mask) {
    if (Mel.nullity(mask) != 1) continue;
    bool minimal = true;
    for (uint64_t rest = mask; rest;) {
      uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (Mel.nullity(mask ^ bit) != 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) brute.push_back(mask);
  }
  CHECK(fam.sets == brute);
  CHECK(fam.sets == cycles(M, 3).sets);
}

TEST_CASE("whole-lattice scans refuse oversized ground sets") {
  Matroid M5 = Matroid::parity_check(build_veronese_code(field_for_order(5)));
  CHECK(M5.size() == 31);
  CHECK(M5.nullity(M5.full_mask()) == 6);  // subset queries stay available
  CHECK_THROWS_AS(M5.base_profile(), GuardExceeded);
  CHECK_THROWS_AS(cycles(M5, 1), GuardExceeded);
  CHECK_THROWS_AS(nullity_profile(M5), GuardExceeded);
  CHECK_THROWS_AS(M5.base_profile(64), GuardExceeded);  // hard cap stays in force

  Matroid fresh4 = Matroid::parity_check(code_for(4));
  CHECK_THROWS_AS(nullity_profile(fresh4, 20), GuardExceeded);

  // A profile that is already cached costs nothing to return, so the guard
  // only gates computation.
  const Matroid& M4 = matroid_for(4);
  (void)M4.base_profile();  // cached by earlier cases
  CHECK(nullity_profile(M4, 20).counts.at({0, 0}) == 1);
}

TEST_CASE("nullity profile summary counts at order three") {
  const Matroid& M = matroid_for(3);
  NullityProfile prof = nullity_profile(M);
  CHECK(prof.counts.at({0, 0}) == 1);
  CHECK(prof.counts.at({13, 6}) == 1);
  CHECK(prof.counts.at({6, 1}) == 78);  // minimum-weight supports
  std::map<uint32_t, uint64_t> per_card;
  uint64_t total = 0;
  for (const auto& [key, cnt] : prof.counts) {
    per_card[key.first] += cnt;
    total += cnt;
  }
  CHECK(total == (1ull << 13));
  for (const auto& [card, cnt] : per_card) CHECK(BigInt(cnt) == binomial(13, card));
}

TEST_CASE("restrictions answer subset queries and reject outsiders") {
  const Plane& P = plane_for(3);
  const Matroid& M = matroid_for(3);
  uint64_t ground = complement(P, line_mask(P, 0));
  MatroidRestriction R = restrict(M, ground);
  CHECK(R.size() == 9);
  CHECK(R.nullity(ground) == M.nullity(ground));
  uint64_t inside = ground & (ground - 1);  // drop lowest element
  CHECK(R.rank_of(inside) == M.rank_of(inside));
  uint64_t outsider = line_mask(P, 0) & (~line_mask(P, 0) + 1);
  CHECK_THROWS_AS(R.nullity(outsider), std::invalid_argument);
  CHECK_THROWS_AS(restrict(M, 1ull << 60), std::invalid_argument);
}
