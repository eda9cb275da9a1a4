#include "veronese/betti.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace veronese {

BigInt BettiTable::at(uint32_t i, uint64_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? BigInt(0) : it->second;
}

BigInt BettiTable::phi(uint64_t w) const {
  BigInt acc = 0;
  for (const auto& [key, val] : entries) {
    if (key.second != w) continue;
    if (key.first & 1)
      acc -= val;
    else
      acc += val;
  }
  return acc;
}

uint32_t BettiTable::max_i() const {
  uint32_t m = 0;
  for (const auto& [key, val] : entries) m = std::max(m, key.first);
  return m;
}

BettiTable exhaustive_betti(const Matroid& M, uint64_t guard) {
  return exhaustive_betti_levels(M, guard).at(M.level());
}

std::vector<BettiTable> exhaustive_betti_levels(const Matroid& M, uint64_t guard) {
  const auto& prof = M.base_profile(guard);
  const size_t n = M.size();
  const uint64_t size = 1ull << n;
  const uint32_t lmax = prof[size - 1];  // nullity of the full ground set

  std::vector<BettiTable> out;
  std::vector<int32_t> f(size);
  for (uint32_t l = 0; l <= lmax; ++l) {
    // f starts as the signed indicator of independence in the level-l
    // elongation; the subset-sum pass turns f[sigma] into the reduced Euler
    // characteristic of the independence complex restricted to sigma.
    for (uint64_t mask = 0; mask < size; ++mask)
      f[mask] = prof[mask] <= l ? (Matroid::popcount(mask) & 1 ? -1 : 1) : 0;
    for (size_t d = 0; d < n; ++d) {
      const uint64_t bit = 1ull << d;
      for (uint64_t mask = bit; mask < size; ++mask)
        if (mask & bit) f[mask] += f[mask ^ bit];
    }

    BettiTable T;
    T.level = l;
    T.k_eff = lmax - l;
    T.n = n;
    for (uint64_t mask = 0; mask < size; ++mask) {
      int32_t chi = f[mask];
      if (chi == 0) continue;
      uint32_t nb = prof[mask];
      uint32_t i = nb > l ? nb - l : 0;
      if (i == 0 && mask != 0)
        throw std::logic_error("independent restriction with nonzero euler characteristic");
      T.entries[{i, Matroid::popcount(mask)}] += chi < 0 ? -chi : chi;
    }
    out.push_back(std::move(T));
  }
  return out;
}

std::vector<BigInt> hk_residuals(const BettiTable& T) {
  std::vector<BigInt> res(T.k_eff, BigInt(0));
  for (uint32_t s = 0; s < T.k_eff; ++s) {
    for (const auto& [key, val] : T.entries) {
      auto [i, j] = key;
      BigInt pw = (j == 0) ? BigInt(s == 0 ? 1 : 0) : ipow(BigInt(j), s);
      BigInt term = pw * val;
      if (i & 1)
        res[s] -= term;
      else
        res[s] += term;
    }
  }
  return res;
}

bool hk_consistent(const BettiTable& T) {
  for (const BigInt& r : hk_residuals(T))
    if (r != 0) return false;
  return true;
}

BigInt dz_local_check(uint32_t q) {
  if (q < 2) throw std::invalid_argument("order must be at least 2");
  const uint64_t top = uint64_t(q) * q - 1;  // the stratum's internal degree
  BigInt acc = 0;
  for (uint64_t z = uint64_t(q) * q - q; z < top; ++z) {
    BigInt term = BigInt(q + 1) * binomial(q - 1, static_cast<unsigned>(top - z));
    if (z & 1)
      acc -= term;
    else
      acc += term;
  }
  acc += (top & 1) ? BigInt(-1) : BigInt(1);
  return acc < 0 ? -acc : acc;
}

std::map<std::pair<uint32_t, uint64_t>, BigInt> hk_solve(const std::vector<HkStratum>& strata,
                                                         uint32_t k_eff) {
  std::vector<size_t> unknown;
  for (size_t t = 0; t < strata.size(); ++t)
    if (!strata[t].pinned) unknown.push_back(t);
  const size_t u = unknown.size();
  if (u > k_eff) throw std::runtime_error("more unknown strata than power-sum constraints");
  for (size_t a = 0; a < u; ++a)
    for (size_t b = a + 1; b < u; ++b)
      if (strata[unknown[a]].j == strata[unknown[b]].j)
        throw std::runtime_error("unknown strata must have distinct internal degrees");

  auto power = [](uint64_t j, uint32_t s) {
    return j == 0 ? BigInt(s == 0 ? 1 : 0) : ipow(BigInt(j), s);
  };
  auto sign_of = [](uint32_t i) { return (i & 1) ? -1 : 1; };

  // Augmented system over the rationals: rows are s = 0..k_eff-1, the last
  // column carries -[s==0] - (pinned contributions).
  std::vector<std::vector<BigRat>> a(k_eff, std::vector<BigRat>(u + 1, BigRat(0)));
  for (uint32_t s = 0; s < k_eff; ++s) {
    for (size_t c = 0; c < u; ++c) {
      const HkStratum& st = strata[unknown[c]];
      a[s][c] = BigRat(sign_of(st.i) * power(st.j, s));
    }
    BigInt rhs = (s == 0) ? BigInt(-1) : BigInt(0);
    for (const HkStratum& st : strata)
      if (st.pinned) rhs -= sign_of(st.i) * power(st.j, s) * *st.pinned;
    a[s][u] = BigRat(rhs);
  }

  // Gauss-Jordan with exact pivots.
  size_t row = 0;
  std::vector<size_t> pivot_row(u);
  for (size_t col = 0; col < u; ++col) {
    size_t p = row;
    while (p < k_eff && a[p][col] == 0) ++p;
    if (p == k_eff) throw std::runtime_error("underdetermined power-sum system");
    std::swap(a[p], a[row]);
    BigRat inv = a[row][col];
    for (size_t c = col; c <= u; ++c) a[row][c] /= inv;
    for (size_t r = 0; r < k_eff; ++r) {
      if (r == row || a[r][col] == 0) continue;
      BigRat factor = a[r][col];
      for (size_t c = col; c <= u; ++c) a[r][c] -= factor * a[row][c];
    }
    pivot_row[col] = row++;
  }
  // Rows beyond the pivots must have vanished entirely (overdetermined case).
  for (size_t r = row; r < k_eff; ++r)
    if (a[r][u] != 0) throw std::runtime_error("inconsistent power-sum system");

  std::map<std::pair<uint32_t, uint64_t>, BigInt> result;
  result[{0, 0}] = 1;
  for (const HkStratum& st : strata)
    if (st.pinned) {
      if (!result.emplace(std::pair{st.i, st.j}, *st.pinned).second)
        throw std::runtime_error("duplicate stratum");
    }
  for (size_t c = 0; c < u; ++c) {
    const BigRat& x = a[pivot_row[c]][u];
    if (boost::multiprecision::denominator(x) != 1)
      throw std::runtime_error("stratum solved to a non-integer");
    BigInt v = boost::multiprecision::numerator(x);
    if (v <= 0) throw std::runtime_error("stratum solved to a non-positive value");
    const HkStratum& st = strata[unknown[c]];
    if (!result.emplace(std::pair{st.i, st.j}, v).second)
      throw std::runtime_error("duplicate stratum");
  }

  // Re-verify every constraint on the assembled table.
  for (uint32_t s = 0; s < k_eff; ++s) {
    BigInt acc = 0;
    for (const auto& [key, val] : result)
      acc += sign_of(key.first) * power(key.second, s) * val;
    if (acc != 0) throw std::runtime_error("power-sum verification failed");
  }
  return result;
}

std::vector<BettiTable> structural_betti_tables(uint32_t q) {
  if (q < 4)
    throw std::invalid_argument(
        "structural tables need q >= 4 (smaller orders have degenerate strata)");
  const BigInt Q = q;
  const BigInt npts = Q * Q + Q + 1;
  const uint64_t sq = uint64_t(q) * q;
  const uint64_t n = sq + q + 1;

  // Configuration counts in the projective plane of order q.
  const BigInt line_pairs = exact_div(Q * (Q + 1) * npts, 2);
  const BigInt irreducible = ipow(Q, 5) - Q * Q;
  const BigInt line_point = Q * Q * npts;
  const BigInt quadrilaterals = exact_div(npts * Q * Q * (Q * Q + Q) * (Q - 1) * (Q - 1), 24);
  const BigInt triangles = exact_div(npts * Q * Q * (Q * Q + Q), 6);
  const BigInt point_pairs = exact_div(npts * (npts - 1), 2);

  const BigInt dz = dz_local_check(q);

  std::vector<std::vector<HkStratum>> strata(7);
  strata[0] = {{1, sq - q, line_pairs},
               {1, sq, irreducible},
               {2, sq - 1, dz * line_point},
               {2, sq + q - 3, std::nullopt},
               {3, sq, std::nullopt},
               {3, sq + q - 2, std::nullopt},
               {4, sq + q - 1, std::nullopt},
               {5, sq + q, std::nullopt},
               {6, sq + q + 1, std::nullopt}};
  strata[1] = {{1, sq - 1, line_point},
               {1, sq + q - 3, quadrilaterals},
               {2, sq, std::nullopt},
               {2, sq + q - 2, std::nullopt},
               {3, sq + q - 1, std::nullopt},
               {4, sq + q, std::nullopt},
               {5, sq + q + 1, std::nullopt}};
  strata[2] = {{1, sq, npts},
               {1, sq + q - 2, triangles},
               {2, sq + q - 1, std::nullopt},
               {3, sq + q, std::nullopt},
               {4, sq + q + 1, std::nullopt}};
  strata[3] = {{1, sq + q - 1, point_pairs},
               {2, sq + q, std::nullopt},
               {3, sq + q + 1, std::nullopt}};
  strata[4] = {{1, sq + q, npts}, {2, sq + q + 1, std::nullopt}};
  strata[5] = {{1, sq + q + 1, std::nullopt}};
  strata[6] = {};

  std::vector<BettiTable> out;
  for (uint32_t l = 0; l <= 6; ++l) {
    BettiTable T;
    T.level = l;
    T.k_eff = 6 - l;
    T.n = n;
    T.entries = hk_solve(strata[l], T.k_eff);
    out.push_back(std::move(T));
  }
  return out;
}

}  // namespace veronese
