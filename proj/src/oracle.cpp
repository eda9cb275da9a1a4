#include "veronese/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "veronese/parallel.hpp"
#include "veronese/weights.hpp"

namespace veronese {
namespace {

// Row basis of the generator's row space by Gaussian elimination.
std::vector<std::vector<uint32_t>> row_basis(const LinearCode& C) {
  const Field& F = *C.field;
  std::vector<std::vector<uint32_t>> basis;
  std::vector<size_t> pivot_col;
  for (size_t r = 0; r < C.k; ++r) {
    std::vector<uint32_t> row(C.n);
    for (size_t c = 0; c < C.n; ++c) row[c] = C.at(r, c);
    // Reduce against existing pivots.
    for (size_t b = 0; b < basis.size(); ++b) {
      uint32_t v = row[pivot_col[b]];
      if (v == 0) continue;
      for (size_t c = 0; c < C.n; ++c)
        row[c] = F.sub(row[c], F.mul(v, basis[b][c]));
    }
    auto nz = std::find_if(row.begin(), row.end(), [](uint32_t v) { return v != 0; });
    if (nz == row.end()) continue;
    size_t pc = size_t(nz - row.begin());
    uint32_t inv = F.inv(row[pc]);
    for (size_t c = 0; c < C.n; ++c) row[c] = F.mul(inv, row[c]);
    basis.push_back(std::move(row));
    pivot_col.push_back(pc);
  }
  return basis;
}

uint64_t checked_total(const BigInt& total, uint64_t guard, const char* what) {
  if (total > guard)
    throw GuardExceeded(std::string(what) + ": " + total.str() +
                        " items exceed the guard of " + std::to_string(guard));
  return total.convert_to<uint64_t>();
}

}  // namespace

std::vector<BigInt> word_weight_distribution(const LinearCode& C, unsigned threads,
                                             uint64_t guard) {
  const Field& F = *C.field;
  const uint64_t q = F.cardinality();
  const size_t n = C.n;
  const auto basis = row_basis(C);
  const uint32_t r = uint32_t(basis.size());
  const uint64_t total = checked_total(ipow(q, r), guard, "word scan");

  size_t nchunks = effective_threads(threads);
  if (total && total < nchunks) nchunks = size_t(total);
  std::vector<std::vector<uint64_t>> local(nchunks, std::vector<uint64_t>(n + 1, 0));

  // Per-digit step deltas: bumping digit i from a to a+1 (mod q, in
  // encoding order) changes the word by ((a+1) - a) * basis[i], a vector
  // that depends on a because encodings are not integer multiples of 1.
  std::vector<std::vector<std::vector<uint32_t>>> dstep(
      r, std::vector<std::vector<uint32_t>>(q, std::vector<uint32_t>(n)));
  for (uint32_t i = 0; i < r; ++i)
    for (uint64_t a = 0; a < q; ++a) {
      uint32_t next = uint32_t((a + 1) % q);
      for (size_t c = 0; c < n; ++c)
        dstep[i][a][c] = F.sub(F.mul(next, basis[i][c]), F.mul(uint32_t(a), basis[i][c]));
    }

  const uint8_t* addt = F.raw_add();
  parallel_chunks(total, threads, [&](unsigned chunk, uint64_t begin, uint64_t end) {
    std::vector<uint64_t>& dist = local[chunk];
    // Start state: decode `begin` as base-q digits and form the word.
    std::vector<uint32_t> digits(r, 0);
    std::vector<uint32_t> cur(n, 0);
    {
      uint64_t s = begin;
      for (uint32_t i = 0; i < r; ++i, s /= q) digits[i] = uint32_t(s % q);
      for (uint32_t i = 0; i < r; ++i)
        if (digits[i])
          for (size_t c = 0; c < n; ++c)
            cur[c] = F.add(cur[c], F.mul(digits[i], basis[i][c]));
    }
    size_t wt = size_t(std::count_if(cur.begin(), cur.end(),
                                     [](uint32_t v) { return v != 0; }));
    dist[wt] += 1;

    // Odometer: each step bumps digit 0 by its step delta; a digit that
    // wraps (its deltas summed to zero over the full cycle) carries upward.
    for (uint64_t s = begin + 1; s < end; ++s) {
      uint32_t j = 0;
      for (;;) {
        const std::vector<uint32_t>& delta = dstep[j][digits[j]];
        if (addt) {
          for (size_t c = 0; c < n; ++c) {
            uint32_t ov = cur[c], nv = addt[ov * q + delta[c]];
            cur[c] = nv;
            wt += size_t(nv != 0) - size_t(ov != 0);
          }
        } else {
          for (size_t c = 0; c < n; ++c) {
            uint32_t ov = cur[c], nv = F.add(ov, delta[c]);
            cur[c] = nv;
            wt += size_t(nv != 0) - size_t(ov != 0);
          }
        }
        if (++digits[j] < q) break;
        digits[j] = 0;
        ++j;
      }
      dist[wt] += 1;
    }
  });

  std::vector<BigInt> out(n + 1, 0);
  for (const auto& dist : local)
    for (size_t w = 0; w <= n; ++w) out[w] += dist[w];
  return out;
}

std::vector<BigInt> subcode_support_distribution(const LinearCode& C, uint32_t r,
                                                 unsigned threads, uint64_t guard) {
  const Field& F = *C.field;
  const uint64_t q = F.cardinality();
  const size_t n = C.n, k = C.k;
  std::vector<BigInt> out(n + 1, 0);
  if (r == 0) {
    out[0] = 1;
    return out;
  }
  if (r > k) return out;  // no subspaces of that dimension
  if (code_rank(C) != k)
    throw std::invalid_argument(
        "subcode scan requires a full-row-rank generator matrix");
  checked_total(gaussian_binomial(uint32_t(k), r, uint32_t(q)), guard, "subcode scan");

  // Scaled generator rows: scaled[j][a] = a * (row j), row-major n entries.
  std::vector<std::vector<std::vector<uint32_t>>> scaled(
      k, std::vector<std::vector<uint32_t>>(q, std::vector<uint32_t>(n)));
  for (size_t j = 0; j < k; ++j)
    for (uint64_t a = 0; a < q; ++a)
      for (size_t c = 0; c < n; ++c)
        scaled[j][a][c] = F.mul(uint32_t(a), C.at(j, c));

  const unsigned nthreads = effective_threads(threads);
  std::vector<std::vector<uint64_t>> local(nthreads, std::vector<uint64_t>(n + 1, 0));

  // Every r-subspace of the message space has a unique reduced row-echelon
  // basis: choose pivot columns p_0 < ... < p_{r-1}, then the free cells are
  // the non-pivot columns to the right of each row's pivot.
  std::vector<uint32_t> pivots(r);
  for (uint32_t i = 0; i < r; ++i) pivots[i] = i;
  for (;;) {
    // Free cells, in a fixed odometer order.
    std::vector<std::pair<uint32_t, uint32_t>> free_cells;  // (row, col)
    {
      std::vector<bool> is_pivot(k, false);
      for (uint32_t p : pivots) is_pivot[p] = true;
      for (uint32_t i = 0; i < r; ++i)
        for (uint32_t c = pivots[i] + 1; c < k; ++c)
          if (!is_pivot[c]) free_cells.emplace_back(i, c);
    }
    const uint64_t combos = ipow(q, uint32_t(free_cells.size())).convert_to<uint64_t>();

    parallel_chunks(combos, threads, [&](unsigned chunk, uint64_t begin, uint64_t end) {
      std::vector<uint64_t>& dist = local[chunk];
      std::vector<uint32_t> cell(free_cells.size(), 0);
      std::vector<uint32_t> message(k), word(n);
      std::vector<uint8_t> covered(n);
      for (uint64_t s = begin; s < end; ++s) {
        uint64_t t = s;
        for (size_t i = 0; i < cell.size(); ++i, t /= q) cell[i] = uint32_t(t % q);
        std::memset(covered.data(), 0, covered.size());
        for (uint32_t i = 0; i < r; ++i) {
          std::fill(message.begin(), message.end(), 0u);
          message[pivots[i]] = 1;
          for (size_t f = 0; f < free_cells.size(); ++f)
            if (free_cells[f].first == i) message[free_cells[f].second] = cell[f];
          std::fill(word.begin(), word.end(), 0u);
          for (size_t j = 0; j < k; ++j) {
            if (message[j] == 0) continue;
            const std::vector<uint32_t>& row = scaled[j][message[j]];
            for (size_t c = 0; c < n; ++c) word[c] = F.add(word[c], row[c]);
          }
          for (size_t c = 0; c < n; ++c) covered[c] |= (word[c] != 0);
        }
        size_t w = size_t(std::count(covered.begin(), covered.end(), uint8_t(1)));
        dist[w] += 1;
      }
    });

    // Next pivot combination in lexicographic order.
    int32_t bump = int32_t(r) - 1;
    while (bump >= 0 && pivots[bump] == uint32_t(k - r + bump)) --bump;
    if (bump < 0) break;
    ++pivots[bump];
    for (uint32_t i = uint32_t(bump) + 1; i < r; ++i) pivots[i] = pivots[i - 1] + 1;
  }

  for (const auto& dist : local)
    for (size_t w = 0; w <= n; ++w) out[w] += dist[w];
  return out;
}

std::vector<std::vector<BigInt>> subcode_support_spectra(const LinearCode& C, uint32_t rmax,
                                                         unsigned threads, uint64_t guard) {
  std::vector<std::vector<BigInt>> A(C.n + 1, std::vector<BigInt>(rmax + 1, 0));
  for (uint32_t r = 0; r <= rmax; ++r) {
    auto dist = subcode_support_distribution(C, r, threads, guard);
    for (size_t w = 0; w <= C.n; ++w) A[w][r] = dist[w];
  }
  return A;
}

}  // namespace veronese
