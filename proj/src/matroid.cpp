#include "veronese/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace veronese {
namespace {

constexpr size_t kHardLatticeCap = 28;  // 2^28 profile entries; beyond this, refuse

// Append-only column basis: undo is a size reset, so a depth-first scan over
// the subset tree can share one instance.
struct Basis {
  const Field* f;
  size_t rows;
  int sz = 0;
  std::vector<uint32_t> store;  // rows vectors of length rows
  std::vector<int> piv;

  Basis(const Field* field, size_t r) : f(field), rows(r), store(r * r, 0), piv(r, -1) {
    if (r > 64) throw std::invalid_argument("matrix with more than 64 rows");
  }

  void insert(const uint32_t* col) {
    uint32_t v[64];
    std::copy(col, col + rows, v);
    for (int b = 0; b < sz; ++b) {
      uint32_t c = v[piv[b]];
      if (c == 0) continue;
      const uint32_t* w = &store[size_t(b) * rows];
      for (size_t t = 0; t < rows; ++t) v[t] = f->sub(v[t], f->mul(c, w[t]));
    }
    for (size_t t = 0; t < rows; ++t) {
      if (v[t] == 0) continue;
      uint32_t il = f->inv(v[t]);
      uint32_t* dst = &store[size_t(sz) * rows];
      for (size_t u = 0; u < rows; ++u) dst[u] = f->mul(v[u], il);
      piv[sz++] = static_cast<int>(t);
      return;
    }
  }
};

// Rank of the columns selected by mask over every subset of the ground set:
// depth-first include/exclude over columns, writing ranks at the leaves.
struct LatticeScanner {
  const Field* f;
  size_t rows, n;
  const uint32_t* cols;  // column-major
  Basis basis;
  std::vector<uint8_t>& out;

  LatticeScanner(const Field* field, size_t r, size_t n_, const uint32_t* c,
                 std::vector<uint8_t>& o)
      : f(field), rows(r), n(n_), cols(c), basis(field, r), out(o) {}

  void rec(size_t idx, uint64_t mask) {
    if (idx == n) {
      out[mask] = static_cast<uint8_t>(basis.sz);
      return;
    }
    rec(idx + 1, mask);
    int saved = basis.sz;
    basis.insert(cols + idx * rows);
    rec(idx + 1, mask | (1ull << idx));
    basis.sz = saved;
  }
};

}  // namespace

Matroid Matroid::parity_check(const LinearCode& C) {
  Matroid m;
  m.field_ = C.field;
  m.n_ = C.n;
  m.parity_mode_ = true;
  m.kdim_ = code_rank(C);
  m.rows_ = C.k;
  m.cols_.resize(C.k * C.n);
  for (size_t j = 0; j < C.n; ++j)
    for (size_t r = 0; r < C.k; ++r) m.cols_[j * C.k + r] = C.at(r, j);
  return m;
}

Matroid Matroid::from_columns(FieldPtr field, size_t rows, size_t cols,
                              std::vector<uint32_t> row_major) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("matrix shape mismatch");
  Matroid m;
  m.field_ = std::move(field);
  m.n_ = cols;
  m.parity_mode_ = false;
  m.rows_ = rows;
  m.cols_.resize(rows * cols);
  for (size_t j = 0; j < cols; ++j)
    for (size_t r = 0; r < rows; ++r) m.cols_[j * rows + r] = row_major[r * cols + j];
  return m;
}

uint32_t Matroid::rank_of_columns(uint64_t mask) const {
  Basis b(field_.get(), rows_);
  for (size_t j = 0; j < n_; ++j)
    if (mask & (1ull << j)) b.insert(&cols_[j * rows_]);
  return static_cast<uint32_t>(b.sz);
}

uint32_t Matroid::base_nullity(uint64_t mask) const {
  if (n_ > 64) throw std::invalid_argument("subset queries need n <= 64");
  mask &= full_mask();
  if (parity_mode_)
    return static_cast<uint32_t>(kdim_) - rank_of_columns(full_mask() & ~mask);
  return popcount(mask) - rank_of_columns(mask);
}

uint32_t Matroid::nullity(uint64_t mask) const {
  uint32_t b = base_nullity(mask);
  return b > level_ ? b - level_ : 0;
}

Matroid Matroid::elongated(uint32_t dl) const {
  uint32_t base_rank = static_cast<uint32_t>(n_) - base_nullity(full_mask());
  if (level_ + dl > n_ - base_rank)
    throw std::invalid_argument("elongation level exceeds n - rank");
  Matroid m = *this;
  m.level_ += dl;
  return m;  // shares profile_cache_
}

const std::vector<uint8_t>& Matroid::base_profile(uint64_t guard) const {
  if (!profile_cache_->empty()) return *profile_cache_;
  if (n_ > guard)
    throw GuardExceeded("nullity profile over 2^" + std::to_string(n_) +
                        " subsets exceeds the exhaustive guard (" + std::to_string(guard) +
                        "); use the structural route");
  if (n_ > kHardLatticeCap) throw GuardExceeded("ground set too large for a lattice scan");
  std::vector<uint8_t> ranks(1ull << n_);
  LatticeScanner scan(field_.get(), rows_, n_, cols_.data(), ranks);
  scan.rec(0, 0);
  auto& prof = *profile_cache_;
  prof.assign(1ull << n_, 0);
  const uint64_t full = full_mask();
  if (parity_mode_) {
    for (uint64_t m = 0; m <= full; ++m)
      prof[m] = static_cast<uint8_t>(kdim_ - ranks[full & ~m]);
  } else {
    for (uint64_t m = 0; m <= full; ++m)
      prof[m] = static_cast<uint8_t>(popcount(m) - ranks[m]);
  }
  return prof;
}

MatroidRestriction restrict(const Matroid& M, uint64_t mask) {
  if (mask & ~M.full_mask()) throw std::invalid_argument("restriction outside ground set");
  return {&M, mask};
}

uint32_t MatroidRestriction::nullity(uint64_t mask) const {
  if (mask & ~ground) throw std::invalid_argument("subset outside restriction");
  return m->nullity(mask);
}

uint32_t MatroidRestriction::rank_of(uint64_t mask) const {
  if (mask & ~ground) throw std::invalid_argument("subset outside restriction");
  return m->rank_of(mask);
}

int64_t euler_characteristic(const Matroid& M, uint64_t sigma) {
  sigma &= M.full_mask();
  const uint32_t m = Matroid::popcount(sigma);
  if (m > kHardLatticeCap) throw GuardExceeded("euler characteristic on a set of size > 28");
  std::vector<size_t> elems;
  for (size_t j = 0; j < M.size(); ++j)
    if (sigma & (1ull << j)) elems.push_back(j);

  Basis basis(M.field_.get(), M.rows_);
  int64_t acc = 0;
  const uint32_t level = M.level_;

  if (M.parity_mode_) {
    // tau <= sigma is independent iff kdim - rank_G(E \ tau) <= level, and
    // E \ tau = (E \ sigma) u R with R = sigma \ tau. Seed the complement,
    // then scan over R.
    for (size_t j = 0; j < M.size(); ++j)
      if (!(sigma & (1ull << j))) basis.insert(&M.cols_[j * M.rows_]);
    auto rec = [&](auto&& self, size_t idx, uint32_t rsize) -> void {
      if (idx == elems.size()) {
        uint32_t nb = static_cast<uint32_t>(M.kdim_) - static_cast<uint32_t>(basis.sz);
        if (nb <= level) acc += ((m - rsize) & 1) ? -1 : 1;
        return;
      }
      self(self, idx + 1, rsize);  // element stays in tau
      int saved = basis.sz;
      basis.insert(&M.cols_[elems[idx] * M.rows_]);
      self(self, idx + 1, rsize + 1);  // element moved to R
      basis.sz = saved;
    };
    rec(rec, 0, 0);
  } else {
    // Direct scan over tau: independence is |tau| - rank(tau) <= level.
    auto rec = [&](auto&& self, size_t idx, uint32_t tsize) -> void {
      if (idx == elems.size()) {
        if (tsize - static_cast<uint32_t>(basis.sz) <= level) acc += (tsize & 1) ? -1 : 1;
        return;
      }
      self(self, idx + 1, tsize);
      int saved = basis.sz;
      basis.insert(&M.cols_[elems[idx] * M.rows_]);
      self(self, idx + 1, tsize + 1);
      basis.sz = saved;
    };
    rec(rec, 0, 0);
  }
  return acc;
}

uint64_t local_betti(const Matroid& M, uint64_t sigma) {
  int64_t chi = euler_characteristic(M, sigma);
  return static_cast<uint64_t>(chi < 0 ? -chi : chi);
}

NullityProfile nullity_profile(const Matroid& M, uint64_t guard) {
  const auto& prof = M.base_profile(guard);
  NullityProfile out;
  out.n = M.size();
  out.level = M.level();
  const uint32_t level = M.level();
  for (uint64_t mask = 0; mask < prof.size(); ++mask) {
    uint32_t nb = prof[mask];
    uint32_t nl = nb > level ? nb - level : 0;
    out.counts[{Matroid::popcount(mask), nl}]++;
  }
  return out;
}

CycleFamily cycles(const Matroid& M, uint32_t i, uint64_t guard) {
  if (i < 1 || i > M.size() - M.rank())
    throw std::invalid_argument("cycle nullity out of range");
  const auto& prof = M.base_profile(guard);
  const uint32_t target = i + M.level();
  CycleFamily fam;
  fam.i = i;
  for (uint64_t mask = 0; mask < prof.size(); ++mask) {
    if (prof[mask] != target) continue;
    bool minimal = true;
    uint64_t rest = mask;
    while (rest) {
      uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (prof[mask ^ bit] != target - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      fam.sets.push_back(mask);
      fam.census[Matroid::popcount(mask)]++;
    }
  }
  return fam;
}

}  // namespace veronese
