#include "veronese/code.hpp"

#include <stdexcept>

namespace veronese {
namespace {

// Row-reduce a copy of the matrix (rows x cols, row-major); returns pivot
// column list. The matrix is left in reduced row echelon form.
std::vector<size_t> rref(const Field& f, std::vector<uint32_t>& a, size_t rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    for (size_t t = 0; t < cols; ++t) std::swap(a[r * cols + t], a[p * cols + t]);
    uint32_t il = f.inv(a[r * cols + c]);
    for (size_t t = 0; t < cols; ++t) a[r * cols + t] = f.mul(a[r * cols + t], il);
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r) continue;
      uint32_t m = a[rr * cols + c];
      if (m == 0) continue;
      for (size_t t = 0; t < cols; ++t)
        a[rr * cols + t] = f.sub(a[rr * cols + t], f.mul(m, a[r * cols + t]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearCode build_veronese_code(const Plane& P) {
  LinearCode C;
  C.field = P.field;
  C.k = 6;
  C.n = P.n_points();
  C.gen.resize(C.k * C.n);
  for (size_t j = 0; j < C.n; ++j)
    for (size_t i = 0; i < 6; ++i) C.gen[i * C.n + j] = P.monomials[j][i];

  LinearCode::Provenance prov;
  prov.q = P.q;
  prov.points = P.points;
  uint64_t h = fnv1a64(&prov.q, sizeof(prov.q));
  for (const auto& pt : prov.points) h = fnv1a64(pt.data(), sizeof(pt[0]) * 3, h);
  prov.point_order_hash = h;
  C.veronese = std::move(prov);

  if (code_rank(C) != 6) throw std::logic_error("Veronese generator does not have rank 6");
  return C;
}

LinearCode build_veronese_code(const FieldPtr& f) { return build_veronese_code(build_plane(f)); }

LinearCode extend_scalars(const LinearCode& C, uint32_t m, uint64_t cap) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (m == 1) return C;
  LinearCode out = C;
  out.field = extend_field(C.field, m, cap);
  return out;  // entries are valid encodings in the extension unchanged
}

Codeword encode_support(const LinearCode& C, const std::vector<uint32_t>& message) {
  if (message.size() != C.k) throw std::invalid_argument("message length != k");
  const Field& f = *C.field;
  for (uint32_t v : message)
    if (v >= f.cardinality()) throw std::invalid_argument("message symbol out of range");
  Codeword w;
  w.symbols.assign(C.n, 0);
  for (size_t i = 0; i < C.k; ++i) {
    uint32_t mi = message[i];
    if (mi == 0) continue;
    for (size_t j = 0; j < C.n; ++j)
      w.symbols[j] = f.add(w.symbols[j], f.mul(mi, C.at(i, j)));
  }
  for (size_t j = 0; j < C.n; ++j)
    if (w.symbols[j] != 0) w.support.push_back(static_cast<uint16_t>(j));
  w.weight = w.support.size();
  return w;
}

size_t code_rank(const LinearCode& C) {
  std::vector<uint32_t> a = C.gen;
  return rref(*C.field, a, C.k, C.n).size();
}

std::vector<std::vector<uint32_t>> null_space(const LinearCode& C) {
  const Field& f = *C.field;
  std::vector<uint32_t> a = C.gen;
  auto pivots = rref(f, a, C.k, C.n);
  std::vector<uint8_t> is_pivot(C.n, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t free = 0; free < C.n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(C.n, 0);
    v[free] = 1;
    // Pivot row r eliminates pivot column pivots[r]: G v = 0 forces
    // v[pivots[r]] = -a[r][free].
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a[r * C.n + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace veronese
