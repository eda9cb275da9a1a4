#include "veronese/plane.hpp"

#include "veronese/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace veronese {
namespace {

// Normalized representatives of P^2(F_q) in lexicographic encoding order:
// (0,0,1), then (0,1,c), then (1,b,c).
std::vector<std::array<uint32_t, 3>> normalized_triples(uint32_t q) {
  std::vector<std::array<uint32_t, 3>> out;
  out.reserve(size_t(q) * q + q + 1);
  out.push_back({0, 0, 1});
  for (uint32_t c = 0; c < q; ++c) out.push_back({0, 1, c});
  for (uint32_t b = 0; b < q; ++b)
    for (uint32_t c = 0; c < q; ++c) out.push_back({1, b, c});
  return out;
}

}  // namespace

Plane build_plane(const FieldPtr& f) {
  if (!f) throw std::invalid_argument("null field");
  Plane P;
  P.field = f;
  P.q = static_cast<uint32_t>(f->cardinality());
  P.points = normalized_triples(P.q);
  P.lines = normalized_triples(P.q);
  const size_t n = P.points.size();

  P.monomials.resize(n);
  for (size_t i = 0; i < n; ++i) {
    auto [x, y, z] = P.points[i];
    P.monomials[i] = {f->mul(x, x), f->mul(x, y), f->mul(x, z),
                      f->mul(y, y), f->mul(y, z), f->mul(z, z)};
  }

  P.incidence.assign(n * n, 0);
  P.line_points.resize(n);
  for (size_t L = 0; L < n; ++L) {
    auto [a, b, c] = P.lines[L];
    for (size_t i = 0; i < n; ++i) {
      auto [x, y, z] = P.points[i];
      uint32_t v = f->add(f->add(f->mul(a, x), f->mul(b, y)), f->mul(c, z));
      if (v == 0) {
        P.incidence[L * n + i] = 1;
        P.line_points[L].push_back(static_cast<uint16_t>(i));
      }
    }
    if (P.line_points[L].size() != P.q + 1)
      throw std::logic_error("line with wrong point count");
  }

  P.line_through.assign(n * n, 0);
  std::vector<uint8_t> seen(n * n, 0);
  for (size_t L = 0; L < n; ++L)
    for (uint16_t i : P.line_points[L])
      for (uint16_t j : P.line_points[L]) {
        if (i == j) continue;
        if (seen[size_t(i) * n + j]++)
          throw std::logic_error("two lines through one point pair");
        P.line_through[size_t(i) * n + j] = static_cast<uint16_t>(L);
      }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && !seen[i * n + j]) throw std::logic_error("point pair on no line");
  return P;
}

uint32_t eval_conic(const Plane& P, const Conic& c, size_t pt) {
  const Field& f = *P.field;
  const auto& m = P.monomials[pt];
  uint32_t v = 0;
  for (int t = 0; t < 6; ++t) v = f.add(v, f.mul(c[t], m[t]));
  return v;
}

std::vector<uint16_t> conic_points(const Plane& P, const Conic& c) {
  std::vector<uint16_t> out;
  for (size_t i = 0; i < P.n_points(); ++i)
    if (eval_conic(P, c, i) == 0) out.push_back(static_cast<uint16_t>(i));
  return out;
}

const char* conic_class_name(ConicClass c) {
  switch (c) {
    case ConicClass::DoubleLine: return "double_line";
    case ConicClass::TwoDistinctLines: return "two_lines";
    case ConicClass::Irreducible: return "irreducible";
    case ConicClass::SinglePoint: return "single_point";
  }
  return "?";
}

namespace {

ConicClass classify_points(const Plane& P, const std::vector<uint16_t>& pts) {
  const uint32_t q = P.q;
  if (pts.size() == 1) return ConicClass::SinglePoint;
  if (pts.size() == 2 * size_t(q) + 1) return ConicClass::TwoDistinctLines;
  if (pts.size() == size_t(q) + 1) {
    // q+1 points: a repeated line or a smooth conic. A smooth conic meets any
    // line in at most 2 points, so collinearity of the set decides.
    uint16_t L = P.line_of(pts[0], pts[1]);
    bool coll = std::all_of(pts.begin(), pts.end(),
                            [&](uint16_t p) { return P.on(L, p); });
    return coll ? ConicClass::DoubleLine : ConicClass::Irreducible;
  }
  throw std::logic_error("conic with unexpected point count " + std::to_string(pts.size()));
}

// One normalized conic per projective class: leading coefficient 1 at the
// first nonzero position. Global index -> conic, in a fixed order.
uint64_t conic_class_count(uint32_t q) {
  uint64_t total = 0, block = 1;
  for (int lead = 5; lead >= 0; --lead) {
    total += block;
    block *= q;
  }
  return total;  // (q^6-1)/(q-1)
}

Conic conic_from_index(uint32_t q, uint64_t idx) {
  // Blocks by leading position 0..5 with sizes q^5, q^4, ..., q^0.
  uint64_t block = 1;
  for (int i = 0; i < 5; ++i) block *= q;
  for (int lead = 0; lead < 6; ++lead) {
    if (idx < block) {
      Conic c{};
      c[lead] = 1;
      for (int t = 5; t > lead; --t) {
        c[t] = static_cast<uint32_t>(idx % q);
        idx /= q;
      }
      return c;
    }
    idx -= block;
    block /= q;
  }
  throw std::out_of_range("conic index");
}

}  // namespace

ConicClass classify_conic(const Plane& P, const Conic& c) {
  return classify_points(P, conic_points(P, c));
}

ConicCensus conic_census(const Plane& P, unsigned threads) {
  const uint64_t total = conic_class_count(P.q);
  const unsigned T = effective_threads(threads);
  std::vector<ConicCensus> acc(T > total ? static_cast<unsigned>(total) : T);
  parallel_chunks(total, threads, [&](unsigned chunk, uint64_t lo, uint64_t hi) {
    ConicCensus& a = acc[chunk];
    for (uint64_t idx = lo; idx < hi; ++idx) {
      switch (classify_conic(P, conic_from_index(P.q, idx))) {
        case ConicClass::DoubleLine: a.double_line++; break;
        case ConicClass::TwoDistinctLines: a.two_lines++; break;
        case ConicClass::Irreducible: a.irreducible++; break;
        case ConicClass::SinglePoint: a.single_point++; break;
      }
    }
  });
  ConicCensus out;
  for (const auto& a : acc) {
    out.double_line += a.double_line;
    out.two_lines += a.two_lines;
    out.irreducible += a.irreducible;
    out.single_point += a.single_point;
  }
  return out;
}

std::vector<std::vector<uint16_t>> irreducible_conic_point_sets(const Plane& P) {
  std::vector<std::vector<uint16_t>> out;
  const uint64_t total = conic_class_count(P.q);
  for (uint64_t idx = 0; idx < total; ++idx) {
    auto pts = conic_points(P, conic_from_index(P.q, idx));
    if (classify_points(P, pts) == ConicClass::Irreducible) out.push_back(std::move(pts));
  }
  return out;
}

ConfigurationCounts count_configurations(const Plane& P, unsigned threads) {
  const size_t n = P.n_points();
  ConfigurationCounts out;
  out.points = n;
  out.point_pairs = uint64_t(n) * (n - 1) / 2;
  out.lines = P.n_lines();
  for (size_t L = 0; L < P.n_lines(); ++L) {
    size_t onL = P.line_points[L].size();
    out.line_plus_point += n - onL;
  }

  // suffix_on[L][k] = #points of line L with index > k; lets the inner
  // quadrilateral count run without a fourth loop. The three lines spanned by
  // a triangle pairwise meet inside the triangle, so their point sets beyond
  // index k are disjoint and inclusion-exclusion reduces to a plain sum.
  std::vector<std::vector<uint16_t>> suffix_on(P.n_lines(), std::vector<uint16_t>(n + 1, 0));
  for (size_t L = 0; L < P.n_lines(); ++L) {
    auto& s = suffix_on[L];
    for (size_t k = n; k-- > 0;)
      s[k] = static_cast<uint16_t>(s[k + 1] + (P.on(L, k) ? 1 : 0));
  }

  const unsigned T = effective_threads(threads);
  struct Tally {
    uint64_t tri = 0, quad = 0;
  };
  std::vector<Tally> acc(std::min<uint64_t>(T, n ? n : 1));
  parallel_chunks(n, threads, [&](unsigned chunk, uint64_t lo, uint64_t hi) {
    Tally& a = acc[chunk];
    for (size_t i = lo; i < hi; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        uint16_t Lij = P.line_of(i, j);
        for (size_t k = j + 1; k < n; ++k) {
          if (P.on(Lij, k)) continue;  // i, j, k collinear
          a.tri++;
          uint16_t Lik = P.line_of(i, k), Ljk = P.line_of(j, k);
          uint64_t candidates = n - 1 - k;
          uint64_t excluded =
              uint64_t(suffix_on[Lij][k + 1]) + suffix_on[Lik][k + 1] + suffix_on[Ljk][k + 1];
          a.quad += candidates - excluded;
        }
      }
  });
  for (const auto& a : acc) {
    out.triangles += a.tri;
    out.quadrilaterals += a.quad;
  }
  return out;
}

}  // namespace veronese
