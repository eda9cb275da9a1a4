#include "veronese/reference.hpp"

#include <initializer_list>
#include <stdexcept>

namespace veronese {
namespace {

// Evaluate a polynomial in q from highest-degree coefficient to lowest,
// e.g. pq(q, {1, -4, 11}) = q^2 - 4q + 11.
BigInt pq(uint32_t q, const std::vector<int64_t>& hi_to_lo) {
  BigInt acc = 0;
  for (int64_t c : hi_to_lo) {
    acc *= q;
    acc += c;
  }
  return acc;
}

void require_formula_range(uint32_t q, const char* what) {
  if (q < 4)
    throw std::invalid_argument(std::string(what) +
                                ": closed forms are valid for q >= 4 only (got q=" +
                                std::to_string(q) + ")");
}

// One closed-form Betti entry: homological degree i, shift j, and the
// value as a polynomial in q divided by an integer constant.
struct EntryForm {
  uint32_t i;
  uint64_t j;
  std::vector<int64_t> num;
  int64_t den;
};

IntPolynomial z_minus(const BigInt& c) { return IntPolynomial{-c, 1}; }

// Coefficient-wise exact division; doubles as a transcription check, since
// every generalized weight polynomial has integer coefficients.
IntPolynomial scale_down(IntPolynomial p, int64_t den) {
  for (auto& c : p.c) c = exact_div(c, BigInt(den));
  p.normalize();
  return p;
}

}  // namespace

ConicCensus reference_conic_census(uint32_t q) {
  const uint64_t n = uint64_t(q) * q + q + 1;
  ConicCensus c;
  c.double_line = n;
  c.two_lines = uint64_t(q) * (q + 1) * n / 2;
  c.irreducible = ipow(q, 5).convert_to<uint64_t>() - uint64_t(q) * q;
  c.single_point = uint64_t(q) * (q - 1) * n / 2;
  return c;
}

ConfigurationCounts reference_configuration_counts(uint32_t q) {
  const uint64_t n = uint64_t(q) * q + q + 1;
  const uint64_t q2 = uint64_t(q) * q;
  ConfigurationCounts c;
  c.points = n;
  c.point_pairs = n * (n - 1) / 2;
  c.triangles = n * q2 * (q2 + q) / 6;
  c.quadrilaterals = n * q2 * (q2 + q) * (q - 1) * (q - 1) / 24;
  c.lines = n;
  c.line_plus_point = n * q2;
  return c;
}

std::vector<BettiTable> reference_betti_tables(uint32_t q) {
  require_formula_range(q, "reference_betti_tables");
  const uint64_t Q = q;
  const uint64_t w1 = Q * Q - Q, w2 = Q * Q - 1, w3 = Q * Q, w4 = Q * Q + Q - 3,
                 w5 = Q * Q + Q - 2, w6 = Q * Q + Q - 1, w7 = Q * Q + Q,
                 w8 = Q * Q + Q + 1;
  const uint64_t n = w8;

  // Entries per elongation level; shifts are the fixed ladder
  // q^2-q < q^2-1 < q^2 < q^2+q-3 < ... < q^2+q+1 sliding up one rung
  // per level.
  const std::vector<std::vector<EntryForm>> levels = {
      {
          {1, w1, {1, 2, 2, 1, 0}, 2},
          {1, w3, {1, 0, 0, -1, 0, 0}, 1},
          {2, w2, {1, 1, 1, 0, 0, 0}, 1},
          {2, w4, {1, 0, -1, -1, 0, 1, 0, 0, 0, 0}, 24},
          {3, w3, {1, 0, -1, -1, 0, 1}, 1},
          {3, w5, {1, -1, -1, 1, 3, 3, 0, 0, 0, 0}, 6},
          {4, w6, {1, -2, 1, 3, 2, -1, -4, 0, 0, 0}, 4},
          {5, w7, {1, -3, 5, -1, -3, -2, 0, 6, -3, 0}, 6},
          {6, w8, {1, -4, 11, -17, 12, -3, 0, 0, 0, 0}, 24},
      },
      {
          {1, w2, {1, 1, 1, 0, 0}, 1},
          {1, w4, {1, 0, -1, -1, 0, 1, 0, 0, 0}, 24},
          {2, w3, {1, 1, 0, -1, -1}, 1},
          {2, w5, {1, 0, 1, 3, 4, 3, 0, 0, 0}, 6},
          {3, w6, {1, 0, 3, 3, 0, -3, -4, 0, 0}, 4},
          {4, w7, {1, 0, 5, -1, -6, -5, 0, 6, 0}, 6},
          {5, w8, {1, 0, 7, -9, -8, 9, 0, 0, 0}, 24},
      },
      {
          {1, w3, {1, 1, 1}, 1},
          {1, w5, {1, 2, 2, 1, 0, 0, 0}, 6},
          {2, w6, {1, 2, 2, 1, 0, 0, 0}, 2},
          {3, w7, {1, 2, 2, -1, -2, -2, 0}, 2},
          {4, w8, {1, 2, 2, -5, 0, 0, 0}, 6},
      },
      {
          {1, w6, {1, 2, 2, 1, 0}, 2},
          {2, w7, {1, 2, 1, 0, -1}, 1},
          {3, w8, {1, 2, 0, -1, 0}, 2},
      },
      {
          {1, w7, {1, 1, 1}, 1},
          {2, w8, {1, 1, 0}, 1},
      },
      {
          {1, w8, {1}, 1},
      },
      {},
  };

  std::vector<BettiTable> out;
  for (uint32_t l = 0; l < levels.size(); ++l) {
    BettiTable t;
    t.level = l;
    t.k_eff = 6 - l;
    t.n = n;
    t.entries[{0, 0}] = 1;
    for (const auto& e : levels[l])
      t.entries[{e.i, e.j}] = exact_div(pq(q, e.num), BigInt(e.den));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<IntPolynomial> reference_weight_polynomials(uint32_t q) {
  require_formula_range(q, "reference_weight_polynomials");
  const uint64_t Q = q;
  const uint64_t n = Q * Q + Q + 1;
  const BigInt N = n;
  const IntPolynomial Zm1 = z_minus(1), Zmq = z_minus(q);

  std::vector<IntPolynomial> P(n + 1);
  P[0] = IntPolynomial{1};

  {  // w = q^2 - q: pair-of-lines stratum.
    IntPolynomial p = Zm1;
    p *= binomial(n, 2);
    P[Q * Q - Q] = p;
  }
  {  // w = q^2 - 1: line-plus-point stratum.
    IntPolynomial p = Zmq * Zm1;
    p *= N * pq(q, {1, 0, 0});
    P[Q * Q - 1] = p;
  }
  {  // w = q^2: irreducible-conic / single-line stratum.
    IntPolynomial quad{pq(q, {2, -2, -1, 1}), -pq(q, {1, 0, -1}), 1};
    IntPolynomial p = Zm1 * quad;
    p *= N;
    P[Q * Q] = p;
  }
  {  // w = q^2 + q - 3: quadrilateral stratum.
    IntPolynomial p = Zmq * Zm1;
    p *= N * pq(q, {1, 1, 0, 0, 0}) * pq(q, {1, -2, 1});
    P[Q * Q + Q - 3] = scale_down(p, 24);
  }
  {  // w = q^2 + q - 2: triangle stratum.
    IntPolynomial p = Zm1 * Zmq * z_minus(pq(q, {1, -3, 3}));
    p *= N * pq(q, {1, 1, 0, 0, 0});
    P[Q * Q + Q - 2] = scale_down(p, 6);
  }
  {  // w = q^2 + q - 1: point-pair stratum.
    IntPolynomial quad{pq(q, {1, -4, 7, -4, 0}), -2 * pq(q, {1, -1, 0}), 2};
    IntPolynomial p = Zm1 * Zmq * quad;
    p *= N * pq(q, {1, 1, 0});
    P[Q * Q + Q - 1] = scale_down(p, 4);
  }
  {  // w = q^2 + q: single-point stratum.
    IntPolynomial quart{pq(q, {1, -4, 8, -5, -6, 9, -3, 0}),
                        -pq(q, {1, -1, 5, -5, -6, 6, 0}),
                        pq(q, {3, 3, 0, -6, 0}), pq(q, {-6, -6, 6}), 6};
    IntPolynomial p = Zm1 * quart;
    p *= N;
    P[Q * Q + Q] = scale_down(p, 6);
  }
  {  // w = q^2 + q + 1: full-support words.
    IntPolynomial quart{pq(q, {1, -4, 11, -17, 12, -3, 0, 0, 0}),
                        pq(q, {-4, 4, -8, 20, -12, 0, 0}),
                        pq(q, {12, 0, 0, -12, 0}), pq(q, {-24, 0, 0}), 24};
    IntPolynomial p = Zm1 * Zmq * quart;
    P[n] = scale_down(p, 24);
  }
  return P;
}

std::vector<std::vector<BigInt>> reference_spectra(uint32_t q) {
  const uint64_t n = uint64_t(q) * q + q + 1;
  std::vector<std::vector<BigInt>> A(n + 1, std::vector<BigInt>(7, 0));
  A[0][0] = 1;

  struct Lit {
    uint64_t w;
    uint32_t r;
    int64_t v;
  };
  if (q == 2) {
    for (const Lit& e : std::initializer_list<Lit>{
             {2, 1, 21}, {4, 1, 35},  {6, 1, 7},   {3, 2, 35},  {4, 2, 105},
             {5, 2, 210}, {6, 2, 210}, {7, 2, 91},  {4, 3, 35},  {5, 3, 210},
             {6, 3, 560}, {7, 3, 590}, {5, 4, 21},  {6, 4, 175}, {7, 4, 455},
             {6, 5, 7},   {7, 5, 56},  {7, 6, 1}})
      A[e.w][e.r] = e.v;
    return A;
  }
  if (q == 3) {
    for (const Lit& e : std::initializer_list<Lit>{
             {6, 1, 78},    {9, 1, 247},   {12, 1, 39},   {8, 2, 117},
             {9, 2, 286},   {10, 2, 1404}, {11, 2, 3042}, {12, 2, 3705},
             {13, 2, 2457}, {9, 3, 13},    {10, 3, 234},  {11, 3, 2340},
             {12, 3, 10296}, {13, 3, 20997}, {11, 4, 78}, {12, 4, 1417},
             {13, 4, 9516}, {12, 5, 13},   {13, 5, 351},  {13, 6, 1}})
      A[e.w][e.r] = e.v;
    return A;
  }

  require_formula_range(q, "reference_spectra");
  const uint64_t w1 = uint64_t(q) * q - q, w2 = uint64_t(q) * q - 1,
                 w3 = uint64_t(q) * q, w4 = n - 4, w5 = n - 3, w6 = n - 2,
                 w7 = n - 1, w8 = n;

  struct Form {
    uint64_t w;
    uint32_t r;
    std::vector<int64_t> num;
    int64_t den;
  };
  for (const Form& f : std::vector<Form>{
           {w1, 1, {1, 2, 2, 1, 0}, 2},
           {w3, 1, {1, 0, 0, 0, 1, 1}, 1},
           {w7, 1, {1, 0, 0, -1, 0}, 2},
           {w2, 2, {1, 1, 1, 0, 0}, 1},
           {w3, 2, {1, 2, 2, 1}, 1},
           {w4, 2, {1, 0, -1, -1, 0, 1, 0, 0, 0}, 24},
           {w5, 2, {1, 1, 0, -1, -1, 0, 0, 0}, 2},
           {w6, 2, {1, 0, 5, 7, 4, -1, -4, 0, 0}, 4},
           {w7, 2, {2, 3, 1, 4, 9, 5, 0, -6, 0}, 6},
           {w8, 2, {3, 0, 1, -3, 0, -1, 0, 0, 0}, 8},
           {w3, 3, {1, 1, 1}, 1},
           {w5, 3, {1, 2, 2, 1, 0, 0, 0}, 6},
           {w6, 3, {1, 2, 3, 3, 2, 1, 0, 0}, 2},
           {w7, 3, {2, 2, 3, 2, 4, 3, 2, 0, 0}, 2},
           {w8, 3, {6, 0, 3, 2, 1, -5, 2, -3, 0, 0}, 6},
           {w6, 4, {1, 2, 2, 1, 0}, 2},
           {w7, 4, {1, 2, 2, 1, 1, 1, 1}, 1},
           {w8, 4, {2, 2, 2, 0, 1, 0, 0, -1, 0}, 2},
           {w7, 5, {1, 1, 1}, 1},
           {w8, 5, {1, 1, 1, 0, 0, 0}, 1},
           {w8, 6, {1}, 1}})
    A[f.w][f.r] = exact_div(pq(q, f.num), BigInt(f.den));
  return A;
}

std::vector<uint64_t> reference_support_weight_ladder(uint32_t q) {
  if (q < 2) throw std::invalid_argument("reference_support_weight_ladder: q >= 2");
  const uint64_t Q = q;
  return {Q * Q - Q, Q * Q - 1, Q * Q, Q * Q + Q - 1, Q * Q + Q, Q * Q + Q + 1};
}

}  // namespace veronese
