#include "veronese/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace veronese {

void IntPolynomial::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (size_t t = c.size(); t-- > 0;) acc = acc * x + c[t];
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), BigInt(0));
  for (size_t t = 0; t < o.c.size(); ++t) c[t] += o.c[t];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), BigInt(0));
  for (size_t t = 0; t < o.c.size(); ++t) c[t] -= o.c[t];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t s = 0; s < a.c.size(); ++s)
    for (size_t t = 0; t < b.c.size(); ++t) r.c[s + t] += a.c[s] * b.c[t];
  r.normalize();
  return r;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (BigInt& x : c) x *= s;
  normalize();
  return *this;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t t = c.size(); t-- > 0;) {
    if (c[t] == 0) continue;
    BigInt mag = c[t] < 0 ? BigInt(-c[t]) : c[t];
    if (out.empty())
      out += (c[t] < 0 ? "-" : "");
    else
      out += (c[t] < 0 ? " - " : " + ");
    if (mag != 1 || t == 0) out += mag.str();
    if (t > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (t > 1) out += "^" + std::to_string(t);
    }
  }
  return out;
}

namespace {

// phi_w at one level, taken as zero past the table list.
BigInt phi_at(const std::vector<BettiTable>& levels, size_t l, uint64_t w) {
  return l < levels.size() ? levels[l].phi(w) : BigInt(0);
}

}  // namespace

std::vector<IntPolynomial> weight_polynomials(const std::vector<BettiTable>& levels) {
  if (levels.empty()) throw std::invalid_argument("no level tables");
  const uint64_t n = levels[0].n;
  std::vector<IntPolynomial> P(n + 1);
  P[0] = IntPolynomial{1};
  for (uint64_t w = 1; w <= n; ++w) {
    for (size_t l = 0; l < levels.size(); ++l) {
      BigInt f = levels[l].phi(w);
      if (f == 0) continue;
      IntPolynomial step;  // Z^l - Z^(l+1)
      step.c.assign(l + 2, BigInt(0));
      step.c[l] = f;
      step.c[l + 1] = -f;
      P[w] += step;
    }
  }
  return P;
}

std::vector<IntPolynomial> weight_polynomials_telescoped(const std::vector<BettiTable>& levels) {
  if (levels.empty()) throw std::invalid_argument("no level tables");
  const uint64_t n = levels[0].n;
  const size_t top = levels.size();  // phi vanishes at the top level for w >= 1
  std::vector<IntPolynomial> P(n + 1);
  P[0] = IntPolynomial{1};
  for (uint64_t w = 1; w <= n; ++w) {
    std::vector<BigInt> coeffs(top, BigInt(0));
    for (size_t l = 0; l < top; ++l)
      coeffs[l] = phi_at(levels, l, w) - (l ? phi_at(levels, l - 1, w) : BigInt(0));
    if (phi_at(levels, top - 1, w) != 0)
      throw std::logic_error("alternating column sum persists at the top level");
    P[w] = IntPolynomial(std::move(coeffs));
  }
  return P;
}

std::vector<std::vector<BigInt>> subcode_spectra(const std::vector<IntPolynomial>& P, uint32_t q,
                                                 uint32_t rmax) {
  std::vector<IntPolynomial> G(rmax + 1);
  G[0] = IntPolynomial{1};
  for (uint32_t r = 1; r <= rmax; ++r)
    G[r] = G[r - 1] * IntPolynomial{-ipow(BigInt(q), r - 1), 1};

  std::vector<std::vector<BigInt>> A(P.size(), std::vector<BigInt>(rmax + 1, BigInt(0)));
  for (size_t w = 0; w < P.size(); ++w) {
    IntPolynomial rem = P[w];
    if (rem.degree() > static_cast<int>(rmax))
      throw std::invalid_argument("polynomial degree exceeds the dimension bound");
    for (uint32_t r = rmax + 1; r-- > 0;) {
      BigInt a = rem.coeff(r);
      if (a == 0) continue;
      if (a < 0) throw std::runtime_error("spectrum entry came out negative");
      IntPolynomial sub = G[r];
      sub *= a;
      rem -= sub;
      A[w][r] = a;
    }
    if (!rem.is_zero()) throw std::logic_error("basis change left a remainder");
  }
  return A;
}

std::vector<IntPolynomial> weight_polynomials_from_spectra(
    const std::vector<std::vector<BigInt>>& A, uint32_t q) {
  if (A.empty()) return {};
  const size_t rmax = A[0].size() - 1;
  std::vector<IntPolynomial> G(rmax + 1);
  G[0] = IntPolynomial{1};
  for (size_t r = 1; r <= rmax; ++r)
    G[r] = G[r - 1] * IntPolynomial{-ipow(BigInt(q), static_cast<unsigned>(r - 1)), 1};

  std::vector<IntPolynomial> P(A.size());
  for (size_t w = 0; w < A.size(); ++w) {
    if (A[w].size() != rmax + 1) throw std::invalid_argument("ragged spectra table");
    for (size_t r = 0; r <= rmax; ++r) {
      if (A[w][r] == 0) continue;
      IntPolynomial term = G[r];
      term *= A[w][r];
      P[w] += term;
    }
  }
  return P;
}

BigInt gaussian_binomial(uint32_t m, uint32_t r, uint32_t q) {
  if (r > m) return 0;
  BigInt num = 1, den = 1;
  const BigInt Q = q;
  for (uint32_t i = 0; i < r; ++i) {
    num *= ipow(Q, m) - ipow(Q, i);
    den *= ipow(Q, r) - ipow(Q, i);
  }
  return exact_div(num, den);
}

std::vector<uint64_t> support_weight_ladder(const std::vector<BettiTable>& levels) {
  if (levels.size() < 2) throw std::invalid_argument("need at least one elongation level");
  std::vector<uint64_t> d;
  for (size_t l = 0; l + 1 < levels.size(); ++l) {
    uint64_t dmin = 0;
    for (const auto& [key, val] : levels[l].entries)
      if (key.first == 1 && (dmin == 0 || key.second < dmin)) dmin = key.second;
    if (dmin == 0) throw std::runtime_error("level table has an empty first row");
    d.push_back(dmin);
  }
  return d;
}

std::vector<uint64_t> support_weight_ladder(const std::vector<std::vector<BigInt>>& A) {
  if (A.empty()) throw std::invalid_argument("empty spectra table");
  const size_t rmax = A[0].size() - 1;
  std::vector<uint64_t> d;
  for (size_t r = 1; r <= rmax; ++r) {
    uint64_t dmin = 0;
    for (size_t w = 1; w < A.size(); ++w)
      if (A[w][r] != 0) {
        dmin = w;
        break;
      }
    if (dmin == 0) throw std::runtime_error("spectra have an empty rank row");
    d.push_back(dmin);
  }
  return d;
}

}  // namespace veronese
