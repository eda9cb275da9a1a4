#include "veronese/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace veronese {
namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over a field; coefficients are value encodings, constant
// term first. Used only at field-construction time, so clarity over speed.
using Poly = std::vector<uint32_t>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly psub(const Field& F, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  ptrim(a);
  return a;
}

// a mod f with f monic.
Poly pmod(const Field& F, Poly a, const Poly& f) {
  size_t d = f.size() - 1;
  while (a.size() > d) {
    uint32_t c = a.back();
    size_t shift = a.size() - 1 - d;
    if (c != 0)
      for (size_t t = 0; t + 1 < f.size(); ++t)
        a[shift + t] = F.sub(a[shift + t], F.mul(c, f[t]));
    a.pop_back();
  }
  ptrim(a);
  return a;
}

Poly pmulmod(const Field& F, const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return pmod(F, std::move(r), f);
}

Poly ppowmod(const Field& F, Poly base, uint64_t e, const Poly& f) {
  Poly r{1};
  while (e) {
    if (e & 1) r = pmulmod(F, r, base, f);
    base = pmulmod(F, base, base, f);
    e >>= 1;
  }
  return r;
}

Poly pgcd(const Field& F, Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // Make b monic so pmod applies; scaling does not change the gcd.
    uint32_t lc = b.back();
    if (lc != 1) {
      uint32_t il = F.inv(lc);
      for (auto& c : b) c = F.mul(c, il);
    }
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: monic f of degree d over F (|F| = Q) is irreducible iff
// x^(Q^d) = x mod f and gcd(x^(Q^(d/r)) - x, f) = 1 for every prime r | d.
bool irreducible(const Field& F, const Poly& f) {
  size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  std::vector<size_t> checkpoints;  // d / r for each prime r | d
  {
    size_t m = d;
    for (size_t r = 2; r * r <= m; ++r)
      if (m % r == 0) {
        checkpoints.push_back(d / r);
        while (m % r == 0) m /= r;
      }
    if (m > 1) checkpoints.push_back(d / m);
  }
  uint64_t Q = F.cardinality();
  Poly x{0, 1};
  Poly t = pmod(F, x, f);
  for (size_t e = 1; e <= d; ++e) {
    t = ppowmod(F, t, Q, f);  // t = x^(Q^e) mod f
    if (std::find(checkpoints.begin(), checkpoints.end(), e) != checkpoints.end()) {
      Poly g = pgcd(F, psub(F, t, x), f);
      if (g.size() != 1) return false;
    }
  }
  Poly r = psub(F, t, x);
  return r.empty();
}

}  // namespace

uint32_t Field::degree_over_prime() const {
  return base_ ? deg_ * base_->degree_over_prime() : 1;
}

std::vector<uint32_t> Field::digits(uint32_t v) const {
  if (v >= card_) throw std::invalid_argument("field value out of range");
  if (!base_) return {v};
  uint64_t B = base_->cardinality();
  std::vector<uint32_t> c(deg_);
  for (uint32_t i = 0; i < deg_; ++i) {
    c[i] = static_cast<uint32_t>(v % B);
    v = static_cast<uint32_t>(v / B);
  }
  return c;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& c) const {
  if (!base_) {
    if (c.size() != 1 || c[0] >= card_) throw std::invalid_argument("bad digit sequence");
    return c[0];
  }
  if (c.size() > deg_) throw std::invalid_argument("bad digit sequence");
  uint64_t B = base_->cardinality(), v = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= B) throw std::invalid_argument("digit out of base-field range");
    v = v * B + c[i];
  }
  return static_cast<uint32_t>(v);
}

uint32_t Field::embed(uint32_t base_value) const {
  uint64_t B = base_ ? base_->cardinality() : card_;
  if (base_value >= B) throw std::invalid_argument("embed: value outside base field");
  return base_value;  // coefficient-sequence embedding is the identity on encodings
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (!add_t_.empty()) return add_t_[a * card_ + b];
  if (!base_) return static_cast<uint32_t>((uint64_t(a) + b) % p_);
  auto da = digits(a), db = digits(b);
  for (uint32_t i = 0; i < deg_; ++i) da[i] = base_->add(da[i], db[i]);
  return from_digits(da);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const {
  if (!sub_t_.empty()) return sub_t_[a * card_ + b];
  if (!base_) return static_cast<uint32_t>((uint64_t(a) + p_ - b) % p_);
  auto da = digits(a), db = digits(b);
  for (uint32_t i = 0; i < deg_; ++i) da[i] = base_->sub(da[i], db[i]);
  return from_digits(da);
}

uint32_t Field::neg(uint32_t a) const { return sub(0, a); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (!mul_t_.empty()) return mul_t_[a * card_ + b];
  if (!base_) return static_cast<uint32_t>(uint64_t(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  auto da = digits(a), db = digits(b);
  // Convolution over the base field, then reduction by the monic modulus.
  std::vector<uint32_t> r(2 * deg_ - 1, 0);
  for (uint32_t i = 0; i < deg_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < deg_; ++j)
      r[i + j] = base_->add(r[i + j], base_->mul(da[i], db[j]));
  }
  for (size_t i = r.size(); i-- > deg_;) {
    uint32_t c = r[i];
    if (c == 0) continue;
    size_t shift = i - deg_;
    for (uint32_t t = 0; t < deg_; ++t)
      r[shift + t] = base_->sub(r[shift + t], base_->mul(c, mod_[t]));
    r[i] = 0;
  }
  r.resize(deg_);
  return from_digits(r);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + description());
  if (!inv_t_.empty()) return inv_t_[a];
  return pow(a, card_ - 2);  // Fermat; fields here are small
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

void Field::build_tables() {
  if (card_ > kMulTableThreshold) return;
  size_t c = card_;
  mul_t_.resize(c * c);
  add_t_.resize(c * c);
  sub_t_.resize(c * c);
  inv_t_.assign(c, 0);
  // Fill via the generic routines on a table-less clone of this descriptor.
  Field g;
  g.p_ = p_;
  g.deg_ = deg_;
  g.card_ = card_;
  g.base_ = base_;
  g.mod_ = mod_;
  for (uint32_t a = 0; a < c; ++a)
    for (uint32_t b = 0; b < c; ++b) {
      mul_t_[a * c + b] = static_cast<uint8_t>(g.mul(a, b));
      add_t_[a * c + b] = static_cast<uint8_t>(g.add(a, b));
      sub_t_[a * c + b] = static_cast<uint8_t>(g.sub(a, b));
    }
  for (uint32_t a = 1; a < c; ++a) inv_t_[a] = static_cast<uint8_t>(g.inv(a));
}

FieldPtr Field::build(uint32_t p, uint32_t d, uint64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
  if (d == 0) throw std::invalid_argument("extension degree must be positive");
  auto prime = std::shared_ptr<Field>(new Field());
  prime->p_ = p;
  prime->deg_ = 1;
  prime->card_ = p;
  prime->mod_ = {0, 1};  // "x", by convention
  if (p > cap) throw std::invalid_argument("cardinality exceeds cap");
  prime->build_tables();
  if (d == 1) return prime;
  return extend(prime, d, cap);
}

FieldPtr Field::extend(FieldPtr base, uint32_t m, uint64_t cap) {
  if (!base) throw std::invalid_argument("null base field");
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (m == 1) return base;
  uint64_t B = base->cardinality(), card = 1;
  for (uint32_t i = 0; i < m; ++i) {
    card *= B;
    if (card > cap) throw std::invalid_argument("cardinality exceeds cap");
  }
  // Lex-smallest monic irreducible: scan coefficient tails in encoding order.
  for (uint64_t tail = 0; tail < card; ++tail) {
    std::vector<uint32_t> f(m + 1);
    uint64_t t = tail;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<uint32_t>(t % B);
      t /= B;
    }
    f[m] = 1;
    if (irreducible(*base, f)) return extend_with_modulus(base, std::move(f), cap);
  }
  throw std::logic_error("no irreducible modulus found");  // cannot happen
}

FieldPtr Field::extend_with_modulus(FieldPtr base, std::vector<uint32_t> modulus, uint64_t cap) {
  if (!base) throw std::invalid_argument("null base field");
  if (modulus.size() < 3 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 2");
  for (uint32_t c : modulus)
    if (c >= base->cardinality()) throw std::invalid_argument("modulus coefficient out of range");
  uint32_t m = static_cast<uint32_t>(modulus.size() - 1);
  uint64_t B = base->cardinality(), card = 1;
  for (uint32_t i = 0; i < m; ++i) {
    card *= B;
    if (card > cap) throw std::invalid_argument("cardinality exceeds cap");
  }
  if (!irreducible(*base, modulus)) throw std::invalid_argument("modulus is reducible");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->characteristic();
  f->deg_ = m;
  f->card_ = card;
  f->base_ = std::move(base);
  f->mod_ = std::move(modulus);
  f->build_tables();
  return f;
}

std::string Field::modulus_string() const {
  std::string s;
  for (size_t i = mod_.size(); i-- > 0;) {
    if (mod_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    bool unit = (mod_[i] == 1);
    if (!unit || i == 0) s += std::to_string(mod_[i]);
    if (i >= 1) {
      if (!unit) s += "*";
      s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string Field::description() const {
  std::string name = "F_" + std::to_string(card_);
  if (!base_) return name;
  std::string s = name + " = F_" + std::to_string(base_->cardinality()) + "[x]/(" +
                  modulus_string() + ")";
  if (!base_->is_prime_field()) s += ", " + base_->description();
  return s;
}

void FieldElement::check(const FieldElement& a, const FieldElement& b) {
  if (a.f_ == nullptr || b.f_ == nullptr)
    throw std::invalid_argument("arithmetic on a null field element");
  if (a.f_ != b.f_)
    throw std::invalid_argument("mixing elements of different field descriptors");
}

FieldPtr build_field(uint32_t p, uint32_t d, uint64_t cap) { return Field::build(p, d, cap); }
FieldPtr extend_field(FieldPtr base, uint32_t m, uint64_t cap) {
  return Field::extend(std::move(base), m, cap);
}

std::vector<FieldElement> enumerate_field(const FieldPtr& f) {
  std::vector<FieldElement> out;
  out.reserve(f->cardinality());
  for (uint64_t v = 0; v < f->cardinality(); ++v)
    out.emplace_back(f, static_cast<uint32_t>(v));
  return out;
}

}  // namespace veronese
