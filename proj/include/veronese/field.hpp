#pragma once
// Exact arithmetic in small finite fields F_{p^d}, organized as explicit
// towers: a prime field F_p, or an extension of another field by a monic
// irreducible modulus. Elements are encoded as integers in [0, |F|):
// the element with coefficient sequence (c_0, ..., c_{d-1}) over the base
// field (c_0 = constant term) has encoding sum_i enc(c_i) * |base|^i.
// Enumeration order is encoding order, so zero always comes first and the
// embedding of the base field into an extension is the identity on encodings.
//
// Moduli are chosen deterministically: the monic irreducible polynomial of
// the required degree whose coefficient tail has the smallest encoding
// (e.g. x^2 + 1 for F_9 over F_3, x^2 + x + 1 for F_4 over F_2).
//
// Fields at most kMulTableThreshold elements carry full multiplication /
// addition / inverse tables; larger fields (up to the cardinality cap) fall
// back to coefficient arithmetic. Everything is exact; there is no floating
// point anywhere in this library.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace veronese {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr uint64_t kDefaultCardinalityCap = 1u << 16;
inline constexpr uint64_t kMulTableThreshold = 256;

class Field : public std::enable_shared_from_this<Field> {
 public:
  // --- construction -------------------------------------------------------
  // F_{p^d} as a single-step extension of the prime field F_p.
  static FieldPtr build(uint32_t p, uint32_t d,
                        uint64_t cardinality_cap = kDefaultCardinalityCap);
  // Degree-m extension of `base` with the deterministic (lex-smallest) modulus.
  // m == 1 returns `base` unchanged.
  static FieldPtr extend(FieldPtr base, uint32_t m,
                         uint64_t cardinality_cap = kDefaultCardinalityCap);
  // Extension with a caller-supplied monic modulus (encoded coefficients over
  // `base`, constant term first, length m+1, leading coefficient 1). The
  // modulus is checked for irreducibility. Exists so that downstream results
  // can be shown independent of the default modulus choice.
  static FieldPtr extend_with_modulus(FieldPtr base, std::vector<uint32_t> modulus,
                                      uint64_t cardinality_cap = kDefaultCardinalityCap);

  // --- descriptor ----------------------------------------------------------
  uint32_t characteristic() const { return p_; }
  uint64_t cardinality() const { return card_; }
  // Degree over the immediate base field (1 for prime fields).
  uint32_t degree() const { return deg_; }
  uint32_t degree_over_prime() const;
  const FieldPtr& base() const { return base_; }  // null for prime fields
  bool is_prime_field() const { return base_ == nullptr; }
  // Monic modulus over the base, constant term first. Prime field: {0, 1} ("x").
  const std::vector<uint32_t>& modulus() const { return mod_; }
  std::string modulus_string() const;  // e.g. "x^2 + x + 1"
  std::string description() const;     // full tower, e.g. "F_16 = F_4[x]/(x^2 + x + 2)"

  // --- value-level arithmetic (encodings in [0, cardinality)) --------------
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws std::domain_error on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  // Coefficient sequence over the base field, constant term first, length degree().
  std::vector<uint32_t> digits(uint32_t v) const;
  uint32_t from_digits(const std::vector<uint32_t>& c) const;
  // Base-field element -> this field (coefficient-sequence embedding; identity
  // on encodings by construction).
  uint32_t embed(uint32_t base_value) const;

  bool has_tables() const { return !mul_t_.empty(); }
  // Raw table access for hot loops; null when tables are absent.
  const uint8_t* raw_mul() const { return mul_t_.empty() ? nullptr : mul_t_.data(); }
  const uint8_t* raw_add() const { return add_t_.empty() ? nullptr : add_t_.data(); }
  const uint8_t* raw_sub() const { return sub_t_.empty() ? nullptr : sub_t_.data(); }

 private:
  Field() = default;
  void build_tables();

  uint32_t p_ = 0;        // characteristic
  uint32_t deg_ = 1;      // degree over base
  uint64_t card_ = 0;
  FieldPtr base_;         // null for prime field
  std::vector<uint32_t> mod_;
  std::vector<uint8_t> mul_t_, add_t_, sub_t_, inv_t_;  // present iff card_ <= threshold
};

// --- element layer ---------------------------------------------------------
// Thin typed wrapper; mixing elements of different descriptors throws.
// Field descriptors must outlive their elements (they are shared_ptr-owned by
// whoever built them; elements keep only a raw reference).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* f, uint32_t v) : f_(f), v_(v) {}
  FieldElement(const FieldPtr& f, uint32_t v) : f_(f.get()), v_(v) {}

  const Field* field() const { return f_; }
  uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<uint32_t> coefficients() const { return f_->digits(v_); }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.f_, a.f_->add(a.v_, b.v_)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.f_, a.f_->sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.f_, a.f_->mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.f_, a.f_->div(a.v_, b.v_)};
  }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  FieldElement pow(uint64_t e) const { return {f_, f_->pow(v_, e)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  static void check(const FieldElement& a, const FieldElement& b);
  const Field* f_ = nullptr;
  uint32_t v_ = 0;
};

// Spec-level conveniences.
FieldPtr build_field(uint32_t p, uint32_t d,
                     uint64_t cardinality_cap = kDefaultCardinalityCap);
FieldPtr extend_field(FieldPtr base, uint32_t m,
                      uint64_t cardinality_cap = kDefaultCardinalityCap);
// All elements in encoding order (zero first).
std::vector<FieldElement> enumerate_field(const FieldPtr& f);

}  // namespace veronese
