#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace flagcodes {

/// An element of a finite field, encoded as an integer in [0, q).
///
/// The encoding is the positional value of the coefficient vector over the
/// base field, with base-field coefficients themselves encoded recursively.
/// Since every field in a tower has order a power of p, the encoding is
/// simply the base-p digit string of the fully expanded coefficient vector
/// (lowest-degree digit first). 0 is zero and 1 is one in every field.
using Element = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// A polynomial over a finite field, coefficients lowest degree first.
using Poly = std::vector<Element>;

/// GF(p^e), either a prime field or an extension of degree e over a base
/// field (itself possibly an extension). Immutable once built; share freely.
class FiniteField {
 public:
  /// Builds GF(p) when e == 1 and no base is given, GF(p^e) over GF(p)
  /// when no base is given, or the degree-e extension of `base`.
  /// The modulus is the first primitive monic polynomial in lexicographic
  /// order of its coefficient vector (constant term most significant).
  static FieldPtr make(std::uint32_t p, std::uint32_t e, FieldPtr base = nullptr);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Degree over the base field (1 for prime fields).
  std::uint32_t degree() const noexcept { return degree_; }
  /// Degree over the prime field.
  std::uint32_t prime_degree() const noexcept { return prime_degree_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_prime() const noexcept { return base_ == nullptr; }
  /// Base field, or null for a prime field.
  const FieldPtr& base() const noexcept { return base_; }
  /// Monic modulus over the base field, degree() + 1 coefficients. For a
  /// prime field this is x - g with g the canonical primitive root.
  const Poly& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// Class of x modulo the modulus; multiplicative order q - 1.
  Element primitive() const noexcept { return primitive_; }
  bool contains(std::uint64_t a) const noexcept { return a < order_; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t n) const noexcept;
  /// Least m >= 1 with a^m = 1. Throws ZeroElement for a == 0.
  std::uint64_t element_order(Element a) const;

  /// Coefficients over the base field (length degree()).
  std::vector<Element> coefficients(Element a) const;
  Element from_coefficients(std::span<const Element> coeffs) const;
  /// Image of a base-field element under the canonical embedding.
  Element embed_base(Element b) const noexcept { return b; }

  /// Structural equality: same characteristic and identical modulus chain.
  bool same_as(const FiniteField& other) const noexcept;

  /// e.g. "GF(64) over GF(4) over GF(2)".
  std::string describe() const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  FiniteField() = default;
  void build_tables();
  Element add_digits(Element a, Element b) const noexcept;
  Element sub_digits(Element a, Element b) const noexcept;
  Element mul_poly(Element a, Element b) const noexcept;
  Element mul_by_root(Element a) const noexcept;

  std::uint32_t p_ = 2;
  std::uint32_t degree_ = 1;
  std::uint32_t prime_degree_ = 1;
  std::uint64_t order_ = 2;
  std::uint64_t base_order_ = 2;
  FieldPtr base_;
  Poly modulus_;
  Element primitive_ = 1;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

inline Element FiniteField::add(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (prime_degree_ == 1) {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  return add_digits(a, b);
}

inline Element FiniteField::sub(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (prime_degree_ == 1) return a >= b ? a - b : a + p_ - b;
  return sub_digits(a, b);
}

inline Element FiniteField::neg(Element a) const noexcept { return sub(0, a); }

inline Element FiniteField::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (base_ == nullptr) {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  if (!exp_.empty()) {
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  return mul_poly(a, b);
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

/// First primitive monic polynomial of the given degree over `base`, in the
/// lexicographic order used by FiniteField::make. Works for extension
/// orders beyond what FiniteField can encode (q^degree - 1 < 2^62).
Poly find_primitive_polynomial(const FiniteField& base, std::uint32_t degree);

/// Whether `monic` (lowest coefficient first, leading 1) is primitive over
/// `base`: x has multiplicative order exactly q^deg - 1 modulo it.
bool is_primitive_polynomial(const FiniteField& base, const Poly& monic);

/// Value-semantic field element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Element value);

  const FieldPtr& field() const noexcept { return field_; }
  Element value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  std::vector<Element> coefficients() const { return field_->coefficients(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t n) const { return {field_, field_->pow(value_, n)}; }
  std::uint64_t order() const { return field_->element_order(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.value_ == b.value_ && same_field(a.field_, b.field_);
  }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Element value_;
};

inline FieldPtr make_field(std::uint32_t p, std::uint32_t e, FieldPtr base = nullptr) {
  return FiniteField::make(p, e, std::move(base));
}

inline FieldElement primitive_element(const FieldPtr& f) { return {f, f->primitive()}; }

}  // namespace flagcodes
