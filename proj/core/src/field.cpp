#include "flagcodes/field.hpp"

#include <numeric>
#include <sstream>

#include "flagcodes/error.hpp"
#include "flagcodes/number_theory.hpp"

namespace flagcodes {
namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kElementLimit = std::uint64_t{1} << 32;

// Polynomials modulo a monic polynomial over a base field. Only used for
// primitivity testing and for multiplication in table-less fields.
class PolyRing {
 public:
  PolyRing(const FiniteField& base, const Poly& monic)
      : f_(base), mod_(monic), deg_(monic.size() - 1) {}

  Poly mulmod(const Poly& a, const Poly& b) const {
    Poly prod(2 * deg_ - 1, 0);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j) {
        prod[i + j] = f_.add(prod[i + j], f_.mul(a[i], b[j]));
      }
    }
    for (std::size_t i = prod.size(); i-- > deg_;) {
      const Element t = prod[i];
      if (t == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j) {
        prod[i - deg_ + j] = f_.sub(prod[i - deg_ + j], f_.mul(t, mod_[j]));
      }
    }
    prod.resize(deg_);
    return prod;
  }

  Poly x() const {
    Poly r(deg_, 0);
    if (deg_ == 1) {
      r[0] = f_.neg(mod_[0]);
    } else {
      r[1] = 1;
    }
    return r;
  }

  Poly one() const {
    Poly r(deg_, 0);
    r[0] = 1;
    return r;
  }

  Poly pow(Poly a, std::uint64_t n) const {
    Poly r = one();
    while (n > 0) {
      if (n & 1) r = mulmod(r, a);
      n >>= 1;
      if (n) a = mulmod(a, a);
    }
    return r;
  }

 private:
  const FiniteField& f_;
  const Poly& mod_;
  std::size_t deg_;
};

std::uint64_t ext_order_minus_one(const FiniteField& base, std::size_t degree) {
  unsigned __int128 q = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    q *= base.order();
    if (q > (static_cast<unsigned __int128>(1) << 62)) {
      throw Error(Errc::FieldTooLarge, "extension order exceeds 2^62");
    }
  }
  return static_cast<std::uint64_t>(q) - 1;
}

}  // namespace

bool is_primitive_polynomial(const FiniteField& base, const Poly& monic) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw Error(Errc::NotMonic, "primitivity test needs a monic polynomial of degree >= 1");
  }
  if (monic[0] == 0) return false;
  const std::uint64_t group = ext_order_minus_one(base, monic.size() - 1);
  PolyRing ring(base, monic);
  const Poly x = ring.x();
  if (ring.pow(x, group) != ring.one()) return false;
  for (std::uint64_t r : prime_factors(group)) {
    if (ring.pow(x, group / r) == ring.one()) return false;
  }
  return true;
}

Poly find_primitive_polynomial(const FiniteField& base, std::uint32_t degree) {
  if (degree == 0) throw Error(Errc::BadDimensions, "degree must be positive");
  const auto q = static_cast<Element>(base.order());
  // Odometer over (c_0, ..., c_{d-1}); c_0 is the most significant digit.
  Poly coeffs(degree, 0);
  while (true) {
    Poly candidate = coeffs;
    candidate.push_back(1);
    if (is_primitive_polynomial(base, candidate)) return candidate;
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++coeffs[i] < q) break;
      coeffs[i] = 0;
      if (i == 0) {
        throw Error(Errc::Internal, "primitive polynomial search exhausted");
      }
    }
  }
}

FieldPtr FiniteField::make(std::uint32_t p, std::uint32_t e, FieldPtr base) {
  if (!::flagcodes::is_prime(p)) {
    throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (e == 0) throw Error(Errc::BadDimensions, "extension degree must be >= 1");
  if (base && base->characteristic() != p) {
    throw Error(Errc::FieldMismatch, "base field characteristic differs from p");
  }

  // make_shared needs a public constructor; the private one keeps fields
  // immutable after construction.
  std::shared_ptr<FiniteField> f(new FiniteField());
  f->p_ = p;
  if (!base && e == 1) {
    f->degree_ = 1;
    f->prime_degree_ = 1;
    f->order_ = p;
    f->base_order_ = p;
    f->modulus_ = find_primitive_polynomial(*f, 1);
    f->primitive_ = f->neg(f->modulus_[0]);
  } else {
    if (!base) base = make(p, 1);
    f->degree_ = e;
    f->prime_degree_ = base->prime_degree() * e;
    f->base_order_ = base->order();
    f->order_ = ext_order_minus_one(*base, e) + 1;
    if (f->order_ >= kElementLimit) {
      throw Error(Errc::FieldTooLarge, "field order must stay below 2^32");
    }
    f->modulus_ = find_primitive_polynomial(*base, e);
    f->primitive_ = e == 1 ? base->neg(f->modulus_[0]) : static_cast<Element>(f->base_order_);
    f->base_ = std::move(base);
  }
  if (f->order_ <= kTableLimit) f->build_tables();
  return f;
}

void FiniteField::build_tables() {
  const std::uint64_t n = order_ - 1;
  std::vector<Element> exp(n);
  std::vector<std::uint32_t> log(order_, UINT32_MAX);
  Element cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (log[cur] != UINT32_MAX) {
      throw Error(Errc::Internal, "modulus root is not primitive");
    }
    exp[i] = cur;
    log[cur] = static_cast<std::uint32_t>(i);
    cur = mul_by_root(cur);
  }
  if (cur != 1) throw Error(Errc::Internal, "modulus root order mismatch");
  exp_ = std::move(exp);
  log_ = std::move(log);
}

Element FiniteField::mul_by_root(Element a) const noexcept {
  if (base_ == nullptr) {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * primitive_ % p_);
  }
  if (degree_ == 1) return base_->mul(a, primitive_);
  std::vector<Element> c = coefficients(a);
  const Element top = c.back();
  for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = 0;
  if (top != 0) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = base_->sub(c[i], base_->mul(top, modulus_[i]));
    }
  }
  return from_coefficients(c);
}

Element FiniteField::add_digits(Element a, Element b) const noexcept {
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < prime_degree_; ++i) {
    const Element da = a % p_, db = b % p_;
    Element s = da + db;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Element FiniteField::sub_digits(Element a, Element b) const noexcept {
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < prime_degree_; ++i) {
    const Element da = a % p_, db = b % p_;
    out += (da >= db ? da - db : da + p_ - db) * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Element FiniteField::mul_poly(Element a, Element b) const noexcept {
  const PolyRing ring(*base_, modulus_);
  return from_coefficients(ring.mulmod(coefficients(a), coefficients(b)));
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) {
    const std::uint64_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  return pow(a, order_ - 2);
}

Element FiniteField::pow(Element a, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t m = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % m)) % m];
  }
  Element r = 1;
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    n >>= 1;
    if (n) a = mul(a, a);
  }
  return r;
}

std::uint64_t FiniteField::element_order(Element a) const {
  if (a == 0) throw Error(Errc::ZeroElement, "zero has no multiplicative order");
  const std::uint64_t n = order_ - 1;
  if (!exp_.empty()) return n / std::gcd<std::uint64_t>(log_[a], n);
  std::uint64_t m = n;
  for (std::uint64_t r : prime_factors(n)) {
    while (m % r == 0 && pow(a, m / r) == 1) m /= r;
  }
  return m;
}

std::vector<Element> FiniteField::coefficients(Element a) const {
  std::vector<Element> out(degree_);
  const auto q = static_cast<Element>(base_order_);
  for (auto& c : out) {
    c = a % q;
    a /= q;
  }
  return out;
}

Element FiniteField::from_coefficients(std::span<const Element> coeffs) const {
  Element out = 0;
  const auto q = static_cast<Element>(base_order_);
  for (std::size_t i = coeffs.size(); i-- > 0;) out = out * q + coeffs[i];
  return out;
}

bool FiniteField::same_as(const FiniteField& other) const noexcept {
  if (this == &other) return true;
  if (p_ != other.p_ || degree_ != other.degree_ || modulus_ != other.modulus_) return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return base_->same_as(*other.base_);
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "GF(" << order_ << ")";
  if (base_) os << " over " << base_->describe();
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Element value) : field_(std::move(field)), value_(value) {
  if (!field_->contains(value_)) {
    throw Error(Errc::FieldMismatch, "element value outside the field");
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) {
    throw Error(Errc::MixedFields, field_->describe() + " vs " + o.field_->describe());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}

}  // namespace flagcodes
