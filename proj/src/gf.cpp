#include "qmds/gf.hpp"

#include <limits>

namespace qmds {

FieldMismatch::FieldMismatch(std::uint32_t lhs, std::uint32_t rhs)
    : std::invalid_argument("field mismatch: GF(" + std::to_string(lhs) + ") vs GF(" +
                            std::to_string(rhs) + ")") {}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::uint32_t next_prime(std::uint32_t n) {
  std::uint64_t p = n < 2 ? 2 : n;
  while (!is_prime(p)) ++p;
  if (p > std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error("no 32-bit prime >= " + std::to_string(n));
  return static_cast<std::uint32_t>(p);
}

Field::Field(std::uint32_t q) : q_(q) {
  if (!is_prime(q))
    throw std::invalid_argument("q must be prime (got " + std::to_string(q) + ")");
}

FieldElement Field::element(std::int64_t v) const { return FieldElement(*this, reduce(v)); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1 % q_); }

std::uint32_t Field::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::pow(std::uint32_t x, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % q_;
  std::uint32_t base = x;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("inverse of zero requested in GF(" + std::to_string(q_) + ")");
  // Extended Euclid on (x, q).
  std::int64_t r0 = q_, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - quot * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

FieldElement::FieldElement(const Field& field, std::uint32_t value)
    : q_(field.modulus()), value_(value) {
  if (value >= q_)
    throw std::out_of_range("field element " + std::to_string(value) + " not in [0, " +
                            std::to_string(q_ - 1) + "]");
}

namespace {

Field checked_common(const FieldElement& x, const FieldElement& y) {
  if (x.modulus() != y.modulus()) throw FieldMismatch(x.modulus(), y.modulus());
  return x.field();
}

}  // namespace

FieldElement add(const FieldElement& x, const FieldElement& y) {
  Field f = checked_common(x, y);
  return FieldElement(FieldElement::Unchecked{}, f.modulus(), f.add(x.value_, y.value_));
}

FieldElement sub(const FieldElement& x, const FieldElement& y) {
  Field f = checked_common(x, y);
  return FieldElement(FieldElement::Unchecked{}, f.modulus(), f.sub(x.value_, y.value_));
}

FieldElement mul(const FieldElement& x, const FieldElement& y) {
  Field f = checked_common(x, y);
  return FieldElement(FieldElement::Unchecked{}, f.modulus(), f.mul(x.value_, y.value_));
}

FieldElement neg(const FieldElement& x) {
  return FieldElement(FieldElement::Unchecked{}, x.q_, x.value_ == 0 ? 0 : x.q_ - x.value_);
}

FieldElement inv(const FieldElement& x) {
  return FieldElement(FieldElement::Unchecked{}, x.q_, x.field().inv(x.value_));
}

FieldElement pow(const FieldElement& x, std::uint64_t e) {
  return FieldElement(FieldElement::Unchecked{}, x.q_, x.field().pow(x.value_, e));
}

std::string to_string(const FieldElement& x) { return std::to_string(x.value()); }

}  // namespace qmds
