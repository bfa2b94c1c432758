#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmds {

/// Raised when two operands belong to different prime fields.
class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch(std::uint32_t lhs, std::uint32_t rhs);
};

class FieldElement;

/// The prime field GF(q).  Only prime moduli are accepted; primality is
/// checked by trial division when the field is constructed.
class Field {
 public:
  explicit Field(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }

  /// Element with value `v mod q` (negative values wrap).
  FieldElement element(std::int64_t v) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Raw-value helpers for the linear algebra hot loops.  Arguments must
  // already be reduced into [0, q).
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
    std::uint32_t s = x + y;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
    return x >= y ? x - y : x + q_ - y;
  }
  std::uint32_t neg(std::uint32_t x) const noexcept { return x == 0 ? 0 : q_ - x; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % q_);
  }
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for x == 0.
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t reduce(std::int64_t v) const noexcept;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Smallest prime p with p >= n.
std::uint32_t next_prime(std::uint32_t n);

/// A value of GF(q).  Carries its modulus so that mixing fields is caught.
class FieldElement {
 public:
  FieldElement(const Field& field, std::uint32_t value);

  std::uint32_t value() const noexcept { return value_; }
  Field field() const { return Field(q_); }
  std::uint32_t modulus() const noexcept { return q_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend FieldElement add(const FieldElement&, const FieldElement&);
  friend FieldElement sub(const FieldElement&, const FieldElement&);
  friend FieldElement mul(const FieldElement&, const FieldElement&);
  friend FieldElement neg(const FieldElement&);
  friend FieldElement inv(const FieldElement&);
  friend FieldElement pow(const FieldElement&, std::uint64_t);

  struct Unchecked {};
  FieldElement(Unchecked, std::uint32_t q, std::uint32_t value) noexcept
      : q_(q), value_(value) {}

  std::uint32_t q_;
  std::uint32_t value_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement inv(const FieldElement& x);
/// 0^0 is defined as 1.
FieldElement pow(const FieldElement& x, std::uint64_t e);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return add(x, y); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return sub(x, y); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return mul(x, y); }
inline FieldElement operator-(const FieldElement& x) { return neg(x); }

std::string to_string(const FieldElement& x);

}  // namespace qmds
