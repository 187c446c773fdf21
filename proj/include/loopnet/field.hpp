#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "loopnet/error.hpp"

namespace loopnet {

bool is_prime(std::int64_t p);

/// Residue modulo a runtime prime. A modulus of 0 marks an unbound integer literal
/// (as produced by Scalar(0) or Scalar(1) inside Eigen); it adopts the modulus of the
/// other operand on first contact. Two different bound moduli throw MixedFields.
class Fp {
 public:
  constexpr Fp() = default;
  constexpr Fp(int literal) : value_(literal), modulus_(0) {}  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t value, std::uint32_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool bound() const noexcept { return modulus_ != 0; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp inverse() const;
  Fp pow(std::int64_t e) const;
  Fp bound_to(std::uint32_t modulus) const { return bound() ? *this : Fp(value_, modulus); }

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  Fp operator-() const { return bound() ? Fp(-value_, modulus_) : Fp(static_cast<int>(-value_)); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b);
  // Residue order 0 < 1 < ... < p-1; used only for canonical sorting.
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b);

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

 private:
  static std::uint32_t common(const Fp& a, const Fp& b);

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// Field descriptor: characteristic p for GF(p), 0 for the rationals.
struct Field {
  std::uint32_t p = 0;

  bool rational() const noexcept { return p == 0; }
  std::string describe() const { return rational() ? "Q" : "GF(" + std::to_string(p) + ")"; }
  friend bool operator==(const Field&, const Field&) = default;
};

template <typename Scalar>
struct FieldTraits;

template <>
struct FieldTraits<Fp> {
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static Fp inverse(const Fp& x) { return x.inverse(); }
  static Field field_of(const Fp& x) { return Field{x.modulus()}; }
  static Fp bind(const Fp& x, const Field& f) { return f.p ? x.bound_to(f.p) : x; }
  static Fp from_int(std::int64_t v, const Field& f) { return Fp(v, f.p); }
  static std::string to_string(const Fp& x) { return std::to_string(x.value()); }
  static Fp parse(const std::string& token, const Field& f);
};

template <>
struct FieldTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw Error(Errc::BadParameter, "division by zero");
    return Rational(1) / x;
  }
  static Field field_of(const Rational&) { return Field{0}; }
  static Rational bind(const Rational& x, const Field&) { return x; }
  static Rational from_int(std::int64_t v, const Field&) { return Rational(v); }
  static std::string to_string(const Rational& x) { return x.str(); }
  static Rational parse(const std::string& token, const Field& f);
};

}  // namespace loopnet

namespace Eigen {

template <>
struct NumTraits<loopnet::Fp> : GenericNumTraits<loopnet::Fp> {
  using Real = loopnet::Fp;
  using NonInteger = loopnet::Fp;
  using Literal = loopnet::Fp;
  using Nested = loopnet::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
