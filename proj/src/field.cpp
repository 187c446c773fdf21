#include "loopnet/field.hpp"

#include <charconv>

namespace loopnet {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Fp::Fp(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) {
    value_ = value;
    return;
  }
  value_ = value % static_cast<std::int64_t>(modulus);
  if (value_ < 0) value_ += modulus;
}

std::uint32_t Fp::common(const Fp& a, const Fp& b) {
  if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_)
    throw Error(Errc::MixedFields,
                "GF(" + std::to_string(a.modulus_) + ") vs GF(" + std::to_string(b.modulus_) + ")");
  return a.modulus_ ? a.modulus_ : b.modulus_;
}

Fp& Fp::operator+=(const Fp& o) {
  const auto p = common(*this, o);
  *this = Fp(value_ + o.value_, p);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  const auto p = common(*this, o);
  *this = Fp(value_ - o.value_, p);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  const auto p = common(*this, o);
  if (p) {
    const std::int64_t a = Fp(value_, p).value_;
    const std::int64_t b = Fp(o.value_, p).value_;
    *this = Fp(a * b, p);
  } else {
    *this = Fp(value_ * o.value_, 0);
  }
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  const auto p = common(*this, o);
  if (!p) throw Error(Errc::BadParameter, "division of unbound residues");
  return *this *= o.bound_to(p).inverse();
}

Fp Fp::pow(std::int64_t e) const {
  if (!bound()) throw Error(Errc::BadParameter, "power of an unbound residue");
  if (e < 0) return inverse().pow(-e);
  Fp base = *this;
  Fp acc(1, modulus_);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (!bound() && (value_ == 1 || value_ == -1)) return *this;
  if (!bound()) throw Error(Errc::BadParameter, "inverse of an unbound residue");
  if (value_ == 0) throw Error(Errc::BadParameter, "division by zero in GF(" + std::to_string(modulus_) + ")");
  // Extended Euclid on (value, p).
  std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
  while (r1) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return Fp(t0, modulus_);
}

bool operator==(const Fp& a, const Fp& b) {
  const auto p = Fp::common(a, b);
  if (!p) return a.value_ == b.value_;
  return Fp(a.value_, p).value_ == Fp(b.value_, p).value_;
}

std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
  const auto p = Fp::common(a, b);
  if (!p) return a.value_ <=> b.value_;
  return Fp(a.value_, p).value_ <=> Fp(b.value_, p).value_;
}

Fp FieldTraits<Fp>::parse(const std::string& token, const Field& f) {
  std::int64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) throw Error(Errc::ParseError, "bad residue '" + token + "'");
  return Fp(v, f.p);
}

Rational FieldTraits<Rational>::parse(const std::string& token, const Field&) {
  try {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(BigInt(token));
    const BigInt num(token.substr(0, slash));
    const BigInt den(token.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + token + "'");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(Errc::ParseError, "bad rational '" + token + "'");
  }
}

}  // namespace loopnet
