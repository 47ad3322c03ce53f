#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace multiconf {

/// Coefficient storage. Over Q this is a canonical mpq; over F_p it is an
/// integer representative in [0, p) with denominator 1.
using Coeff = mpq_class;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coefficient field: either the rationals or a prime field F_p.
/// All coefficient arithmetic goes through a Field so that values stay
/// normalized (lowest terms / reduced residues).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidInput unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Coeff from_int(long v) const;
  /// Maps an exact rational into the field. Over F_p the denominator must be
  /// invertible.
  Coeff from_rational(const mpq_class& q) const;
  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  static bool is_one(const Coeff& a) { return a == 1; }

  std::string to_string(const Coeff& a) const { return a.get_str(); }
  /// "q" or "p:<prime>".
  std::string spec() const;

  bool operator==(const Field& other) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  Coeff reduce(const mpz_class& z) const;

  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Parses "q", "Q", "rationals", or "p:<prime>".
Field parse_field(const std::string& spec);

}  // namespace multiconf
