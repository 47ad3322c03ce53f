#include "multiconf/field.hpp"

namespace multiconf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Coeff Field::reduce(const mpz_class& z) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
  return Coeff(r);
}

Coeff Field::from_int(long v) const {
  if (p_ == 0) return Coeff(v);
  return reduce(mpz_class(v));
}

Coeff Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) {
    Coeff c(q);
    c.canonicalize();
    return c;
  }
  Coeff den = reduce(q.get_den());
  if (is_zero(den)) throw InvalidInput("denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p_));
  return mul(reduce(q.get_num()), inv(den));
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a + b;
  return reduce(a.get_num() + b.get_num());
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a - b;
  return reduce(a.get_num() - b.get_num());
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a * b;
  return reduce(a.get_num() * b.get_num());
}

Coeff Field::neg(const Coeff& a) const {
  if (p_ == 0) return -a;
  return reduce(-a.get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in field " + spec());
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Coeff(r);
}

std::string Field::spec() const {
  if (p_ == 0) return "q";
  return "p:" + std::to_string(p_);
}

Field parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q" || spec == "rationals") return Field::rationals();
  if (spec.rfind("p:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(spec.substr(2), &used);
      if (used != spec.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse field specification '" + spec + "'");
    }
    return Field::prime(p);
  }
  throw InvalidInput("unknown field specification '" + spec + "' (expected q or p:PRIME)");
}

}  // namespace multiconf
