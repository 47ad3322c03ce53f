#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "multiconf/field.hpp"
#include "multiconf/monomial.hpp"

namespace multiconf {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// kappa[x_1..x_m] with a fixed coefficient field, variable names and term
/// order. Rings are immutable and shared between the polynomials that live
/// in them.
class PolyRing {
 public:
  static RingPtr make(Field field, std::vector<std::string> names, TermOrder order);
  /// Lex with x_1 > ... > x_m in the order the names are given.
  static RingPtr make(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const TermOrder& order() const { return order_; }

  /// Throws InvalidInput for unknown names.
  int index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  /// Same field and names plus one trailing variable, ranked last.
  RingPtr with_appended_variable(const std::string& name) const;
  RingPtr with_order(TermOrder order) const;

  bool same_as(const PolyRing& other) const {
    return field_ == other.field_ && names_ == other.names_ && order_ == other.order_;
  }

 private:
  PolyRing(Field field, std::vector<std::string> names, TermOrder order)
      : field_(field), names_(std::move(names)), order_(std::move(order)) {}

  Field field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Coeff coeff;
};

/// A polynomial with terms kept strictly descending in the ring's order,
/// without duplicate monomials or zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), Coeff(1)); }
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Coeff& c);
  /// sum_k coeffs[k] * x_k; coefficients are mapped into the field.
  static Polynomial linear_form(RingPtr ring, std::span<const mpq_class> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  /// Leading data; the polynomial must be nonzero.
  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().monomial; }
  const Coeff& lead_coeff() const { return lead_term().coeff; }

  /// Maximal total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Largest power of variable var dividing some term; -1 for zero.
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// in_y(f): the part of f of highest degree in y.
  Polynomial initial_in(std::size_t var) const;
  /// Coefficient of y^k viewing f in (kappa[other vars])[y].
  Polynomial coefficient_in(std::size_t var, int power) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_term(const Monomial& m, const Coeff& c) const;
  /// *this -= c * m * g, in place.
  void subtract_multiple(const Coeff& c, const Monomial& m, const Polynomial& g);
  Polynomial monic() const;
  /// Removes and returns the leading term.
  Term take_lead();

  /// Moves the polynomial to another ring; var_map[i] is the target index of
  /// variable i. Terms are re-sorted in the target order.
  Polynomial mapped_to(RingPtr target, std::span<const int> var_map) const;
  /// Same variables, different ring object (e.g. another order).
  Polynomial in_ring(RingPtr target) const;

  Coeff evaluate(std::span<const Coeff> point) const;

  /// Canonical text form, e.g. "x1^2 + 3/2*x1*x3 - x2".
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);
std::string to_string(std::span<const Polynomial> polys);

}  // namespace multiconf
