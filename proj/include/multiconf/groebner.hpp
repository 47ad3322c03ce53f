#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiconf/polynomial.hpp"

namespace multiconf {

/// Normal form of f modulo basis: repeatedly cancels the greatest reducible
/// term using the first basis element (in list order) whose leading
/// monomial divides it.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Same reduction as reduce(), also recording f = sum q_i g_i + remainder.
Division divide(const Polynomial& f, std::span<const Polynomial> basis);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis (monic, inter-reduced, sorted by increasing leading
/// monomial) in the generators' ring order. Buchberger with the normal
/// selection strategy and both Buchberger criteria.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators);

/// Buchberger criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);
/// First pair (i, j) whose S-polynomial has a nonzero normal form.
std::optional<std::pair<std::size_t, std::size_t>> failing_s_pair(std::span<const Polynomial> basis);

/// A finitely generated ideal with a lazily computed reduced Gröbner basis.
/// The cache is shared between copies and filled at most once.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& reduced_basis() const;
  /// Leading monomials of the reduced basis, i.e. minimal generators of in(I).
  std::vector<Monomial> initial_monomials() const;

  Polynomial normal_form(const Polynomial& f) const { return reduce(f, reduced_basis()); }
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return reduced_basis().empty(); }

  Ideal operator+(const Ideal& other) const;
  Ideal mapped_to(RingPtr target, std::span<const int> var_map) const;
  Ideal in_ring(RingPtr target) const;

  std::string to_string() const { return multiconf::to_string(generators_); }

  /// Ideal equality, decided by comparing reduced Gröbner bases.
  bool operator==(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// I ∩ J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// Balanced pairwise intersection; at least one ideal required.
Ideal intersect_all(std::span<const Ideal> ideals);
/// (I : f) = (I ∩ (f)) / f. Throws std::invalid_argument for f = 0.
Ideal colon(const Ideal& ideal, const Polynomial& f);
/// f ∈ sqrt(I), decided by 1 ∈ (I, 1 - t f).
bool radical_member(const Polynomial& f, const Ideal& ideal);
/// (I : f) == I. Throws std::invalid_argument for f = 0.
bool is_regular_element(const Polynomial& f, const Ideal& ideal);

}  // namespace multiconf
