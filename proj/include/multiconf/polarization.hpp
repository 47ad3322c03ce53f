#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiconf/groebner.hpp"
#include "multiconf/multicomplex.hpp"

namespace multiconf {

/// Classical polarization x_i^a -> x_{i,1} ... x_{i,a}.
struct PolarizedMonomialIdeal {
  MonomialIdeal ideal;
  /// variables[k] = (i, j): the k-th polarized variable is x_{i,j} (both 1-based).
  std::vector<std::pair<int, int>> variables;
  std::vector<std::string> names;
};

PolarizedMonomialIdeal polarize_full(const MonomialIdeal& ideal);

/// S' = S[y'] with the induced (depolarization) order for a chosen variable y.
class PolarizationContext {
 public:
  /// y' is named after y with one more prime; throws InvalidInput if that
  /// name is already taken.
  static PolarizationContext create(RingPtr base, std::size_t y);

  const RingPtr& base_ring() const { return base_; }
  /// S' ordered by the induced order.
  const RingPtr& ring() const { return ring_; }
  std::size_t y() const { return y_; }
  std::size_t y_prime() const { return y_prime_; }

  /// S -> S' inclusion.
  Polynomial embed(const Polynomial& g) const;
  /// S' -> S, substituting y for y'.
  Polynomial depolarize(const Polynomial& p) const;
  /// S -> S', substituting y' for y.
  Polynomial rename_to_prime(const Polynomial& g) const;

 private:
  PolarizationContext() = default;

  RingPtr base_;
  RingPtr ring_;
  std::size_t y_ = 0;
  std::size_t y_prime_ = 0;
};

struct PolarizedBasis {
  std::vector<Polynomial> elements;
  PolarizationContext context;
};

/// P_y(g) = r_0 + y r_1 + sum_{i>=2} y (y')^{i-1} r_i for g = sum y^i r_i.
/// g may live in S or in S' (then it must not involve y').
Polynomial geom_polarize(const Polynomial& g, const PolarizationContext& ctx);
PolarizedBasis geom_polarize_basis(std::span<const Polynomial> basis, const PolarizationContext& ctx);

/// y - y' is a nonzerodivisor modulo (P_y(G)).
bool check_nzd_polarization(const PolarizedBasis& p);
/// P_y(G) satisfies the Buchberger criterion under the induced order.
bool check_induced_gb(const PolarizedBasis& p);

/// in_<(g) = in_<(in_y(g)) for every g of the list, in the list's ring order.
bool is_y_compatible(std::span<const Polynomial> basis, std::size_t y);

}  // namespace multiconf
