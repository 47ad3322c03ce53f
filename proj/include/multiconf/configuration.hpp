#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multiconf/groebner.hpp"
#include "multiconf/linalg.hpp"
#include "multiconf/multicomplex.hpp"

namespace multiconf {

/// F_i: forms l_{i,0}, ..., l_{i,c_i}, each expected to have leading
/// monomial x_lead.
struct FormFamily {
  std::size_t lead = 0;
  std::vector<Polynomial> forms;
};

using FormFamilies = std::vector<FormFamily>;

/// Families F_1..F_n with lead variables x_1..x_n.
FormFamilies make_families(std::vector<std::vector<Polynomial>> forms);

struct ValidationIssue {
  enum class Kind { FamilyCount, FamilySize, WrongRing, NotHomogeneous, NotLinear, NotInitial, DuplicatePoint };
  Kind kind;
  /// Family (0-based) and form index where applicable, -1 otherwise.
  int family = -1;
  int form = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Checks family count and sizes, linearity, homogeneity, x_i-initiality in
/// the forms' ring order and distinctness of the point ideals.
ValidationReport validate_input(const Multicomplex& m, const FormFamilies& families);

struct ConfigurationIdeal {
  Ideal ideal;
  /// The set E: exponents of the minimal generators of I(M), in the order of
  /// the generators of ideal.
  std::vector<Exponent> exponents;
  /// Hypotheses of the main construction that fail but do not prevent
  /// building the ideal (nonlinear, non-initial forms, repeated points).
  std::vector<std::string> warnings;
};

/// f(a) = prod_i prod_{j < a_i} l_{i,j} for each minimal generator x^a of
/// I(M). Throws InvalidInput on a wrong family count or size, forms from
/// different rings, or inhomogeneous forms.
ConfigurationIdeal build_ideal(const Multicomplex& m, const FormFamilies& families);

struct PointIdeal {
  Exponent b;
  std::vector<Polynomial> forms;
  /// Reduced row-echelon form of the coefficient matrix of forms.
  Matrix canonical;

  Ideal ideal() const;
};

/// One point ideal (l_{1,b_1}, ..., l_{n,b_n}) per b in M, in the order of
/// M. Requires linear forms.
std::vector<PointIdeal> point_ideals(const Multicomplex& m, const FormFamilies& families);

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  std::size_t multicomplex_size = 0;
  long long degree = 0;
  int height = -1;
  std::vector<std::string> generators;
  std::vector<std::string> initial_ideal;

  bool passed() const;
  /// First failing check, or nullptr.
  const TheoremCheck* first_failure() const;
};

/// Checks, in order: I is the intersection of the point ideals, the
/// generators f(a) form a Gröbner basis, in(I) = I(M)S, ht(I) = n,
/// deg(S/I) = |M| and a Cohen-Macaulay certificate from in(I).
TheoremReport verify_theorem(const Multicomplex& m, const FormFamilies& families);

/// Forms l_{i,0..caps_i} truncated from each family, caps taken from m.
FormFamilies truncate_families(const FormFamilies& families, const Multicomplex& m);

/// The graded automorphism x_v -> (x_v - u) / c of S, which sends a linear
/// form c x_v + u with u free of x_v to x_v.
struct CoordinateChange {
  std::size_t variable = 0;
  /// Image of x_v.
  Polynomial image;

  Polynomial apply(const Polynomial& f) const;
  FormFamilies apply(const FormFamilies& families) const;
};

/// Change sending the first form of family to its lead variable, or nullopt
/// when it already is that variable. x_i-initiality of the families is
/// preserved because the substitution is triangular.
std::optional<CoordinateChange> straightening(const FormFamily& family);

struct RandomInstance {
  Multicomplex multicomplex;
  FormFamilies families;
  RingPtr ring;
};

struct RandomInstanceOptions {
  std::size_t max_n = 3;
  int max_cap = 3;
  std::size_t max_m = 5;
  int coefficient_bound = 5;
};

/// Seeded rejection sampler: random downset in the cap box, x_i-initial
/// integer forms, redrawn until all point ideals are distinct.
RandomInstance random_instance(std::uint64_t seed, const Field& field, const RandomInstanceOptions& options = {});

}  // namespace multiconf
