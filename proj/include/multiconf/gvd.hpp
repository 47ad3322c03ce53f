#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "multiconf/configuration.hpp"
#include "multiconf/polarization.hpp"

namespace multiconf {

/// Geometric vertex decomposition of I = (G) at y, read off a Gröbner basis
/// G = {y q_1 + r_1, ..., y q_k + r_k, h_1, ..., h_l} linear in y.
struct GvdSplit {
  std::size_t y = 0;
  std::vector<Polynomial> q;
  std::vector<Polynomial> r;
  std::vector<Polynomial> h;
  /// C = (q, h), N = (h), in_y(I) = (y q, h).
  Ideal C;
  Ideal N;
  Ideal in_y;
};

/// Throws InvalidInput if an element has degree >= 2 in y, the order is not
/// y-compatible on G, G is not a Gröbner basis, or the identities
/// in_y(I) = yC + N = C ∩ (N + (y)) fail.
GvdSplit gvd_split(std::span<const Polynomial> basis, std::size_t y);

/// C is proper and sqrt(C) != sqrt(N).
bool is_nondegenerate(const GvdSplit& split);

struct BiliaisonWitness {
  std::size_t y = 0;
  /// y d + r and d; the fraction numerator / denominator gives I/N ≅ (D/N)(-shift).
  Polynomial numerator;
  Polynomial denominator;
  int shift = 1;
  /// Further pairs (y d_i + r_i, d_i) that must agree with the witness modulo N.
  std::vector<std::pair<Polynomial, Polynomial>> equivalents;
};

struct BiliaisonCheck {
  bool passed = false;
  /// Name of the first failing check, empty on success.
  std::string failed_check;
  std::string detail;
};

/// Verifies: numerator and denominator are nonzerodivisors modulo N,
/// in_y(numerator) = y * denominator, N ⊆ I ∩ D, cross-relations lie in N,
/// numerator * D ⊆ denominator * I + N, denominator * I ⊆ numerator * D + N,
/// ht(I) = ht(D) = ht(N) + 1 and the shift equals deg numerator - deg denominator.
BiliaisonCheck verify_biliaison_step(const Ideal& I, const Ideal& D, const Ideal& N, const BiliaisonWitness& w);

struct BiliaisonStep {
  /// Instance the step starts from, over its lead variables.
  Multicomplex multicomplex;
  std::vector<std::string> lead_variables;
  std::string variable;
  /// Image of the split variable under the substitution applied before the
  /// step so that l_{1,0} becomes that variable; empty when l_{1,0} already is.
  std::optional<Polynomial> coordinate_change;
  std::string prime_variable;
  /// I = (P_y(G)), D, N in S[y'] with the induced order.
  Ideal I;
  Ideal D;
  Ideal N;
  BiliaisonWitness witness;
  Multicomplex deletion;
  Multicomplex link;
  bool nonzerodivisor = false;
  bool induced_groebner = false;
  bool nondegenerate = false;
  bool deletion_matches = false;
  bool link_matches = false;
  /// Side conditions for N and D: configuration ideals passing the main
  /// theorem checks, hence Cohen-Macaulay, unmixed and G_0.
  bool side_conditions = false;
  BiliaisonCheck check;

  bool passed() const;
};

struct VariableSplitStep {
  Multicomplex multicomplex;
  std::vector<std::string> lead_variables;
  /// l_{1,0} of the current instance, split off as a hyperplane.
  Polynomial form;
  Multicomplex reduced;
};

struct BaseCaseStep {
  /// Linear forms l_{i,0} of the last instance together with every form
  /// split off before, in the coordinates of the last step.
  std::vector<Polynomial> generators;
  bool complete_intersection = false;
};

using GlicciStep = std::variant<BiliaisonStep, VariableSplitStep, BaseCaseStep>;

struct GlicciCertificate {
  std::vector<GlicciStep> steps;
  /// Set when a sub-check fails; the chain stops at that step.
  std::optional<std::string> failure;

  std::size_t biliaison_count() const;
  bool passed() const;
};

struct GlicciOptions {
  /// Run verify_theorem on the deletion and link data of every step.
  bool certify_side_conditions = true;
};

/// Recursive glicci certificate for I(M, F). Each step either splits off
/// l_{1,0} (when x_1 ∈ I(M)) or performs an elementary biliaison from
/// I(M, F) to I(M'', F'') via a geometric vertex decomposition of the
/// one-step polarization at x_1; the chain ends at a linear complete
/// intersection.
GlicciCertificate glicci_chain(const Multicomplex& m, const FormFamilies& families,
                               const GlicciOptions& options = {});

}  // namespace multiconf
