#pragma once

#include <set>
#include <string>
#include <vector>

#include "multiconf/field.hpp"
#include "multiconf/monomial.hpp"

namespace multiconf {

/// Thrown when a set of exponent vectors is not a valid c-multicomplex.
class InvalidMulticomplex : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A monomial ideal of kappa[x_1..x_n] given by its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Keeps only the minimal elements of the given generators.
  MonomialIdeal(std::size_t nvars, std::vector<Exponent> generators);

  std::size_t nvars() const { return nvars_; }
  /// Minimal generators, sorted lexicographically by exponent vector.
  const std::vector<Exponent>& generators() const { return gens_; }

  bool contains(const Exponent& a) const;
  /// Every variable has a pure power among the generators.
  bool is_artinian() const;
  /// Generators whose exponent vectors sum to one, i.e. variables.
  bool contains_variable(std::size_t i) const { return contains(unit_vector(i)); }

  /// I : x^a, by shifting exponents down and re-minimalizing.
  MonomialIdeal colon(const Exponent& a) const;
  /// The same generators in an ambient with extra trailing variables.
  MonomialIdeal extended_to(std::size_t nvars) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const = default;

 private:
  Exponent unit_vector(std::size_t i) const;

  std::size_t nvars_ = 0;
  std::vector<Exponent> gens_;
};

/// A finite, divisibility-closed set of c-monomials containing 1.
class Multicomplex {
 public:
  /// Validates the downset and cap conditions; throws InvalidMulticomplex.
  static Multicomplex create(std::vector<int> caps, std::vector<Exponent> monomials);
  /// Same, with caps taken as the componentwise maxima.
  static Multicomplex create(std::size_t nvars, std::vector<Exponent> monomials);

  std::size_t nvars() const { return caps_.size(); }
  const std::vector<int>& caps() const { return caps_; }
  const std::set<Exponent>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool contains(const Exponent& a) const { return monomials_.count(a) > 0; }
  bool contains_variable(std::size_t i) const;
  bool is_trivial() const { return monomials_.size() == 1; }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  bool operator==(const Multicomplex& other) const = default;

 private:
  Multicomplex(std::vector<int> caps, std::set<Exponent> monomials)
      : caps_(std::move(caps)), monomials_(std::move(monomials)) {}

  std::vector<int> caps_;
  std::set<Exponent> monomials_;
};

/// I(M): minimal generators of the ideal spanned by monomials outside M.
MonomialIdeal ideal_of(const Multicomplex& m);

/// The standard monomials of an Artinian monomial ideal, with minimal caps.
/// Throws InvalidInput for non-Artinian input.
Multicomplex standard_monomials(const MonomialIdeal& ideal);

/// M' = {u in M : x_i does not divide u}, supported on the remaining
/// variables (index i removed).
Multicomplex deletion(const Multicomplex& m, std::size_t i);

/// M'' with I(M'') = I(M) : x_i. Requires x_i in M.
Multicomplex colon_link(const Multicomplex& m, std::size_t i);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t n);
std::string exponent_to_string(const Exponent& a, const std::vector<std::string>& names);

}  // namespace multiconf
