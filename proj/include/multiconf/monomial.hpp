#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace multiconf {

using Exponent = std::vector<int>;

/// A monomial x^a as a dense exponent vector over the ambient variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(Exponent exponents) : exp_(std::move(exponents)) {}
  Monomial(std::initializer_list<int> exponents) : exp_(exponents) {}

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    Monomial m(nvars);
    m.exp_[index] = power;
    return m;
  }

  std::size_t size() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  int& operator[](std::size_t i) { return exp_[i]; }
  const Exponent& exponents() const { return exp_; }

  int degree() const;
  bool is_one() const;

  /// Componentwise <=. Ambients must agree.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  /// Plain lexicographic comparison of exponent vectors, used only for
  /// container ordering, never as a term order.
  auto operator<=>(const Monomial& other) const = default;

 private:
  Exponent exp_;
};

enum class OrderKind { Lex, GRevLex, Induced, Eliminate };

/// A monomial order on a fixed number of variables.
///
/// Lex and GRevLex follow a variable rank (rank[0] is the largest variable).
/// Induced is the depolarization order: compare depol(mu), depol(nu) in the
/// base order (depol moves the exponent of yPrime onto y), and break ties by
/// the exponent of y. Eliminate compares the exponent of one variable first
/// and falls back to an inner order; it is used internally for elimination.
class TermOrder {
 public:
  static TermOrder lex(std::size_t nvars);
  static TermOrder lex(std::vector<int> rank);
  static TermOrder grevlex(std::vector<int> rank);
  static TermOrder grevlex(std::size_t nvars);
  static TermOrder induced(const TermOrder& base, int y, int y_prime);
  static TermOrder eliminate(int var, const TermOrder& inner);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<int>& rank() const { return rank_; }
  int y() const { return y_; }
  int y_prime() const { return y_prime_; }
  const TermOrder& base() const { return *inner_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::greater; }

  /// The same order on nvars+1 variables, with the new variable ranked last.
  /// For Induced orders the base order is extended.
  TermOrder with_appended_variable() const;

  bool operator==(const TermOrder& other) const;

 private:
  TermOrder() = default;

  OrderKind kind_ = OrderKind::Lex;
  std::size_t nvars_ = 0;
  std::vector<int> rank_;
  std::shared_ptr<const TermOrder> inner_;
  int y_ = -1;
  int y_prime_ = -1;
};

}  // namespace multiconf

template <>
struct std::hash<multiconf::Monomial> {
  std::size_t operator()(const multiconf::Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }
};
