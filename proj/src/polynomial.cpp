#include "multiconf/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace multiconf {

RingPtr PolyRing::make(Field field, std::vector<std::string> names, TermOrder order) {
  if (order.nvars() != names.size())
    throw InvalidInput("term order has " + std::to_string(order.nvars()) + " variables, ring has " +
                       std::to_string(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidInput("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw InvalidInput("duplicate variable name '" + names[i] + "'");
  }
  return RingPtr(new PolyRing(field, std::move(names), std::move(order)));
}

RingPtr PolyRing::make(Field field, std::vector<std::string> names) {
  auto order = TermOrder::lex(names.size());
  return make(field, std::move(names), std::move(order));
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw InvalidInput("unknown variable '" + name + "'");
}

bool PolyRing::has_variable(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr PolyRing::with_appended_variable(const std::string& name) const {
  auto names = names_;
  names.push_back(name);
  return make(field_, std::move(names), order_.with_appended_variable());
}

RingPtr PolyRing::with_order(TermOrder order) const { return make(field_, names_, std::move(order)); }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && a->same_as(*b)); }

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (t.monomial.size() != p.ring_->nvars()) throw std::invalid_argument("term does not match ring");
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (Field::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  const auto n = ring->nvars();
  return term(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  const auto n = ring->nvars();
  return term(std::move(ring), Monomial::variable(n, index), Coeff(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Coeff& c) {
  Polynomial p(ring);
  Coeff v = ring->field().from_rational(c);
  if (!Field::is_zero(v)) p.terms_.push_back({std::move(m), std::move(v)});
  return p;
}

Polynomial Polynomial::linear_form(RingPtr ring, std::span<const mpq_class> coeffs) {
  if (coeffs.size() != ring->nvars())
    throw InvalidInput("linear form has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                       std::to_string(ring->nvars()));
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    terms.push_back({Monomial::variable(ring->nvars(), k), ring->field().from_rational(coeffs[k])});
  return from_terms(std::move(ring), std::move(terms));
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Polynomial Polynomial::initial_in(std::size_t var) const {
  const int d = degree_in(var);
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.monomial[var] == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::coefficient_in(std::size_t var, int power) const {
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.monomial[var] == power) {
      Monomial m = t.monomial;
      m[var] = 0;
      terms.push_back({std::move(m), t.coeff});
    }
  return from_terms(ring_, std::move(terms));
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r(*this);
  r.subtract_multiple(ring_->field().from_int(-1), Monomial(ring_->nvars()), other);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r(*this);
  r.subtract_multiple(Coeff(1), Monomial(ring_->nvars()), other);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().from_int(-1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  const auto& field = ring_->field();
  std::unordered_map<Monomial, Coeff> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      auto [it, fresh] = acc.try_emplace(a.monomial * b.monomial, field.mul(a.coeff, b.coeff));
      if (!fresh) it->second = field.add(it->second, field.mul(a.coeff, b.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  const auto& field = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Coeff& c) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  const auto& field = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field.mul(t.coeff, c)});
  return r;
}

void Polynomial::subtract_multiple(const Coeff& c, const Monomial& m, const Polynomial& g) {
  check_ring(g);
  if (Field::is_zero(c) || g.is_zero()) return;
  const auto& field = ring_->field();
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial gm = g.terms_[j].monomial * m;
    if (i == terms_.size()) {
      out.push_back({std::move(gm), field.neg(field.mul(c, g.terms_[j].coeff))});
      ++j;
      continue;
    }
    const auto cmp = order.compare(terms_[i].monomial, gm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({std::move(gm), field.neg(field.mul(c, g.terms_[j].coeff))});
      ++j;
    } else {
      Coeff v = field.sub(terms_[i].coeff, field.mul(c, g.terms_[j].coeff));
      if (!Field::is_zero(v)) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Term Polynomial::take_lead() {
  Term t = lead_term();
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::mapped_to(RingPtr target, std::span<const int> var_map) const {
  if (var_map.size() != ring_->nvars()) throw std::invalid_argument("variable map size mismatch");
  if (!(target->field() == ring_->field())) throw std::invalid_argument("cannot map between different fields");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (var_map[v] < 0 || var_map[v] >= static_cast<int>(target->nvars()))
        throw std::invalid_argument("variable " + ring_->names()[v] + " has no image in the target ring");
      m[var_map[v]] += t.monomial[v];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(target), std::move(terms));
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target->nvars() != ring_->nvars()) throw std::invalid_argument("ring size mismatch");
  std::vector<int> id(ring_->nvars());
  std::iota(id.begin(), id.end(), 0);
  return mapped_to(std::move(target), id);
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluation point has wrong dimension");
  const auto& field = ring_->field();
  Coeff sum = field.zero();
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t k = 0; k < point.size(); ++k)
      for (int e = 0; e < t.monomial[k]; ++e) v = field.mul(v, point[k]);
    sum = field.add(sum, v);
  }
  return sum;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[k];
    if (m[k] > 1) s += '^' + std::to_string(m[k]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool negative = false;
    if (ring_->field().is_rational() && sgn(c) < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = t.monomial.is_one();
    if (unit) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += monomial_to_string(t.monomial, ring_->names());
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

std::string to_string(std::span<const Polynomial> polys) {
  std::string s = "(";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string();
  }
  return s + ")";
}

}  // namespace multiconf
