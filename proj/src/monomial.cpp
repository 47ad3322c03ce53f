#include "multiconf/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "multiconf/field.hpp"

namespace multiconf {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("monomial ambient mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + " variables");
}

void validate_rank(const std::vector<int>& rank) {
  std::vector<int> sorted = rank;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw InvalidInput("variable rank is not a permutation");
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0 && other.exp_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] -= other.exp_[i];
    if (r.exp_[i] < 0) throw std::invalid_argument("monomial quotient is not exact");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return r;
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<int> rank(nvars);
  std::iota(rank.begin(), rank.end(), 0);
  return lex(std::move(rank));
}

TermOrder TermOrder::lex(std::vector<int> rank) {
  validate_rank(rank);
  TermOrder o;
  o.kind_ = OrderKind::Lex;
  o.nvars_ = rank.size();
  o.rank_ = std::move(rank);
  return o;
}

TermOrder TermOrder::grevlex(std::size_t nvars) {
  std::vector<int> rank(nvars);
  std::iota(rank.begin(), rank.end(), 0);
  return grevlex(std::move(rank));
}

TermOrder TermOrder::grevlex(std::vector<int> rank) {
  validate_rank(rank);
  TermOrder o;
  o.kind_ = OrderKind::GRevLex;
  o.nvars_ = rank.size();
  o.rank_ = std::move(rank);
  return o;
}

TermOrder TermOrder::induced(const TermOrder& base, int y, int y_prime) {
  const int n = static_cast<int>(base.nvars());
  if (y < 0 || y >= n || y_prime < 0 || y_prime >= n || y == y_prime)
    throw InvalidInput("induced order needs two distinct variables of the ambient");
  TermOrder o;
  o.kind_ = OrderKind::Induced;
  o.nvars_ = base.nvars();
  o.inner_ = std::make_shared<const TermOrder>(base);
  o.y_ = y;
  o.y_prime_ = y_prime;
  return o;
}

TermOrder TermOrder::eliminate(int var, const TermOrder& inner) {
  if (var < 0 || var >= static_cast<int>(inner.nvars())) throw InvalidInput("elimination variable out of range");
  TermOrder o;
  o.kind_ = OrderKind::Eliminate;
  o.nvars_ = inner.nvars();
  o.inner_ = std::make_shared<const TermOrder>(inner);
  o.y_ = var;
  return o;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars_ || b.size() != nvars_)
    throw std::invalid_argument("monomial does not match the ambient of the term order");
  switch (kind_) {
    case OrderKind::Lex:
      for (int v : rank_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    case OrderKind::GRevLex: {
      const int da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      for (auto it = rank_.rbegin(); it != rank_.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
      return std::strong_ordering::equal;
    }
    case OrderKind::Induced: {
      Monomial da(a), db(b);
      da[y_] += da[y_prime_];
      da[y_prime_] = 0;
      db[y_] += db[y_prime_];
      db[y_prime_] = 0;
      const auto c = inner_->compare(da, db);
      if (c != std::strong_ordering::equal) return c;
      return a[y_] <=> b[y_];
    }
    case OrderKind::Eliminate:
      if (a[y_] != b[y_]) return a[y_] <=> b[y_];
      return inner_->compare(a, b);
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::with_appended_variable() const {
  const int fresh = static_cast<int>(nvars_);
  switch (kind_) {
    case OrderKind::Lex:
    case OrderKind::GRevLex: {
      std::vector<int> rank = rank_;
      rank.push_back(fresh);
      return kind_ == OrderKind::Lex ? lex(std::move(rank)) : grevlex(std::move(rank));
    }
    case OrderKind::Induced:
      return induced(inner_->with_appended_variable(), y_, y_prime_);
    case OrderKind::Eliminate:
      return eliminate(y_, inner_->with_appended_variable());
  }
  return *this;
}

bool TermOrder::operator==(const TermOrder& other) const {
  if (kind_ != other.kind_ || nvars_ != other.nvars_ || rank_ != other.rank_ || y_ != other.y_ ||
      y_prime_ != other.y_prime_)
    return false;
  if (inner_ && other.inner_) return *inner_ == *other.inner_;
  return !inner_ && !other.inner_;
}

}  // namespace multiconf
