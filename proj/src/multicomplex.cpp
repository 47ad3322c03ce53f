#include "multiconf/multicomplex.hpp"

#include <algorithm>
#include <numeric>

namespace multiconf {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string exponent_to_string(const Exponent& a, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[k];
    if (a[k] > 1) s += '^' + std::to_string(a[k]);
  }
  return s.empty() ? "1" : s;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponent> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw InvalidInput("monomial generator has the wrong number of variables");
    if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
      throw InvalidInput("negative exponent in monomial generator");
  }
  gens_ = minimalize(std::move(generators));
}

Exponent MonomialIdeal::unit_vector(std::size_t i) const {
  Exponent e(nvars_, 0);
  e.at(i) = 1;
  return e;
}

bool MonomialIdeal::contains(const Exponent& a) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, a); });
}

bool MonomialIdeal::is_artinian() const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    bool pure = std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) {
      for (std::size_t k = 0; k < nvars_; ++k)
        if (k != i && g[k] != 0) return false;
      return g[i] > 0;
    });
    if (!pure) return false;
  }
  return true;
}

MonomialIdeal MonomialIdeal::colon(const Exponent& a) const {
  std::vector<Exponent> shifted;
  for (auto g : gens_) {
    for (std::size_t k = 0; k < nvars_; ++k) g[k] = std::max(0, g[k] - a[k]);
    shifted.push_back(std::move(g));
  }
  return MonomialIdeal(nvars_, std::move(shifted));
}

MonomialIdeal MonomialIdeal::extended_to(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink the ambient of a monomial ideal");
  std::vector<Exponent> gens;
  for (auto g : gens_) {
    g.resize(nvars, 0);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += exponent_to_string(gens_[i], names);
  }
  return s + ")";
}

std::string MonomialIdeal::to_string() const { return to_string(default_names(nvars_)); }

Multicomplex Multicomplex::create(std::vector<int> caps, std::vector<Exponent> monomials) {
  const std::size_t n = caps.size();
  if (std::any_of(caps.begin(), caps.end(), [](int c) { return c < 0; }))
    throw InvalidMulticomplex("caps must be non-negative");
  if (monomials.empty()) throw InvalidMulticomplex("a multicomplex must be non-empty");
  std::set<Exponent> set;
  for (auto& a : monomials) {
    if (a.size() != n)
      throw InvalidMulticomplex("monomial " + std::to_string(set.size()) + " has " + std::to_string(a.size()) +
                                " exponents, expected " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] < 0) throw InvalidMulticomplex("negative exponent in multicomplex");
      if (a[k] > caps[k])
        throw InvalidMulticomplex("monomial " + exponent_to_string(a, default_names(n)) + " exceeds cap c_" +
                                  std::to_string(k + 1) + " = " + std::to_string(caps[k]));
    }
    set.insert(std::move(a));
  }
  if (!set.count(Exponent(n, 0))) throw InvalidMulticomplex("downset violation: the monomial 1 is missing");
  for (const auto& a : set)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] == 0) continue;
      Exponent b = a;
      --b[k];
      if (!set.count(b))
        throw InvalidMulticomplex("downset violation: " + exponent_to_string(a, default_names(n)) +
                                  " is present but its divisor " + exponent_to_string(b, default_names(n)) +
                                  " is not");
    }
  return Multicomplex(std::move(caps), std::move(set));
}

Multicomplex Multicomplex::create(std::size_t nvars, std::vector<Exponent> monomials) {
  std::vector<int> caps(nvars, 0);
  for (const auto& a : monomials)
    for (std::size_t k = 0; k < std::min(nvars, a.size()); ++k) caps[k] = std::max(caps[k], a[k]);
  return create(std::move(caps), std::move(monomials));
}

bool Multicomplex::contains_variable(std::size_t i) const {
  Exponent e(nvars(), 0);
  e.at(i) = 1;
  return contains(e);
}

std::string Multicomplex::to_string(const std::vector<std::string>& names) const {
  std::string s = "{";
  bool first = true;
  for (const auto& a : monomials_) {
    if (!first) s += ", ";
    first = false;
    s += exponent_to_string(a, names);
  }
  return s + "}";
}

std::string Multicomplex::to_string() const { return to_string(default_names(nvars())); }

MonomialIdeal ideal_of(const Multicomplex& m) {
  const std::size_t n = m.nvars();
  std::vector<Exponent> gens;
  for (const auto& a : m.monomials())
    for (std::size_t i = 0; i < n; ++i) {
      Exponent u = a;
      ++u[i];
      if (m.contains(u)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < n && minimal; ++k) {
        if (u[k] == 0) continue;
        Exponent v = u;
        --v[k];
        minimal = m.contains(v);
      }
      if (minimal) gens.push_back(std::move(u));
    }
  return MonomialIdeal(n, std::move(gens));
}

Multicomplex standard_monomials(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  if (!ideal.is_artinian()) throw InvalidInput("monomial ideal " + ideal.to_string() + " is not Artinian");
  // bound each exponent by the pure power of that variable
  std::vector<int> bound(n, 0);
  for (const auto& g : ideal.generators()) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) {
        ++support;
        var = k;
      }
    if (support == 1) bound[var] = bound[var] == 0 ? g[var] : std::min(bound[var], g[var]);
  }
  std::vector<Exponent> standard;
  Exponent a(n, 0);
  while (true) {
    if (!ideal.contains(a)) standard.push_back(a);
    std::size_t k = 0;
    while (k < n && a[k] + 1 >= bound[k]) a[k++] = 0;
    if (k == n) break;
    ++a[k];
  }
  return Multicomplex::create(n, std::move(standard));
}

Multicomplex deletion(const Multicomplex& m, std::size_t i) {
  const std::size_t n = m.nvars();
  if (i >= n) throw std::out_of_range("deletion variable out of range");
  std::vector<Exponent> kept;
  for (const auto& a : m.monomials()) {
    if (a[i] != 0) continue;
    Exponent b;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) b.push_back(a[k]);
    kept.push_back(std::move(b));
  }
  return Multicomplex::create(n - 1, std::move(kept));
}

Multicomplex colon_link(const Multicomplex& m, std::size_t i) {
  const std::size_t n = m.nvars();
  if (i >= n) throw std::out_of_range("colon variable out of range");
  if (!m.contains_variable(i))
    throw InvalidInput("colon link at x" + std::to_string(i + 1) + " requires x" + std::to_string(i + 1) +
                       " to lie in the multicomplex");
  Exponent xi(n, 0);
  xi[i] = 1;
  return standard_monomials(ideal_of(m).colon(xi));
}

}  // namespace multiconf
