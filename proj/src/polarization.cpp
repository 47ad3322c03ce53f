#include "multiconf/polarization.hpp"

#include <algorithm>
#include <numeric>

namespace multiconf {

PolarizedMonomialIdeal polarize_full(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<int> width(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) width[i] = std::max(width[i], g[i]);

  PolarizedMonomialIdeal out;
  std::vector<std::size_t> offset(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = out.variables.size();
    for (int j = 1; j <= width[i]; ++j) {
      out.variables.emplace_back(static_cast<int>(i) + 1, j);
      out.names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
  }
  std::vector<Exponent> gens;
  for (const auto& g : ideal.generators()) {
    Exponent e(out.variables.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < g[i]; ++j) e[offset[i] + j] = 1;
    gens.push_back(std::move(e));
  }
  out.ideal = MonomialIdeal(out.variables.size(), std::move(gens));
  return out;
}

PolarizationContext PolarizationContext::create(RingPtr base, std::size_t y) {
  if (y >= base->nvars()) throw InvalidInput("polarization variable out of range");
  const std::string prime_name = base->names()[y] + "'";
  if (base->has_variable(prime_name))
    throw InvalidInput("fresh variable name '" + prime_name + "' collides with an existing variable");
  PolarizationContext ctx;
  ctx.base_ = base;
  ctx.y_ = y;
  ctx.y_prime_ = base->nvars();
  auto names = base->names();
  names.push_back(prime_name);
  ctx.ring_ = PolyRing::make(base->field(), std::move(names),
                             TermOrder::induced(base->order().with_appended_variable(), static_cast<int>(y),
                                                static_cast<int>(ctx.y_prime_)));
  return ctx;
}

Polynomial PolarizationContext::embed(const Polynomial& g) const {
  std::vector<int> map(base_->nvars());
  std::iota(map.begin(), map.end(), 0);
  return g.mapped_to(ring_, map);
}

Polynomial PolarizationContext::depolarize(const Polynomial& p) const {
  std::vector<int> map(ring_->nvars());
  std::iota(map.begin(), map.end(), 0);
  map[y_prime_] = static_cast<int>(y_);
  return p.mapped_to(base_, map);
}

Polynomial PolarizationContext::rename_to_prime(const Polynomial& g) const {
  std::vector<int> map(base_->nvars());
  std::iota(map.begin(), map.end(), 0);
  map[y_] = static_cast<int>(y_prime_);
  return g.mapped_to(ring_, map);
}

Polynomial geom_polarize(const Polynomial& g, const PolarizationContext& ctx) {
  Polynomial lifted = g;
  if (same_ring(g.ring(), ctx.base_ring())) {
    lifted = ctx.embed(g);
  } else if (same_ring(g.ring(), ctx.ring())) {
    if (g.involves(ctx.y_prime())) throw InvalidInput("input to polarization already involves the fresh variable");
  } else {
    throw std::invalid_argument("polynomial does not belong to the polarization context");
  }
  std::vector<Term> terms;
  for (const auto& t : lifted.terms()) {
    Monomial m = t.monomial;
    const int e = m[ctx.y()];
    if (e >= 2) {
      m[ctx.y()] = 1;
      m[ctx.y_prime()] = e - 1;
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(ctx.ring(), std::move(terms));
}

PolarizedBasis geom_polarize_basis(std::span<const Polynomial> basis, const PolarizationContext& ctx) {
  PolarizedBasis out{{}, ctx};
  for (const auto& g : basis) out.elements.push_back(geom_polarize(g, ctx));
  return out;
}

bool check_nzd_polarization(const PolarizedBasis& p) {
  const auto& ctx = p.context;
  const Polynomial diff =
      Polynomial::variable(ctx.ring(), ctx.y()) - Polynomial::variable(ctx.ring(), ctx.y_prime());
  return is_regular_element(diff, Ideal(ctx.ring(), p.elements));
}

bool check_induced_gb(const PolarizedBasis& p) { return is_groebner_basis(p.elements); }

bool is_y_compatible(std::span<const Polynomial> basis, std::size_t y) {
  return std::all_of(basis.begin(), basis.end(), [y](const Polynomial& g) {
    return g.is_zero() || g.lead_monomial() == g.initial_in(y).lead_monomial();
  });
}

}  // namespace multiconf
