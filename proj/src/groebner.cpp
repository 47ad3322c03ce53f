#include "multiconf/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace multiconf {

namespace {

const Polynomial* first_divisor(const Monomial& m, std::span<const Polynomial> basis, std::size_t* index) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero()) continue;
    if (basis[k].lead_monomial().divides(m)) {
      *index = k;
      return &basis[k];
    }
  }
  return nullptr;
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; ring.has_variable(name); ++k) name = stem + std::to_string(k);
  return name;
}

std::vector<int> identity_map(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

// Minimal, inter-reduced, monic, sorted ascending.
std::vector<Polynomial> make_reduced(std::vector<Polynomial> g) {
  if (g.empty()) return g;
  const auto& order = g.front().ring()->order();
  auto ascending = [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.lead_monomial(), b.lead_monomial()) == std::strong_ordering::less;
  };
  std::stable_sort(g.begin(), g.end(), ascending);
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.lead_monomial().divides(p.lead_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), ascending);
  return reduced;
}

}  // namespace

Division divide(const Polynomial& f, std::span<const Polynomial> basis) {
  const auto& ring = f.ring();
  const auto& field = ring->field();
  Division out{std::vector<Polynomial>(basis.size(), Polynomial(ring)), Polynomial(ring)};
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lead = p.lead_term();
    std::size_t k = 0;
    if (const Polynomial* g = first_divisor(lead.monomial, basis, &k)) {
      const Monomial m = lead.monomial / g->lead_monomial();
      const Coeff c = field.div(lead.coeff, g->lead_coeff());
      p.subtract_multiple(c, m, *g);
      out.quotients[k] = out.quotients[k] + Polynomial::term(ring, m, c);
    } else {
      remainder.push_back(p.take_lead());
    }
  }
  out.remainder = Polynomial::from_terms(ring, std::move(remainder));
  return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  if (basis.empty()) return f;
  const auto& ring = f.ring();
  const auto& field = ring->field();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lead = p.lead_term();
    std::size_t k = 0;
    if (const Polynomial* g = first_divisor(lead.monomial, basis, &k)) {
      const Monomial m = lead.monomial / g->lead_monomial();
      const Coeff c = field.div(lead.coeff, g->lead_coeff());
      p.subtract_multiple(c, m, *g);
    } else {
      remainder.push_back(p.take_lead());
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::vector<Polynomial> divisor{b};
  Division d = divide(a, divisor);
  if (!d.remainder.is_zero()) throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
  return d.quotients[0];
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  const Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  Polynomial s = f.times_term(l / f.lead_monomial(), field.inv(f.lead_coeff()));
  s.subtract_multiple(field.inv(g.lead_coeff()), l / g.lead_monomial(), g);
  return s;
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators) {
  std::vector<Polynomial> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  const RingPtr ring = g.front().ring();
  for (const auto& p : g)
    if (!same_ring(p.ring(), ring)) throw std::invalid_argument("generators live in different rings");
  const auto& order = ring->order();

  for (const auto& p : g)
    if (p.is_constant()) return {Polynomial::one(ring)};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    return g[p.first].lead_monomial().lcm(g[p.second].lead_monomial());
  };
  auto in_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // normal strategy: smallest lcm first, ties broken by the pair's indices
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (order.compare(l, best_lcm) == std::strong_ordering::less) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    if (g[i].lead_monomial().coprime(g[j].lead_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!in_pending(i, k) && !in_pending(j, k) && g[k].lead_monomial().divides(best_lcm)) chain = true;
    }
    if (chain) continue;

    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {Polynomial::one(ring)};
    g.push_back(r.monic());
    const std::size_t n = g.size() - 1;
    for (std::size_t a = 0; a < n; ++a) pending.insert({a, n});
  }
  return make_reduced(std::move(g));
}

std::optional<std::pair<std::size_t, std::size_t>> failing_s_pair(std::span<const Polynomial> basis) {
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_groebner_basis(std::span<const Polynomial> basis) { return !failing_s_pair(basis).has_value(); }

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal generator lives in a different ring");
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::one(ring);
  return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(generators_); });
  return cache_->basis;
}

std::vector<Monomial> Ideal::initial_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : reduced_basis()) out.push_back(g.lead_monomial());
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("membership test across rings");
  return reduce(f, reduced_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& f) { return contains(f); });
}

bool Ideal::is_unit() const {
  const auto& b = reduced_basis();
  return b.size() == 1 && b.front().is_constant();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("ideal sum across rings");
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::mapped_to(RingPtr target, std::span<const int> var_map) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(g.mapped_to(target, var_map));
  return Ideal(std::move(target), std::move(gens));
}

Ideal Ideal::in_ring(RingPtr target) const { return mapped_to(std::move(target), identity_map(ring_->nvars())); }

bool Ideal::operator==(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  const auto& a = reduced_basis();
  const auto& b = other.reduced_basis();
  return a == b;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("intersection across rings");
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->nvars();
  const std::string t_name = fresh_name(*ring, "_t");
  auto names = ring->names();
  names.push_back(t_name);
  const int t = static_cast<int>(n);
  RingPtr ext = PolyRing::make(ring->field(), names, TermOrder::eliminate(t, TermOrder::grevlex(n + 1)));

  const auto embed = identity_map(n);
  const Polynomial tp = Polynomial::variable(ext, n);
  const Polynomial one_minus_t = Polynomial::one(ext) - tp;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(tp * f.mapped_to(ext, embed));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * f.mapped_to(ext, embed));

  std::vector<int> back(n + 1);
  std::iota(back.begin(), back.end(), 0);
  back[n] = -1;
  std::vector<Polynomial> result;
  for (const auto& g : groebner_basis(gens))
    if (!g.involves(n)) result.push_back(g.mapped_to(ring, back));
  return Ideal(ring, std::move(result));
}

Ideal intersect_all(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty family");
  if (ideals.size() == 1) return ideals.front();
  const std::size_t half = ideals.size() / 2;
  return intersect(intersect_all(ideals.first(half)), intersect_all(ideals.subspan(half)));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!same_ring(f.ring(), ideal.ring())) throw std::invalid_argument("colon across rings");
  if (f.is_constant()) return ideal;
  const Ideal principal(ideal.ring(), {f});
  const Ideal both = intersect(ideal, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : both.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), std::move(gens));
}

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw std::invalid_argument("radical membership across rings");
  if (f.is_zero()) return true;
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  auto names = ring->names();
  names.push_back(fresh_name(*ring, "_t"));
  RingPtr ext = PolyRing::make(ring->field(), names, TermOrder::grevlex(n + 1));
  const auto embed = identity_map(n);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.mapped_to(ext, embed));
  gens.push_back(Polynomial::one(ext) - Polynomial::variable(ext, n) * f.mapped_to(ext, embed));
  const auto basis = groebner_basis(gens);
  return basis.size() == 1 && basis.front().is_constant();
}

bool is_regular_element(const Polynomial& f, const Ideal& ideal) {
  if (f.is_zero()) throw std::invalid_argument("regularity of the zero polynomial");
  return colon(ideal, f) == ideal;
}

}  // namespace multiconf
