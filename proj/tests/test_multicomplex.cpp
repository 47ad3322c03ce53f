#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "multiconf/groebner.hpp"
#include "multiconf/multicomplex.hpp"
#include "oracles.hpp"

using namespace multiconf;

namespace {

// Brute-force complement: minimal exponents in the cap box (enlarged by one)
// that are not in M.
std::vector<Exponent> complement_generators(const Multicomplex& m) {
  std::vector<Exponent> outside;
  const std::size_t n = m.nvars();
  Exponent a(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      if (!m.contains(a)) outside.push_back(a);
      return;
    }
    for (int e = 0; e <= m.caps()[k] + 1; ++e) {
      a[k] = e;
      rec(k + 1);
    }
  };
  rec(0);
  std::vector<Exponent> minimal;
  for (const auto& u : outside) {
    bool is_min = true;
    for (std::size_t i = 0; i < n && is_min; ++i)
      if (u[i] > 0) {
        Exponent v = u;
        --v[i];
        is_min = m.contains(v);
      }
    if (is_min) minimal.push_back(u);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

Multicomplex random_multicomplex(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 3;
  std::vector<Exponent> tops;
  for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
    Exponent t(n);
    for (auto& e : t) e = static_cast<int>(rng() % 4);
    tops.push_back(t);
  }
  std::vector<Exponent> mons;
  for (const auto& t : tops) {
    Exponent a(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == n) {
        mons.push_back(a);
        return;
      }
      for (int e = 0; e <= t[k]; ++e) {
        a[k] = e;
        rec(k + 1);
      }
    };
    rec(0);
  }
  return Multicomplex::create(n, mons);
}

}  // namespace

TEST_CASE("multicomplex construction") {
  const auto m = Multicomplex::create({2, 1}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK(m.size() == 4);
  CHECK(m.contains_variable(0));
  CHECK(m.contains_variable(1));
  CHECK(Multicomplex::create(std::vector<int>{0}, {{0}}).size() == 1);
  CHECK_THROWS_AS(Multicomplex::create({1}, {{1}}), InvalidMulticomplex);
  CHECK_THROWS_AS(Multicomplex::create({1, 1}, {{0, 0}, {1, 1}}), InvalidMulticomplex);
  CHECK_THROWS_AS(Multicomplex::create(std::vector<int>{0}, {{0}, {1}}), InvalidMulticomplex);
}

TEST_CASE("ideal_of") {
  const auto m = Multicomplex::create({2, 1}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK(ideal_of(m) == MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}));
  CHECK(ideal_of(Multicomplex::create({0, 0, 0}, {{0, 0, 0}})) == MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto small = Multicomplex::create({1, 1}, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(ideal_of(small).generators() == complement_generators(small));
  CHECK(ideal_of(small) == MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("standard_monomials") {
  CHECK(standard_monomials(MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}})) ==
        Multicomplex::create({2, 1}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
  CHECK(standard_monomials(MonomialIdeal(2, {{2, 0}, {0, 1}})) == Multicomplex::create({1, 0}, {{0, 0}, {1, 0}}));
  CHECK(standard_monomials(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).size() == 1);
  CHECK_THROWS_AS(standard_monomials(MonomialIdeal(2, {{1, 1}})), InvalidInput);
}

TEST_CASE("deletion and colon_link") {
  const auto m = Multicomplex::create({2, 1}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK(deletion(m, 0) == Multicomplex::create({1}, {{0}, {1}}));
  CHECK(deletion(m, 1) == Multicomplex::create(std::vector<int>{2}, {{0}, {1}, {2}}));
  CHECK(deletion(Multicomplex::create({0, 0}, {{0, 0}}), 1).size() == 1);

  const auto link = colon_link(m, 0);
  CHECK(link == Multicomplex::create({1, 0}, {{0, 0}, {1, 0}}));
  CHECK(ideal_of(link) == MonomialIdeal(2, {{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(colon_link(Multicomplex::create(std::vector<int>{0}, {{0}}), 0), InvalidInput);

  // caps (1,1), full box: I(M) = (x1^2, x2^2), I(M) : x1 = (x1, x2^2)
  const auto box = Multicomplex::create({1, 1}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(ideal_of(colon_link(box, 0)) == ideal_of(box).colon({1, 0}));
  CHECK(colon_link(box, 0) == Multicomplex::create({0, 1}, {{0, 0}, {0, 1}}));
}

TEST_CASE("multicomplex properties on random downsets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Multicomplex m = random_multicomplex(rng);
    const MonomialIdeal I = ideal_of(m);
    CHECK(I.generators() == complement_generators(m));
    CHECK(I.is_artinian());
    CHECK(standard_monomials(I) == m);
    // every generator divided by any of its variables lands in M
    for (const auto& g : I.generators())
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > 0) {
          Exponent h = g;
          --h[i];
          CHECK(m.contains(h));
        }
    // the quotient has exactly |M| standard monomials
    long long count = 0;
    int top = 0;
    for (int c : m.caps()) top += c;
    for (int d = 0; d <= top + 1; ++d) count += oracle::standard_count(I, d);
    CHECK(count == static_cast<long long>(m.size()));
    // the monomial colon agrees with the algebraic colon in the polynomial ring
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (!m.contains_variable(i)) continue;
      const auto link = colon_link(m, i);
      CHECK(link.size() < m.size());
      const auto r = fixture::ring(m.nvars());
      auto to_ideal = [&](const MonomialIdeal& mi) {
        std::vector<Polynomial> gens;
        for (const auto& g : mi.generators()) gens.push_back(Polynomial::term(r, Monomial(g), mpq_class(1)));
        return Ideal(r, gens);
      };
      CHECK(to_ideal(ideal_of(link)) == colon(to_ideal(I), Polynomial::variable(r, i)));
      CHECK(deletion(m, i).size() + link.size() == m.size());
    }
  }
}
