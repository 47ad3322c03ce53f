#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "multiconf/invariants.hpp"
#include "oracles.hpp"

using namespace multiconf;

namespace {

std::vector<MonomialIdeal> monomial_fixtures() {
  return {
      MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}),
      MonomialIdeal(2, {{2, 0}, {0, 1}}),
      MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 1}, {0, 0, 3}}),
      MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}}),
      MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}),
      MonomialIdeal(4, {{2, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
      MonomialIdeal(2, {{1, 1}}),
  };
}

std::map<std::pair<int, int>, long long> entries(const BettiTable& t) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [k, v] : t.entries())
    if (v != 0) out[k] = v;
  return out;
}

Ideal as_ideal(const RingPtr& r, const MonomialIdeal& mi) {
  std::vector<Polynomial> gens;
  for (const auto& g : mi.generators()) gens.push_back(Polynomial::term(r, Monomial(g), mpq_class(1)));
  return Ideal(r, gens);
}

long long binomial(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("Hilbert numerators") {
  const auto h = hilbert_numerator(MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}), 2);
  CHECK(h.values(5) == std::vector<long long>{1, 2, 1, 0, 0});
  CHECK(h.degree() == 4);
  CHECK(h.dimension() == 0);
  CHECK(hilbert_numerator(MonomialIdeal(3, {}), 3).numerator == IntPoly{1});
  // S/(x1) is a polynomial ring in two variables
  const auto v = hilbert_numerator(MonomialIdeal(3, {{1, 0, 0}}), 3);
  CHECK(v.dimension() == 2);
  CHECK(v.values(4) == std::vector<long long>{1, 2, 3, 4});
}

TEST_CASE("Hilbert numerator matches inclusion-exclusion and standard monomial counts") {
  for (const auto& I : monomial_fixtures()) {
    const auto h = hilbert_numerator(I, I.nvars());
    CHECK(h.numerator == oracle::inclusion_exclusion_numerator(I));
    const auto values = h.values(8);
    for (int d = 0; d < 8; ++d) CHECK(values[d] == oracle::standard_count(I, d));
  }
}

TEST_CASE("degree and height") {
  const auto fp = fixture::four_points();
  const Ideal I = fixture::ideal(fp.ring, fixture::four_point_generators());
  CHECK(degree_of(I) == 4);
  CHECK(height_of(I) == 2);
  CHECK(initial_ideal(I) == MonomialIdeal(3, {{3, 0, 0}, {1, 1, 0}, {0, 2, 0}}));
  CHECK(degree_of(fixture::ideal(fp.ring, {"x1 + x2", "x2 - x3"})) == 1);
  CHECK(height_monomial(MonomialIdeal(3, {{3, 0, 0}, {1, 1, 0}, {0, 2, 0}})) == 2);
  CHECK(height_monomial(MonomialIdeal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})) == 4);
  CHECK(height_monomial(MonomialIdeal(3, {{1, 1, 0}})) == 1);
  CHECK(height_monomial(MonomialIdeal(3, {})) == 0);
  CHECK_THROWS_AS(height_monomial(MonomialIdeal(3, {{0, 0, 0}})), std::domain_error);
}

TEST_CASE("degree is preserved by passing to the initial ideal") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = random_instance(200 + seed, Field::rationals());
    const auto config = build_ideal(inst.multicomplex, inst.families);
    const auto in = initial_ideal(config.ideal);
    CHECK(degree_of(config.ideal) == degree_of(as_ideal(inst.ring, in)));
    CHECK(degree_of(config.ideal) == static_cast<long long>(inst.multicomplex.size()));
    // Hilbert function of the Artinian quotient I(M) sums to |M|
    const auto art = hilbert_numerator(ideal_of(inst.multicomplex), inst.multicomplex.nvars());
    long long sum = 0;
    for (long long x : art.values(16)) sum += x;
    CHECK(sum == static_cast<long long>(inst.multicomplex.size()));
  }
}

TEST_CASE("monomial Betti numbers") {
  const auto t = betti_monomial(MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}), Field::rationals());
  const std::map<std::pair<int, int>, long long> expected{{{0, 2}, 2}, {{0, 3}, 1}, {{1, 3}, 1}, {{1, 4}, 1}};
  CHECK(oracle::taylor_betti(MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}})) == expected);
  CHECK(entries(t) == expected);

  const auto principal = betti_monomial(MonomialIdeal(3, {{1, 2, 0}}), Field::rationals());
  CHECK(entries(principal) == std::map<std::pair<int, int>, long long>{{{0, 3}, 1}});

  const auto koszul = betti_monomial(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Field::rationals());
  for (int i = 0; i < 3; ++i) CHECK(koszul.at(i, i + 1) == binomial(3, i + 1));
  CHECK(koszul.length() == 2);
}

TEST_CASE("monomial Betti numbers match the Taylor oracle and do not depend on the field") {
  for (const auto& I : monomial_fixtures()) {
    const auto q = betti_monomial(I, Field::rationals());
    CHECK(entries(q) == oracle::taylor_betti(I));
    CHECK(q == betti_monomial(I, Field::prime(101)));
    CHECK(q == betti_monomial(I, Field::prime(2)));
    CHECK(q.hilbert_numerator() == hilbert_numerator(I, I.nvars()).numerator);
  }
}

TEST_CASE("polynomial Betti numbers") {
  const auto fp = fixture::four_points();
  const Ideal I = fixture::ideal(fp.ring, fixture::four_point_generators());
  const auto poly_table = betti_polynomial(I);
  CHECK(poly_table == betti_monomial(MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}), Field::rationals()));
  CHECK(poly_table.hilbert_numerator() == hilbert_numerator(initial_ideal(I), 3).numerator);

  const auto ci = betti_polynomial(fixture::ideal(fp.ring, {"x1 + x2", "x2 - x3", "x1 + x2 + 5*x3"}));
  for (int i = 0; i < 3; ++i) CHECK(ci.at(i, i + 1) == binomial(3, i + 1));

  CHECK_THROWS_AS(betti_polynomial(fixture::ideal(fp.ring, {"x1^2 + x2"})), InvalidInput);
  CHECK_THROWS_AS(betti_polynomial(I, ResolutionLimits{2}), ResourceLimitExceeded);
}

TEST_CASE("Schreyer ranks dominate the minimal Betti numbers") {
  std::vector<Ideal> ideals;
  const auto fp = fixture::four_points();
  ideals.push_back(fixture::ideal(fp.ring, fixture::four_point_generators()));
  for (const auto& mi : monomial_fixtures()) ideals.push_back(as_ideal(fixture::ring(mi.nvars()), mi));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = random_instance(300 + seed, Field::rationals());
    ideals.push_back(build_ideal(inst.multicomplex, inst.families).ideal);
  }
  for (const auto& I : ideals) {
    const auto ranks = schreyer_resolution(I).ranks();
    const auto minimal = betti_polynomial(I);
    for (const auto& [k, v] : minimal.entries()) CHECK(ranks.at(k.first, k.second) >= v);
    CHECK(minimal.hilbert_numerator() == hilbert_numerator(initial_ideal(I), I.ring()->nvars()).numerator);
    CHECK(ranks.hilbert_numerator() == minimal.hilbert_numerator());
  }
}

TEST_CASE("configuration ideals share the Betti table of I(M)") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto inst = random_instance(400 + seed, Field::rationals());
    const auto config = build_ideal(inst.multicomplex, inst.families);
    CHECK(betti_polynomial(config.ideal) == betti_monomial(ideal_of(inst.multicomplex), Field::rationals()));
  }
}
