// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every criterion is exact; the time limits are wall-clock seconds.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "multiconf/gvd.hpp"
#include "multiconf/invariants.hpp"
#include "oracles.hpp"

using namespace multiconf;
using fixture::poly;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& basis) {
  std::vector<Monomial> out;
  for (const auto& g : basis) out.push_back(g.lead_monomial());
  return out;
}

Outcome construction() {
  Outcome o;
  const auto fp = fixture::four_points();
  const auto config = build_ideal(fp.m, fp.families);
  o.require(fixture::same_elements(config.ideal.generators(), fixture::polys(fp.ring, fixture::four_point_generators())),
            "generators differ: " + config.ideal.to_string());
  o.require(leading_monomials(config.ideal.reduced_basis()) == std::vector<Monomial>{{0, 2, 0}, {1, 1, 0}, {3, 0, 0}},
            "leading terms of the reduced basis differ");
  return o;
}

Outcome decomposition() {
  Outcome o;
  const auto fp = fixture::four_points();
  const auto& r = fp.ring;
  const Ideal I = build_ideal(fp.m, fp.families).ideal;
  const std::vector<Ideal> points{fixture::ideal(r, {"x1", "x2 + x3"}), fixture::ideal(r, {"x1 + x2 + 3*x3", "x2 + x3"}),
                                  fixture::ideal(r, {"x1 + x3", "x2 + x3"}), fixture::ideal(r, {"x1", "x2"})};
  o.require(intersect_all(points).reduced_basis() == I.reduced_basis(), "intersection differs from I(M, F)");
  o.require(degree_of(I) == 4, "degree " + std::to_string(degree_of(I)));
  o.require(height_monomial(initial_ideal(I)) == 2, "height " + std::to_string(height_monomial(initial_ideal(I))));
  return o;
}

Outcome polarization_fixtures() {
  Outcome o;
  const auto fp = fixture::four_points();
  const auto ctx = PolarizationContext::create(fp.ring, 0);
  const auto& s = ctx.ring();
  const auto P = geom_polarize_basis(fixture::polys(fp.ring, fixture::four_point_generators()), ctx);
  o.require(P.elements == fixture::polys(s, {"x1*x1'^2 + x1*x1'*x2 + 4*x1*x1'*x3 + x1*x2*x3 + 3*x1*x3^2",
                                             "x1*x2 + x1*x3", "x2^2 + x2*x3"}),
            "polarized basis differs: " + to_string(P.elements));
  const auto split = gvd_split(P.elements, ctx.y());
  o.require(split.N.reduced_basis() == fixture::ideal(s, {"x2^2 + x2*x3"}).reduced_basis(),
            "N differs: " + split.N.to_string());
  o.require(split.C.reduced_basis() ==
                fixture::ideal(s, {"x1'^2 + x1'*x2 + 4*x1'*x3 + x2*x3 + 3*x3^2", "x2 + x3"}).reduced_basis(),
            "C differs: " + split.C.to_string());
  o.require(deletion(fp.m, 0) == Multicomplex::create({1}, {{0}, {1}}), "deletion differs");
  const auto link = colon_link(fp.m, 0);
  o.require(link == Multicomplex::create({1, 0}, {{0, 0}, {1, 0}}), "link differs");
  o.require(ideal_of(link) == MonomialIdeal(2, {{2, 0}, {0, 1}}), "I(M'') differs");
  return o;
}

Outcome polarization_equivalence() {
  Outcome o;
  auto run = [&](const RingPtr& ring, std::size_t y, const std::vector<Polynomial>& gens, const std::string& name) {
    const auto ctx = PolarizationContext::create(ring, y);
    const auto P = geom_polarize_basis(gens, ctx);
    const bool nzd = check_nzd_polarization(P);
    const bool gb = check_induced_gb(P);
    o.require(nzd == gb, name + ": criteria disagree");
    o.require(nzd && gb, name + ": expected both criteria to hold");
  };
  const auto fp = fixture::four_points();
  run(fp.ring, 0, fixture::polys(fp.ring, fixture::four_point_generators()), "four points");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    // polarize in coordinates where l_{1,0} is the polarized variable
    const auto inst = random_instance(seed, Field::rationals());
    const auto change = straightening(inst.families.front());
    const FormFamilies families = change ? change->apply(inst.families) : inst.families;
    run(inst.ring, families.front().lead, build_ideal(inst.multicomplex, families).ideal.generators(),
        "seed " + std::to_string(seed));
  }
  return o;
}

Outcome glicci() {
  Outcome o;
  const auto fp = fixture::four_points();
  const auto cert = glicci_chain(fp.m, fp.families);
  o.require(!cert.failure, cert.failure.value_or(""));
  o.require(cert.biliaison_count() == 2, "biliaison steps: " + std::to_string(cert.biliaison_count()));
  for (const auto& step : cert.steps)
    if (const auto* b = std::get_if<BiliaisonStep>(&step)) {
      o.require(b->check.passed, "biliaison check failed: " + b->check.failed_check);
      o.require(b->nondegenerate, "degenerate vertex decomposition");
      o.require(b->passed(), "step at " + b->variable + " failed");
    }
  const auto* base = cert.steps.empty() ? nullptr : std::get_if<BaseCaseStep>(&cert.steps.back());
  o.require(base != nullptr && base->complete_intersection, "chain does not end at a complete intersection");
  if (base)
    for (const auto& g : base->generators) o.require(g.degree() == 1, "nonlinear generator in the base case");
  return o;
}

Outcome betti() {
  Outcome o;
  const MonomialIdeal mono(2, {{3, 0}, {1, 1}, {0, 2}});
  const std::map<std::pair<int, int>, long long> expected{{{0, 2}, 2}, {{0, 3}, 1}, {{1, 3}, 1}, {{1, 4}, 1}};
  o.require(oracle::taylor_betti(mono) == expected, "Taylor oracle disagrees with the expected table");
  const auto fp = fixture::four_points();
  const BettiTable m = betti_monomial(mono, Field::rationals());
  const BettiTable p = betti_polynomial(build_ideal(fp.m, fp.families).ideal);
  o.require(m == p, "tables differ:\n" + m.to_string() + "vs\n" + p.to_string());
  std::map<std::pair<int, int>, long long> nonzero;
  for (const auto& [k, v] : m.entries())
    if (v) nonzero[k] = v;
  o.require(nonzero == expected, "monomial table differs from the oracle");
  return o;
}

Outcome random_suite() {
  Outcome o;
  auto run = [&](const Field& field, std::size_t count, std::uint64_t first) {
    for (std::size_t k = 0; k < count; ++k) {
      const auto inst = random_instance(first + k, field);
      const auto report = verify_theorem(inst.multicomplex, inst.families);
      const auto cert = glicci_chain(inst.multicomplex, inst.families);
      const std::string tag = field.spec() + " seed " + std::to_string(first + k);
      o.require(report.passed(), tag + ": " + (report.first_failure() ? report.first_failure()->name : ""));
      o.require(cert.passed(), tag + ": glicci " + cert.failure.value_or(""));
    }
  };
  run(Field::rationals(), 100, 0);
  run(Field::prime(101), 20, 0);
  return o;
}

Outcome oracles() {
  Outcome o;
  std::vector<MonomialIdeal> fixtures{MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}), MonomialIdeal(2, {{2, 0}, {0, 1}}),
                                      MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                      MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}), MonomialIdeal(1, {{2}})};
  const auto fp = fixture::four_points();
  fixtures.push_back(initial_ideal(build_ideal(fp.m, fp.families).ideal));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_instance(seed, Field::rationals());
    fixtures.push_back(ideal_of(inst.multicomplex));
    fixtures.push_back(initial_ideal(build_ideal(inst.multicomplex, inst.families).ideal));
  }
  for (const auto& I : fixtures) {
    const auto values = hilbert_numerator(I, I.nvars()).values(10);
    for (int d = 0; d < 10; ++d)
      o.require(values[d] == oracle::standard_count(I, d), "Hilbert function of " + I.to_string() + " at degree " +
                                                               std::to_string(d));
  }

  // membership on instances in at most three variables, degree <= 4
  std::vector<Ideal> ideals{build_ideal(fp.m, fp.families).ideal};
  for (std::uint64_t seed = 0; ideals.size() < 8 && seed < 200; ++seed) {
    const auto inst = random_instance(seed, Field::rationals());
    if (inst.ring->nvars() <= 3) ideals.push_back(build_ideal(inst.multicomplex, inst.families).ideal);
  }
  std::mt19937_64 rng(17);
  for (const auto& I : ideals) {
    const auto& r = I.ring();
    const std::size_t n = r->nvars();
    for (int d = 1; d <= 4; ++d) {
      const auto basis = oracle::monomials_of_degree(n, d);
      for (int trial = 0; trial < 4; ++trial) {
        Polynomial f(r);
        if (trial % 2 == 0) {
          for (const auto& g : I.generators()) {
            if (g.degree() > d) continue;
            const auto shifts = oracle::monomials_of_degree(n, d - g.degree());
            f = f + g.times_term(Monomial(shifts[rng() % shifts.size()]), mpq_class(static_cast<long>(rng() % 5) - 2));
          }
        } else {
          for (int t = 0; t < 2; ++t)
            f = f + Polynomial::term(r, Monomial(basis[rng() % basis.size()]), mpq_class(static_cast<long>(t + 1)));
        }
        o.require(I.contains(f) == oracle::member_homogeneous(f, I.generators()),
                  "membership of " + f.to_string() + " in " + I.to_string());
      }
      for (const auto& a : basis) {
        const Polynomial m = Polynomial::term(r, Monomial(a), mpq_class(1));
        o.require(I.contains(m) == oracle::member_homogeneous(m, I.generators()),
                  "membership of " + m.to_string() + " in " + I.to_string());
      }
    }
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "four point construction and leading terms", 1.0, construction},
      {2, "primary decomposition, degree 4, height 2", 1.0, decomposition},
      {3, "one-step polarization, vertex decomposition, deletion and link", 1.0, polarization_fixtures},
      {4, "nonzerodivisor and induced Groebner criteria agree (fixture + 50 random)", 30.0, polarization_equivalence},
      {5, "glicci certificate with 2 biliaison steps", 5.0, glicci},
      {6, "Betti tables of I(M) and I(M, F) coincide", 10.0, betti},
      {7, "random suite: 100 instances over Q, 20 over F_101", 120.0, random_suite},
      {8, "Hilbert function and membership oracles", 0.0, oracles},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && elapsed > c.limit_seconds)
      out.require(false, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    std::ostringstream line;
    line << (out.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << elapsed << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    if (!out.passed) line << " -- " << out.detail;
    std::cout << line.str() << std::endl;
    if (!out.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
