#include "multiconf/configuration.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "multiconf/invariants.hpp"

namespace multiconf {

namespace {

const RingPtr& ring_of(const FormFamilies& families) {
  for (const auto& f : families)
    if (!f.forms.empty()) return f.forms.front().ring();
  throw InvalidInput("form families contain no forms");
}

Matrix coefficient_matrix(const std::vector<Polynomial>& forms, const RingPtr& ring) {
  Matrix mat(ring->field(), forms.size(), ring->nvars());
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (const auto& t : forms[r].terms())
      for (std::size_t k = 0; k < ring->nvars(); ++k)
        if (t.monomial[k] == 1) mat(r, k) = t.coeff;
  return mat;
}

/// Exponent of I(M) over x_{lead_1}, ..., x_{lead_n} as an exponent of S.
Exponent embed_exponent(const Exponent& a, const FormFamilies& families, std::size_t nvars) {
  Exponent e(nvars, 0);
  for (std::size_t i = 0; i < a.size(); ++i) e[families[i].lead] += a[i];
  return e;
}

std::string form_label(std::size_t i, std::size_t j) {
  return "l_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}";
}

}  // namespace

FormFamilies make_families(std::vector<std::vector<Polynomial>> forms) {
  FormFamilies out;
  for (std::size_t i = 0; i < forms.size(); ++i) out.push_back({i, std::move(forms[i])});
  return out;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::string s;
  for (const auto& issue : issues) {
    if (!s.empty()) s += "; ";
    s += issue.message;
  }
  return s;
}

ValidationReport validate_input(const Multicomplex& m, const FormFamilies& families) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  auto issue = [&](Kind kind, int family, int form, std::string message) {
    report.issues.push_back({kind, family, form, std::move(message)});
  };
  const std::size_t n = m.nvars();
  if (families.size() != n) {
    issue(Kind::FamilyCount, -1, -1,
          "expected " + std::to_string(n) + " form families, got " + std::to_string(families.size()));
    return report;
  }
  RingPtr ring;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fam = families[i];
    const std::size_t expected = static_cast<std::size_t>(m.caps()[i]) + 1;
    if (fam.forms.size() != expected)
      issue(Kind::FamilySize, static_cast<int>(i), -1,
            "family F_" + std::to_string(i + 1) + " has " + std::to_string(fam.forms.size()) + " forms, expected " +
                std::to_string(expected));
    for (std::size_t j = 0; j < fam.forms.size(); ++j) {
      const Polynomial& l = fam.forms[j];
      const int fi = static_cast<int>(i), fj = static_cast<int>(j);
      if (!ring) ring = l.ring();
      if (!same_ring(ring, l.ring())) {
        issue(Kind::WrongRing, fi, fj, form_label(i, j) + " lives in a different ring");
        continue;
      }
      if (fam.lead >= ring->nvars()) {
        issue(Kind::NotInitial, fi, fj, "lead variable of F_" + std::to_string(i + 1) + " is out of range");
        continue;
      }
      if (l.is_zero() || !l.is_homogeneous()) {
        issue(Kind::NotHomogeneous, fi, fj, form_label(i, j) + " = " + l.to_string() + " is not homogeneous");
        continue;
      }
      if (l.degree() != 1) {
        issue(Kind::NotLinear, fi, fj, form_label(i, j) + " = " + l.to_string() + " is not linear");
        continue;
      }
      if (!(l.lead_monomial() == Monomial::variable(ring->nvars(), fam.lead)))
        issue(Kind::NotInitial, fi, fj,
              form_label(i, j) + " = " + l.to_string() + " has leading monomial " +
                  monomial_to_string(l.lead_monomial(), ring->names()) + ", expected " + ring->names()[fam.lead]);
    }
  }
  if (!report.ok() || n == 0) return report;

  const auto points = point_ideals(m, families);
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a].canonical == points[b].canonical)
        issue(Kind::DuplicatePoint, -1, -1,
              "point ideals for b = " + exponent_to_string(points[a].b, default_names(n)) + " and b = " +
                  exponent_to_string(points[b].b, default_names(n)) + " coincide");
  return report;
}

ConfigurationIdeal build_ideal(const Multicomplex& m, const FormFamilies& families) {
  const std::size_t n = m.nvars();
  if (families.size() != n)
    throw InvalidInput("expected " + std::to_string(n) + " form families, got " + std::to_string(families.size()));
  const RingPtr& ring = ring_of(families);
  ConfigurationIdeal out{Ideal::zero(ring), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t expected = static_cast<std::size_t>(m.caps()[i]) + 1;
    if (families[i].forms.size() != expected)
      throw InvalidInput("family F_" + std::to_string(i + 1) + " has " + std::to_string(families[i].forms.size()) +
                         " forms, expected " + std::to_string(expected));
    for (std::size_t j = 0; j < expected; ++j) {
      const Polynomial& l = families[i].forms[j];
      if (!same_ring(l.ring(), ring)) throw InvalidInput(form_label(i, j) + " lives in a different ring");
      if (l.is_zero() || !l.is_homogeneous())
        throw InvalidInput(form_label(i, j) + " = " + l.to_string() + " is not a nonzero homogeneous form");
    }
  }
  for (const auto& issue : validate_input(m, families).issues) out.warnings.push_back(issue.message);

  std::vector<Polynomial> gens;
  const MonomialIdeal monomial = ideal_of(m);
  for (const auto& a : monomial.generators()) {
    Polynomial f = Polynomial::one(ring);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < a[i]; ++j) f = f * families[i].forms[j];
    gens.push_back(std::move(f));
    out.exponents.push_back(a);
  }
  out.ideal = Ideal(ring, std::move(gens));
  return out;
}

Ideal PointIdeal::ideal() const { return Ideal(forms.front().ring(), forms); }

std::vector<PointIdeal> point_ideals(const Multicomplex& m, const FormFamilies& families) {
  const std::size_t n = m.nvars();
  if (families.size() != n) throw InvalidInput("family count does not match the multicomplex");
  const RingPtr& ring = ring_of(families);
  std::vector<PointIdeal> out;
  for (const auto& b : m.monomials()) {
    std::vector<Polynomial> forms;
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(b[i]) >= families[i].forms.size())
        throw InvalidInput("family F_" + std::to_string(i + 1) + " is too short for the multicomplex");
      const Polynomial& l = families[i].forms[b[i]];
      if (l.degree() != 1 || !l.is_homogeneous()) throw InvalidInput("point ideals require linear forms");
      forms.push_back(l);
    }
    Matrix canonical = coefficient_matrix(forms, ring).rref();
    out.push_back({b, std::move(forms), std::move(canonical)});
  }
  return out;
}

bool TheoremReport::passed() const { return first_failure() == nullptr; }

const TheoremCheck* TheoremReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

TheoremReport verify_theorem(const Multicomplex& m, const FormFamilies& families) {
  TheoremReport report;
  report.multicomplex_size = m.size();
  const std::size_t n = m.nvars();

  const ValidationReport validation = validate_input(m, families);
  report.checks.push_back({"hypotheses", validation.ok(), validation.summary(), {}});
  if (!validation.ok()) return report;

  const ConfigurationIdeal config = build_ideal(m, families);
  const Ideal& ideal = config.ideal;
  const RingPtr& ring = ideal.ring();
  for (const auto& g : ideal.generators()) report.generators.push_back(g.to_string());

  // (1) I(M,F) is the intersection of the |M| point ideals, each of height n
  {
    TheoremCheck check{"primary_decomposition", true, "", {}};
    const auto points = point_ideals(m, families);
    std::vector<Ideal> ideals;
    for (const auto& p : points) {
      if (p.canonical.rows() != n) {
        check.passed = false;
        check.witnesses.push_back("point ideal for b = " + exponent_to_string(p.b, default_names(n)) +
                                  " has height " + std::to_string(p.canonical.rows()));
      }
      ideals.push_back(p.ideal());
    }
    const Ideal meet = intersect_all(ideals);
    for (const auto& g : meet.reduced_basis())
      if (!ideal.contains(g)) check.witnesses.push_back("in the intersection but not in I: " + g.to_string());
    for (const auto& g : ideal.generators())
      if (!meet.contains(g)) check.witnesses.push_back("in I but not in the intersection: " + g.to_string());
    if (!check.witnesses.empty()) check.passed = false;
    check.detail = std::to_string(points.size()) + " distinct point ideals";
    report.checks.push_back(std::move(check));
  }

  // (2) the generators f(a) form a Gröbner basis
  {
    TheoremCheck check{"groebner_basis", true, "Buchberger criterion for the generators f(a)", {}};
    if (auto pair = failing_s_pair(ideal.generators())) {
      const auto& g = ideal.generators();
      check.passed = false;
      check.witnesses.push_back("S(" + g[pair->first].to_string() + ", " + g[pair->second].to_string() +
                                ") reduces to " +
                                reduce(s_polynomial(g[pair->first], g[pair->second]), g).to_string());
    }
    report.checks.push_back(std::move(check));
  }

  // (3) in(f(a)) = x^a and in(I) = I(M)S
  const MonomialIdeal initial = initial_ideal(ideal);
  for (const auto& g : initial.generators()) report.initial_ideal.push_back(exponent_to_string(g, ring->names()));
  {
    TheoremCheck check{"initial_ideal", true, "", {}};
    std::vector<Exponent> expected;
    for (std::size_t k = 0; k < config.exponents.size(); ++k) {
      const Exponent e = embed_exponent(config.exponents[k], families, ring->nvars());
      expected.push_back(e);
      const Polynomial& f = ideal.generators()[k];
      if (!(f.lead_monomial().exponents() == e))
        check.witnesses.push_back("in(" + f.to_string() + ") = " +
                                  monomial_to_string(f.lead_monomial(), ring->names()) + ", expected " +
                                  exponent_to_string(e, ring->names()));
    }
    const MonomialIdeal extended(ring->nvars(), std::move(expected));
    if (!(extended == initial))
      check.witnesses.push_back("in(I) = " + initial.to_string(ring->names()) + " but I(M)S = " +
                                extended.to_string(ring->names()));
    check.passed = check.witnesses.empty();
    check.detail = "in(I) = " + initial.to_string(ring->names());
    report.checks.push_back(std::move(check));
  }

  // (4) height n, degree |M|, Cohen-Macaulay via the initial ideal
  {
    report.height = height_monomial(initial);
    TheoremCheck check{"height", report.height == static_cast<int>(n),
                       "ht = " + std::to_string(report.height) + ", n = " + std::to_string(n), {}};
    report.checks.push_back(std::move(check));
  }
  {
    report.degree = hilbert_numerator(initial, ring->nvars()).degree();
    TheoremCheck check{"degree", report.degree == static_cast<long long>(m.size()),
                       "deg = " + std::to_string(report.degree) + ", |M| = " + std::to_string(m.size()), {}};
    report.checks.push_back(std::move(check));
  }
  {
    // in(I) is an Artinian ideal of kappa[x_lead] extended to S, so S/in(I)
    // is Cohen-Macaulay and so is S/I
    TheoremCheck check{"cohen_macaulay", true, "", {}};
    std::vector<bool> lead_var(ring->nvars(), false);
    for (const auto& f : families) lead_var[f.lead] = true;
    std::vector<bool> has_pure_power(ring->nvars(), false);
    for (const auto& g : initial.generators()) {
      std::size_t support = 0, var = 0;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        ++support;
        var = k;
        if (!lead_var[k])
          check.witnesses.push_back("generator " + exponent_to_string(g, ring->names()) + " involves " +
                                    ring->names()[k]);
      }
      if (support == 1) has_pure_power[var] = true;
    }
    for (const auto& f : families)
      if (!has_pure_power[f.lead]) check.witnesses.push_back("no pure power of " + ring->names()[f.lead]);
    check.passed = check.witnesses.empty();
    check.detail = "in(I) is an Artinian ideal in the lead variables extended to S";
    report.checks.push_back(std::move(check));
  }
  return report;
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
  Polynomial out(f.ring());
  Polynomial power = Polynomial::one(f.ring());
  const int top = std::max(f.degree_in(variable), 0);
  for (int k = 0; k <= top; ++k) {
    out = out + f.coefficient_in(variable, k) * power;
    power = power * image;
  }
  return out;
}

FormFamilies CoordinateChange::apply(const FormFamilies& families) const {
  FormFamilies out = families;
  for (auto& fam : out)
    for (auto& f : fam.forms) f = apply(f);
  return out;
}

std::optional<CoordinateChange> straightening(const FormFamily& family) {
  if (family.forms.empty()) return std::nullopt;
  const Polynomial& l = family.forms.front();
  const std::size_t v = family.lead;
  const Polynomial x = Polynomial::variable(l.ring(), v);
  if (l == x) return std::nullopt;
  const Polynomial c = l.coefficient_in(v, 1);
  if (l.degree() != 1 || c.is_zero() || !c.is_constant())
    throw InvalidInput("straightening needs a linear form involving its lead variable");
  const Polynomial image = (x - l.coefficient_in(v, 0)).scaled(l.ring()->field().inv(c.lead_coeff()));
  return CoordinateChange{v, image};
}

FormFamilies truncate_families(const FormFamilies& families, const Multicomplex& m) {
  if (families.size() != m.nvars()) throw InvalidInput("family count does not match the multicomplex");
  FormFamilies out;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const std::size_t keep = static_cast<std::size_t>(m.caps()[i]) + 1;
    if (families[i].forms.size() < keep) throw InvalidInput("family too short to truncate");
    out.push_back({families[i].lead, {families[i].forms.begin(), families[i].forms.begin() + keep}});
  }
  return out;
}

RandomInstance random_instance(std::uint64_t seed, const Field& field, const RandomInstanceOptions& options) {
  std::mt19937_64 rng(seed);
  // plain modulo keeps the draws identical across standard libraries
  auto uniform = [&rng](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto n = static_cast<std::size_t>(uniform(1, static_cast<long long>(options.max_n)));
    const auto m = static_cast<std::size_t>(uniform(static_cast<long long>(n), static_cast<long long>(options.max_m)));

    std::vector<int> box(n);
    for (auto& c : box) c = static_cast<int>(uniform(0, options.max_cap));
    std::set<Exponent> downset{Exponent(n, 0)};
    const long long tops = uniform(1, 3);
    for (long long t = 0; t < tops; ++t) {
      Exponent top(n);
      for (std::size_t i = 0; i < n; ++i) top[i] = static_cast<int>(uniform(0, box[i]));
      Exponent a(n, 0);
      while (true) {
        downset.insert(a);
        std::size_t k = 0;
        while (k < n && a[k] == top[k]) a[k++] = 0;
        if (k == n) break;
        ++a[k];
      }
    }
    const Multicomplex mc = Multicomplex::create(n, {downset.begin(), downset.end()});

    const RingPtr ring = PolyRing::make(field, default_names(m));
    const long long bound = options.coefficient_bound;
    std::vector<std::vector<Polynomial>> forms(n);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j <= mc.caps()[i]; ++j) {
        std::vector<mpq_class> coeffs(m, 0);
        long long lead = 0;
        while (lead == 0 || Field::is_zero(field.from_int(static_cast<long>(lead)))) lead = uniform(-bound, bound);
        coeffs[i] = static_cast<long>(lead);
        for (std::size_t k = i + 1; k < m; ++k) coeffs[k] = static_cast<long>(uniform(-bound, bound));
        forms[i].push_back(Polynomial::linear_form(ring, coeffs));
      }
    FormFamilies families = make_families(std::move(forms));
    if (validate_input(mc, families).ok()) return {mc, std::move(families), ring};
  }
  throw ResourceLimitExceeded("no valid instance after 1000 draws");
}

}  // namespace multiconf
