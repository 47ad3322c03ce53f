#include "multiconf/gvd.hpp"

#include <algorithm>

#include "multiconf/invariants.hpp"

namespace multiconf {

GvdSplit gvd_split(std::span<const Polynomial> basis, std::size_t y) {
  if (basis.empty()) throw InvalidInput("geometric vertex decomposition of an empty basis");
  const RingPtr& ring = basis.front().ring();
  if (y >= ring->nvars()) throw InvalidInput("split variable out of range");
  std::vector<Polynomial> q, r, h;
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), ring)) throw InvalidInput("basis elements live in different rings");
    const int d = g.degree_in(y);
    if (d >= 2)
      throw InvalidInput("element " + g.to_string() + " has degree " + std::to_string(d) + " in " +
                         ring->names()[y]);
    if (d == 1) {
      q.push_back(g.coefficient_in(y, 1));
      r.push_back(g.coefficient_in(y, 0));
    } else if (!g.is_zero()) {
      h.push_back(g);
    }
  }
  if (!is_y_compatible(basis, y))
    throw InvalidInput("the term order is not " + ring->names()[y] + "-compatible on the basis");
  if (!is_groebner_basis(basis)) throw InvalidInput("the basis is not a Gröbner basis");

  const Polynomial yvar = Polynomial::variable(ring, y);
  std::vector<Polynomial> c_gens = q, in_gens, y_c_gens;
  c_gens.insert(c_gens.end(), h.begin(), h.end());
  for (const auto& f : q) in_gens.push_back(yvar * f);
  in_gens.insert(in_gens.end(), h.begin(), h.end());
  for (const auto& f : c_gens) y_c_gens.push_back(yvar * f);

  GvdSplit split{y, q, r, h, Ideal(ring, c_gens), Ideal(ring, h), Ideal(ring, in_gens)};

  const Ideal y_c_plus_n = Ideal(ring, y_c_gens) + split.N;
  if (!(split.in_y == y_c_plus_n)) throw InvalidInput("in_y(I) differs from yC + N");
  const Ideal n_plus_y = split.N + Ideal(ring, {yvar});
  if (!(split.in_y == intersect(split.C, n_plus_y))) throw InvalidInput("in_y(I) differs from C ∩ (N + (y))");
  return split;
}

bool is_nondegenerate(const GvdSplit& split) {
  if (split.C.is_unit()) return false;
  for (const auto& g : split.C.reduced_basis())
    if (!radical_member(g, split.N)) return true;
  for (const auto& g : split.N.reduced_basis())
    if (!radical_member(g, split.C)) return true;
  return false;
}

namespace {

BiliaisonCheck fail(std::string check, std::string detail) { return {false, std::move(check), std::move(detail)}; }

std::vector<Polynomial> times(const Polynomial& f, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(f * g);
  return out;
}

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

BiliaisonCheck verify_biliaison_step(const Ideal& I, const Ideal& D, const Ideal& N, const BiliaisonWitness& w) {
  const RingPtr& ring = I.ring();
  if (!same_ring(ring, D.ring()) || !same_ring(ring, N.ring()) || !same_ring(ring, w.numerator.ring()) ||
      !same_ring(ring, w.denominator.ring()))
    throw InvalidInput("biliaison data must share one ring");

  if (w.numerator.is_zero() || w.denominator.is_zero()) return fail("nonzerodivisor", "zero witness");
  if (!is_regular_element(w.numerator, N))
    return fail("nonzerodivisor", w.numerator.to_string() + " is a zerodivisor modulo N");
  if (!is_regular_element(w.denominator, N))
    return fail("nonzerodivisor", w.denominator.to_string() + " is a zerodivisor modulo N");

  if (!(w.numerator.initial_in(w.y) == Polynomial::variable(ring, w.y) * w.denominator))
    return fail("initial_in_y", "in_y(" + w.numerator.to_string() + ") is not " + ring->names()[w.y] + " * (" +
                                    w.denominator.to_string() + ")");
  if (w.numerator.degree() - w.denominator.degree() != w.shift)
    return fail("shift", "deg numerator - deg denominator = " +
                             std::to_string(w.numerator.degree() - w.denominator.degree()) + ", expected " +
                             std::to_string(w.shift));

  for (const auto& g : N.generators()) {
    if (!I.contains(g)) return fail("(i) N in I", g.to_string() + " lies in N but not in I");
    if (!D.contains(g)) return fail("(i) N in D", g.to_string() + " lies in N but not in D");
  }

  std::vector<std::pair<Polynomial, Polynomial>> pairs{{w.numerator, w.denominator}};
  pairs.insert(pairs.end(), w.equivalents.begin(), w.equivalents.end());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Polynomial rel = pairs[i].second * pairs[j].first - pairs[j].second * pairs[i].first;
      if (!N.contains(rel))
        return fail("(ii) cross-relations", "d_i (y d_j + r_j) - d_j (y d_i + r_i) = " + rel.to_string() +
                                                 " is not in N");
    }

  const Ideal target_iii(ring, concat(times(w.denominator, I.generators()), N.generators()));
  for (const auto& g : D.generators())
    if (!target_iii.contains(w.numerator * g))
      return fail("(iii) numerator * D", "numerator * (" + g.to_string() + ") is not in denominator * I + N");

  const Ideal target_iv(ring, concat(times(w.numerator, D.generators()), N.generators()));
  for (const auto& f : I.generators())
    if (!target_iv.contains(w.denominator * f))
      return fail("(iv) denominator * I", "denominator * (" + f.to_string() + ") is not in numerator * D + N");

  if (I.is_unit() || D.is_unit() || N.is_unit()) return fail("(v) heights", "unit ideal");
  const int hi = height_of(I), hd = height_of(D), hn = height_of(N);
  const std::string heights =
      "ht(I) = " + std::to_string(hi) + ", ht(D) = " + std::to_string(hd) + ", ht(N) = " + std::to_string(hn);
  if (hi != hd || hd != hn + 1) return fail("(v) heights", heights);
  return {true, "", heights};
}

bool BiliaisonStep::passed() const {
  return nonzerodivisor && induced_groebner && nondegenerate && deletion_matches && link_matches && side_conditions &&
         check.passed;
}

std::size_t GlicciCertificate::biliaison_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const GlicciStep& s) {
    return std::holds_alternative<BiliaisonStep>(s);
  }));
}

bool GlicciCertificate::passed() const {
  if (failure || steps.empty()) return false;
  const auto* base = std::get_if<BaseCaseStep>(&steps.back());
  return base && base->complete_intersection;
}

GlicciCertificate glicci_chain(const Multicomplex& m, const FormFamilies& families, const GlicciOptions& options) {
  GlicciCertificate cert;
  const ValidationReport validation = validate_input(m, families);
  if (!validation.ok()) {
    cert.failure = "hypotheses: " + validation.summary();
    return cert;
  }

  Multicomplex current = m;
  FormFamilies fams = families;
  std::vector<Polynomial> split_forms;
  while (true) {
    if (current.is_trivial()) {
      BaseCaseStep base;
      base.generators = split_forms;
      for (const auto& f : fams) base.generators.push_back(f.forms.front());
      const RingPtr& ring = base.generators.front().ring();
      Matrix coeffs(ring->field(), base.generators.size(), ring->nvars());
      bool linear = true;
      for (std::size_t r = 0; r < base.generators.size(); ++r) {
        const auto& g = base.generators[r];
        if (g.degree() != 1 || !g.is_homogeneous()) linear = false;
        for (const auto& t : g.terms())
          for (std::size_t k = 0; k < ring->nvars(); ++k)
            if (t.monomial[k] == 1) coeffs(r, k) = t.coeff;
      }
      base.complete_intersection = linear && coeffs.rank() == base.generators.size();
      cert.steps.push_back(std::move(base));
      if (!std::get<BaseCaseStep>(cert.steps.back()).complete_intersection)
        cert.failure = "base case: the linear forms are not independent";
      return cert;
    }

    const std::size_t n = current.nvars();
    std::vector<std::string> leads;
    for (const auto& f : fams) leads.push_back(f.forms.front().ring()->names()[f.lead]);
    const Multicomplex deleted = deletion(current, 0);

    if (!current.contains_variable(0)) {
      const Polynomial form = fams.front().forms.front();
      cert.steps.push_back(VariableSplitStep{current, leads, form, deleted});
      split_forms.push_back(form);
      fams = truncate_families(FormFamilies(fams.begin() + 1, fams.end()), deleted);
      current = deleted;
      continue;
    }

    const std::size_t step_index = cert.steps.size() + 1;
    auto stop = [&](const std::string& what) {
      cert.failure = "step " + std::to_string(step_index) + ": " + what;
      return cert;
    };

    // bring l_{1,0} = c y + u to y by the triangular substitution
    // y -> (y - u) / c, a graded automorphism of S
    const std::size_t y = fams.front().lead;
    std::optional<Polynomial> coordinate_change;
    if (const auto change = straightening(fams.front())) {
      fams = change->apply(fams);
      for (auto& f : split_forms) f = change->apply(f);
      coordinate_change = change->image;
      const ValidationReport changed = validate_input(current, fams);
      if (!changed.ok()) return stop("hypotheses fail after the coordinate change: " + changed.summary());
    }
    const FormFamilies rest(fams.begin() + 1, fams.end());

    const ConfigurationIdeal config = build_ideal(current, fams);
    const RingPtr& base_ring = config.ideal.ring();
    std::optional<PolarizationContext> ctx;
    try {
      ctx = PolarizationContext::create(base_ring, y);
    } catch (const InvalidInput& e) {
      return stop(e.what());
    }
    const PolarizedBasis polarized = geom_polarize_basis(config.ideal.generators(), *ctx);
    const RingPtr& ring = ctx->ring();

    const bool nzd = check_nzd_polarization(polarized);
    const bool induced = check_induced_gb(polarized);
    if (!nzd || !induced)
      return stop("polarization at " + base_ring->names()[y] + (nzd ? "" : ": y - y' is a zerodivisor") +
                   (induced ? "" : ": not a Gröbner basis under the induced order"));

    std::optional<GvdSplit> split;
    try {
      split = gvd_split(polarized.elements, y);
    } catch (const InvalidInput& e) {
      return stop(std::string("geometric vertex decomposition: ") + e.what());
    }

    const Multicomplex link = colon_link(current, 0);
    FormFamilies link_fams;
    link_fams.push_back({fams.front().lead, {fams.front().forms.begin() + 1, fams.front().forms.end()}});
    link_fams.insert(link_fams.end(), rest.begin(), rest.end());
    link_fams = truncate_families(link_fams, link);
    const FormFamilies deletion_fams = truncate_families(rest, deleted);

    Ideal expected_n = Ideal::zero(ring);
    if (n > 1) {
      std::vector<Polynomial> gens;
      const ConfigurationIdeal n_config = build_ideal(deleted, deletion_fams);
      for (const auto& g : n_config.ideal.generators()) gens.push_back(ctx->embed(g));
      expected_n = Ideal(ring, std::move(gens));
    }
    std::vector<Polynomial> d_gens;
    const ConfigurationIdeal d_config = build_ideal(link, link_fams);
    for (const auto& g : d_config.ideal.generators()) d_gens.push_back(ctx->rename_to_prime(g));
    const Ideal expected_d(ring, std::move(d_gens));

    // the witness is the first pair y d + r, d whose entries are both
    // nonzerodivisors modulo N; the remaining pairs must agree with it
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    for (const auto& p : polarized.elements)
      if (p.degree_in(y) == 1) pairs.emplace_back(p, p.coefficient_in(y, 1));
    std::optional<BiliaisonWitness> witness;
    for (std::size_t k = 0; k < pairs.size() && !witness; ++k)
      if (is_regular_element(pairs[k].first, expected_n) && is_regular_element(pairs[k].second, expected_n)) {
        witness = BiliaisonWitness{y, pairs[k].first, pairs[k].second, 1, {}};
        for (std::size_t j = 0; j < pairs.size(); ++j)
          if (j != k) witness->equivalents.push_back(pairs[j]);
      }
    if (!witness) return stop("no witness pair of nonzerodivisors modulo N");

    const Ideal I(ring, polarized.elements);
    BiliaisonStep step{current,
                       leads,
                       base_ring->names()[y],
                       coordinate_change,
                       ring->names()[ctx->y_prime()],
                       I,
                       expected_d,
                       expected_n,
                       *witness,
                       deleted,
                       link,
                       nzd,
                       induced,
                       is_nondegenerate(*split),
                       split->N == expected_n,
                       split->C == expected_d,
                       true,
                       verify_biliaison_step(I, expected_d, expected_n, *witness)};
    if (options.certify_side_conditions) {
      step.side_conditions = verify_theorem(link, link_fams).passed();
      if (n > 1) step.side_conditions = step.side_conditions && verify_theorem(deleted, deletion_fams).passed();
    }
    const bool ok = step.passed();
    std::string reason;
    if (!step.nondegenerate) reason = "degenerate geometric vertex decomposition";
    else if (!step.deletion_matches) reason = "N differs from the deletion configuration ideal";
    else if (!step.link_matches) reason = "C differs from the link configuration ideal";
    else if (!step.side_conditions) reason = "side conditions for N or D failed";
    else if (!step.check.passed) reason = "biliaison check " + step.check.failed_check + ": " + step.check.detail;
    cert.steps.push_back(std::move(step));
    if (!ok) return stop(reason);

    current = link;
    fams = std::move(link_fams);
  }
}

}  // namespace multiconf
