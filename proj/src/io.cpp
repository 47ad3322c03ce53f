#include "multiconf/io.hpp"

#include <algorithm>
#include <sstream>

namespace multiconf {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) {
    if (!s.empty()) s += "\n";
    s += l;
  }
  return s;
}

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

class Parser {
 public:
  std::vector<std::string> errors;

  void error(const std::string& where, const std::string& what) { errors.push_back(where + ": " + what); }

  std::optional<mpq_class> coefficient(const json& v, const std::string& where) {
    try {
      if (v.is_number_integer()) return mpq_class(v.get<long>());
      if (v.is_string()) {
        mpq_class q;
        if (q.set_str(v.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
      }
    } catch (const std::exception&) {
      error(where, "expected an integer or a rational \"a/b\"");
      return std::nullopt;
    }
    error(where, "expected an integer or a rational \"a/b\"");
    return std::nullopt;
  }

  std::optional<Exponent> exponent(const json& v, const std::string& where, std::optional<std::size_t> length) {
    if (!v.is_array()) {
      error(where, "expected an array of exponents");
      return std::nullopt;
    }
    Exponent e;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_number_integer() || v[k].get<long long>() < 0 || v[k].get<long long>() > 1000) {
        error(index_path(where, k), "expected a non-negative integer exponent");
        return std::nullopt;
      }
      e.push_back(v[k].get<int>());
    }
    if (length && e.size() != *length) {
      error(where, "expected " + std::to_string(*length) + " exponents, got " + std::to_string(e.size()));
      return std::nullopt;
    }
    return e;
  }

  std::optional<Polynomial> form(const json& v, const std::string& where, const RingPtr& ring) {
    const Field& field = ring->field();
    const std::size_t m = ring->nvars();
    try {
      if (v.is_array()) {
        if (v.size() != m) {
          error(where, "expected " + std::to_string(m) + " coefficients, got " + std::to_string(v.size()));
          return std::nullopt;
        }
        std::vector<Term> terms;
        for (std::size_t k = 0; k < m; ++k) {
          auto c = coefficient(v[k], index_path(where, k));
          if (!c) return std::nullopt;
          terms.push_back({Monomial::variable(m, k), field.from_rational(*c)});
        }
        return Polynomial::from_terms(ring, std::move(terms));
      }
      if (v.is_object() && v.contains("terms") && v["terms"].is_array()) {
        std::vector<Term> terms;
        const json& list = v["terms"];
        for (std::size_t t = 0; t < list.size(); ++t) {
          const std::string at = where + ".terms[" + std::to_string(t) + "]";
          if (!list[t].is_array() || list[t].size() != 2) {
            error(at, "expected [exponents, coefficient]");
            return std::nullopt;
          }
          auto e = exponent(list[t][0], at + "[0]", m);
          auto c = coefficient(list[t][1], at + "[1]");
          if (!e || !c) return std::nullopt;
          terms.push_back({Monomial(std::move(*e)), field.from_rational(*c)});
        }
        return Polynomial::from_terms(ring, std::move(terms));
      }
    } catch (const std::exception& e) {
      error(where, e.what());
      return std::nullopt;
    }
    error(where, "expected a coefficient vector or {\"terms\": [...]}");
    return std::nullopt;
  }
};

}  // namespace

InputError::InputError(std::vector<std::string> errors) : InvalidInput(join_lines(errors)), errors_(std::move(errors)) {}

ProblemInput parse_input(const json& doc, const std::optional<Field>& field_override) {
  Parser p;
  if (!doc.is_object()) throw InputError({"document: expected a JSON object"});
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known{"field",    "variables", "caps",  "multicomplex",
                                                "ideal",    "families",  "order", "comment"};
    if (std::find(known.begin(), known.end(), key) == known.end()) p.error(key, "unknown key");
  }

  Field field = Field::rationals();
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) {
      p.error("field", "expected \"q\" or \"p:PRIME\"");
    } else {
      try {
        field = parse_field(doc["field"].get<std::string>());
      } catch (const std::exception& e) {
        p.error("field", e.what());
      }
    }
  }
  if (field_override) field = *field_override;

  std::vector<std::string> names;
  if (!doc.contains("variables")) {
    p.error("variables", "missing");
  } else if (doc["variables"].is_number_integer()) {
    const long long count = doc["variables"].get<long long>();
    if (count < 1 || count > 64) p.error("variables", "expected between 1 and 64 variables");
    else names = default_names(static_cast<std::size_t>(count));
  } else if (doc["variables"].is_array()) {
    for (std::size_t k = 0; k < doc["variables"].size(); ++k) {
      const json& v = doc["variables"][k];
      if (!v.is_string() || v.get<std::string>().empty()) {
        p.error(index_path("variables", k), "expected a non-empty name");
        continue;
      }
      const std::string name = v.get<std::string>();
      if (std::find(names.begin(), names.end(), name) != names.end())
        p.error(index_path("variables", k), "duplicate variable " + name);
      names.push_back(name);
    }
    if (names.empty()) p.error("variables", "expected at least one variable");
  } else {
    p.error("variables", "expected a list of names or a count");
  }
  if (!p.errors.empty()) throw InputError(p.errors);
  const std::size_t m = names.size();

  TermOrder order = TermOrder::lex(m);
  if (doc.contains("order")) {
    const json& o = doc["order"];
    if (o.is_string()) {
      if (o.get<std::string>() != "lex") p.error("order", "only lex orders are supported");
    } else if (o.is_object()) {
      if (!o.contains("kind") || o["kind"] != "lex") p.error("order.kind", "only lex orders are supported");
      if (o.contains("rank")) {
        std::vector<int> rank;
        const json& r = o["rank"];
        for (std::size_t k = 0; r.is_array() && k < r.size(); ++k) {
          if (r[k].is_string() && std::find(names.begin(), names.end(), r[k].get<std::string>()) != names.end())
            rank.push_back(static_cast<int>(std::find(names.begin(), names.end(), r[k].get<std::string>()) -
                                            names.begin()));
          else if (r[k].is_number_integer() && r[k].get<long long>() >= 0 && r[k].get<long long>() < (long long)m)
            rank.push_back(r[k].get<int>());
          else
            p.error(index_path("order.rank", k), "unknown variable");
        }
        std::vector<int> sorted = rank;
        std::sort(sorted.begin(), sorted.end());
        bool permutation = sorted.size() == m;
        for (std::size_t k = 0; permutation && k < m; ++k) permutation = sorted[k] == static_cast<int>(k);
        if (!permutation) p.error("order.rank", "expected a permutation of the variables");
        else order = TermOrder::lex(rank);
      }
    } else {
      p.error("order", "expected \"lex\" or {\"kind\": \"lex\", \"rank\": [...]}");
    }
  }

  std::optional<std::vector<int>> caps;
  if (doc.contains("caps")) {
    if (auto e = p.exponent(doc["caps"], "caps", std::nullopt)) caps = *e;
  }

  std::optional<Multicomplex> mc;
  const bool has_m = doc.contains("multicomplex"), has_i = doc.contains("ideal");
  if (has_m == has_i) {
    p.error("multicomplex", "give exactly one of \"multicomplex\" and \"ideal\"");
  } else if (has_m) {
    const json& list = doc["multicomplex"];
    if (!list.is_array() || list.empty()) {
      p.error("multicomplex", "expected a non-empty list of exponent vectors");
    } else {
      std::optional<std::size_t> n;
      if (caps) n = caps->size();
      else if (list[0].is_array()) n = list[0].size();
      std::vector<Exponent> monos;
      bool ok = true;
      for (std::size_t k = 0; k < list.size(); ++k) {
        auto e = p.exponent(list[k], index_path("multicomplex", k), n);
        if (e) monos.push_back(std::move(*e));
        else ok = false;
      }
      if (ok) {
        try {
          mc = caps ? Multicomplex::create(*caps, std::move(monos)) : Multicomplex::create(*n, std::move(monos));
        } catch (const InvalidInput& e) {
          p.error("multicomplex", e.what());
        }
      }
    }
  } else {
    const json& list = doc["ideal"];
    if (!list.is_array() || list.empty()) {
      p.error("ideal", "expected a non-empty list of exponent vectors");
    } else {
      std::optional<std::size_t> n;
      if (caps) n = caps->size();
      else if (list[0].is_array()) n = list[0].size();
      std::vector<Exponent> gens;
      bool ok = true;
      for (std::size_t k = 0; k < list.size(); ++k) {
        auto e = p.exponent(list[k], index_path("ideal", k), n);
        if (e) gens.push_back(std::move(*e));
        else ok = false;
      }
      if (ok) {
        try {
          const Multicomplex standard = standard_monomials(MonomialIdeal(*n, std::move(gens)));
          mc = caps ? Multicomplex::create(*caps, {standard.monomials().begin(), standard.monomials().end()})
                    : standard;
        } catch (const InvalidInput& e) {
          p.error("ideal", e.what());
        }
      }
    }
  }

  RingPtr ring = PolyRing::make(field, names, order);
  std::vector<std::vector<Polynomial>> forms;
  if (!doc.contains("families") || !doc["families"].is_array()) {
    p.error("families", "expected a list of form families");
  } else {
    const json& fams = doc["families"];
    if (mc && fams.size() != mc->nvars())
      p.error("families", "expected " + std::to_string(mc->nvars()) + " families, got " + std::to_string(fams.size()));
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const std::string where = index_path("families", i);
      if (!fams[i].is_array()) {
        p.error(where, "expected a list of forms");
        continue;
      }
      if (mc && i < mc->nvars() && fams[i].size() != static_cast<std::size_t>(mc->caps()[i]) + 1)
        p.error(where, "expected " + std::to_string(mc->caps()[i] + 1) + " forms (c_" + std::to_string(i + 1) +
                           " + 1), got " + std::to_string(fams[i].size()));
      std::vector<Polynomial> family;
      for (std::size_t j = 0; j < fams[i].size(); ++j)
        if (auto f = p.form(fams[i][j], index_path(where, j), ring)) family.push_back(std::move(*f));
      forms.push_back(std::move(family));
    }
  }
  if (!p.errors.empty()) throw InputError(p.errors);

  FormFamilies families = make_families(std::move(forms));
  for (const auto& issue : validate_input(*mc, families).issues) {
    std::string where = "families";
    if (issue.family >= 0) where = index_path(where, issue.family);
    if (issue.form >= 0) where = index_path(where, issue.form);
    p.error(where, issue.message);
  }
  if (!p.errors.empty()) throw InputError(p.errors);
  return ProblemInput{field, ring, *mc, std::move(families)};
}

ProblemInput parse_input_text(const std::string& text, const std::optional<Field>& field_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError({std::string("document: ") + e.what()});
  }
  return parse_input(doc, field_override);
}

namespace {

ordered_json coefficient_json(const Coeff& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

std::vector<std::string> tail(const std::vector<std::string>& names) {
  return names.empty() ? names : std::vector<std::string>(names.begin() + 1, names.end());
}

ordered_json strings(std::span<const Polynomial> polys) {
  ordered_json out = ordered_json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

}  // namespace

ordered_json to_document(const ProblemInput& input) {
  ordered_json doc;
  doc["field"] = input.field.spec();
  doc["variables"] = input.ring->names();
  const auto& rank = input.ring->order().rank();
  bool identity = true;
  for (std::size_t k = 0; k < rank.size(); ++k) identity = identity && rank[k] == static_cast<int>(k);
  if (identity) {
    doc["order"] = "lex";
  } else {
    ordered_json r = ordered_json::array();
    for (int k : rank) r.push_back(input.ring->names()[k]);
    doc["order"] = {{"kind", "lex"}, {"rank", r}};
  }
  doc["caps"] = input.multicomplex.caps();
  ordered_json monos = ordered_json::array();
  for (const auto& a : input.multicomplex.monomials()) monos.push_back(a);
  doc["multicomplex"] = monos;
  ordered_json fams = ordered_json::array();
  const std::size_t m = input.ring->nvars();
  for (const auto& fam : input.families) {
    ordered_json list = ordered_json::array();
    for (const auto& f : fam.forms) {
      if (f.degree() == 1 && f.is_homogeneous()) {
        std::vector<Coeff> coeffs(m, Coeff(0));
        for (const auto& t : f.terms())
          for (std::size_t k = 0; k < m; ++k)
            if (t.monomial[k] == 1) coeffs[k] = t.coeff;
        ordered_json v = ordered_json::array();
        for (const auto& c : coeffs) v.push_back(coefficient_json(c));
        list.push_back(v);
      } else {
        ordered_json terms = ordered_json::array();
        for (const auto& t : f.terms()) terms.push_back({t.monomial.exponents(), coefficient_json(t.coeff)});
        list.push_back({{"terms", terms}});
      }
    }
    fams.push_back(list);
  }
  doc["families"] = fams;
  return doc;
}

ordered_json to_json(const TheoremReport& report) {
  ordered_json out;
  out["passed"] = report.passed();
  out["multicomplex_size"] = report.multicomplex_size;
  out["degree"] = report.degree;
  out["height"] = report.height;
  out["generators"] = report.generators;
  out["initial_ideal"] = report.initial_ideal;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}});
  out["checks"] = checks;
  return out;
}

ordered_json to_json(const GlicciCertificate& cert) {
  ordered_json out;
  out["passed"] = cert.passed();
  out["biliaison_steps"] = cert.biliaison_count();
  out["failure"] = cert.failure ? ordered_json(*cert.failure) : ordered_json(nullptr);
  ordered_json steps = ordered_json::array();
  for (const auto& step : cert.steps) {
    ordered_json s;
    if (const auto* b = std::get_if<BiliaisonStep>(&step)) {
      s["kind"] = "biliaison";
      s["multicomplex"] = b->multicomplex.to_string(b->lead_variables);
      s["variable"] = b->variable;
      s["coordinate_change"] = b->coordinate_change
                                   ? ordered_json(b->variable + " -> " + b->coordinate_change->to_string())
                                   : ordered_json(nullptr);
      s["prime_variable"] = b->prime_variable;
      s["I"] = strings(b->I.generators());
      s["D"] = strings(b->D.generators());
      s["N"] = strings(b->N.generators());
      s["witness"] = {{"numerator", b->witness.numerator.to_string()},
                      {"denominator", b->witness.denominator.to_string()},
                      {"shift", b->witness.shift}};
      s["deletion"] = b->deletion.to_string(tail(b->lead_variables));
      s["link"] = b->link.to_string(b->lead_variables);
      s["checks"] = {{"nonzerodivisor", b->nonzerodivisor},
                     {"induced_groebner", b->induced_groebner},
                     {"nondegenerate", b->nondegenerate},
                     {"deletion_matches", b->deletion_matches},
                     {"link_matches", b->link_matches},
                     {"side_conditions", b->side_conditions},
                     {"biliaison", b->check.passed},
                     {"failed_check", b->check.failed_check},
                     {"detail", b->check.detail}};
      s["passed"] = b->passed();
    } else if (const auto* v = std::get_if<VariableSplitStep>(&step)) {
      s["kind"] = "variable_split";
      s["multicomplex"] = v->multicomplex.to_string(v->lead_variables);
      s["form"] = v->form.to_string();
      s["reduced"] = v->reduced.to_string(tail(v->lead_variables));
    } else {
      const auto& base = std::get<BaseCaseStep>(step);
      s["kind"] = "base_case";
      s["generators"] = strings(base.generators);
      s["complete_intersection"] = base.complete_intersection;
    }
    steps.push_back(s);
  }
  out["steps"] = steps;
  return out;
}

ordered_json to_json(const BettiTable& table) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, v] : table.entries()) out.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  return out;
}

bool BettiComparison::passed() const {
  return monomial == polynomial && monomial.hilbert_numerator() == hilbert_numerator &&
         polynomial.hilbert_numerator() == hilbert_numerator;
}

BettiComparison compare_betti(const ProblemInput& input, const ResolutionLimits& limits) {
  const MonomialIdeal im = ideal_of(input.multicomplex);
  const Ideal ideal = build_ideal(input.multicomplex, input.families).ideal;
  return {betti_monomial(im, input.field), betti_polynomial(ideal, limits),
          hilbert_numerator(im, im.nvars()).numerator};
}

ordered_json to_json(const BettiComparison& c) {
  return {{"passed", c.passed()},
          {"monomial", to_json(c.monomial)},
          {"polynomial", to_json(c.polynomial)},
          {"hilbert_numerator", c.hilbert_numerator}};
}

std::string to_text(const TheoremReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    for (const auto& w : c.witnesses) out << "     " << w << "\n";
  }
  out << "|M| = " << report.multicomplex_size << ", degree = " << report.degree << ", height = " << report.height
      << "\n";
  return out.str();
}

std::string to_text(const GlicciCertificate& cert) {
  std::ostringstream out;
  std::size_t k = 0;
  for (const auto& step : cert.steps) {
    out << "step " << ++k << ": ";
    if (const auto* b = std::get_if<BiliaisonStep>(&step)) {
      out << "biliaison at " << b->variable << " on M = " << b->multicomplex.to_string(b->lead_variables)
          << (b->passed() ? "  [pass]" : "  [FAIL]") << "\n";
      if (b->coordinate_change)
        out << "  coordinates: " << b->variable << " -> " << b->coordinate_change->to_string() << "\n";
      out << "  I = " << b->I.to_string() << "\n  D = " << b->D.to_string() << "\n  N = " << b->N.to_string() << "\n"
          << "  witness = (" << b->witness.numerator.to_string() << ") / (" << b->witness.denominator.to_string()
          << ")\n  " << b->check.detail << "\n";
    } else if (const auto* v = std::get_if<VariableSplitStep>(&step)) {
      out << "split off " << v->form.to_string() << ", M -> " << v->reduced.to_string(tail(v->lead_variables)) << "\n";
    } else {
      const auto& base = std::get<BaseCaseStep>(step);
      out << "complete intersection " << to_string(base.generators)
          << (base.complete_intersection ? "" : "  [FAIL: dependent forms]") << "\n";
    }
  }
  out << (cert.passed() ? "glicci certificate: PASS" : "glicci certificate: FAIL") << ", "
      << "biliaison steps: " << cert.biliaison_count() << "\n";
  if (cert.failure) out << "failure: " << *cert.failure << "\n";
  return out.str();
}

std::string to_text(const BettiComparison& c) {
  std::ostringstream out;
  out << "Betti numbers of I(M):\n" << c.monomial.to_string() << "Betti numbers of I(M,F):\n"
      << c.polynomial.to_string() << (c.passed() ? "PASS" : "FAIL") << " betti tables agree\n";
  return out.str();
}

}  // namespace multiconf
