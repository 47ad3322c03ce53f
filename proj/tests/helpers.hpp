// Shared fixtures for the unit tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiconf/configuration.hpp"
#include "multiconf/polynomial.hpp"

namespace fixture {

using namespace multiconf;

/// Reads "x1^2*x3 - 3/2*x2 + 4" in the variables of ring. Test-only.
inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::runtime_error("number expected in " + text);
    return text.substr(start, pos - start);
  };
  skip();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    mpq_class coeff(sign);
    Monomial m(ring->nvars());
    bool first = true;
    while (true) {
      skip();
      if (pos >= text.size()) break;
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = read_int();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          num += "/" + read_int();
        }
        mpq_class c(num);
        c.canonicalize();
        coeff *= c;
      } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                     text[pos] == '\''))
          ++pos;
        const int v = ring->index_of(text.substr(start, pos - start));
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = std::stoi(read_int());
        }
        m[v] += e;
      } else if (!first) {
        break;
      } else {
        throw std::runtime_error("unexpected character in " + text);
      }
      first = false;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back({m, ring->field().from_rational(coeff)});
    skip();
  }
  return Polynomial::from_terms(ring, terms);
}

inline std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ring, t));
  return out;
}

/// Equal as multisets of polynomials.
inline bool same_elements(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto key = [](const Polynomial& x, const Polynomial& y) { return x.to_string() < y.to_string(); };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  return a == b;
}

inline Ideal ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  return Ideal(ring, polys(ring, texts));
}

inline RingPtr ring(std::size_t n, const Field& field = Field::rationals()) {
  return PolyRing::make(field, default_names(n));
}

/// Four points in P^2: caps (2,1), M = {1, x1, x1^2, x2},
/// F1 = {x1, x1+x2+3x3, x1+x3}, F2 = {x2+x3, x2}.
struct FourPoints {
  RingPtr ring;
  Multicomplex m;
  FormFamilies families;
};

inline FourPoints four_points(const Field& field = Field::rationals()) {
  RingPtr r = fixture::ring(3, field);
  Multicomplex m = Multicomplex::create({2, 1}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  FormFamilies f = make_families({polys(r, {"x1", "x1 + x2 + 3*x3", "x1 + x3"}), polys(r, {"x2 + x3", "x2"})});
  return {r, m, f};
}

/// The expanded generators of I(M, F) for the four points.
inline std::vector<std::string> four_point_generators() {
  return {"x1^3 + x1^2*x2 + 4*x1^2*x3 + x1*x2*x3 + 3*x1*x3^2", "x1*x2 + x1*x3", "x2^2 + x2*x3"};
}

}  // namespace fixture
