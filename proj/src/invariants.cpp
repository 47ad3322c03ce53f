#include "multiconf/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "multiconf/linalg.hpp"

namespace multiconf {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

IntPoly shift(const IntPoly& a, int by) {
  if (a.empty()) return a;
  IntPoly r(by, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

int support_size(const Exponent& g) {
  return static_cast<int>(std::count_if(g.begin(), g.end(), [](int e) { return e > 0; }));
}

IntPoly numerator_rec(std::vector<Exponent> gens, std::size_t n) {
  // gens are minimal
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (support_size(g) == 0) return {};
  int best_var = -1, best_exp = 0;
  for (const auto& g : gens) {
    if (support_size(g) < 2) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > best_exp) {
        best_exp = g[k];
        best_var = static_cast<int>(k);
      }
  }
  if (best_var < 0) {
    IntPoly r{1};
    for (const auto& g : gens) {
      int d = 0;
      for (int e : g) d += e;
      IntPoly factor(d + 1, 0);
      factor[0] = 1;
      factor[d] = -1;
      r = multiply(r, factor);
    }
    return r;
  }
  Exponent x(n, 0);
  x[best_var] = 1;
  MonomialIdeal ideal(n, gens);
  std::vector<Exponent> with_var = ideal.generators();
  with_var.push_back(x);
  const MonomialIdeal sum(n, std::move(with_var));
  const MonomialIdeal quotient = ideal.colon(x);
  return add(numerator_rec(sum.generators(), n), shift(numerator_rec(quotient.generators(), n), 1));
}

}  // namespace

int HilbertData::dimension() const {
  IntPoly p = numerator;
  trim(p);
  if (p.empty()) return -1;
  int dim = static_cast<int>(ambient_dim);
  while (true) {
    long long at_one = 0;
    for (long long c : p) at_one += c;
    if (at_one != 0) return dim;
    // synthetic division by (1 - t)
    IntPoly q(p.size() - 1, 0);
    long long carry = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      carry += p[k];
      q[k] = carry;
    }
    p = q;
    --dim;
  }
}

long long HilbertData::degree() const {
  IntPoly p = numerator;
  trim(p);
  if (p.empty()) return 0;
  while (true) {
    long long at_one = 0;
    for (long long c : p) at_one += c;
    if (at_one != 0) return at_one;
    IntPoly q(p.size() - 1, 0);
    long long carry = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      carry += p[k];
      q[k] = carry;
    }
    p = q;
  }
}

std::vector<long long> HilbertData::values(std::size_t count) const {
  std::vector<long long> v(count, 0);
  for (std::size_t k = 0; k < std::min(count, numerator.size()); ++k) v[k] = numerator[k];
  for (std::size_t r = 0; r < ambient_dim; ++r)
    for (std::size_t k = 1; k < count; ++k) v[k] += v[k - 1];
  return v;
}

HilbertData hilbert_numerator(const MonomialIdeal& ideal, std::size_t ambient_dim) {
  if (ambient_dim < ideal.nvars()) throw std::invalid_argument("ambient dimension smaller than the ideal's ring");
  HilbertData h;
  h.ambient_dim = ambient_dim;
  h.numerator = numerator_rec(ideal.generators(), ideal.nvars());
  return h;
}

MonomialIdeal initial_ideal(const Ideal& ideal) {
  std::vector<Exponent> gens;
  for (const auto& m : ideal.initial_monomials()) gens.push_back(m.exponents());
  return MonomialIdeal(ideal.ring()->nvars(), std::move(gens));
}

long long degree_of(const Ideal& ideal) {
  return hilbert_numerator(initial_ideal(ideal), ideal.ring()->nvars()).degree();
}

int height_monomial(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return 0;
  const std::size_t n = ideal.nvars();
  for (const auto& g : gens)
    if (support_size(g) == 0) throw std::domain_error("height of the unit ideal");
  if (n > 24) throw ResourceLimitExceeded("exhaustive height search limited to 24 variables");
  std::vector<unsigned> masks;
  for (const auto& g : gens) {
    unsigned mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) mask |= 1u << k;
    masks.push_back(mask);
  }
  int best = static_cast<int>(n);
  for (unsigned cover = 0; cover < (1u << n); ++cover) {
    const int size = __builtin_popcount(cover);
    if (size >= best) continue;
    if (std::all_of(masks.begin(), masks.end(), [cover](unsigned m) { return (m & cover) != 0; })) best = size;
  }
  return best;
}

int height_of(const Ideal& ideal) { return height_monomial(initial_ideal(ideal)); }

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto& v = entries_[{i, j}];
  v += value;
  if (v == 0) entries_.erase({i, j});
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

int BettiTable::length() const {
  int len = -1;
  for (const auto& [key, v] : entries_) len = std::max(len, key.first);
  return len;
}

IntPoly BettiTable::hilbert_numerator() const {
  IntPoly p{1};
  for (const auto& [key, v] : entries_) {
    const auto [i, j] = key;
    if (p.size() <= static_cast<std::size_t>(j)) p.resize(j + 1, 0);
    p[j] += (i % 2 == 0 ? -v : v);
  }
  trim(p);
  return p;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "(zero)\n";
  int max_i = 0, min_row = 1 << 30, max_row = -(1 << 30);
  for (const auto& [key, v] : entries_) {
    max_i = std::max(max_i, key.first);
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  std::ostringstream out;
  out << "       ";
  for (int i = 0; i <= max_i; ++i) out << " " << std::string(std::max(0, 4 - static_cast<int>(std::to_string(i).size())), ' ') << i;
  out << "\n";
  for (int r = min_row; r <= max_row; ++r) {
    std::string label = std::to_string(r) + ":";
    out << std::string(std::max(0, 7 - static_cast<int>(label.size())), ' ') << label;
    for (int i = 0; i <= max_i; ++i) {
      const long long v = at(i, r + i);
      std::string cell = v == 0 ? "." : std::to_string(v);
      out << " " << std::string(std::max(0, 4 - static_cast<int>(cell.size())), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

BettiTable betti_monomial(const MonomialIdeal& ideal, const Field& field) {
  BettiTable table;
  const auto& gens = ideal.generators();
  if (gens.empty()) return table;
  const std::size_t n = ideal.nvars();

  std::set<Exponent> lattice(gens.begin(), gens.end());
  std::vector<Exponent> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Exponent> next;
    for (const auto& l : frontier)
      for (const auto& g : gens) {
        Exponent m(n);
        for (std::size_t k = 0; k < n; ++k) m[k] = std::max(l[k], g[k]);
        if (lattice.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }

  for (const auto& b : lattice) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k)
      if (b[k] > 0) support.push_back(k);
    const std::size_t s = support.size();
    if (s > 20) throw ResourceLimitExceeded("upper Koszul complex support too large");
    // faces grouped by cardinality, as bitmasks over the support
    std::vector<std::vector<unsigned>> faces(s + 1);
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      Exponent shifted = b;
      for (std::size_t k = 0; k < s; ++k)
        if (mask & (1u << k)) --shifted[support[k]];
      if (ideal.contains(shifted)) faces[__builtin_popcount(mask)].push_back(mask);
    }
    // boundary rank from faces of size c to size c - 1
    auto boundary_rank = [&](std::size_t c) -> std::size_t {
      if (c == 0 || c > s || faces[c].empty() || faces[c - 1].empty()) return 0;
      std::map<unsigned, std::size_t> row_of;
      for (std::size_t r = 0; r < faces[c - 1].size(); ++r) row_of[faces[c - 1][r]] = r;
      Matrix d(field, faces[c - 1].size(), faces[c].size());
      for (std::size_t col = 0; col < faces[c].size(); ++col) {
        const unsigned f = faces[c][col];
        int position = 0;
        for (std::size_t k = 0; k < s; ++k) {
          if (!(f & (1u << k))) continue;
          d(row_of.at(f & ~(1u << k)), col) = field.from_int(position % 2 == 0 ? 1 : -1);
          ++position;
        }
      }
      return d.rank();
    };
    int degree = 0;
    for (int e : b) degree += e;
    for (std::size_t c = 0; c <= s; ++c) {
      // faces of size c have dimension c - 1 and contribute to beta_{c, b}
      const long long homology = static_cast<long long>(faces[c].size()) -
                                 static_cast<long long>(boundary_rank(c)) -
                                 static_cast<long long>(boundary_rank(c + 1));
      table.add(static_cast<int>(c), degree, homology);
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Schreyer resolution

namespace {

struct ModTerm {
  std::size_t comp;
  Monomial mono;
  Coeff coeff;
};

using ModElem = std::vector<ModTerm>;

/// Order on a free module. The bottom level is S^1 with the ring order; each
/// higher level is the Schreyer order induced by the leading terms of the
/// elements spanning its basis.
class ModuleOrder {
 public:
  explicit ModuleOrder(const TermOrder& base) : base_(&base) {}
  ModuleOrder(const ModuleOrder& below, std::vector<Monomial> lead_mono, std::vector<std::size_t> lead_comp)
      : base_(below.base_), below_(&below), lead_mono_(std::move(lead_mono)), lead_comp_(std::move(lead_comp)) {}

  std::strong_ordering compare(const Monomial& a, std::size_t i, const Monomial& b, std::size_t j) const {
    if (!below_) return base_->compare(a, b);
    const auto c = below_->compare(a * lead_mono_[i], lead_comp_[i], b * lead_mono_[j], lead_comp_[j]);
    if (c != std::strong_ordering::equal) return c;
    return j <=> i;
  }

 private:
  const TermOrder* base_;
  const ModuleOrder* below_ = nullptr;
  std::vector<Monomial> lead_mono_;
  std::vector<std::size_t> lead_comp_;
};

void sort_terms(ModElem& v, const ModuleOrder& order, const Field& field) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.mono, a.comp, b.mono, b.comp) == std::strong_ordering::greater;
  });
  ModElem out;
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (Field::is_zero(out.back().coeff)) out.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

/// v -= c * m * w, keeping terms sorted.
void subtract_multiple(ModElem& v, const Coeff& c, const Monomial& m, const ModElem& w, const ModuleOrder& order,
                       const Field& field) {
  ModElem out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size()) {
      out.push_back(std::move(v[i++]));
      continue;
    }
    ModTerm wt{w[j].comp, w[j].mono * m, field.neg(field.mul(c, w[j].coeff))};
    if (i == v.size()) {
      out.push_back(std::move(wt));
      ++j;
      continue;
    }
    const auto cmp = order.compare(v[i].mono, v[i].comp, wt.mono, wt.comp);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(v[i++]));
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(std::move(wt));
      ++j;
    } else {
      Coeff sum = field.add(v[i].coeff, wt.coeff);
      if (!Field::is_zero(sum)) out.push_back({wt.comp, std::move(wt.mono), std::move(sum)});
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

}  // namespace

BettiTable FreeResolution::ranks() const {
  BettiTable t;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (int d : degrees[i]) t.add(static_cast<int>(i), d, 1);
  return t;
}

FreeResolution schreyer_resolution(const Ideal& ideal, const ResolutionLimits& limits) {
  const RingPtr& ring = ideal.ring();
  const Field& field = ring->field();
  const std::size_t n = ring->nvars();
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw InvalidInput("Betti numbers require a homogeneous ideal; " + g.to_string() + " is not");

  FreeResolution res;
  const auto& basis = ideal.reduced_basis();
  if (basis.empty()) return res;
  if (basis.front().is_constant()) throw InvalidInput("Betti numbers of the unit ideal");

  // elements of the current level together with the degrees of the basis of
  // the module they live in
  std::vector<ModElem> elems;
  std::vector<int> elem_degree;
  for (const auto& g : basis) {
    ModElem v;
    for (const auto& t : g.terms()) v.push_back({0, t.monomial, t.coeff});
    elems.push_back(std::move(v));
    elem_degree.push_back(g.degree());
  }

  std::vector<std::unique_ptr<ModuleOrder>> orders;
  orders.push_back(std::make_unique<ModuleOrder>(ring->order()));

  for (std::size_t level = 0; !elems.empty(); ++level) {
    if (level > n) throw ResourceLimitExceeded("resolution longer than the ambient dimension");
    const ModuleOrder& below = *orders.back();

    // keep a minimal set of leading terms
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < elems.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < elems.size() && !redundant; ++b) {
        if (a == b || elems[a].front().comp != elems[b].front().comp) continue;
        const Monomial& ma = elems[a].front().mono;
        const Monomial& mb = elems[b].front().mono;
        if (mb.divides(ma) && (!(ma == mb) || b < a)) redundant = true;
      }
      if (!redundant) kept.push_back(a);
    }
    // order so that leading terms lose one more variable at the next level
    int pivot = -1;
    for (std::size_t k = 0; k < n && pivot < 0; ++k)
      for (std::size_t a : kept)
        if (elems[a].front().mono[k] > 0) {
          pivot = static_cast<int>(k);
          break;
        }
    if (pivot >= 0)
      std::stable_sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
        return elems[a].front().mono[pivot] > elems[b].front().mono[pivot];
      });

    std::vector<ModElem> v;
    std::vector<int> degrees;
    for (std::size_t a : kept) {
      v.push_back(std::move(elems[a]));
      degrees.push_back(elem_degree[a]);
    }
    if (v.size() > limits.max_rank)
      throw ResourceLimitExceeded("free module of rank " + std::to_string(v.size()) + " exceeds the limit " +
                                  std::to_string(limits.max_rank));

    if (level >= 1) {
      std::vector<FreeResolution::Entry> constants;
      for (std::size_t col = 0; col < v.size(); ++col)
        for (const auto& t : v[col])
          if (t.mono.is_one()) constants.push_back({t.comp, col, t.coeff});
      res.constant_parts.push_back(std::move(constants));
    } else {
      res.constant_parts.emplace_back();
    }
    res.degrees.push_back(degrees);

    std::vector<Monomial> lead_mono;
    std::vector<std::size_t> lead_comp;
    for (const auto& e : v) {
      lead_mono.push_back(e.front().mono);
      lead_comp.push_back(e.front().comp);
    }
    orders.push_back(std::make_unique<ModuleOrder>(below, lead_mono, lead_comp));
    const ModuleOrder& here = *orders.back();

    std::vector<ModElem> syzygies;
    std::vector<int> syz_degree;
    for (std::size_t j = 0; j < v.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (lead_comp[i] != lead_comp[j]) continue;
        const Monomial l = lead_mono[i].lcm(lead_mono[j]);
        const Monomial mi = l / lead_mono[i];
        const Monomial mj = l / lead_mono[j];
        const Coeff ci = field.inv(v[i].front().coeff);
        const Coeff cj = field.inv(v[j].front().coeff);

        ModElem s;
        for (const auto& t : v[i]) s.push_back({t.comp, t.mono * mi, field.mul(ci, t.coeff)});
        subtract_multiple(s, cj, mj, v[j], below, field);

        ModElem syz{{i, mi, ci}, {j, mj, field.neg(cj)}};
        while (!s.empty()) {
          const ModTerm lead = s.front();
          std::size_t k = 0;
          for (; k < v.size(); ++k)
            if (lead_comp[k] == lead.comp && lead_mono[k].divides(lead.mono)) break;
          if (k == v.size()) throw std::logic_error("Schreyer step: S-pair does not reduce to zero");
          const Monomial q = lead.mono / lead_mono[k];
          const Coeff c = field.div(lead.coeff, v[k].front().coeff);
          subtract_multiple(s, c, q, v[k], below, field);
          syz.push_back({k, q, field.neg(c)});
        }
        sort_terms(syz, here, field);
        syzygies.push_back(std::move(syz));
        syz_degree.push_back(l.degree() + (degrees[i] - lead_mono[i].degree()));
      }
    elems = std::move(syzygies);
    elem_degree = std::move(syz_degree);
  }
  return res;
}

BettiTable betti_polynomial(const Ideal& ideal, const ResolutionLimits& limits) {
  const FreeResolution res = schreyer_resolution(ideal, limits);
  const Field& field = ideal.ring()->field();
  const std::size_t levels = res.degrees.size();

  // rank of the constant part of d_i restricted to degree j
  auto constant_rank = [&](std::size_t i, int j) -> long long {
    if (i == 0 || i >= levels) return 0;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < res.degrees[i - 1].size(); ++r)
      if (res.degrees[i - 1][r] == j) rows.push_back(r);
    for (std::size_t c = 0; c < res.degrees[i].size(); ++c)
      if (res.degrees[i][c] == j) cols.push_back(c);
    if (rows.empty() || cols.empty()) return 0;
    Matrix m(field, rows.size(), cols.size());
    for (const auto& e : res.constant_parts[i]) {
      auto r = std::find(rows.begin(), rows.end(), e.row);
      auto c = std::find(cols.begin(), cols.end(), e.col);
      if (r != rows.end() && c != cols.end()) m(r - rows.begin(), c - cols.begin()) = e.coeff;
    }
    return static_cast<long long>(m.rank());
  };

  BettiTable table;
  const BettiTable ranks = res.ranks();
  for (const auto& [key, f] : ranks.entries()) {
    const auto [i, j] = key;
    table.add(i, j, f - constant_rank(i, j) - constant_rank(i + 1, j));
  }
  return table;
}

}  // namespace multiconf
