#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multiconf/groebner.hpp"
#include "multiconf/multicomplex.hpp"

namespace multiconf {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer polynomial in t, coefficient of t^k at index k.
using IntPoly = std::vector<long long>;

/// Hilbert series of S/I as numerator / (1 - t)^ambient_dim.
struct HilbertData {
  IntPoly numerator;
  std::size_t ambient_dim = 0;

  /// Krull dimension of S/I; -1 for the unit ideal.
  int dimension() const;
  /// Multiplicity: the reduced numerator evaluated at 1 (0 for the unit ideal).
  long long degree() const;
  /// First count values of the Hilbert function.
  std::vector<long long> values(std::size_t count) const;
};

/// Splitting recursion HS(S/I) = HS(S/(I + x)) + t HS(S/(I : x)), pivoting
/// on the first variable that occurs to the highest power among the
/// generators that are not pure powers.
HilbertData hilbert_numerator(const MonomialIdeal& ideal, std::size_t ambient_dim);

/// in_<(I) as a monomial ideal of the ring of I.
MonomialIdeal initial_ideal(const Ideal& ideal);

/// deg(S/I) through the Hilbert series of in_<(I).
long long degree_of(const Ideal& ideal);

/// Smallest set of variables meeting every generator. 0 for the zero ideal;
/// throws std::domain_error for the unit ideal.
int height_monomial(const MonomialIdeal& ideal);
int height_of(const Ideal& ideal);

/// Graded Betti numbers beta_{i,j} of an ideal (i = 0 counts generators).
class BettiTable {
 public:
  long long at(int i, int j) const;
  void add(int i, int j, long long value);
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  long long total(int i) const;
  int length() const;

  /// 1 - sum (-1)^i beta_{i,j} t^j, the Hilbert numerator of S/I.
  IntPoly hilbert_numerator() const;

  /// Rows indexed by j - i, columns by i.
  std::string to_string() const;

  bool operator==(const BettiTable& other) const = default;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) over the LCM lattice, where K^b is
/// the upper Koszul simplicial complex {F squarefree : x^{b-F} in I}.
BettiTable betti_monomial(const MonomialIdeal& ideal, const Field& field);

struct ResolutionLimits {
  std::size_t max_rank = 512;
};

/// A graded free resolution F_0 <- F_1 <- ... of a homogeneous ideal built
/// from Schreyer syzygies. Not minimal in general.
struct FreeResolution {
  /// degrees[i][k]: degree of the k-th basis element of F_i.
  std::vector<std::vector<int>> degrees;
  /// constant_parts[i] for i >= 1: the entries of d_i: F_i -> F_{i-1} whose
  /// monomial is 1, as (row, column, coefficient).
  struct Entry {
    std::size_t row;
    std::size_t col;
    Coeff coeff;
  };
  std::vector<std::vector<Entry>> constant_parts;

  BettiTable ranks() const;
};

/// Throws InvalidInput for inhomogeneous input and ResourceLimitExceeded if
/// a module rank exceeds the limit or the length exceeds the ambient dimension.
FreeResolution schreyer_resolution(const Ideal& ideal, const ResolutionLimits& limits = {});

/// Minimal graded Betti numbers: ranks of the Schreyer resolution minus the
/// ranks of its constant parts in each degree.
BettiTable betti_polynomial(const Ideal& ideal, const ResolutionLimits& limits = {});

}  // namespace multiconf
