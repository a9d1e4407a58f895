#ifndef RCANON_EXPR_HPP
#define RCANON_EXPR_HPP

#include <array>
#include <optional>
#include <vector>

#include "index.hpp"
#include "rational.hpp"

namespace rcanon {

// One copy of the curvature tensor: four seats grouped as twin-seats
// (slots 0,1) and (slots 2,3). Signs never live here.
struct RFactor {
  std::array<Index, 4> slots;
};

int cmp_factor(const RFactor& a, const RFactor& b);
bool operator==(const RFactor& a, const RFactor& b);

struct FactorPrenormal {
  int sign = 1;
  RFactor factor;
  bool zero = false;  // a twin-seat held two equal indices
};

// Sorts each twin-seat (each within-pair swap contributes -1), then orders
// the two pairs (no sign). zero when either pair holds equal indices.
FactorPrenormal factor_prenormal(const RFactor& f);

bool is_prenormal(const RFactor& f);

// A scaled contraction product. Validity (every dummy exactly twice, every
// free exactly once) is established by the parser / builders, not enforced
// per mutation.
struct RMonomial {
  Rational coeff = make_rational(1);
  std::vector<RFactor> factors;

  int degree() const { return static_cast<int>(factors.size()); }
  RMonomial monic() const {
    RMonomial m = *this;
    m.coeff = make_rational(1);
    return m;
  }
};

bool operator==(const RMonomial& a, const RMonomial& b);

// Lexicographic comparison of the flattened 4n-index sequences under the
// index total order; coefficients ignored. A strict prefix compares less.
int cmp_monic(const RMonomial& a, const RMonomial& b);

struct RPolynomial {
  std::vector<RMonomial> terms;  // ascending monic, like terms combined

  bool is_zero() const { return terms.empty(); }
  static RPolynomial zero() { return {}; }
};

bool operator==(const RPolynomial& a, const RPolynomial& b);

// Normalizing constructor: sorts terms ascending by monic comparison, merges
// equal monic sequences by coefficient addition, drops zero terms.
RPolynomial combine_like_terms(std::vector<RMonomial> terms);
inline RPolynomial combine_like_terms(const RPolynomial& p) { return combine_like_terms(p.terms); }

// Checks the monomial/polynomial invariants (index multiplicities, free-row
// and free-set consistency across terms); throws ValidationError.
void validate(const RPolynomial& p);

bool has_integer_index(const RMonomial& m);

// Pure renaming of integer dummies to fresh named dummies (order-preserving),
// for feeding canonical output back into canonicalization.
RMonomial relabel_integer_dummies(const RMonomial& m);
RPolynomial relabel_integer_dummies(const RPolynomial& p);

// Renumbers the integer dummies of a connected canonical piece densely from 1,
// preserving order (inverse of the per-term offset numbering).
RMonomial renumber_dense(const RMonomial& m);

long max_integer_index(const RMonomial& m);

// Canonical term assembly: sorts connected pieces ascending by monic
// comparison and renumbers each piece's integer dummies with cumulative
// offsets; the term's factor sequence is their concatenation.
RMonomial canonical_term(Rational coeff, std::vector<RMonomial> components);

}  // namespace rcanon

#endif
