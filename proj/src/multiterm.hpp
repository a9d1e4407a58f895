#ifndef RCANON_MULTITERM_HPP
#define RCANON_MULTITERM_HPP

#include <cstdint>
#include <vector>

#include "expr.hpp"
#include "prenormal.hpp"
#include "qlambda.hpp"

namespace rcanon {

class RuleCache;

struct MonicLess {
  bool operator()(const RMonomial& a, const RMonomial& b) const { return cmp_monic(a, b) < 0; }
};

// Symbolic extension of a connected pre-normal monomial: one MultiPoly
// coefficient per distinct pre-normal key, from expanding the product of the
// three Bianchi rotations of every loop-free factor with parameters
// lambda(i,p), everything scaled by lambda_r.
struct ExtensionPolynomial {
  std::vector<std::pair<RMonomial, MultiPoly>> terms;  // keys monic, ascending
  int degree = 0;
  int loop_count = 0;           // r
  std::uint64_t raw_terms = 0;  // 3^(n-r) expansion products
};

ExtensionPolynomial ext(const RMonomial& f, PnomStats* stats = nullptr);

// Complete Q-coefficient RREF of the Bianchi relations among the pre-normal
// monomials sharing f's connection multigraph. Columns follow descending
// monic order x1 > x2 > ... > xm.
struct EliminationRuleSet {
  std::vector<RMonomial> variables;          // descending monic
  std::vector<std::vector<Rational>> rows;   // complete RREF, zero rows removed
  std::vector<int> pivots;
  std::uint64_t equation_count = 0;          // rows generated before reduction

  int find_variable(const RMonomial& monic) const;  // -1 when absent
  bool is_leading(int var) const;
  // x_var = sum of (coeff, variable) over strictly smaller monomials
  std::vector<std::pair<Rational, int>> rhs(int var) const;
};

bool rulesets_equal(const EliminationRuleSet& a, const EliminationRuleSet& b);

// The iterative elimination over Q(Lambda): one equation per loop-free factor
// (specializing lambda_r = lambda_j2 = lambda_j3 = lambda_j4 = 1), repeated
// RREF + rational-part splitting until all entries are rational, then a final
// Q-RREF over the accumulated rows.
EliminationRuleSet rebe(const RMonomial& f, PnomStats* stats = nullptr);

// Reference construction: enumerates the 3^(n-r) - 2^(n-r) pre-normalized
// three-term Bianchi equations directly and row-reduces over Q.
EliminationRuleSet direct_bianchi_rref(const RMonomial& f, PnomStats* stats = nullptr);

struct NormalStats {
  PnomStats pnom;
  std::uint64_t ruleset_runs = 0;
  std::uint64_t equations = 0;
  std::uint64_t cache_hits = 0;
};

struct NormalOptions {
  enum class Method { Rebe, Direct };
  Method method = Method::Rebe;
  RuleCache* cache = nullptr;
  NormalStats* stats = nullptr;
};

// Monoterm canonicalization of a polynomial: every maximal connected piece of
// every term through pnom, terms reassembled canonically, like terms
// combined. Integer dummies in the input are relabeled to fresh names first.
RPolynomial prenormal_polynomial(const RPolynomial& p, PnomStats* stats = nullptr);

// Full (multiterm) canonicalization: prenormal_polynomial, then elimination
// of leading pre-normal pieces by the Bianchi rule sets, expansion, and
// canonical reassembly. Idempotent.
RPolynomial normal(const RPolynomial& p, const NormalOptions& opts = {});

}  // namespace rcanon

#endif
