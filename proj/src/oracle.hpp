#ifndef RCANON_ORACLE_HPP
#define RCANON_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "expr.hpp"

namespace rcanon {

// Exhaustive monoterm minimization: every factor order x every per-factor
// Sym8 element, 8^n * n!. Independent of the pnom search path. Throws when
// the degree exceeds the cap.
std::optional<RMonomial> pnom_bruteforce(const RMonomial& m, int degree_cap = 4);

// Numeric witness: R_{abcd} = sum_k (A_ac A_bd - A_ad A_bc) over symmetric
// rational matrices A^(k) satisfies every monoterm symmetry and the cyclic
// identity in any dimension.
struct CurvatureSeed {
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> mats;  // k x dim x dim, symmetric

  static CurvatureSeed identity(int dim);
  static CurvatureSeed random(int dim, int count, std::uint64_t seed);
};

// Contracts every term over 1..dim per its dummy pattern. Scalar polynomials
// give a single value; with free indices, one value per assignment of the
// (sorted) free indices, row-major.
std::vector<Rational> curvature_eval(const RPolynomial& p, const CurvatureSeed& seed);

}  // namespace rcanon

#endif
