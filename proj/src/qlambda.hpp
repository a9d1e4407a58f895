#ifndef RCANON_QLAMBDA_HPP
#define RCANON_QLAMBDA_HPP

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rcanon {

// Extension parameters: lambda_r (the single looped-product parameter) and
// lambda(i,p) for loop-free factor position i (1-based) and rotation
// p in {2,3,4}. Encoded so the enumeration order is lambda_r first, then
// lambda(i,p) by (i,p).
using ParamId = int;
constexpr ParamId kLambdaR = 0;
inline ParamId lambda_ip(int factor_pos, int p) { return factor_pos * 4 + p; }
std::string param_name(ParamId id);

// Monomial over the parameters: sorted (var, exp>0) pairs.
struct ParamMono {
  std::vector<std::pair<ParamId, int>> exps;

  int total_degree() const;
  bool empty() const { return exps.empty(); }
  bool operator==(const ParamMono& o) const { return exps == o.exps; }
};

// Graded lexicographic order with earlier-enumerated parameters more
// significant.
struct GrlexLess {
  bool operator()(const ParamMono& a, const ParamMono& b) const;
};

ParamMono mono_mul(const ParamMono& a, const ParamMono& b);
bool mono_divides(const ParamMono& a, const ParamMono& b);  // a | b
ParamMono mono_div(const ParamMono& b, const ParamMono& a);  // b / a

// Exact multivariate polynomial over Q; canonical: no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Rational c);
  static MultiPoly variable(ParamId v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const std::map<ParamMono, Rational, GrlexLess>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // leading term under grlex
  const ParamMono& leading_mono() const;
  const Rational& leading_coeff() const;
  int total_degree() const;

  void add_term(const ParamMono& m, const Rational& c);

  std::vector<ParamId> variables() const;
  int degree_in(ParamId v) const;

  MultiPoly specialize(const std::map<ParamId, Rational>& assignment) const;

  std::string str() const;

 private:
  std::map<ParamMono, Rational, GrlexLess> terms_;
};

// Single-divisor division: n = q*d + r with no term of r divisible by the
// leading term of d (grlex).
void poly_divrem(const MultiPoly& n, const MultiPoly& d, MultiPoly& q, MultiPoly& r);
MultiPoly poly_exact_div(const MultiPoly& n, const MultiPoly& d);  // throws if inexact
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Reduced rational function; denominator monic under grlex.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MultiPoly(make_rational(1))) {}
  explicit RatFunc(Rational c) : num_(MultiPoly(std::move(c))), den_(MultiPoly(make_rational(1))) {}
  explicit RatFunc(MultiPoly p) : num_(std::move(p)), den_(MultiPoly(make_rational(1))) {}
  RatFunc(MultiPoly num, MultiPoly den);  // reduces

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational as_rational() const;  // requires is_rational

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on division by zero

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc specialize(const std::map<ParamId, Rational>& assignment) const;

  std::string str() const;

 private:
  MultiPoly num_, den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

// e = c + f + g/h: c the rational part, f the positive-degree part of the
// polynomial quotient, g the division remainder, h the denominator.
struct QPartSplit {
  Rational c;
  MultiPoly f, g, h;
};

QPartSplit q_part_split(const RatFunc& e);

}  // namespace rcanon

#endif
