#include "qlambda.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rcanon {

std::string param_name(ParamId id) {
  if (id == kLambdaR) return "l0";
  return "l" + std::to_string(id / 4) + std::to_string(id % 4);
}

int ParamMono::total_degree() const {
  int d = 0;
  for (auto& [v, e] : exps) d += e;
  return d;
}

bool GrlexLess::operator()(const ParamMono& a, const ParamMono& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // lex: walk variables ascending; larger exponent on the earliest differing
  // variable means the larger monomial.
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    ParamId va = i < a.exps.size() ? a.exps[i].first : (1 << 30);
    ParamId vb = j < b.exps.size() ? b.exps[j].first : (1 << 30);
    if (va == vb) {
      if (a.exps[i].second != b.exps[j].second)
        return a.exps[i].second < b.exps[j].second;  // smaller exp -> smaller
      ++i;
      ++j;
    } else if (va < vb) {
      return false;  // a has positive exp on an earlier var -> a larger
    } else {
      return true;
    }
  }
  return false;
}

ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  ParamMono out;
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first))
      out.exps.push_back(a.exps[i++]);
    else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first)
      out.exps.push_back(b.exps[j++]);
    else {
      out.exps.push_back({a.exps[i].first, a.exps[i].second + b.exps[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

bool mono_divides(const ParamMono& a, const ParamMono& b) {
  std::size_t j = 0;
  for (const auto& [v, e] : a.exps) {
    while (j < b.exps.size() && b.exps[j].first < v) ++j;
    if (j == b.exps.size() || b.exps[j].first != v || b.exps[j].second < e) return false;
  }
  return true;
}

ParamMono mono_div(const ParamMono& b, const ParamMono& a) {
  ParamMono out;
  std::size_t i = 0;
  for (const auto& [v, e] : b.exps) {
    int sub = 0;
    if (i < a.exps.size() && a.exps[i].first == v) {
      sub = a.exps[i].second;
      ++i;
    }
    if (e - sub > 0) out.exps.push_back({v, e - sub});
  }
  if (i != a.exps.size()) throw std::invalid_argument("mono_div: not divisible");
  return out;
}

MultiPoly::MultiPoly(Rational c) {
  if (!rcanon::is_zero(c)) terms_.emplace(ParamMono{}, std::move(c));
}

MultiPoly MultiPoly::variable(ParamId v) {
  MultiPoly p;
  ParamMono m;
  m.exps.push_back({v, 1});
  p.terms_.emplace(std::move(m), make_rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(ParamMono{});
  return it == terms_.end() ? make_rational(0) : it->second;
}

void MultiPoly::add_term(const ParamMono& m, const Rational& c) {
  if (rcanon::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (rcanon::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(mono_mul(m1, m2), c1 * c2);
  return out;
}

const ParamMono& MultiPoly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

std::vector<ParamId> MultiPoly::variables() const {
  std::set<ParamId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exps) vars.insert(v);
  return {vars.begin(), vars.end()};
}

int MultiPoly::degree_in(ParamId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [mv, e] : m.exps)
      if (mv == v) d = std::max(d, e);
  return d;
}

MultiPoly MultiPoly::specialize(const std::map<ParamId, Rational>& assignment) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Rational scale = c;
    ParamMono rest;
    for (const auto& [v, e] : m.exps) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        rest.exps.push_back({v, e});
      } else {
        for (int k = 0; k < e; ++k) scale *= it->second;
      }
    }
    out.add_term(rest, scale);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      out << "-";
    first = false;
    Rational mag = abs(c);
    if (!(mag == Rational(1)) || m.empty()) out << to_string(mag);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (i > 0 || !(mag == Rational(1))) out << "*";
      out << param_name(m.exps[i].first);
      if (m.exps[i].second > 1) out << "^" << m.exps[i].second;
    }
  }
  return out.str();
}

void poly_divrem(const MultiPoly& n, const MultiPoly& d, MultiPoly& q, MultiPoly& r) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  q = MultiPoly();
  r = MultiPoly();
  MultiPoly cur = n;
  const ParamMono& dlt = d.leading_mono();
  const Rational& dlc = d.leading_coeff();
  while (!cur.is_zero()) {
    const ParamMono& lt = cur.leading_mono();
    if (mono_divides(dlt, lt)) {
      ParamMono qm = mono_div(lt, dlt);
      Rational qc = cur.leading_coeff() / dlc;
      MultiPoly piece;
      piece.add_term(qm, qc);
      q += piece;
      cur = cur - piece * d;
    } else {
      MultiPoly piece;
      piece.add_term(lt, cur.leading_coeff());
      r += piece;
      cur = cur - piece;
    }
  }
}

MultiPoly poly_exact_div(const MultiPoly& n, const MultiPoly& d) {
  MultiPoly q, r;
  poly_divrem(n, d, q, r);
  if (!r.is_zero()) throw std::logic_error("poly_exact_div: inexact division");
  return q;
}

namespace {

// Univariate view in v: degree -> coefficient polynomial.
std::map<int, MultiPoly> coeffs_in(const MultiPoly& p, ParamId v) {
  std::map<int, MultiPoly> out;
  for (const auto& [m, c] : p.terms()) {
    int deg = 0;
    ParamMono rest;
    for (const auto& [mv, e] : m.exps) {
      if (mv == v)
        deg = e;
      else
        rest.exps.push_back({mv, e});
    }
    out[deg].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

MultiPoly from_coeffs(const std::map<int, MultiPoly>& coeffs, ParamId v) {
  MultiPoly out;
  for (const auto& [deg, c] : coeffs) {
    ParamMono vm;
    if (deg > 0) vm.exps.push_back({v, deg});
    MultiPoly vp;
    vp.add_term(vm, make_rational(1));
    out += c * vp;
  }
  return out;
}

MultiPoly content_in(const MultiPoly& p, ParamId v) {
  MultiPoly g;
  for (const auto& [deg, c] : coeffs_in(p, v)) g = poly_gcd(g, c);
  return g;
}

// Pseudo-remainder of a by b in v.
MultiPoly prem(MultiPoly a, const MultiPoly& b, ParamId v) {
  int db = b.degree_in(v);
  auto bc = coeffs_in(b, v);
  MultiPoly blc = bc.rbegin()->second;
  while (!a.is_zero() && a.degree_in(v) >= db) {
    auto ac = coeffs_in(a, v);
    int da = ac.rbegin()->first;
    MultiPoly alc = ac.rbegin()->second;
    ParamMono shift;
    if (da - db > 0) shift.exps.push_back({v, da - db});
    MultiPoly shift_poly;
    shift_poly.add_term(shift, make_rational(1));
    a = a * blc - b * (alc * shift_poly);
  }
  return a;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return MultiPoly();
  if (a.is_zero() || b.is_zero()) {
    const MultiPoly& n = a.is_zero() ? b : a;
    // normalize: monic leading coefficient
    MultiPoly out;
    for (const auto& [m, c] : n.terms()) out.add_term(m, c / n.leading_coeff());
    return out;
  }
  if (a.is_constant() || b.is_constant()) return MultiPoly(make_rational(1));

  std::vector<ParamId> va = a.variables(), vb = b.variables();
  ParamId v = std::max(va.back(), vb.back());
  if (a.degree_in(v) == 0) return poly_gcd(content_in(b, v), a);
  if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly pa = poly_exact_div(a, ca), pb = poly_exact_div(b, cb);
  MultiPoly cg = poly_gcd(ca, cb);

  // primitive Euclid in v
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    MultiPoly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = MultiPoly(make_rational(1));
      break;
    }
    pa = std::move(pb);
    pb = poly_exact_div(r, content_in(r, v));
  }
  MultiPoly g = cg * poly_exact_div(pb, content_in(pb, v));
  MultiPoly out;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c / g.leading_coeff());
  return out;
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly(make_rational(1));
    return;
  }
  MultiPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = poly_exact_div(num_, g);
    den_ = poly_exact_div(den_, g);
  }
  Rational lc = den_.leading_coeff();
  if (!(lc == Rational(1))) {
    MultiPoly scale(make_rational(1) / lc);
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

Rational RatFunc::as_rational() const {
  if (!is_rational()) throw std::logic_error("RatFunc is not a rational constant");
  return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::specialize(const std::map<ParamId, Rational>& assignment) const {
  MultiPoly n = num_.specialize(assignment);
  MultiPoly d = den_.specialize(assignment);
  if (d.is_zero()) throw std::invalid_argument("denominator vanishes under specialization");
  return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::str() const {
  if (den_ == MultiPoly(make_rational(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QPartSplit q_part_split(const RatFunc& e) {
  QPartSplit out;
  MultiPoly quotient;
  poly_divrem(e.num(), e.den(), quotient, out.g);
  out.c = quotient.constant_term();
  out.f = quotient - MultiPoly(out.c);
  out.h = e.den();
  return out;
}

}  // namespace rcanon
