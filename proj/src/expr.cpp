#include "expr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "errors.hpp"

namespace rcanon {

int cmp_factor(const RFactor& a, const RFactor& b) {
  for (int i = 0; i < 4; ++i) {
    int c = cmp_index(a.slots[i], b.slots[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool operator==(const RFactor& a, const RFactor& b) {
  for (int i = 0; i < 4; ++i)
    if (!(a.slots[i] == b.slots[i])) return false;
  return true;
}

FactorPrenormal factor_prenormal(const RFactor& f) {
  FactorPrenormal out;
  out.factor = f;
  auto& s = out.factor.slots;
  if (cmp_index(s[0], s[1]) > 0) {
    std::swap(s[0], s[1]);
    out.sign = -out.sign;
  }
  if (cmp_index(s[2], s[3]) > 0) {
    std::swap(s[2], s[3]);
    out.sign = -out.sign;
  }
  if (cmp_index(s[0], s[1]) == 0 || cmp_index(s[2], s[3]) == 0) {
    out.zero = true;
    return out;
  }
  int pair_cmp = cmp_index(s[0], s[2]);
  if (pair_cmp == 0) pair_cmp = cmp_index(s[1], s[3]);
  if (pair_cmp > 0) {
    std::swap(s[0], s[2]);
    std::swap(s[1], s[3]);
  }
  return out;
}

bool is_prenormal(const RFactor& f) {
  FactorPrenormal p = factor_prenormal(f);
  return !p.zero && p.sign == 1 && p.factor == f;
}

bool operator==(const RMonomial& a, const RMonomial& b) {
  if (a.coeff != b.coeff || a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (!(a.factors[i] == b.factors[i])) return false;
  return true;
}

int cmp_monic(const RMonomial& a, const RMonomial& b) {
  std::size_t na = a.factors.size() * 4, nb = b.factors.size() * 4;
  std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp_index(a.factors[i / 4].slots[i % 4], b.factors[i / 4].slots[i % 4]);
    if (c != 0) return c;
  }
  if (na == nb) return 0;
  return na < nb ? -1 : 1;
}

bool operator==(const RPolynomial& a, const RPolynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i] == b.terms[i])) return false;
  return true;
}

RPolynomial combine_like_terms(std::vector<RMonomial> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const RMonomial& x, const RMonomial& y) { return cmp_monic(x, y) < 0; });
  RPolynomial out;
  for (auto& t : terms) {
    if (!out.terms.empty() && cmp_monic(out.terms.back(), t) == 0) {
      out.terms.back().coeff += t.coeff;
      if (is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else if (!is_zero(t.coeff)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

// Key for occurrence counting: kind tag + identity, rows excluded.
struct NameKey {
  IndexKind kind;
  long value;
  std::string name;
  bool operator<(const NameKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (value != o.value) return value < o.value;
    return name < o.name;
  }
};

NameKey key_of(const Index& ix) { return {ix.kind, ix.value, ix.name}; }

}  // namespace

void validate(const RPolynomial& p) {
  std::map<std::string, Row> free_rows;
  bool first = true;
  for (const auto& term : p.terms) {
    std::map<NameKey, int> count;
    for (const auto& f : term.factors)
      for (const auto& ix : f.slots) count[key_of(ix)] += 1;
    std::map<std::string, Row> frees;
    for (const auto& f : term.factors)
      for (const auto& ix : f.slots) {
        int c = count[key_of(ix)];
        if (c > 2) throw ValidationError("index '" + index_text(ix) + "' occurs " + std::to_string(c) + " times in one term");
        if (ix.is_free()) {
          if (c != 1) throw ValidationError("free index '" + ix.name + "' occurs " + std::to_string(c) + " times in one term");
          frees.emplace(ix.name, ix.row);
        } else if (c != 2) {
          throw ValidationError("dummy index '" + index_text(ix) + "' occurs " + std::to_string(c) + " times in one term");
        }
      }
    if (first) {
      free_rows = frees;
      first = false;
    } else {
      if (frees.size() != free_rows.size())
        throw ValidationError("free index set differs across terms");
      for (const auto& [name, row] : frees) {
        auto it = free_rows.find(name);
        if (it == free_rows.end()) throw ValidationError("free index set differs across terms");
        if (it->second != row) throw ValidationError("free index row mismatch across terms: '" + name + "'");
      }
    }
  }
}

bool has_integer_index(const RMonomial& m) {
  for (const auto& f : m.factors)
    for (const auto& ix : f.slots)
      if (ix.is_int()) return true;
  return false;
}

RMonomial relabel_integer_dummies(const RMonomial& m) {
  long maxv = max_integer_index(m);
  if (maxv == 0) return m;
  int width = 1;
  for (long v = maxv; v >= 10; v /= 10) ++width;
  std::string prefix = "zz";
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& f : m.factors)
      for (const auto& ix : f.slots)
        if (ix.is_named() && ix.name.compare(0, prefix.size(), prefix) == 0) clash = true;
    if (clash) prefix += "z";
  }
  RMonomial out = m;
  for (auto& f : out.factors)
    for (auto& ix : f.slots)
      if (ix.is_int()) {
        std::string digits = std::to_string(ix.value);
        ix = Index::named_dummy(prefix + std::string(width - digits.size(), '0') + digits);
      }
  return out;
}

RPolynomial relabel_integer_dummies(const RPolynomial& p) {
  RPolynomial out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) out.terms.push_back(relabel_integer_dummies(t));
  return out;
}

RMonomial renumber_dense(const RMonomial& m) {
  std::set<long> values;
  for (const auto& f : m.factors)
    for (const auto& ix : f.slots)
      if (ix.is_int()) values.insert(ix.value);
  std::map<long, long> remap;
  long next = 1;
  for (long v : values) remap[v] = next++;
  RMonomial out = m;
  for (auto& f : out.factors)
    for (auto& ix : f.slots)
      if (ix.is_int()) ix.value = remap[ix.value];
  return out;
}

long max_integer_index(const RMonomial& m) {
  long maxv = 0;
  for (const auto& f : m.factors)
    for (const auto& ix : f.slots)
      if (ix.is_int()) maxv = std::max(maxv, ix.value);
  return maxv;
}

RMonomial canonical_term(Rational coeff, std::vector<RMonomial> components) {
  std::sort(components.begin(), components.end(),
            [](const RMonomial& x, const RMonomial& y) { return cmp_monic(x, y) < 0; });
  RMonomial out;
  out.coeff = std::move(coeff);
  long offset = 0;
  for (auto& c : components) {
    long w = max_integer_index(c);
    for (auto& f : c.factors) {
      for (auto& ix : f.slots)
        if (ix.is_int()) ix.value += offset;
      out.factors.push_back(std::move(f));
    }
    offset += w;
  }
  return out;
}

}  // namespace rcanon
