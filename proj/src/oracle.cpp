#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "graph.hpp"

namespace rcanon {

namespace {

using Code = std::int32_t;
constexpr Code kDummyBase = 1 << 16;

struct CodedFactor {
  std::array<Code, 4> s;
};

// The eight Sym8 images with signs: within-pair swaps -1, pair exchange +1.
std::array<std::pair<std::array<int, 4>, int>, 8> sym8_table() {
  return {{{{0, 1, 2, 3}, 1},
           {{1, 0, 2, 3}, -1},
           {{0, 1, 3, 2}, -1},
           {{1, 0, 3, 2}, 1},
           {{2, 3, 0, 1}, 1},
           {{3, 2, 0, 1}, -1},
           {{2, 3, 1, 0}, -1},
           {{3, 2, 1, 0}, 1}}};
}

}  // namespace

std::optional<RMonomial> pnom_bruteforce(const RMonomial& m, int degree_cap) {
  int n = m.degree();
  if (n > degree_cap) throw std::invalid_argument("pnom_bruteforce: degree cap exceeded");
  if (has_integer_index(m)) throw ValidationError("integer indices are reserved for the canonicalizer");
  if (!is_connected(m)) throw ValidationError("pnom_bruteforce requires a connected monomial");

  // encode: frees 0.., dummies kDummyBase+..
  std::vector<Index> frees;
  std::set<std::string> named;
  for (const auto& f : m.factors)
    for (const auto& ix : f.slots) {
      if (ix.is_free()) frees.push_back(ix);
      if (ix.is_named()) named.insert(ix.name);
    }
  std::sort(frees.begin(), frees.end(),
            [](const Index& a, const Index& b) { return cmp_index(a, b) < 0; });
  std::map<std::string, Code> code;
  for (std::size_t i = 0; i < frees.size(); ++i) code[frees[i].name] = static_cast<Code>(i);
  Code j = kDummyBase;
  for (const auto& nm : named) code[nm] = j++;

  std::vector<CodedFactor> factors;
  for (const auto& f : m.factors) {
    CodedFactor cf;
    for (int s = 0; s < 4; ++s) cf.s[s] = code[f.slots[s].name];
    factors.push_back(cf);
  }

  const auto sym8 = sym8_table();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<Code> best;
  std::set<int> best_signs;
  std::vector<Code> seq(4 * n);
  std::vector<int> form(n, 0);
  std::map<Code, Code> numbering;

  do {
    std::fill(form.begin(), form.end(), 0);
    for (;;) {
      // serial representation of this arrangement
      numbering.clear();
      Code next = 1;
      int sign = 1;
      std::size_t k = 0;
      for (int v : order) {
        const CodedFactor& f = factors[v];
        const auto& [perm, s] = sym8[form[v]];
        sign *= s;
        for (int t = 0; t < 4; ++t) {
          Code c = f.s[perm[t]];
          if (c >= kDummyBase) {
            auto [it, fresh] = numbering.emplace(c, next);
            if (fresh) ++next;
            seq[k++] = kDummyBase + it->second;
          } else {
            seq[k++] = c;
          }
        }
      }
      if (best.empty() || seq < best) {
        best = seq;
        best_signs = {sign};
      } else if (seq == best) {
        best_signs.insert(sign);
      }
      int t = n - 1;
      while (t >= 0 && form[t] == 7) form[t--] = 0;
      if (t < 0) break;
      form[t] += 1;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (best_signs.size() == 2) return std::nullopt;

  RMonomial out;
  out.coeff = m.coeff * (*best_signs.begin());
  for (int v = 0; v < n; ++v) {
    RFactor rf;
    for (int s = 0; s < 4; ++s) {
      Code c = best[v * 4 + s];
      rf.slots[s] = c >= kDummyBase ? Index::int_dummy(c - kDummyBase) : frees[c];
    }
    out.factors.push_back(rf);
  }
  return out;
}

CurvatureSeed CurvatureSeed::identity(int dim) {
  CurvatureSeed seed;
  seed.dim = dim;
  seed.mats.assign(1, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, make_rational(0))));
  for (int i = 0; i < dim; ++i) seed.mats[0][i][i] = make_rational(1);
  return seed;
}

CurvatureSeed CurvatureSeed::random(int dim, int count, std::uint64_t rng_seed) {
  CurvatureSeed seed;
  seed.dim = dim;
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  seed.mats.assign(count, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, make_rational(0))));
  bool nonzero = false;
  for (auto& a : seed.mats)
    for (int i = 0; i < dim; ++i)
      for (int k = i; k < dim; ++k) {
        int v = entry(rng);
        a[i][k] = make_rational(v);
        a[k][i] = a[i][k];
        if (v != 0) nonzero = true;
      }
  if (!nonzero) seed.mats[0][0][0] = make_rational(1);
  return seed;
}

std::vector<Rational> curvature_eval(const RPolynomial& p, const CurvatureSeed& seed) {
  int d = seed.dim;
  if (d < 2) throw std::invalid_argument("curvature_eval: dimension must be >= 2");
  // R tensor, dense
  std::vector<Rational> R(static_cast<std::size_t>(d) * d * d * d, make_rational(0));
  auto at = [d](int a, int b, int c, int e) {
    return ((static_cast<std::size_t>(a) * d + b) * d + c) * d + e;
  };
  for (const auto& A : seed.mats)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e)
            R[at(a, b, c, e)] += A[a][c] * A[b][e] - A[a][e] * A[b][c];

  // free index universe: sorted, consistent across terms by validation
  std::vector<Index> frees;
  if (!p.terms.empty()) {
    for (const auto& f : p.terms.front().factors)
      for (const auto& ix : f.slots)
        if (ix.is_free()) frees.push_back(ix);
    std::sort(frees.begin(), frees.end(),
              [](const Index& a, const Index& b) { return cmp_index(a, b) < 0; });
  }
  std::size_t nfree = frees.size();
  std::size_t ncomp = 1;
  for (std::size_t i = 0; i < nfree; ++i) ncomp *= d;
  std::vector<Rational> out(ncomp, make_rational(0));

  for (const auto& term : p.terms) {
    // slot -> variable id: 0..nfree-1 frees, then dummies
    struct Key {
      IndexKind kind;
      long value;
      std::string name;
      bool operator<(const Key& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (value != o.value) return value < o.value;
        return name < o.name;
      }
    };
    std::map<Key, int> dummy_id;
    int ndummy = 0;
    std::vector<int> slot_var(term.factors.size() * 4);
    for (std::size_t fi = 0; fi < term.factors.size(); ++fi)
      for (int s = 0; s < 4; ++s) {
        const Index& ix = term.factors[fi].slots[s];
        if (ix.is_free()) {
          auto it = std::lower_bound(frees.begin(), frees.end(), ix, [](const Index& a, const Index& b) {
            return cmp_index(a, b) < 0;
          });
          slot_var[fi * 4 + s] = static_cast<int>(it - frees.begin());
        } else {
          auto [it, fresh] = dummy_id.emplace(Key{ix.kind, ix.value, ix.name}, ndummy);
          if (fresh) ++ndummy;
          slot_var[fi * 4 + s] = static_cast<int>(nfree) + it->second;
        }
      }

    std::vector<int> assign(nfree + ndummy, 0);
    for (std::size_t comp = 0; comp < ncomp; ++comp) {
      std::size_t rest = comp;
      for (std::size_t i = 0; i < nfree; ++i) {
        assign[nfree - 1 - i] = static_cast<int>(rest % d);
        rest /= d;
      }
      Rational total(0);
      std::fill(assign.begin() + nfree, assign.end(), 0);
      for (;;) {
        Rational prod = term.coeff;
        for (std::size_t fi = 0; fi < term.factors.size() && !is_zero(prod); ++fi)
          prod *= R[at(assign[slot_var[fi * 4 + 0]], assign[slot_var[fi * 4 + 1]],
                       assign[slot_var[fi * 4 + 2]], assign[slot_var[fi * 4 + 3]])];
        total += prod;
        int t = ndummy - 1;
        while (t >= 0 && assign[nfree + t] == d - 1) assign[nfree + t--] = 0;
        if (t < 0) break;
        assign[nfree + t] += 1;
      }
      out[comp] += total;
    }
  }
  return out;
}

}  // namespace rcanon
