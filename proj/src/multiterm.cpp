#include "multiterm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cache.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "linalg.hpp"

namespace rcanon {

namespace {

// The three Bianchi rotations of a factor, keyed by p in {2,3,4}.
RFactor rotate(const RFactor& f, int p) {
  const auto& s = f.slots;
  switch (p) {
    case 2: return f;
    case 3: return {{s[0], s[2], s[3], s[1]}};
    case 4: return {{s[0], s[3], s[1], s[2]}};
  }
  throw std::logic_error("bad rotation");
}

// The S2 form swapping seats 2 and 3.
RFactor swap23(const RFactor& f) {
  const auto& s = f.slots;
  return {{s[0], s[2], s[1], s[3]}};
}

bool factor_has_loop(const RFactor& f) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!f.slots[i].is_free() && cmp_index(f.slots[i], f.slots[j]) == 0) return true;
  return false;
}

std::vector<int> loop_free_positions(const RMonomial& f) {
  std::vector<int> out;
  for (int i = 0; i < f.degree(); ++i)
    if (!factor_has_loop(f.factors[i])) out.push_back(i);
  return out;
}

void check_ext_input(const RMonomial& f) {
  if (f.factors.empty()) throw ValidationError("extension of an empty monomial");
  if (!is_connected(f)) throw ValidationError("extension requires a connected monomial");
  for (const auto& fac : f.factors)
    if (!is_prenormal(fac)) throw ValidationError("extension requires pre-normal factors");
}

}  // namespace

ExtensionPolynomial ext(const RMonomial& f, PnomStats* stats) {
  check_ext_input(f);
  RMonomial base = relabel_integer_dummies(f.monic());
  std::vector<int> free_pos = loop_free_positions(base);
  int n = base.degree();
  int nl = static_cast<int>(free_pos.size());

  ExtensionPolynomial out;
  out.degree = n;
  out.loop_count = n - nl;

  std::map<RMonomial, MultiPoly, MonicLess> acc;
  std::vector<int> choice(nl, 2);
  for (;;) {
    out.raw_terms += 1;
    RMonomial term;
    term.factors = base.factors;
    ParamMono lambda;
    lambda.exps.push_back({kLambdaR, 1});
    for (int t = 0; t < nl; ++t) {
      term.factors[free_pos[t]] = rotate(base.factors[free_pos[t]], choice[t]);
      lambda.exps.push_back({lambda_ip(free_pos[t] + 1, choice[t]), 1});
    }
    std::sort(lambda.exps.begin(), lambda.exps.end());
    if (auto pn = pnom(term, stats)) {
      MultiPoly contrib;
      contrib.add_term(lambda, pn->coeff);
      acc[pn->monic()] += contrib;
    }
    // odometer
    int t = nl - 1;
    while (t >= 0 && choice[t] == 4) choice[t--] = 2;
    if (t < 0) break;
    choice[t] += 1;
  }
  for (auto& [key, coeff] : acc) {
    if (coeff.is_zero()) throw std::logic_error("ext: vanished coefficient");
    out.terms.emplace_back(key, std::move(coeff));
  }
  return out;
}

int EliminationRuleSet::find_variable(const RMonomial& monic) const {
  // variables are descending; binary search with reversed comparison
  int lo = 0, hi = static_cast<int>(variables.size()) - 1;
  while (lo <= hi) {
    int mid = (lo + hi) / 2;
    int c = cmp_monic(variables[mid], monic);
    if (c == 0) return mid;
    if (c > 0)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

bool EliminationRuleSet::is_leading(int var) const {
  return std::find(pivots.begin(), pivots.end(), var) != pivots.end();
}

std::vector<std::pair<Rational, int>> EliminationRuleSet::rhs(int var) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (pivots[r] != var) continue;
    std::vector<std::pair<Rational, int>> out;
    for (std::size_t j = 0; j < variables.size(); ++j) {
      if (static_cast<int>(j) == var || is_zero(rows[r][j])) continue;
      out.emplace_back(-rows[r][j], static_cast<int>(j));
    }
    return out;
  }
  throw std::logic_error("rhs: not a leading variable");
}

bool rulesets_equal(const EliminationRuleSet& a, const EliminationRuleSet& b) {
  if (a.variables.size() != b.variables.size() || a.rows.size() != b.rows.size() ||
      a.pivots != b.pivots)
    return false;
  for (std::size_t i = 0; i < a.variables.size(); ++i)
    if (cmp_monic(a.variables[i], b.variables[i]) != 0) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows[i].size(); ++j)
      if (!(a.rows[i][j] == b.rows[i][j])) return false;
  return true;
}

EliminationRuleSet rebe(const RMonomial& f, PnomStats* stats) {
  ExtensionPolynomial e = ext(f, stats);
  std::size_t m = e.terms.size();

  EliminationRuleSet out;
  out.variables.reserve(m);
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) out.variables.push_back(it->first);

  std::vector<int> free_pos = loop_free_positions(f);
  out.equation_count = free_pos.size();

  std::vector<std::vector<RatFunc>> h;
  for (int j : free_pos) {
    std::map<ParamId, Rational> assign{{kLambdaR, make_rational(1)},
                                       {lambda_ip(j + 1, 2), make_rational(1)},
                                       {lambda_ip(j + 1, 3), make_rational(1)},
                                       {lambda_ip(j + 1, 4), make_rational(1)}};
    std::vector<RatFunc> row(m);
    for (std::size_t col = 0; col < m; ++col) {
      const MultiPoly& coeff = e.terms[m - 1 - col].second;  // descending columns
      row[col] = RatFunc(coeff.specialize(assign));
    }
    h.push_back(std::move(row));
  }

  // Iterative splitting: RREF over Q(Lambda), peel rational parts, feed the
  // non-rational remainders of columns k.. as the next system.
  std::vector<std::vector<Rational>> accumulated;
  std::size_t q = 0;
  while (!h.empty()) {
    RrefResult<RatFunc> red = rref<RatFunc>(std::move(h));
    h.clear();
    if (red.rows.empty()) break;
    std::size_t a = red.rows.size();
    std::size_t b = red.rows[0].size();
    std::size_t k = b;
    for (std::size_t col = 0; col < b && k == b; ++col)
      for (std::size_t i = 0; i < a; ++i)
        if (!red.rows[i][col].is_rational()) {
          k = col;
          break;
        }
    if (k < b) h.assign(a, std::vector<RatFunc>(b - k));
    for (std::size_t i = 0; i < a; ++i) {
      std::vector<Rational> crow(m, make_rational(0));
      for (std::size_t j = 0; j < b; ++j) {
        const RatFunc& entry = red.rows[i][j];
        if (j < k) {
          crow[q + j] = entry.as_rational();
        } else {
          QPartSplit split = q_part_split(entry);
          crow[q + j] = split.c;
          h[i][j - k] = entry - RatFunc(split.c);
        }
      }
      accumulated.push_back(std::move(crow));
    }
    if (k == b) break;
    q += k;
  }

  RrefResult<Rational> complete = rref<Rational>(std::move(accumulated));
  out.rows = std::move(complete.rows);
  out.pivots = std::move(complete.pivots);
  return out;
}

EliminationRuleSet direct_bianchi_rref(const RMonomial& f, PnomStats* stats) {
  check_ext_input(f);
  RMonomial base = relabel_integer_dummies(f.monic());
  std::vector<int> free_pos = loop_free_positions(base);
  int nl = static_cast<int>(free_pos.size());

  // Variable list: pre-normal forms of all rotation products, enumerated
  // independently of ext's bookkeeping.
  std::map<RMonomial, int, MonicLess> keyset;
  {
    std::vector<int> choice(nl, 2);
    for (;;) {
      RMonomial term;
      term.factors = base.factors;
      for (int t = 0; t < nl; ++t)
        term.factors[free_pos[t]] = rotate(base.factors[free_pos[t]], choice[t]);
      if (auto pn = pnom(term, stats)) keyset.emplace(pn->monic(), 0);
      int t = nl - 1;
      while (t >= 0 && choice[t] == 4) choice[t--] = 2;
      if (t < 0) break;
      choice[t] += 1;
    }
  }
  EliminationRuleSet out;
  for (auto it = keyset.rbegin(); it != keyset.rend(); ++it) out.variables.push_back(it->first);
  std::size_t m = out.variables.size();
  std::map<RMonomial, std::size_t, MonicLess> col_of;
  for (std::size_t c = 0; c < m; ++c) col_of.emplace(out.variables[c], c);

  std::vector<std::vector<Rational>> rows;
  for (int t = 0; t < nl; ++t) {
    // forms of the other loop-free factors: 2 options before position t,
    // 3 options after
    std::vector<int> limits;
    for (int u = 0; u < nl; ++u)
      if (u != t) limits.push_back(u < t ? 2 : 3);
    std::vector<int> choice(limits.size(), 0);
    for (;;) {
      RMonomial shell;
      shell.factors = base.factors;
      std::size_t ci = 0;
      for (int u = 0; u < nl; ++u) {
        if (u == t) continue;
        const RFactor& fac = base.factors[free_pos[u]];
        if (u < t)
          shell.factors[free_pos[u]] = choice[ci] == 0 ? fac : swap23(fac);
        else
          shell.factors[free_pos[u]] = rotate(fac, choice[ci] + 2);
        ++ci;
      }
      std::vector<Rational> row(m, make_rational(0));
      for (int p = 2; p <= 4; ++p) {
        RMonomial term = shell;
        term.factors[free_pos[t]] = rotate(base.factors[free_pos[t]], p);
        if (auto pn = pnom(term, stats)) row[col_of.at(pn->monic())] += pn->coeff;
      }
      rows.push_back(std::move(row));
      out.equation_count += 1;
      // odometer
      int u = static_cast<int>(limits.size()) - 1;
      while (u >= 0 && choice[u] == limits[u] - 1) choice[u--] = 0;
      if (u < 0) break;
      choice[u] += 1;
    }
  }

  RrefResult<Rational> red = rref<Rational>(std::move(rows));
  out.rows = std::move(red.rows);
  out.pivots = std::move(red.pivots);
  return out;
}

namespace {

struct TermPieces {
  Rational coeff;
  std::vector<RMonomial> components;  // each dense-renumbered, monic
};

TermPieces split_canonical_term(const RMonomial& term) {
  TermPieces out;
  out.coeff = term.coeff;
  ComponentSplit split = connected_components(term);
  for (auto& comp : split.components) out.components.push_back(renumber_dense(comp));
  return out;
}

}  // namespace

RPolynomial prenormal_polynomial(const RPolynomial& p, PnomStats* stats) {
  std::vector<RMonomial> out_terms;
  for (const auto& term : p.terms) {
    RMonomial named = relabel_integer_dummies(term);
    ComponentSplit split = connected_components(named);
    Rational coeff = split.coeff;
    std::vector<RMonomial> canonical;
    bool vanished = false;
    for (const auto& comp : split.components) {
      auto pn = pnom(comp, stats);
      if (!pn) {
        vanished = true;
        break;
      }
      coeff *= pn->coeff;
      canonical.push_back(pn->monic());
    }
    if (vanished) continue;
    out_terms.push_back(canonical_term(coeff, std::move(canonical)));
  }
  return combine_like_terms(std::move(out_terms));
}

RPolynomial normal(const RPolynomial& p, const NormalOptions& opts) {
  validate(p);
  PnomStats* pstats = opts.stats ? &opts.stats->pnom : nullptr;
  RPolynomial pre = prenormal_polynomial(p, pstats);
  if (pre.is_zero()) return pre;

  // distinct components across all terms
  std::map<RMonomial, RPolynomial, MonicLess> rules;
  std::map<RMonomial, bool, MonicLess> worklist;
  std::vector<TermPieces> pieces;
  for (const auto& term : pre.terms) {
    pieces.push_back(split_canonical_term(term));
    for (const auto& comp : pieces.back().components) worklist.emplace(comp, true);
  }

  auto identity_rule = [](const RMonomial& c) {
    RPolynomial r;
    r.terms.push_back(c);
    return r;
  };

  while (!worklist.empty()) {
    RMonomial c1 = worklist.begin()->first;
    if (c1.degree() == 1) {
      rules.emplace(c1, identity_rule(c1));
      worklist.erase(worklist.begin());
      continue;
    }
    if (opts.cache) {
      if (auto cached = opts.cache->get(c1)) {
        if (opts.stats) opts.stats->cache_hits += 1;
        rules.emplace(c1, std::move(*cached));
        worklist.erase(worklist.begin());
        continue;
      }
    }
    EliminationRuleSet rs = opts.method == NormalOptions::Method::Rebe
                                ? rebe(c1, pstats)
                                : direct_bianchi_rref(c1, pstats);
    if (opts.stats) {
      opts.stats->ruleset_runs += 1;
      opts.stats->equations += rs.equation_count;
    }
    std::vector<RMonomial> resolved;
    for (const auto& [w, unused] : worklist) {
      int var = rs.find_variable(w);
      if (var < 0) continue;
      RPolynomial rule;
      if (rs.is_leading(var)) {
        for (const auto& [coeff, k] : rs.rhs(var)) {
          RMonomial t = rs.variables[k];
          t.coeff = coeff;
          rule.terms.push_back(std::move(t));
        }
        rule = combine_like_terms(std::move(rule.terms));
      } else {
        rule = identity_rule(w);
      }
      if (opts.cache) opts.cache->put(w, rule);
      rules.emplace(w, std::move(rule));
      resolved.push_back(w);
    }
    if (resolved.empty()) throw std::logic_error("normal: component not a variable of its own extension");
    for (const auto& w : resolved) worklist.erase(w);
  }

  // substitute, expand, reassemble
  std::vector<RMonomial> out_terms;
  for (const auto& piece : pieces) {
    std::vector<const RPolynomial*> choices;
    choices.reserve(piece.components.size());
    bool vanished = false;
    for (const auto& comp : piece.components) {
      const RPolynomial& rule = rules.at(comp);
      if (rule.is_zero()) vanished = true;
      choices.push_back(&rule);
    }
    if (vanished) continue;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      Rational coeff = piece.coeff;
      std::vector<RMonomial> comps;
      comps.reserve(choices.size());
      for (std::size_t i = 0; i < choices.size(); ++i) {
        const RMonomial& t = choices[i]->terms[pick[i]];
        coeff *= t.coeff;
        comps.push_back(t.monic());
      }
      out_terms.push_back(canonical_term(std::move(coeff), std::move(comps)));
      int i = static_cast<int>(choices.size()) - 1;
      while (i >= 0 && pick[i] + 1 == choices[i]->terms.size()) pick[i--] = 0;
      if (i < 0) break;
      pick[i] += 1;
    }
  }
  return combine_like_terms(std::move(out_terms));
}

}  // namespace rcanon
