#include "prenormal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "graph.hpp"

namespace rcanon {

namespace {

// Internal integer encoding of indices, ordered like the index total order:
// frees 0..nf-1, integer dummies kIntBase+v, input (named) dummies
// kNamedBase+j with j following the name order.
using Code = std::int32_t;
constexpr Code kIntBase = 1 << 20;
constexpr Code kNamedBase = 1 << 24;

inline bool is_fixed(Code c) { return c < kNamedBase; }

struct CFactor {
  std::array<Code, 4> s;
};

inline int cmp(const CFactor& a, const CFactor& b) {
  for (int i = 0; i < 4; ++i)
    if (a.s[i] != b.s[i]) return a.s[i] < b.s[i] ? -1 : 1;
  return 0;
}

// Keeps the factor pre-normal; returns the within-pair swap sign.
int prenorm_inplace(CFactor& f) {
  int sign = 1;
  if (f.s[0] > f.s[1]) {
    std::swap(f.s[0], f.s[1]);
    sign = -sign;
  }
  if (f.s[2] > f.s[3]) {
    std::swap(f.s[2], f.s[3]);
    sign = -sign;
  }
  if (f.s[0] == f.s[1] || f.s[2] == f.s[3]) throw std::logic_error("pnom: equal indices in a twin-seat");
  if (f.s[0] > f.s[2] || (f.s[0] == f.s[2] && f.s[1] > f.s[3])) {
    std::swap(f.s[0], f.s[2]);
    std::swap(f.s[1], f.s[3]);
  }
  return sign;
}

struct State {
  int sign = 1;
  std::vector<CFactor> qf;  // committed order; factors with fixed indices
  std::vector<CFactor> qd;  // factors with no fixed index
  Code next_int = kIntBase + 1;
};

class Search {
 public:
  Search(const RMonomial& m, PnomStats* stats) : input_(m), stats_(stats) {}

  std::optional<RMonomial> run();

 private:
  void encode();
  bool prenormalize_factors();  // false: a twin-seat holds equal indices
  void setup_pool();
  void run_branch(std::size_t k);
  void absorb(State& st);
  int first_incomplete(const State& st) const;
  bool act(std::size_t k, int xi);  // false on zero short-circuit
  void branch_action(std::size_t k, int xi);
  void apply_rename(State& st, Code from, Code to);
  void rename_fresh(State& st, Code name) {
    apply_rename(st, name, st.next_int);
    st.next_int += 1;
  }
  bool committed_exceeds_best(const State& st) const;
  void complete(State& st);
  RMonomial decode() const;

  const RMonomial& input_;
  PnomStats* stats_;

  int nf_ = 0;
  std::vector<Index> free_indices_;   // by code
  std::vector<CFactor> factors_;
  int sign0_ = 1;

  std::vector<State> pool_;
  std::vector<Code> best_seq_;
  int best_sign_ = 1;
  std::vector<CFactor> best_factors_;
  bool zero_ = false;
  PnomStats local_;
};

void Search::encode() {
  std::vector<Index> frees;
  std::set<std::string> named;
  for (const auto& f : input_.factors)
    for (const auto& ix : f.slots) {
      if (ix.is_free()) frees.push_back(ix);
      if (ix.is_named()) named.insert(ix.name);
    }
  std::sort(frees.begin(), frees.end(),
            [](const Index& a, const Index& b) { return cmp_index(a, b) < 0; });
  free_indices_ = std::move(frees);
  nf_ = static_cast<int>(free_indices_.size());
  std::map<std::string, Code> free_code, named_code;
  for (int i = 0; i < nf_; ++i) free_code[free_indices_[i].name] = i;
  Code j = kNamedBase;
  for (const auto& n : named) named_code[n] = j++;

  for (const auto& f : input_.factors) {
    CFactor cf;
    for (int s = 0; s < 4; ++s) {
      const Index& ix = f.slots[s];
      cf.s[s] = ix.is_free() ? free_code[ix.name] : named_code[ix.name];
    }
    factors_.push_back(cf);
  }
}

bool Search::prenormalize_factors() {
  for (auto& f : factors_) {
    if (f.s[0] > f.s[1]) {
      std::swap(f.s[0], f.s[1]);
      sign0_ = -sign0_;
    }
    if (f.s[2] > f.s[3]) {
      std::swap(f.s[2], f.s[3]);
      sign0_ = -sign0_;
    }
    if (f.s[0] == f.s[1] || f.s[2] == f.s[3]) return false;
    if (f.s[0] > f.s[2] || (f.s[0] == f.s[2] && f.s[1] > f.s[3])) {
      std::swap(f.s[0], f.s[2]);
      std::swap(f.s[1], f.s[3]);
    }
  }
  return true;
}

void Search::setup_pool() {
  std::vector<CFactor> E, L, C;
  for (const auto& f : factors_) {
    bool any_free = false, loop = false;
    for (int i = 0; i < 4; ++i) {
      if (f.s[i] < kIntBase) any_free = true;
      for (int k = i + 1; k < 4; ++k)
        if (f.s[i] >= kNamedBase && f.s[i] == f.s[k]) loop = true;
    }
    (any_free ? E : (loop ? L : C)).push_back(f);
  }
  auto lt = [](const CFactor& a, const CFactor& b) { return cmp(a, b) < 0; };
  std::sort(E.begin(), E.end(), lt);
  std::sort(L.begin(), L.end(), lt);
  std::sort(C.begin(), C.end(), lt);

  if (!E.empty()) {
    State st;
    st.sign = sign0_;
    st.qf = E;
    st.qd = L;
    st.qd.insert(st.qd.end(), C.begin(), C.end());
    std::sort(st.qd.begin(), st.qd.end(), lt);
    pool_.push_back(std::move(st));
    return;
  }

  auto seed = [&](const std::vector<CFactor>& group, std::size_t leader,
                  const std::vector<std::pair<Code, Code>>& renames, Code next) {
    State st;
    st.sign = sign0_;
    st.qf = {group[leader]};
    for (const auto& g : {std::cref(L), std::cref(C)})
      for (std::size_t i = 0; i < g.get().size(); ++i)
        if (&g.get() != &group || i != leader) st.qd.push_back(g.get()[i]);
    std::sort(st.qd.begin(), st.qd.end(), lt);
    st.next_int = kIntBase + next;
    for (auto [from, to] : renames) apply_rename(st, from, kIntBase + to);
    pool_.push_back(std::move(st));
  };

  if (!L.empty()) {
    // Ricci-led: the loop index maps to 1, the other two to 2,3 both ways.
    for (std::size_t i = 0; i < L.size(); ++i) {
      const auto& f = L[i];
      Code loop = 0;
      for (int a = 0; a < 4 && loop == 0; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (f.s[a] == f.s[b]) {
            loop = f.s[a];
            break;
          }
      std::vector<Code> rest;
      for (int a = 0; a < 4; ++a)
        if (f.s[a] != loop) rest.push_back(f.s[a]);
      seed(L, i, {{loop, 1}, {rest[0], 2}, {rest[1], 3}}, 4);
      seed(L, i, {{loop, 1}, {rest[1], 2}, {rest[0], 3}}, 4);
    }
    return;
  }

  // Complete-led: all 24 seat assignments per leader.
  std::array<int, 4> perm{1, 2, 3, 4};
  for (std::size_t i = 0; i < C.size(); ++i) {
    perm = {1, 2, 3, 4};
    do {
      seed(C, i,
           {{C[i].s[0], perm[0]}, {C[i].s[1], perm[1]}, {C[i].s[2], perm[2]}, {C[i].s[3], perm[3]}},
           5);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

void Search::absorb(State& st) {
  std::vector<CFactor> moved;
  auto it = st.qd.begin();
  while (it != st.qd.end()) {
    bool touched = false;
    for (Code c : it->s)
      if (is_fixed(c)) touched = true;
    if (touched) {
      moved.push_back(*it);
      it = st.qd.erase(it);
    } else {
      ++it;
    }
  }
  if (moved.empty()) return;
  std::sort(moved.begin(), moved.end(), [](const CFactor& a, const CFactor& b) { return cmp(a, b) < 0; });
  st.qf.insert(st.qf.end(), moved.begin(), moved.end());
}

int Search::first_incomplete(const State& st) const {
  for (std::size_t i = 0; i < st.qf.size(); ++i)
    for (Code c : st.qf[i].s)
      if (!is_fixed(c)) return static_cast<int>(i);
  return -1;
}

void Search::apply_rename(State& st, Code from, Code to) {
  for (auto* vec : {&st.qf, &st.qd})
    for (auto& f : *vec) {
      bool touched = false;
      for (auto& c : f.s)
        if (c == from) {
          c = to;
          touched = true;
        }
      if (touched) st.sign *= prenorm_inplace(f);
    }
}

bool Search::committed_exceeds_best(const State& st) const {
  std::size_t i = 0;
  for (const auto& f : st.qf)
    for (Code c : f.s) {
      if (!is_fixed(c)) return false;  // prefix ends; equal so far
      if (c != best_seq_[i]) return c > best_seq_[i];
      ++i;
    }
  return false;
}

bool Search::act(std::size_t k, int xi) {
  State& st = pool_[k];
  CFactor& x = st.qf[xi];
  bool u1 = !is_fixed(x.s[1]), u2 = !is_fixed(x.s[2]), u3 = !is_fixed(x.s[3]);
  if (!is_fixed(x.s[0]) || (u2 && !u3)) throw std::logic_error("pnom: impossible factor shape");
  if (!u2) {
    if (u1 && u3) {
      if (x.s[1] == x.s[3]) {
        rename_fresh(st, x.s[1]);
      } else {
        Code a = x.s[1], b = x.s[3];
        apply_rename(st, a, st.next_int);
        apply_rename(st, b, st.next_int + 1);
        st.next_int += 2;
      }
    } else if (u1) {
      rename_fresh(st, x.s[1]);
    } else if (u3) {
      rename_fresh(st, x.s[3]);
    }
    return true;
  }
  if (u1) {
    // shape R(f b1, b2 b3): fix b1 now; the trailing pair is handled on the
    // next iteration (after absorption), as a plain trailing-pair case.
    rename_fresh(st, x.s[1]);
    return true;
  }
  branch_action(k, xi);
  return !zero_;
}

void Search::branch_action(std::size_t k, int xi) {
  Code b3 = pool_[k].qf[xi].s[2];
  Code b4 = pool_[k].qf[xi].s[3];
  int y3 = -1, y4 = -1;  // committed position in qf, -1 if in qd
  {
    const State& st = pool_[k];
    for (std::size_t i = 0; i < st.qf.size(); ++i) {
      if (static_cast<int>(i) == xi) continue;
      for (Code c : st.qf[i].s) {
        if (c == b3) y3 = static_cast<int>(i);
        if (c == b4) y4 = static_cast<int>(i);
      }
    }
  }

  bool deterministic;
  bool a_first;  // b3 -> I, b4 -> I+1
  if (y3 >= 0 && y4 >= 0) {
    deterministic = y3 != y4;
    a_first = y3 < y4;
  } else if (y3 >= 0) {
    deterministic = true;
    a_first = true;
  } else if (y4 >= 0) {
    deterministic = true;
    a_first = false;
  } else {
    deterministic = false;
    a_first = true;
  }

  if (deterministic) {
    State& st = pool_[k];
    Code i0 = st.next_int;
    apply_rename(st, a_first ? b3 : b4, i0);
    apply_rename(st, a_first ? b4 : b3, i0 + 1);
    st.next_int += 2;
    return;
  }

  State transposed = pool_[k];
  {
    State& st = pool_[k];
    Code i0 = st.next_int;
    apply_rename(st, b3, i0);
    apply_rename(st, b4, i0 + 1);
    st.next_int += 2;
  }
  Code i0 = transposed.next_int;
  apply_rename(transposed, b4, i0);
  apply_rename(transposed, b3, i0 + 1);
  transposed.next_int += 2;
  if (!committed_exceeds_best(transposed)) {
    pool_.push_back(std::move(transposed));
    local_.branches += 1;
  }
}

void Search::complete(State& st) {
  local_.completed += 1;
  std::vector<Code> flat;
  flat.reserve(st.qf.size() * 4);
  for (const auto& f : st.qf)
    for (Code c : f.s) {
      if (!is_fixed(c)) throw std::logic_error("pnom: incomplete factor at completion");
      flat.push_back(c);
    }
  if (flat.size() != best_seq_.size()) throw std::logic_error("pnom: candidate length mismatch");
  if (flat < best_seq_) {
    best_seq_ = std::move(flat);
    best_sign_ = st.sign;
    best_factors_ = st.qf;
  } else if (flat == best_seq_ && st.sign != best_sign_) {
    zero_ = true;
  }
}

void Search::run_branch(std::size_t k) {
  for (;;) {
    absorb(pool_[k]);
    int xi = first_incomplete(pool_[k]);
    if (xi >= 0) {
      if (!act(k, xi)) return;
      if (committed_exceeds_best(pool_[k])) {
        local_.pruned += 1;
        return;
      }
      continue;
    }
    if (!pool_[k].qd.empty()) throw std::logic_error("pnom: dangling dummy factors");
    complete(pool_[k]);
    return;
  }
}

RMonomial Search::decode() const {
  RMonomial out;
  out.coeff = input_.coeff * best_sign_;
  for (const auto& f : best_factors_) {
    RFactor rf;
    for (int s = 0; s < 4; ++s) {
      Code c = f.s[s];
      rf.slots[s] = c < kIntBase ? free_indices_[c] : Index::int_dummy(c - kIntBase);
    }
    out.factors.push_back(rf);
  }
  return out;
}

std::optional<RMonomial> Search::run() {
  if (has_integer_index(input_)) throw ValidationError("integer indices are reserved for the canonicalizer");
  if (!is_connected(input_)) throw ValidationError("pnom requires a connected monomial");
  encode();
  if (!prenormalize_factors()) return std::nullopt;

  bool any_dummy = false, any_loop = false, any_free = false;
  for (const auto& f : factors_)
    for (int i = 0; i < 4; ++i) {
      if (f.s[i] >= kNamedBase) any_dummy = true;
      if (f.s[i] < kIntBase) any_free = true;
      for (int j = i + 1; j < 4; ++j)
        if (f.s[i] == f.s[j]) any_loop = true;
    }

  std::sort(factors_.begin(), factors_.end(), [](const CFactor& a, const CFactor& b) { return cmp(a, b) < 0; });

  if (!any_dummy) {
    // connected without dummies: a single all-free factor
    best_sign_ = sign0_;
    best_factors_ = factors_;
    if (stats_) stats_->add(local_);
    return decode();
  }

  if (factors_.size() == 1 && !any_free && any_loop) {
    // degree-1 Ricci scalar R(xy,xy) -> R(12,12)
    RMonomial out;
    out.coeff = input_.coeff * sign0_;
    RFactor rf;
    rf.slots = {Index::int_dummy(1), Index::int_dummy(2), Index::int_dummy(1), Index::int_dummy(2)};
    out.factors.push_back(rf);
    if (stats_) stats_->add(local_);
    return out;
  }

  for (const auto& f : factors_)
    for (Code c : f.s) best_seq_.push_back(c);
  best_sign_ = sign0_;
  best_factors_ = factors_;

  setup_pool();
  local_.branches += pool_.size();
  for (std::size_t k = 0; k < pool_.size() && !zero_; ++k) run_branch(k);

  if (stats_) stats_->add(local_);
  if (zero_) return std::nullopt;
  return decode();
}

}  // namespace

std::optional<RMonomial> pnom(const RMonomial& m, PnomStats* stats) {
  Search s(m, stats);
  return s.run();
}

}  // namespace rcanon
