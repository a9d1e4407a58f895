#ifndef RCANON_PRENORMAL_HPP
#define RCANON_PRENORMAL_HPP

#include <cstdint>
#include <optional>

#include "expr.hpp"

namespace rcanon {

struct PnomStats {
  std::uint64_t branches = 0;   // branches generated (the paper's J)
  std::uint64_t pruned = 0;
  std::uint64_t completed = 0;  // candidates that reached a full serial form

  void add(const PnomStats& o) {
    branches += o.branches;
    pruned += o.pruned;
    completed += o.completed;
  }
};

// Monoterm canonicalization of a connected monomial: the minimum, over the
// full orbit (per-factor Sym8 x factor permutations x dummy renamings), of
// the serial index representations, with the orbit sign folded into the
// coefficient. nullopt when the minimum is realized with both signs or a
// twin-seat holds two equal indices. Rejects disconnected input and integer
// indices (ValidationError).
std::optional<RMonomial> pnom(const RMonomial& m, PnomStats* stats = nullptr);

}  // namespace rcanon

#endif
