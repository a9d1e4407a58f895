#include "index.hpp"

namespace rcanon {

int cmp_index(const Index& a, const Index& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  switch (a.kind) {
    case IndexKind::Free:
      if (a.rank != b.rank) return a.rank < b.rank ? -1 : 1;
      return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
    case IndexKind::IntDummy:
      return a.value < b.value ? -1 : (a.value == b.value ? 0 : 1);
    case IndexKind::NamedDummy:
      return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
  }
  return 0;
}

bool operator==(const Index& a, const Index& b) {
  if (cmp_index(a, b) != 0) return false;
  if (a.kind == IndexKind::Free && a.row != b.row) return false;
  return true;
}

std::string index_text(const Index& ix) {
  return ix.kind == IndexKind::IntDummy ? std::to_string(ix.value) : ix.name;
}

}  // namespace rcanon
