#ifndef RCANON_INDEX_HPP
#define RCANON_INDEX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rcanon {

enum class IndexKind : std::uint8_t { Free = 0, IntDummy = 1, NamedDummy = 2 };
enum class Row : std::uint8_t { Upper, Lower };

// One tensor index. Free indices carry their recorded row character and a
// rank from the configured free-index order (0 for the default alphabetical
// order). Dummy indices carry no row; the renderer derives rows positionally.
struct Index {
  IndexKind kind = IndexKind::Free;
  Row row = Row::Upper;  // meaningful for Free only
  int rank = 0;          // free-order rank; ties broken by name
  long value = 0;        // IntDummy
  std::string name;      // Free / NamedDummy

  static Index free(std::string name, Row row, int rank = 0) {
    Index ix;
    ix.kind = IndexKind::Free;
    ix.row = row;
    ix.rank = rank;
    ix.name = std::move(name);
    return ix;
  }
  static Index int_dummy(long value) {
    Index ix;
    ix.kind = IndexKind::IntDummy;
    ix.value = value;
    return ix;
  }
  static Index named_dummy(std::string name) {
    Index ix;
    ix.kind = IndexKind::NamedDummy;
    ix.name = std::move(name);
    return ix;
  }

  bool is_free() const { return kind == IndexKind::Free; }
  bool is_int() const { return kind == IndexKind::IntDummy; }
  bool is_named() const { return kind == IndexKind::NamedDummy; }
};

// Total order: every Free < every IntDummy < every NamedDummy; within Free by
// (rank, name), within IntDummy numeric, within NamedDummy by name. Rows do
// not order indices.
int cmp_index(const Index& a, const Index& b);

inline bool index_equal_ignoring_row(const Index& a, const Index& b) { return cmp_index(a, b) == 0; }

// Structural equality; free rows participate.
bool operator==(const Index& a, const Index& b);
inline bool operator!=(const Index& a, const Index& b) { return !(a == b); }

// Display name: free/named names verbatim, integer dummies as decimal digits.
std::string index_text(const Index& ix);

}  // namespace rcanon

#endif
