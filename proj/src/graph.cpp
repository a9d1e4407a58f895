#include "graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace rcanon {

namespace {

struct DummyKey {
  IndexKind kind;
  long value;
  std::string name;
  bool operator<(const DummyKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (value != o.value) return value < o.value;
    return name < o.name;
  }
};

// Seats of each dummy name, in traversal order.
std::map<DummyKey, std::vector<Seat>> dummy_seats(const RMonomial& m) {
  std::map<DummyKey, std::vector<Seat>> out;
  for (int v = 0; v < m.degree(); ++v)
    for (int s = 0; s < 4; ++s) {
      const Index& ix = m.factors[v].slots[s];
      if (!ix.is_free()) out[{ix.kind, ix.value, ix.name}].push_back({v, s});
    }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DetailedGraph detailed_graph_of(const RMonomial& m) {
  DetailedGraph g;
  g.vertex_count = m.degree();
  for (auto& [key, seats] : dummy_seats(m)) {
    if (seats.size() != 2)
      throw ValidationError("dummy index '" + key.name + "' does not occur exactly twice");
    g.edges.emplace_back(seats[0], seats[1]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (int v = 0; v < m.degree(); ++v)
    for (int s = 0; s < 4; ++s)
      if (m.factors[v].slots[s].is_free())
        g.free_labels.push_back({Seat{v, s}, m.factors[v].slots[s]});
  return g;
}

ConnectionMultigraph connection_multigraph_of(const RMonomial& m) {
  ConnectionMultigraph g;
  g.vertex_count = m.degree();
  g.free_degree.assign(m.degree(), 0);
  for (auto& [key, seats] : dummy_seats(m)) {
    if (seats.size() != 2)
      throw ValidationError("dummy index '" + key.name + "' does not occur exactly twice");
    int a = seats[0].vertex, b = seats[1].vertex;
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (int v = 0; v < m.degree(); ++v)
    for (int s = 0; s < 4; ++s)
      if (m.factors[v].slots[s].is_free()) g.free_degree[v] += 1;
  return g;
}

ComponentSplit connected_components(const RMonomial& m) {
  ComponentSplit out;
  out.coeff = m.coeff;
  if (m.factors.empty()) return out;
  UnionFind uf(m.degree());
  for (auto& [key, seats] : dummy_seats(m))
    if (seats.size() == 2) uf.unite(seats[0].vertex, seats[1].vertex);
  std::map<int, std::vector<int>> groups;  // root -> factor positions (ascending)
  for (int v = 0; v < m.degree(); ++v) groups[uf.find(v)].push_back(v);
  // first-factor order
  std::vector<std::pair<int, const std::vector<int>*>> ordered;
  for (auto& [root, members] : groups) ordered.emplace_back(members.front(), &members);
  std::sort(ordered.begin(), ordered.end());
  for (auto& [first, members] : ordered) {
    RMonomial comp;
    for (int v : *members) comp.factors.push_back(m.factors[v]);
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const RMonomial& m) {
  return connected_components(m).components.size() <= 1;
}

std::vector<VertexClass> classify_vertices(const RMonomial& m) {
  std::vector<VertexClass> out;
  out.reserve(m.factors.size());
  for (const auto& f : m.factors) {
    bool any_free = false;
    bool loop = false;
    for (int i = 0; i < 4; ++i) {
      if (f.slots[i].is_free()) any_free = true;
      for (int j = i + 1; j < 4; ++j)
        if (!f.slots[i].is_free() && cmp_index(f.slots[i], f.slots[j]) == 0) loop = true;
    }
    out.push_back(any_free ? VertexClass::Free : (loop ? VertexClass::Ricci : VertexClass::Complete));
  }
  return out;
}

std::vector<SerialToken> serial_index_representation(const DetailedGraph& d,
                                                     const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != d.vertex_count)
    throw std::invalid_argument("order must be a permutation of the vertices");
  std::map<Seat, int> edge_of;  // seat -> edge id
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    edge_of[d.edges[e].first] = static_cast<int>(e);
    edge_of[d.edges[e].second] = static_cast<int>(e);
  }
  std::map<Seat, Index> label_of;
  for (const auto& [seat, ix] : d.free_labels) label_of[seat] = ix;

  std::vector<int> number(d.edges.size(), 0);
  int next = 1;
  std::vector<SerialToken> out;
  for (int v : order)
    for (int s = 0; s < 4; ++s) {
      Seat seat{v, s};
      auto lf = label_of.find(seat);
      if (lf != label_of.end()) {
        SerialToken t;
        t.is_free = true;
        t.free_index = lf->second;
        out.push_back(t);
        continue;
      }
      auto ef = edge_of.find(seat);
      if (ef == edge_of.end())
        throw std::invalid_argument("seat neither free-labeled nor on an edge");
      if (number[ef->second] == 0) number[ef->second] = next++;
      SerialToken t;
      t.dummy = number[ef->second];
      out.push_back(t);
    }
  return out;
}

}  // namespace rcanon
