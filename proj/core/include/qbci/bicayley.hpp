#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbci/automorphisms.hpp"
#include "qbci/group.hpp"
#include "qbci/subgroup.hpp"

namespace qbci {

/// The connection set S of BCay(G, S): a nonempty duplicate-free sorted set
/// of elements of Q_4n. S may contain the identity.
class ConnectionSet {
 public:
  ConnectionSet(Group g, std::vector<Element> elems);

  const Group& group() const { return group_; }
  const std::vector<Element>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(Element x) const;

  /// Comma-separated element grammar, e.g. "1,a^2,b".
  static ConnectionSet parse(const Group& g, const std::string& text);
  std::string to_string() const;

  friend auto operator<=>(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  Group group_;
  std::vector<Element> elems_;
};

/// gS^alpha = { g * s^alpha : s in S }.
ConnectionSet translate_and_map(const ConnectionSet& s, Element g, const Automorphism& alpha);

/// { s^-1 : s in S }.
ConnectionSet inverses(const ConnectionSet& s);

/// Left-translates by the inverse of the least element so that 1 is in the
/// result. Preserves the isomorphism class of BCay(G, S).
ConnectionSet normalize(const ConnectionSet& s);

/// Bipartite graph on carrier x {0, 1} with edges {(x,0), (sx,1)} for every
/// x in the carrier and s in S. Vertices are ordered part 0 first, carrier
/// elements ascending, so all derived artifacts are deterministic.
class BiCayleyGraph {
 public:
  /// Ambient = the full group Q_4n.
  static BiCayleyGraph build(const ConnectionSet& s);
  /// Ambient = a subgroup; every element of S must lie in the carrier.
  static BiCayleyGraph build(const ConnectionSet& s, const Subgroup& ambient);

  int carrier_size() const { return m_; }
  int vertex_count() const { return 2 * m_; }
  int valency() const { return valency_; }
  long long edge_count() const { return static_cast<long long>(m_) * valency_; }
  const Group& group() const { return group_; }
  const std::vector<Element>& labels() const { return labels_; }

  /// Vertex v in [0, 2m): part 0 holds v < m, part 1 holds v >= m.
  int part(int v) const { return v < m_ ? 0 : 1; }
  Element label(int v) const { return labels_[v % m_]; }
  int vertex(Element x, int part) const;

  /// Biadjacency: entry (x, z) is 1 iff z x^-1 lies in S.
  bool biadjacent(int x_idx, int z_idx) const { return bi_[x_idx][z_idx] != 0; }
  bool adjacent(int v, int w) const;
  std::vector<int> neighbors(int v) const;

  /// Full 2m x 2m symmetric 0/1 adjacency matrix, vertex order as above.
  std::vector<std::vector<std::uint8_t>> full_adjacency() const;

  /// The same graph with the two parts exchanged.
  BiCayleyGraph swapped_parts() const;

  /// Sorted edge list, one "(x,0)-(z,1)" line per edge. Stable across runs.
  std::string export_edge_list() const;
  /// Raw biadjacency rows as 0/1 characters, for debugging.
  std::string export_bitmap() const;

  bool is_bicayley_of(const ConnectionSet& s) const;

 private:
  BiCayleyGraph() : group_(2) {}
  Group group_;
  int m_ = 0;
  int valency_ = 0;
  std::vector<Element> labels_;
  std::vector<std::vector<std::uint8_t>> bi_;
};

/// Connected iff <SS^-1> is the whole ambient group; computed both by
/// breadth-first traversal and by the subgroup criterion, which must agree.
bool is_connected(const ConnectionSet& s);

/// The vertex permutation R(g): (x,i) -> (xg,i); always a graph automorphism.
std::vector<int> right_translation_action(const BiCayleyGraph& graph, Element g);

/// <SS^-1>, the subgroup whose cosets carry the connected components.
Subgroup difference_subgroup(const ConnectionSet& s);

}  // namespace qbci
