#include "qbci/bicayley.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qbci/errors.hpp"

namespace qbci {

ConnectionSet::ConnectionSet(Group g, std::vector<Element> elems)
    : group_(g), elems_(std::move(elems)) {
  if (elems_.empty()) throw std::invalid_argument("connection set must be nonempty");
  for (Element x : elems_)
    if (!group_.valid(x)) throw std::invalid_argument("connection set element not in group");
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("connection set contains a duplicate element");
}

bool ConnectionSet::contains(Element x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

ConnectionSet ConnectionSet::parse(const Group& g, const std::string& text) {
  std::vector<Element> elems;
  std::string token;
  std::stringstream in(text);
  while (std::getline(in, token, ',')) elems.push_back(g.parse(token));
  if (elems.empty()) throw std::invalid_argument("empty connection set expression");
  return ConnectionSet(g, std::move(elems));
}

std::string ConnectionSet::to_string() const {
  std::string out;
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += group_.format(elems_[i]);
  }
  return out;
}

ConnectionSet translate_and_map(const ConnectionSet& s, Element g, const Automorphism& alpha) {
  const Group& grp = s.group();
  if (!grp.valid(g)) throw std::invalid_argument("translate_and_map: g not in group");
  std::vector<Element> out;
  out.reserve(s.elements().size());
  for (Element e : s.elements()) out.push_back(grp.multiply(g, apply_automorphism(grp, alpha, e)));
  return ConnectionSet(grp, std::move(out));
}

ConnectionSet inverses(const ConnectionSet& s) {
  std::vector<Element> out;
  out.reserve(s.elements().size());
  for (Element e : s.elements()) out.push_back(s.group().inverse(e));
  return ConnectionSet(s.group(), std::move(out));
}

ConnectionSet normalize(const ConnectionSet& s) {
  Element least = s.elements().front();
  return translate_and_map(s, s.group().inverse(least), Automorphism::identity());
}

Subgroup difference_subgroup(const ConnectionSet& s) {
  const Group& g = s.group();
  std::vector<Element> gens;
  for (Element x : s.elements())
    for (Element y : s.elements()) gens.push_back(g.multiply(x, g.inverse(y)));
  return generated_subgroup(g, gens);
}

BiCayleyGraph BiCayleyGraph::build(const ConnectionSet& s) {
  Subgroup whole{s.group(), s.group().elements(), SubgroupKind::GeneralizedQuaternion};
  return build(s, whole);
}

BiCayleyGraph BiCayleyGraph::build(const ConnectionSet& s, const Subgroup& ambient) {
  if (ambient.ambient != s.group())
    throw std::invalid_argument("connection set and ambient subgroup use different groups");
  for (Element x : s.elements())
    if (!ambient.contains(x))
      throw std::invalid_argument("connection set element outside the ambient carrier");

  BiCayleyGraph graph;
  graph.group_ = s.group();
  graph.labels_ = ambient.carrier;
  graph.m_ = static_cast<int>(graph.labels_.size());
  graph.valency_ = s.size();
  graph.bi_.assign(graph.m_, std::vector<std::uint8_t>(graph.m_, 0));

  const Group& g = s.group();
  for (int xi = 0; xi < graph.m_; ++xi) {
    for (Element sv : s.elements()) {
      Element z = g.multiply(sv, graph.labels_[xi]);
      int zi = ambient.carrier_index(z);
      if (zi < 0) throw ConsistencyError("sx escaped the ambient carrier");
      graph.bi_[xi][zi] = 1;
    }
  }

  // Valency |S| on both sides.
  for (int i = 0; i < graph.m_; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < graph.m_; ++j) {
      row += graph.bi_[i][j];
      col += graph.bi_[j][i];
    }
    if (row != graph.valency_ || col != graph.valency_)
      throw ConsistencyError("biadjacency row/column sum differs from |S|");
  }
  return graph;
}

int BiCayleyGraph::vertex(Element x, int p) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
  if (it == labels_.end() || *it != x) throw std::invalid_argument("element not a vertex label");
  return static_cast<int>(it - labels_.begin()) + (p ? m_ : 0);
}

bool BiCayleyGraph::adjacent(int v, int w) const {
  if (part(v) == part(w)) return false;
  if (part(v) == 1) std::swap(v, w);
  return biadjacent(v, w - m_);
}

std::vector<int> BiCayleyGraph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(valency_);
  if (part(v) == 0) {
    for (int z = 0; z < m_; ++z)
      if (bi_[v][z]) out.push_back(m_ + z);
  } else {
    for (int x = 0; x < m_; ++x)
      if (bi_[x][v - m_]) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> BiCayleyGraph::full_adjacency() const {
  std::vector<std::vector<std::uint8_t>> adj(2 * m_, std::vector<std::uint8_t>(2 * m_, 0));
  for (int x = 0; x < m_; ++x)
    for (int z = 0; z < m_; ++z)
      if (bi_[x][z]) adj[x][m_ + z] = adj[m_ + z][x] = 1;
  return adj;
}

BiCayleyGraph BiCayleyGraph::swapped_parts() const {
  BiCayleyGraph out = *this;
  for (int x = 0; x < m_; ++x)
    for (int z = 0; z < m_; ++z) out.bi_[x][z] = bi_[z][x];
  return out;
}

std::string BiCayleyGraph::export_edge_list() const {
  std::vector<std::string> lines;
  lines.reserve(static_cast<size_t>(m_) * valency_);
  for (int x = 0; x < m_; ++x)
    for (int z = 0; z < m_; ++z)
      if (bi_[x][z])
        lines.push_back("(" + group_.format(labels_[x]) + ",0)-(" + group_.format(labels_[z]) +
                        ",1)");
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string BiCayleyGraph::export_bitmap() const {
  std::string out;
  out.reserve(static_cast<size_t>(m_) * (m_ + 1));
  for (int x = 0; x < m_; ++x) {
    for (int z = 0; z < m_; ++z) out += bi_[x][z] ? '1' : '0';
    out += '\n';
  }
  return out;
}

bool BiCayleyGraph::is_bicayley_of(const ConnectionSet& s) const {
  if (s.group() != group_ || s.size() != valency_) return false;
  for (int x = 0; x < m_; ++x)
    for (int z = 0; z < m_; ++z) {
      bool want = s.contains(group_.multiply(labels_[z], group_.inverse(labels_[x])));
      if (want != static_cast<bool>(bi_[x][z])) return false;
    }
  return true;
}

bool is_connected(const ConnectionSet& s) {
  BiCayleyGraph graph = BiCayleyGraph::build(s);
  // Route 1: breadth-first traversal.
  std::vector<char> seen(graph.vertex_count(), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : graph.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  bool bfs_connected = reached == graph.vertex_count();

  // Route 2: G = <SS^-1>.
  bool subgroup_connected = difference_subgroup(s).is_whole_group();

  if (bfs_connected != subgroup_connected)
    throw ConsistencyError("connectivity routes disagree for S = " + s.to_string());
  return bfs_connected;
}

std::vector<int> right_translation_action(const BiCayleyGraph& graph, Element g) {
  const Group& grp = graph.group();
  if (!grp.valid(g)) throw std::invalid_argument("right translation by element not in group");
  const int m = graph.carrier_size();
  std::vector<int> perm(2 * m);
  for (int i = 0; i < m; ++i) {
    Element image = grp.multiply(graph.labels()[i], g);
    int j = graph.vertex(image, 0);
    perm[i] = j;
    perm[m + i] = m + j;
  }
  return perm;
}

}  // namespace qbci
