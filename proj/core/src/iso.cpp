#include "qbci/iso.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "qbci/errors.hpp"

namespace qbci {

namespace {

// Dense search-side view of a graph: adjacency lists plus bit rows.
struct SearchGraph {
  int n = 0;
  int words = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::uint64_t> bits;  // n rows of `words` words

  explicit SearchGraph(const BiCayleyGraph& g) {
    n = g.vertex_count();
    words = (n + 63) / 64;
    adj.resize(n);
    bits.assign(static_cast<size_t>(n) * words, 0);
    for (int v = 0; v < n; ++v) {
      adj[v] = g.neighbors(v);
      for (int w : adj[v]) bits[static_cast<size_t>(v) * words + w / 64] |= 1ULL << (w % 64);
    }
  }
  const std::uint64_t* row(int v) const { return &bits[static_cast<size_t>(v) * words]; }
};

std::vector<int> component_sizes_per_vertex(const SearchGraph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<int> sizes;
  for (int start = 0; start < g.n; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    int size = 0;
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      ++size;
      for (int w : g.adj[v]) {
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
    sizes.push_back(size);
  }
  std::vector<int> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = sizes[comp[v]];
  return out;
}

// Joint iterated neighborhood-color refinement over two graphs; shared
// color ids make the per-color histograms directly comparable.
struct Refinement {
  std::vector<int> colors_lhs, colors_rhs;
  bool compatible = false;
};

Refinement refine_pair(const SearchGraph& g1, const SearchGraph& g2,
                       const std::vector<long long>& init1, const std::vector<long long>& init2) {
  auto assign_initial = [](const std::vector<long long>& init1,
                           const std::vector<long long>& init2) {
    std::vector<long long> pool = init1;
    pool.insert(pool.end(), init2.begin(), init2.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    auto remap = [&pool](const std::vector<long long>& src) {
      std::vector<int> out(src.size());
      for (size_t i = 0; i < src.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), src[i]) -
                                  pool.begin());
      return out;
    };
    return std::pair{remap(init1), remap(init2)};
  };

  auto [c1, c2] = assign_initial(init1, init2);
  size_t color_count = 0;
  {
    std::vector<int> all = c1;
    all.insert(all.end(), c2.begin(), c2.end());
    std::sort(all.begin(), all.end());
    color_count = static_cast<size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }

  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature_of = [](const SearchGraph& g, const std::vector<int>& colors, int v) {
      std::vector<int> neigh;
      neigh.reserve(g.adj[v].size());
      for (int w : g.adj[v]) neigh.push_back(colors[w]);
      std::sort(neigh.begin(), neigh.end());
      return Signature{colors[v], std::move(neigh)};
    };
    std::map<Signature, int> ids;
    std::vector<Signature> sig1(g1.n), sig2(g2.n);
    for (int v = 0; v < g1.n; ++v) {
      sig1[v] = signature_of(g1, c1, v);
      ids.emplace(sig1[v], 0);
    }
    for (int v = 0; v < g2.n; ++v) {
      sig2[v] = signature_of(g2, c2, v);
      ids.emplace(sig2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < g1.n; ++v) c1[v] = ids[sig1[v]];
    for (int v = 0; v < g2.n; ++v) c2[v] = ids[sig2[v]];
    if (static_cast<size_t>(next) == color_count) break;
    color_count = next;
  }

  std::map<int, int> hist;
  for (int c : c1) ++hist[c];
  for (int c : c2) --hist[c];
  bool ok = g1.n == g2.n;
  for (const auto& [c, d] : hist)
    if (d != 0) ok = false;
  return {std::move(c1), std::move(c2), ok};
}

class BacktrackSearch {
 public:
  BacktrackSearch(const SearchGraph& g1, const SearchGraph& g2, std::uint64_t guard)
      : g1_(g1), g2_(g2), guard_(guard) {}

  std::uint64_t nodes() const { return nodes_; }

  // Seeds vertex 0 of g1 at `seed` in g2 and searches for an isomorphism
  // extending it, with colors recomputed around the individualized pair.
  std::optional<std::vector<int>> search_from_seed(int seed,
                                                   const std::vector<long long>& base1,
                                                   const std::vector<long long>& base2) {
    std::vector<long long> init1 = base1, init2 = base2;
    init1[0] += 1'000'000'007LL;  // individualize the seed pair
    init2[seed] += 1'000'000'007LL;
    auto refined = refine_pair(g1_, g2_, init1, init2);
    if (!refined.compatible) return std::nullopt;
    colors1_ = std::move(refined.colors_lhs);
    colors2_ = std::move(refined.colors_rhs);

    color_class_size_.clear();
    for (int c : colors1_) ++color_class_size_[c];

    map_.assign(g1_.n, -1);
    used_.assign(g2_.n, 0);
    mapped_mask_.assign(g2_.words, 0);
    if (!try_pair(0, seed)) return std::nullopt;
    if (extend(1)) return map_;
    unmap(0);
    return std::nullopt;
  }

 private:
  bool try_pair(int v, int u) {
    if (colors1_[v] != colors2_[u] || used_[u]) return false;
    bump();
    // Consistency with every already-mapped vertex: neighbors must map to
    // neighbors and non-neighbors to non-neighbors.
    const std::uint64_t* row_u = g2_.row(u);
    for (int w = 0; w < g1_.n; ++w) {
      if (map_[w] < 0) continue;
      bool e1 = (g1_.row(v)[w / 64] >> (w % 64)) & 1;
      bool e2 = (row_u[map_[w] / 64] >> (map_[w] % 64)) & 1;
      if (e1 != e2) return false;
    }
    map_[v] = u;
    used_[u] = 1;
    mapped_mask_[u / 64] |= 1ULL << (u % 64);
    ++mapped_count_;
    return true;
  }

  void unmap(int v) {
    int u = map_[v];
    if (u < 0) return;
    map_[v] = -1;
    used_[u] = 0;
    mapped_mask_[u / 64] &= ~(1ULL << (u % 64));
    --mapped_count_;
  }

  int select_next() const {
    int best = -1;
    long best_key1 = -1;
    long best_key2 = 0;
    for (int v = 0; v < g1_.n; ++v) {
      if (map_[v] >= 0) continue;
      long mapped_neighbors = 0;
      for (int w : g1_.adj[v])
        if (map_[w] >= 0) ++mapped_neighbors;
      long class_size = color_class_size_.at(colors1_[v]);
      if (best < 0 || mapped_neighbors > best_key1 ||
          (mapped_neighbors == best_key1 && class_size < best_key2)) {
        best = v;
        best_key1 = mapped_neighbors;
        best_key2 = class_size;
      }
    }
    return best;
  }

  bool extend(int depth) {
    if (depth == g1_.n) return true;
    const int v = select_next();
    for (int u = 0; u < g2_.n; ++u) {
      if (try_pair(v, u)) {
        if (extend(depth + 1)) return true;
        unmap(v);
      }
    }
    return false;
  }

  void bump() {
    if (++nodes_ > guard_)
      throw ResourceLimitError("isomorphism search exceeded the node guard of " +
                               std::to_string(guard_));
  }

  const SearchGraph& g1_;
  const SearchGraph& g2_;
  std::uint64_t guard_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colors1_, colors2_;
  std::map<int, long> color_class_size_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<std::uint64_t> mapped_mask_;
  int mapped_count_ = 0;
};

// Initial invariant coloring: (part, degree, component size).
std::vector<long long> base_colors(const SearchGraph& g, int part_boundary) {
  const auto comp = component_sizes_per_vertex(g);
  std::vector<long long> out(g.n);
  for (int v = 0; v < g.n; ++v) {
    const long long part = v < part_boundary ? 0 : 1;
    out[v] = (part << 40) + (static_cast<long long>(g.adj[v].size()) << 20) + comp[v];
  }
  return out;
}

}  // namespace

bool verify_isomorphism(const BiCayleyGraph& lhs, const BiCayleyGraph& rhs,
                        const std::vector<int>& bijection) {
  const int n = lhs.vertex_count();
  if (rhs.vertex_count() != n || static_cast<int>(bijection.size()) != n) return false;
  std::vector<char> used(n, 0);
  for (int v = 0; v < n; ++v) {
    if (bijection[v] < 0 || bijection[v] >= n || used[bijection[v]]) return false;
    used[bijection[v]] = 1;
  }
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (lhs.adjacent(v, w) != rhs.adjacent(bijection[v], bijection[w])) return false;
  return true;
}

IsoResult graphs_isomorphic(const BiCayleyGraph& lhs, const BiCayleyGraph& rhs,
                            const IsoOptions& options) {
  if (options.spectral_prefilter) {
    auto sl = charpoly_exact(lhs, options.charpoly_max_vertices, options.charpoly_jobs);
    auto sr = charpoly_exact(rhs, options.charpoly_max_vertices, options.charpoly_jobs);
    return graphs_isomorphic(lhs, rhs, sl, sr, options);
  }
  return graphs_isomorphic(lhs, rhs, SpectrumSummary{}, SpectrumSummary{}, options);
}

IsoResult graphs_isomorphic(const BiCayleyGraph& lhs, const BiCayleyGraph& rhs,
                            const SpectrumSummary& lhs_spectrum,
                            const SpectrumSummary& rhs_spectrum, const IsoOptions& options) {
  IsoResult result;
  if (options.spectral_prefilter && lhs_spectrum.charpoly != rhs_spectrum.charpoly) {
    result.isomorphic = false;
    result.certificate = IsoResult::Certificate::SpectralMismatch;
    result.charpoly_lhs = lhs_spectrum.charpoly;
    result.charpoly_rhs = rhs_spectrum.charpoly;
    return result;
  }

  const SearchGraph g1(lhs);
  std::uint64_t nodes = 0;
  // Alignment pass 1: parts preserved; pass 2: parts of rhs exchanged.
  for (int pass = 0; pass < 2; ++pass) {
    const BiCayleyGraph rhs_view = pass == 0 ? rhs : rhs.swapped_parts();
    const SearchGraph g2(rhs_view);
    if (g1.n != g2.n) continue;
    const auto base1 = base_colors(g1, lhs.carrier_size());
    const auto base2 = base_colors(g2, rhs.carrier_size());
    // Seed images: one full part per alignment (part 0 of the view).
    for (int seed = 0; seed < rhs.carrier_size(); ++seed) {
      BacktrackSearch search(g1, g2, options.node_guard - nodes);
      auto found = search.search_from_seed(seed, base1, base2);
      nodes += search.nodes();
      if (found) {
        std::vector<int> bijection = std::move(*found);
        if (pass == 1) {
          // Translate view vertices back to the original rhs numbering.
          const int m = rhs.carrier_size();
          for (int& u : bijection) u = u < m ? u + m : u - m;
        }
        if (!verify_isomorphism(lhs, rhs, bijection))
          throw ConsistencyError("search produced a bijection that fails edge verification");
        result.isomorphic = true;
        result.bijection = std::move(bijection);
        result.certificate = IsoResult::Certificate::None;
        result.nodes_explored = nodes;
        return result;
      }
    }
  }
  result.isomorphic = false;
  result.certificate = IsoResult::Certificate::ExhaustedSearch;
  result.nodes_explored = nodes;
  return result;
}

std::optional<EquivalenceWitness> bcay_equivalent(const ConnectionSet& s, const ConnectionSet& t) {
  return bcay_equivalent(s, t, enumerate_automorphisms(s.group()));
}

std::optional<EquivalenceWitness> bcay_equivalent(const ConnectionSet& s, const ConnectionSet& t,
                                                  const std::vector<Automorphism>& auts) {
  if (s.group() != t.group())
    throw std::invalid_argument("bcay_equivalent: connection sets from different groups");
  if (s.size() != t.size()) return std::nullopt;
  for (Element g : s.group().elements())
    for (const auto& alpha : auts)
      if (translate_and_map(s, g, alpha).elements() == t.elements())
        return EquivalenceWitness{g, alpha};
  return std::nullopt;
}

bool reduced_iso_check(const ConnectionSet& s, const ConnectionSet& t,
                       const IsoOptions& options) {
  const ConnectionSet ns = normalize(s);
  const ConnectionSet nt = normalize(t);
  const Subgroup hs = generated_subgroup(ns.group(), ns.elements());
  const Subgroup ht = generated_subgroup(nt.group(), nt.elements());
  const auto lhs = BiCayleyGraph::build(ns, hs);
  const auto rhs = BiCayleyGraph::build(nt, ht);
  return graphs_isomorphic(lhs, rhs, options).isomorphic;
}

}  // namespace qbci
