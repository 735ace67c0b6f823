#include "qbci/bci.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>

#include "qbci/errors.hpp"
#include "qbci/parallel.hpp"

namespace qbci {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_guards(const Group& g, int set_size, const BciGuards& guards) {
  if (set_size > guards.max_set_size)
    throw ResourceLimitError("connection sets of size " + std::to_string(set_size) +
                             " exceed the sweep guard (max " +
                             std::to_string(guards.max_set_size) + ")");
  if (g.n() > guards.max_n)
    throw ResourceLimitError("n = " + std::to_string(g.n()) +
                             " exceeds the sweep guard (max n = " + std::to_string(guards.max_n) +
                             ")");
}

/// All sorted k-subsets of Q_4n that contain the identity, in lexicographic
/// order of their element index tuples.
std::vector<std::vector<Element>> normalized_sets(const Group& g, int k) {
  std::vector<std::vector<Element>> out;
  if (k < 1 || k > g.order()) return out;
  std::vector<int> idx(k - 1);
  std::iota(idx.begin(), idx.end(), 1);
  const int total = g.order();
  while (true) {
    std::vector<Element> set{kIdentity};
    for (int i : idx) set.push_back(g.element_at(i));
    out.push_back(std::move(set));
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == total - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k - 1; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

struct PreparedSets {
  std::vector<ConnectionSet> sets;
  std::vector<BiCayleyGraph> graphs;
  std::vector<SpectrumSummary> spectra;
};

PreparedSets prepare_sets(const Group& g, int k, const BciGuards& guards) {
  PreparedSets prep;
  for (auto& elems : normalized_sets(g, k)) prep.sets.emplace_back(g, std::move(elems));
  prep.graphs.reserve(prep.sets.size());
  for (const auto& s : prep.sets) prep.graphs.push_back(BiCayleyGraph::build(s));
  prep.spectra.resize(prep.sets.size());
  parallel_for(prep.sets.size(), guards.jobs, [&](std::size_t i) {
    prep.spectra[i] = charpoly_exact(prep.graphs[i], /*max_vertices=*/200, /*jobs=*/1);
  });
  return prep;
}

IsoOptions iso_options(const BciGuards& guards) {
  IsoOptions opt;
  opt.node_guard = guards.iso_node_guard;
  opt.charpoly_jobs = 1;
  return opt;
}

/// Decides one (S, T) pair of the sweep: nothing when S and T cannot
/// witness a BCI failure, or the witness when they do.
std::optional<BciWitness> check_pair(const PreparedSets& prep, size_t i, size_t j,
                                     const std::vector<Automorphism>& auts,
                                     const BciGuards& guards, std::atomic<uint64_t>& spectral_rejects,
                                     std::atomic<uint64_t>& iso_calls) {
  if (prep.spectra[i].charpoly != prep.spectra[j].charpoly) {
    spectral_rejects.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  if (bcay_equivalent(prep.sets[i], prep.sets[j], auts)) return std::nullopt;
  iso_calls.fetch_add(1, std::memory_order_relaxed);
  auto iso = graphs_isomorphic(prep.graphs[i], prep.graphs[j], prep.spectra[i], prep.spectra[j],
                               iso_options(guards));
  if (!iso.isomorphic) return std::nullopt;
  return BciWitness{prep.sets[i], prep.sets[j], std::move(iso.bijection), true};
}

}  // namespace

BciSubsetResult is_bci_subset(const ConnectionSet& s, const BciGuards& guards) {
  const Group& g = s.group();
  check_guards(g, s.size(), guards);
  const auto start = Clock::now();

  const ConnectionSet base = normalize(s);
  const auto auts = enumerate_automorphisms(g);
  PreparedSets prep = prepare_sets(g, base.size(), guards);

  size_t base_index = prep.sets.size();
  for (size_t i = 0; i < prep.sets.size(); ++i) {
    if (prep.sets[i] == base) {
      base_index = i;
      break;
    }
  }
  if (base_index == prep.sets.size())
    throw ConsistencyError("normalized set missing from its own enumeration");

  BciSubsetResult result;
  std::atomic<uint64_t> spectral_rejects{0}, iso_calls{0};
  std::vector<std::optional<BciWitness>> found(prep.sets.size());
  parallel_for(prep.sets.size(), guards.jobs, [&](std::size_t j) {
    if (j == base_index) return;
    found[j] = check_pair(prep, base_index, j, auts, guards, spectral_rejects, iso_calls);
  });
  for (auto& w : found) {
    if (w) {
      result.is_bci = false;
      result.witness = std::move(*w);
      break;  // lexicographically first T
    }
  }
  result.stats.pairs = prep.sets.size() - 1;
  result.stats.spectral_rejects = spectral_rejects.load();
  result.stats.iso_calls = iso_calls.load();
  result.stats.seconds = seconds_since(start);
  return result;
}

BciReport is_m_bci(const Group& g, int m, const BciGuards& guards) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("m-BCI verification is scoped to 1 <= m <= 3, got m = " +
                                std::to_string(m));
  check_guards(g, m, guards);
  const auto start = Clock::now();

  BciReport report;
  report.n = g.n();
  report.m = m;
  const auto auts = enumerate_automorphisms(g);

  std::atomic<uint64_t> pairs{0}, spectral_rejects{0}, iso_calls{0};
  for (int k = 1; k <= m; ++k) {
    PreparedSets prep = prepare_sets(g, k, guards);
    const size_t count = prep.sets.size();
    // Lexicographically first failure: the per-i scan stops at its first
    // failing j, and the minimum over i is taken afterwards.
    std::vector<std::optional<BciWitness>> first_failure(count);
    parallel_for(count, guards.jobs, [&](std::size_t i) {
      for (size_t j = i + 1; j < count; ++j) {
        pairs.fetch_add(1, std::memory_order_relaxed);
        auto witness = check_pair(prep, i, j, auts, guards, spectral_rejects, iso_calls);
        if (witness) {
          first_failure[i] = std::move(witness);
          return;
        }
      }
    });
    for (auto& w : first_failure) {
      if (w) {
        report.holds = false;
        report.witnesses.push_back(std::move(*w));
        break;
      }
    }
  }
  report.stats.pairs = pairs.load();
  report.stats.spectral_rejects = spectral_rejects.load();
  report.stats.iso_calls = iso_calls.load();
  report.stats.seconds = seconds_since(start);
  return report;
}

FifReport is_fif(const Group& g) {
  FifReport report;
  report.n = g.n();
  const auto auts = enumerate_automorphisms(g);
  const auto elems = g.elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = i + 1; j < elems.size(); ++j) {
      if (g.element_order(elems[i]) != g.element_order(elems[j])) continue;
      if (are_fused(g, elems[i], elems[j], auts).kind == Fusion::Neither) {
        report.holds = false;
        report.witness = {elems[i], elems[j]};
        return report;
      }
    }
  }
  return report;
}

bool crosscheck_fif_2bci(const Group& g, const BciGuards& guards) {
  return is_fif(g).holds == is_m_bci(g, 2, guards).holds;
}

Lemma33Result verify_lemma_3_3(const Group& g, const BciGuards& guards) {
  if (g.n() % 2 == 0)
    throw std::invalid_argument("the doubled-order check is stated for odd n only");
  if (g.n() > guards.max_n)
    throw ResourceLimitError("n = " + std::to_string(g.n()) + " exceeds the sweep guard");

  Lemma33Result result;
  result.n = g.n();
  const int mod = g.exponent_modulus();
  for (int i = 1; i < mod; ++i) {
    for (int j = 1; j < mod; ++j) {
      if (2 * g.element_order(g.a(i)) != g.element_order(g.a(j))) continue;
      ConnectionSet s(g, {kIdentity, g.a(i), g.b()});
      ConnectionSet t(g, {kIdentity, g.a(j), g.b()});
      Lemma33Pair pair{i, j, false, false};
      pair.reduced_isomorphic = reduced_iso_check(s, t, iso_options(guards));
      pair.ambient_isomorphic =
          graphs_isomorphic(BiCayleyGraph::build(s), BiCayleyGraph::build(t), iso_options(guards))
              .isomorphic;
      if (pair.reduced_isomorphic || pair.ambient_isomorphic) result.holds = false;
      result.pairs.push_back(pair);
    }
  }
  return result;
}

Theorem1Summary verify_theorem_1(const std::vector<int>& n_values, const BciGuards& guards) {
  Theorem1Summary summary;
  summary.all_match = true;
  for (int n : n_values) {
    Theorem1Row row;
    row.n = n;
    row.expected = (n == 2) || (n % 2 == 1);
    try {
      const Group g(n);
      auto r2 = is_m_bci(g, 2, guards);
      auto r3 = is_m_bci(g, 3, guards);
      row.bci2 = r2.holds;
      row.bci3 = r3.holds;
      row.match = (r3.holds == r2.holds) && (r2.holds == row.expected);
      if (!r3.holds && !r3.witnesses.empty()) row.witness = r3.witnesses.front();
      else if (!r2.holds && !r2.witnesses.empty()) row.witness = r2.witnesses.front();
    } catch (const ResourceLimitError& e) {
      row.error = e.what();
      summary.any_guard_error = true;
    }
    if (!row.match) summary.all_match = false;
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

std::optional<std::pair<std::vector<Element>, std::vector<Element>>> cyclic_a_4bci_witness(
    const Group& g, const BciGuards& guards) {
  if (g.exponent_modulus() % 8 != 0) return std::nullopt;
  const Subgroup h = generated_subgroup(g, {g.a()});

  // 4-subsets of <a> containing 1, as exponent tuples.
  const int mod = g.exponent_modulus();
  std::vector<std::vector<int>> subsets;
  for (int x = 1; x < mod; ++x)
    for (int y = x + 1; y < mod; ++y)
      for (int z = y + 1; z < mod; ++z) subsets.push_back({0, x, y, z});

  auto as_elements = [&](const std::vector<int>& exps) {
    std::vector<Element> out;
    for (int e : exps) out.push_back(g.a(e));
    return out;
  };
  // Equivalence inside the cyclic group: T = h + r*S over Z_2n.
  auto equivalent = [&](const std::vector<int>& s, const std::vector<int>& t) {
    for (int r = 1; r < mod; ++r) {
      if (std::gcd(r, mod) != 1) continue;
      for (int shift = 0; shift < mod; ++shift) {
        std::vector<int> image;
        for (int e : s) image.push_back((e * r + shift) % mod);
        std::sort(image.begin(), image.end());
        if (image == t) return true;
      }
    }
    return false;
  };

  std::vector<SpectrumSummary> spectra(subsets.size());
  std::vector<BiCayleyGraph> graphs;
  graphs.reserve(subsets.size());
  for (const auto& exps : subsets)
    graphs.push_back(BiCayleyGraph::build(ConnectionSet(g, as_elements(exps)), h));
  parallel_for(subsets.size(), guards.jobs,
               [&](std::size_t i) { spectra[i] = charpoly_exact(graphs[i], 200, 1); });

  for (size_t i = 0; i < subsets.size(); ++i) {
    for (size_t j = i + 1; j < subsets.size(); ++j) {
      if (spectra[i].charpoly != spectra[j].charpoly) continue;
      if (equivalent(subsets[i], subsets[j])) continue;
      auto iso = graphs_isomorphic(graphs[i], graphs[j], spectra[i], spectra[j],
                                   iso_options(guards));
      if (iso.isomorphic) return std::pair{as_elements(subsets[i]), as_elements(subsets[j])};
    }
  }
  return std::nullopt;
}

}  // namespace qbci
