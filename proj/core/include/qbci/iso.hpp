#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbci/automorphisms.hpp"
#include "qbci/bicayley.hpp"
#include "qbci/spectrum.hpp"

namespace qbci {

struct IsoOptions {
  std::uint64_t node_guard = 50'000'000;
  /// Audit mode disables the prefilter and forces the backtracking search
  /// to decide on its own.
  bool spectral_prefilter = true;
  int charpoly_jobs = 0;
  int charpoly_max_vertices = 200;
};

/// Exact isomorphism decision. Positive verdicts carry a vertex bijection
/// which has been re-verified edge-by-edge; negative verdicts carry either
/// the two differing exact charpolys or the fact that the seeded search
/// space was exhausted.
struct IsoResult {
  enum class Certificate { None, SpectralMismatch, ExhaustedSearch };

  bool isomorphic = false;
  std::vector<int> bijection;  // vertex of lhs -> vertex of rhs
  Certificate certificate = Certificate::None;
  std::vector<mpz_class> charpoly_lhs, charpoly_rhs;  // set on SpectralMismatch
  std::uint64_t nodes_explored = 0;
};

/// Pipeline: exact integer charpoly comparison (a sound non-isomorphism
/// certificate), then bipartite backtracking with iterated neighborhood
/// refinement. Both part alignments are tried; the image of the first
/// part-0 vertex is seeded across one full part per alignment, which is
/// exhaustive because right translations act transitively on each part.
/// Throws ResourceLimitError when the node guard is hit.
IsoResult graphs_isomorphic(const BiCayleyGraph& lhs, const BiCayleyGraph& rhs,
                            const IsoOptions& options = {});

/// As above with precomputed spectra (their charpolys must belong to the
/// two graphs).
IsoResult graphs_isomorphic(const BiCayleyGraph& lhs, const BiCayleyGraph& rhs,
                            const SpectrumSummary& lhs_spectrum,
                            const SpectrumSummary& rhs_spectrum, const IsoOptions& options = {});

/// Checks that `bijection` maps edges to edges and non-edges to non-edges.
bool verify_isomorphism(const BiCayleyGraph& lhs, const BiCayleyGraph& rhs,
                        const std::vector<int>& bijection);

struct EquivalenceWitness {
  Element g;
  Automorphism alpha;
};

/// Searches all (g, alpha) pairs in canonical order for T = gS^alpha and
/// returns the lexicographically first witness, if any.
std::optional<EquivalenceWitness> bcay_equivalent(const ConnectionSet& s, const ConnectionSet& t);
std::optional<EquivalenceWitness> bcay_equivalent(const ConnectionSet& s, const ConnectionSet& t,
                                                  const std::vector<Automorphism>& auts);

/// Isomorphism of the subgroup-restricted graphs BCay(<S>, S) vs
/// BCay(<T>, T); agrees with the ambient-graph verdict. Inputs are
/// normalized before restriction.
bool reduced_iso_check(const ConnectionSet& s, const ConnectionSet& t,
                       const IsoOptions& options = {});

}  // namespace qbci
