#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbci/bicayley.hpp"
#include "qbci/iso.hpp"

namespace qbci {

struct BciGuards {
  int max_n = 7;        // full-sweep bound
  int max_set_size = 3;  // the m cap; larger m is out of scope
  std::uint64_t iso_node_guard = 50'000'000;
  int jobs = 0;
};

struct SweepStats {
  std::uint64_t pairs = 0;
  std::uint64_t spectral_rejects = 0;
  std::uint64_t iso_calls = 0;
  double seconds = 0.0;
};

/// A BCI failure: two connection sets whose graphs are isomorphic (with a
/// verified bijection) while the exhaustive (g, alpha) sweep found no
/// equivalence.
struct BciWitness {
  ConnectionSet s;
  ConnectionSet t;
  std::vector<int> bijection;
  bool equivalence_search_exhausted = true;
};

struct BciSubsetResult {
  bool is_bci = true;
  std::optional<BciWitness> witness;
  SweepStats stats;
};

/// Is S a BCI-subset? Sweeps every T containing 1 with |T| = |S|: when the
/// graphs are isomorphic there must be a (g, alpha) with T = gS^alpha.
/// Restricting to 1 in T is justified by translation invariance.
BciSubsetResult is_bci_subset(const ConnectionSet& s, const BciGuards& guards = {});

struct BciReport {
  int n = 0;
  int m = 0;
  bool holds = true;
  /// Lexicographically first failing pair per failing valency.
  std::vector<BciWitness> witnesses;
  SweepStats stats;
};

/// m-BCI verification: all normalized connection-set pairs of every size
/// k <= m, spectral prefilter first. m is capped at 3.
BciReport is_m_bci(const Group& g, int m, const BciGuards& guards = {});

struct FifReport {
  int n = 0;
  bool holds = true;
  /// Same-order elements that are neither fused nor inverse-fused.
  std::optional<std::pair<Element, Element>> witness;
};

/// FIF property: any two elements of equal order are fused or inverse-fused.
FifReport is_fif(const Group& g);

/// FIF verdict must equal the 2-BCI verdict.
bool crosscheck_fif_2bci(const Group& g, const BciGuards& guards = {});

struct Lemma33Pair {
  int i = 0;
  int j = 0;
  bool reduced_isomorphic = false;
  bool ambient_isomorphic = false;
};

struct Lemma33Result {
  int n = 0;
  std::vector<Lemma33Pair> pairs;  // every (i,j) with 2|a^i| = |a^j|
  bool holds = true;               // all pairs non-isomorphic on both routes
};

/// For odd n: S = {1, a^i, b}, T = {1, a^j, b} with 2|a^i| = |a^j| give
/// non-isomorphic reduced and ambient graphs. Even n is rejected.
Lemma33Result verify_lemma_3_3(const Group& g, const BciGuards& guards = {});

struct Theorem1Row {
  int n = 0;
  std::optional<bool> bci2;
  std::optional<bool> bci3;
  bool expected = false;  // n == 2 or n odd
  bool match = false;
  std::string error;  // set when a guard stopped this n
  std::optional<BciWitness> witness;  // first failure witness, when failing
};

struct Theorem1Summary {
  std::vector<Theorem1Row> rows;
  bool all_match = false;
  bool any_guard_error = false;
};

/// For each n: 3-BCI verdict == 2-BCI verdict == (n = 2 or n odd).
/// Guard errors are recorded per row; remaining rows still run.
Theorem1Summary verify_theorem_1(const std::vector<int>& n_values,
                                 const BciGuards& guards = {});

/// Optional side check, off every default path: inside Q_16 the cyclic
/// subgroup <a> has order 8, and 8 | 8 means it is not a 4-BCI group; this
/// finds a size-4 witness pair over that subgroup. Returns nothing for
/// groups where <a> has order not divisible by 8.
std::optional<std::pair<std::vector<Element>, std::vector<Element>>> cyclic_a_4bci_witness(
    const Group& g, const BciGuards& guards = {});

}  // namespace qbci
