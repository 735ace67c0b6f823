#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qbci/group.hpp"
#include "qbci/subgroup.hpp"

namespace qbci {

/// a^i -> a^(r i), b a^i -> b a^(r i + s), with gcd(r, 2n) = 1.
struct SigmaRS {
  int r = 1;
  int s = 0;
  friend auto operator<=>(const SigmaRS&, const SigmaRS&) = default;
};

/// Explicit bijection table, indexed by Group::index_of. Used for n = 2,
/// where Aut(Q_8) is strictly larger than the sigma family.
struct AutTable {
  std::vector<Element> image;
  friend auto operator<=>(const AutTable&, const AutTable&) = default;
};

class Automorphism {
 public:
  explicit Automorphism(SigmaRS s) : rep_(s) {}
  explicit Automorphism(AutTable t) : rep_(std::move(t)) {}

  static Automorphism identity() { return Automorphism(SigmaRS{1, 0}); }

  bool is_sigma() const { return std::holds_alternative<SigmaRS>(rep_); }
  const SigmaRS& sigma() const { return std::get<SigmaRS>(rep_); }
  const AutTable& table() const { return std::get<AutTable>(rep_); }

  std::string describe(const Group& g) const;

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  std::variant<SigmaRS, AutTable> rep_;
};

/// Image of x under alpha. Rejects sigma maps with gcd(r, 2n) != 1 and
/// tables of the wrong size.
Element apply_automorphism(const Group& g, const Automorphism& alpha, Element x);

/// alpha then beta: x -> beta(alpha(x)).
Automorphism compose(const Group& g, const Automorphism& alpha, const Automorphism& beta);
Automorphism invert(const Group& g, const Automorphism& alpha);

/// All automorphisms of Q_4n in a deterministic order.
/// For n >= 3 these are exactly the 2n * phi(2n) maps sigma_{r,s}, ordered
/// by (r, s). For n = 2 the sigma family is incomplete, so the 24 elements
/// of Aut(Q_8) are found by brute force over generator images and returned
/// as explicit tables ordered by (image of a, image of b).
std::vector<Automorphism> enumerate_automorphisms(const Group& g);

enum class Fusion { Fused, InverseFused, Neither };

struct FusionVerdict {
  Fusion kind = Fusion::Neither;
  std::optional<Automorphism> witness;  // alpha with x^alpha = y (or y^-1)
};

/// Fused:         some automorphism maps x to y.
/// Inverse-fused: some automorphism maps x to y^-1 (and none maps x to y).
/// Scans enumerate_automorphisms order and returns the first witness.
FusionVerdict are_fused(const Group& g, Element x, Element y);
FusionVerdict are_fused(const Group& g, Element x, Element y,
                        const std::vector<Automorphism>& auts);

/// All isomorphisms from h onto k, each given as the image vector of h's
/// sorted carrier. Empty when the subgroups are not isomorphic.
std::vector<std::vector<Element>> subgroup_isomorphisms(const Subgroup& h, const Subgroup& k);

struct HomogeneityCounterexample {
  Subgroup h;
  Subgroup k;
  std::vector<Element> isomorphism;  // image of h.carrier, extends to no automorphism
};

struct HomogeneityResult {
  bool homogeneous = false;
  std::optional<HomogeneityCounterexample> counterexample;
};

/// Exhaustively checks that every isomorphism between two subgroups of Q_4n
/// extends to an automorphism of Q_4n. Guarded: throws ResourceLimitError
/// for n > guard_n rather than truncating the enumeration.
HomogeneityResult is_homogeneous(const Group& g, int guard_n = 7);

}  // namespace qbci
