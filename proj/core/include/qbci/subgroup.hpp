#pragma once

#include <vector>

#include "qbci/group.hpp"

namespace qbci {

enum class SubgroupKind { Cyclic, GeneralizedQuaternion };

/// A subgroup of Q_4n, stored as its sorted carrier. Every subgroup of Q_4n
/// is either cyclic or generalized quaternion; the kind is classified as
/// cyclic iff the carrier is abelian.
struct Subgroup {
  Group ambient;
  std::vector<Element> carrier;  // sorted, closed, contains identity
  SubgroupKind kind;

  int order() const { return static_cast<int>(carrier.size()); }
  bool contains(Element x) const;
  /// Position of x within the sorted carrier, -1 if absent.
  int carrier_index(Element x) const;
  bool is_whole_group() const { return order() == ambient.order(); }
};

/// Closure of a nonempty generating set under product and inverse.
Subgroup generated_subgroup(const Group& g, const std::vector<Element>& gens);

/// All subgroups of Q_4n, deduplicated, sorted by (order, carrier).
/// Every subgroup of Q_4n is generated by at most two elements, so closing
/// all singletons and pairs is exhaustive.
std::vector<Subgroup> all_subgroups(const Group& g);

}  // namespace qbci
