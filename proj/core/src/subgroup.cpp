#include "qbci/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qbci {

bool Subgroup::contains(Element x) const { return carrier_index(x) >= 0; }

int Subgroup::carrier_index(Element x) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
  if (it == carrier.end() || *it != x) return -1;
  return static_cast<int>(it - carrier.begin());
}

Subgroup generated_subgroup(const Group& g, const std::vector<Element>& gens) {
  if (gens.empty()) throw std::invalid_argument("generated_subgroup: empty generating set");
  for (Element x : gens)
    if (!g.valid(x)) throw std::invalid_argument("generated_subgroup: element not in group");

  std::set<Element> carrier{kIdentity};
  std::vector<Element> frontier{kIdentity};
  for (Element x : gens)
    if (carrier.insert(x).second) frontier.push_back(x);

  // Worklist closure under right-multiplication by the generators and their
  // inverses; contains the identity, so this is the full subgroup closure.
  std::vector<Element> step = gens;
  for (Element x : gens) step.push_back(g.inverse(x));
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : step) {
      Element y = g.multiply(x, s);
      if (carrier.insert(y).second) frontier.push_back(y);
    }
  }

  Subgroup h{g, std::vector<Element>(carrier.begin(), carrier.end()), SubgroupKind::Cyclic};
  bool abelian = true;
  for (Element x : h.carrier) {
    for (Element y : h.carrier) {
      if (g.multiply(x, y) != g.multiply(y, x)) {
        abelian = false;
        break;
      }
    }
    if (!abelian) break;
  }
  h.kind = abelian ? SubgroupKind::Cyclic : SubgroupKind::GeneralizedQuaternion;
  return h;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::vector<Element>> carriers;
  std::vector<Subgroup> out;
  auto add = [&](const Subgroup& h) {
    if (carriers.insert(h.carrier).second) out.push_back(h);
  };
  const auto elems = g.elements();
  for (Element x : elems) add(generated_subgroup(g, {x}));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) add(generated_subgroup(g, {elems[i], elems[j]}));
  std::sort(out.begin(), out.end(), [](const Subgroup& lhs, const Subgroup& rhs) {
    if (lhs.order() != rhs.order()) return lhs.order() < rhs.order();
    return lhs.carrier < rhs.carrier;
  });
  return out;
}

}  // namespace qbci
