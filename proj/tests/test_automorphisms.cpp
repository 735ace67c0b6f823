#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "qbci/automorphisms.hpp"
#include "qbci/errors.hpp"
#include "qbci/group.hpp"

using namespace qbci;

namespace {

int phi(int m) {
  int count = 0;
  for (int r = 1; r <= m; ++r)
    if (std::gcd(r, m) == 1) ++count;
  return count;
}

std::vector<Element> image_table(const Group& g, const Automorphism& alpha) {
  std::vector<Element> out;
  out.reserve(g.order());
  for (Element x : g.elements()) out.push_back(apply_automorphism(g, alpha, x));
  return out;
}

bool is_bijective_homomorphism(const Group& g, const std::vector<Element>& image) {
  std::set<Element> range(image.begin(), image.end());
  if (static_cast<int>(range.size()) != g.order()) return false;
  for (Element x : g.elements())
    for (Element y : g.elements())
      if (image[g.index_of(g.multiply(x, y))] !=
          g.multiply(image[g.index_of(x)], image[g.index_of(y)]))
        return false;
  return true;
}

// Oracle: count all bijections of Q_8 that are homomorphisms, by scanning
// the full symmetric group on the 8 element indices.
int count_q8_automorphisms_brute_force() {
  Group g(2);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    if (perm[0] != 0) continue;  // identity must be fixed
    std::vector<Element> image(8);
    for (int i = 0; i < 8; ++i) image[i] = g.element_at(perm[i]);
    bool hom = true;
    for (Element x : g.elements()) {
      for (Element y : g.elements()) {
        if (image[g.index_of(g.multiply(x, y))] !=
            g.multiply(image[g.index_of(x)], image[g.index_of(y)])) {
          hom = false;
          break;
        }
      }
      if (!hom) break;
    }
    if (hom) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_SUITE("automorphisms") {
  TEST_CASE("sigma family: count and bijective-homomorphism check") {
    for (int n : {3, 4, 5, 6}) {
      Group g(n);
      auto auts = enumerate_automorphisms(g);
      CHECK(static_cast<int>(auts.size()) == 2 * n * phi(2 * n));
      std::set<std::vector<Element>> distinct;
      for (const auto& alpha : auts) {
        auto image = image_table(g, alpha);
        CHECK(is_bijective_homomorphism(g, image));
        distinct.insert(image);
      }
      CHECK(distinct.size() == auts.size());
    }
  }

  TEST_CASE("sigma_{1,0} is the identity map") {
    Group g(4);
    for (Element x : g.elements())
      CHECK(apply_automorphism(g, Automorphism::identity(), x) == x);
  }

  TEST_CASE("Aut(Q_8) has 24 elements, cross-checked by brute force") {
    Group g(2);
    auto auts = enumerate_automorphisms(g);
    CHECK(auts.size() == 24);
    for (const auto& alpha : auts) {
      CHECK(!alpha.is_sigma());
      CHECK(is_bijective_homomorphism(g, alpha.table().image));
    }
    CHECK(count_q8_automorphisms_brute_force() == 24);
  }

  TEST_CASE("enumerated automorphisms are closed under composition and inversion") {
    for (int n : {2, 3, 4}) {
      Group g(n);
      auto auts = enumerate_automorphisms(g);
      std::set<std::vector<Element>> tables;
      for (const auto& alpha : auts) tables.insert(image_table(g, alpha));
      for (size_t i = 0; i < auts.size(); i += 3) {
        CHECK(tables.count(image_table(g, invert(g, auts[i]))));
        for (size_t j = 0; j < auts.size(); j += 5)
          CHECK(tables.count(image_table(g, compose(g, auts[i], auts[j]))));
      }
      // compose/invert are consistent: alpha . alpha^-1 = identity
      for (size_t i = 0; i < auts.size(); i += 7) {
        auto id = compose(g, auts[i], invert(g, auts[i]));
        for (Element x : g.elements()) CHECK(apply_automorphism(g, id, x) == x);
      }
    }
  }

  TEST_CASE("apply examples") {
    Group g(3);
    CHECK(apply_automorphism(g, Automorphism(SigmaRS{1, 2}), g.b()) == g.b(2));
    CHECK(apply_automorphism(g, Automorphism(SigmaRS{5, 0}), g.a()) == g.a(5));
    CHECK_THROWS_AS(apply_automorphism(g, Automorphism(SigmaRS{2, 1}), g.a()),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_automorphism(g, Automorphism(SigmaRS{3, 0}), g.a()),
                    std::invalid_argument);
  }

  TEST_CASE("fusion verdicts") {
    SUBCASE("an element is fused with itself via the identity") {
      Group g(3);
      auto v = are_fused(g, g.a(2), g.a(2));
      CHECK(v.kind == Fusion::Fused);
      REQUIRE(v.witness.has_value());
      CHECK(apply_automorphism(g, *v.witness, g.a(2)) == g.a(2));
    }
    SUBCASE("a^2 and b are neither fused nor inverse-fused in Q_16") {
      Group g(4);
      CHECK(are_fused(g, g.a(2), g.b()).kind == Fusion::Neither);
    }
    SUBCASE("b and b*a are fused via sigma_{1,1}") {
      Group g(3);
      auto v = are_fused(g, g.b(), g.b(1));
      CHECK(v.kind == Fusion::Fused);
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->is_sigma());
      CHECK(v.witness->sigma() == SigmaRS{1, 1});
    }
    SUBCASE("fusion is symmetric and stable under automorphic images") {
      for (int n : {3, 4}) {
        Group g(n);
        auto auts = enumerate_automorphisms(g);
        const auto elems = g.elements();
        for (size_t i = 0; i < elems.size(); i += 2) {
          for (size_t j = i; j < elems.size(); j += 3) {
            auto kind = are_fused(g, elems[i], elems[j], auts).kind;
            CHECK(are_fused(g, elems[j], elems[i], auts).kind == kind);
            const auto& beta = auts[(i + j) % auts.size()];
            Element moved = apply_automorphism(g, beta, elems[i]);
            CHECK(are_fused(g, moved, elems[j], auts).kind == kind);
          }
        }
      }
    }
  }

  TEST_CASE("subgroup isomorphism enumeration") {
    Group g(2);
    auto subgroups = all_subgroups(g);
    // Q_8: 1, Z_2, three Z_4, Q_8
    CHECK(subgroups.size() == 6);
    const auto& whole = subgroups.back();
    CHECK(whole.order() == 8);
    CHECK(subgroup_isomorphisms(whole, whole).size() == 24);

    // the three cyclic 4-subgroups are pairwise isomorphic (2 isos each)
    for (const auto& h : subgroups) {
      if (h.order() != 4) continue;
      for (const auto& k : subgroups) {
        if (k.order() != 4) continue;
        CHECK(subgroup_isomorphisms(h, k).size() == 2);
      }
    }
  }

  TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(Group(3)).homogeneous);
    CHECK(is_homogeneous(Group(5)).homogeneous);

    // Even n carries no claim; whatever the verdict, a reported
    // counterexample must be a real isomorphism extended by no automorphism.
    auto r = is_homogeneous(Group(4));
    if (!r.homogeneous) {
      REQUIRE(r.counterexample.has_value());
      const auto& ce = *r.counterexample;
      auto isos = subgroup_isomorphisms(ce.h, ce.k);
      CHECK(std::find(isos.begin(), isos.end(), ce.isomorphism) != isos.end());
      Group g(4);
      for (const auto& alpha : enumerate_automorphisms(g)) {
        bool extends = true;
        for (size_t i = 0; i < ce.h.carrier.size(); ++i)
          if (apply_automorphism(g, alpha, ce.h.carrier[i]) != ce.isomorphism[i]) {
            extends = false;
            break;
          }
        CHECK(!extends);
      }
    }

    CHECK_THROWS_AS(is_homogeneous(Group(8)), ResourceLimitError);
  }
}
