#include <doctest.h>

#include <random>

#include "qbci/errors.hpp"
#include "qbci/iso.hpp"

using namespace qbci;

TEST_SUITE("iso") {
  TEST_CASE("a graph is isomorphic to itself") {
    Group g(3);
    auto graph = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a,b"));
    auto r = graphs_isomorphic(graph, graph);
    CHECK(r.isomorphic);
    CHECK(verify_isomorphism(graph, graph, r.bijection));
  }

  TEST_CASE("{1,a,b} vs {1,a^2,b} are not isomorphic, by spectrum") {
    for (int n : {2, 3, 4, 5}) {
      Group g(n);
      auto s = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a,b"));
      auto t = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a^2,b"));
      auto r = graphs_isomorphic(s, t);
      CHECK(!r.isomorphic);
      CHECK(r.certificate == IsoResult::Certificate::SpectralMismatch);
      CHECK(r.charpoly_lhs != r.charpoly_rhs);
      CHECK(r.charpoly_lhs.size() == r.charpoly_rhs.size());
    }
  }

  TEST_CASE("translated-and-mapped sets give isomorphic graphs") {
    std::mt19937 rng(20240811);
    for (int n : {2, 3, 4}) {
      Group g(n);
      auto auts = enumerate_automorphisms(g);
      const auto elems = g.elements();
      for (int trial = 0; trial < 6; ++trial) {
        // random S of size 1..3
        std::vector<Element> picked;
        int size = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(picked.size()) < size) {
          Element e = elems[rng() % elems.size()];
          if (std::find(picked.begin(), picked.end(), e) == picked.end()) picked.push_back(e);
        }
        ConnectionSet s(g, picked);
        Element gg = elems[rng() % elems.size()];
        const auto& alpha = auts[rng() % auts.size()];
        auto t = translate_and_map(s, gg, alpha);
        auto r = graphs_isomorphic(BiCayleyGraph::build(s), BiCayleyGraph::build(t));
        CHECK(r.isomorphic);
        CHECK(verify_isomorphism(BiCayleyGraph::build(s), BiCayleyGraph::build(t), r.bijection));
      }
    }
  }

  TEST_CASE("part-swapped graphs are found isomorphic") {
    Group g(3);
    for (const char* expr : {"1", "1,a", "1,a,b", "1,a^2,b*a"}) {
      auto graph = BiCayleyGraph::build(ConnectionSet::parse(g, expr));
      auto r = graphs_isomorphic(graph, graph.swapped_parts());
      CHECK(r.isomorphic);
    }
  }

  TEST_CASE("bcay_equivalent") {
    SUBCASE("T = S has the trivial witness (1, identity)") {
      Group g(3);
      auto s = ConnectionSet::parse(g, "1,a,b");
      auto w = bcay_equivalent(s, s);
      REQUIRE(w.has_value());
      CHECK(w->g == kIdentity);
      CHECK(w->alpha.is_sigma());
      CHECK(w->alpha.sigma() == SigmaRS{1, 0});
    }
    SUBCASE("{1,a^2} and {1,b} in Q_16 are not equivalent") {
      Group g(4);
      CHECK(!bcay_equivalent(ConnectionSet::parse(g, "1,a^2"), ConnectionSet::parse(g, "1,b")));
    }
    SUBCASE("{1,b} and {1,b*a^2} have first witness (1, sigma_{1,2})") {
      Group g(3);
      auto w = bcay_equivalent(ConnectionSet::parse(g, "1,b"), ConnectionSet::parse(g, "1,b*a^2"));
      REQUIRE(w.has_value());
      CHECK(w->g == kIdentity);
      CHECK(w->alpha.sigma() == SigmaRS{1, 2});
    }
    SUBCASE("a witness implies isomorphic graphs") {
      Group g(4);
      auto s = ConnectionSet::parse(g, "1,a,b");
      auto t = ConnectionSet::parse(g, "1,a^3,b*a^5");
      auto w = bcay_equivalent(s, t);
      if (w) {
        CHECK(translate_and_map(s, w->g, w->alpha) == t);
        CHECK(graphs_isomorphic(BiCayleyGraph::build(s), BiCayleyGraph::build(t)).isomorphic);
      }
    }
  }

  TEST_CASE("reduced_iso_check") {
    SUBCASE("S = T = {1}") {
      Group g(3);
      auto one = ConnectionSet::parse(g, "1");
      CHECK(reduced_iso_check(one, one));
    }
    SUBCASE("equal-order powers of a in Q_20 reduce to isomorphic cycles") {
      Group g(5);
      CHECK(reduced_iso_check(ConnectionSet::parse(g, "1,a"), ConnectionSet::parse(g, "1,a^3")));
      CHECK(reduced_iso_check(ConnectionSet::parse(g, "1,a^2"),
                              ConnectionSet::parse(g, "1,a^4")));
    }
    SUBCASE("{1,a,b} vs {1,a^2,b} at n=3: reduced matches the ambient verdict") {
      Group g(3);
      auto s = ConnectionSet::parse(g, "1,a,b");
      auto t = ConnectionSet::parse(g, "1,a^2,b");
      CHECK(!reduced_iso_check(s, t));
      CHECK(!graphs_isomorphic(BiCayleyGraph::build(s), BiCayleyGraph::build(t)).isomorphic);
    }
    SUBCASE("agreement with the ambient verdict on random normalized pairs") {
      std::mt19937 rng(7);
      Group g(3);
      const auto elems = g.elements();
      for (int trial = 0; trial < 40; ++trial) {
        int size = 1 + static_cast<int>(rng() % 3);
        auto draw = [&] {
          std::vector<Element> p{kIdentity};
          while (static_cast<int>(p.size()) < size) {
            Element e = elems[rng() % elems.size()];
            if (std::find(p.begin(), p.end(), e) == p.end()) p.push_back(e);
          }
          return ConnectionSet(g, p);
        };
        auto s = draw();
        auto t = draw();
        bool ambient =
            graphs_isomorphic(BiCayleyGraph::build(s), BiCayleyGraph::build(t)).isomorphic;
        CHECK(reduced_iso_check(s, t) == ambient);
      }
    }
  }

  TEST_CASE("audit mode: search alone confirms spectral non-isomorphism") {
    IsoOptions audit;
    audit.spectral_prefilter = false;
    SUBCASE("24-vertex pair") {
      Group g(3);
      auto s = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a,b"));
      auto t = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a^2,b"));
      auto full = graphs_isomorphic(s, t);
      REQUIRE(full.certificate == IsoResult::Certificate::SpectralMismatch);
      auto searched = graphs_isomorphic(s, t, audit);
      CHECK(!searched.isomorphic);
      CHECK(searched.certificate == IsoResult::Certificate::ExhaustedSearch);
    }
    SUBCASE("32-vertex pair") {
      Group g(4);
      auto s = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a"));
      auto t = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a^2"));
      auto searched = graphs_isomorphic(s, t, audit);
      CHECK(!searched.isomorphic);
      CHECK(searched.certificate == IsoResult::Certificate::ExhaustedSearch);
    }
  }

  TEST_CASE("node guard raises instead of guessing") {
    Group g(4);
    auto s = BiCayleyGraph::build(ConnectionSet::parse(g, "1,a,b"));
    IsoOptions opt;
    opt.node_guard = 3;
    CHECK_THROWS_AS(graphs_isomorphic(s, s, opt), ResourceLimitError);
  }

  TEST_CASE("different orders are never isomorphic") {
    Group g(4);
    auto s = ConnectionSet(g, {kIdentity, g.a(2)});
    auto reduced = BiCayleyGraph::build(s, generated_subgroup(g, {g.a(2)}));
    auto ambient = BiCayleyGraph::build(s);
    auto r = graphs_isomorphic(reduced, ambient);
    CHECK(!r.isomorphic);
    CHECK(r.certificate == IsoResult::Certificate::SpectralMismatch);
  }
}
