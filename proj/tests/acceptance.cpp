// Acceptance suite: runs every top-level criterion at its stated tolerance
// and runtime budget, printing one pass/fail line per criterion. The exit
// code is the number of failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qbci/bci.hpp"
#include "qbci/errors.hpp"
#include "qbci/irreps.hpp"
#include "qbci/parallel.hpp"
#include "qbci/serialize.hpp"
#include "qbci/spectrum.hpp"

using namespace qbci;
using Json = nlohmann::json;

namespace {

constexpr int kJobs = 0;  // all hardware threads

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct ToolRun {
  int exit_code = -1;
  std::string out;
};

ToolRun run_tool(const std::string& args) {
#ifdef QBCI_TOOL_PATH
  const std::string cmd = std::string(QBCI_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ToolRun run;
  if (!pipe) return run;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), got);
  int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
#else
  (void)args;
  return {};
#endif
}

std::vector<ConnectionSet> normalized_sets_up_to_3(const Group& g) {
  std::vector<ConnectionSet> out;
  const auto elems = g.elements();
  out.emplace_back(g, std::vector<Element>{kIdentity});
  for (size_t i = 1; i < elems.size(); ++i) {
    out.emplace_back(g, std::vector<Element>{kIdentity, elems[i]});
    for (size_t j = i + 1; j < elems.size(); ++j)
      out.emplace_back(g, std::vector<Element>{kIdentity, elems[i], elems[j]});
  }
  return out;
}

// 1. Odd n: exact multiplicity of eigenvalue 1 is 3 for {1,a,b} and 1 for
//    {1,a^2,b}.
Outcome criterion1() {
  Outcome o;
  for (int n : {3, 5, 7}) {
    Group g(n);
    auto s = charpoly_exact(BiCayleyGraph::build(ConnectionSet::parse(g, "1,a,b")), 200, kJobs);
    auto t = charpoly_exact(BiCayleyGraph::build(ConnectionSet::parse(g, "1,a^2,b")), 200, kJobs);
    o.require(s.integer_eigenvalue_multiplicity(1) == 3,
              "mult_1(S) != 3 at n=" + std::to_string(n));
    o.require(t.integer_eigenvalue_multiplicity(1) == 1,
              "mult_1(T) != 1 at n=" + std::to_string(n));
  }
  return o;
}

// 2. Even n: eigenvalue 3 has multiplicity 1 for S and >= 2 for T.
Outcome criterion2() {
  Outcome o;
  for (int n : {2, 4, 6}) {
    Group g(n);
    auto s = charpoly_exact(BiCayleyGraph::build(ConnectionSet::parse(g, "1,a,b")), 200, kJobs);
    auto t = charpoly_exact(BiCayleyGraph::build(ConnectionSet::parse(g, "1,a^2,b")), 200, kJobs);
    o.require(s.integer_eigenvalue_multiplicity(3) == 1,
              "mult_3(S) != 1 at n=" + std::to_string(n));
    o.require(t.integer_eigenvalue_multiplicity(3) >= 2,
              "mult_3(T) < 2 at n=" + std::to_string(n));
  }
  return o;
}

// 3. Route agreement for every normalized S with |S| <= 3 and n <= 6.
Outcome criterion3() {
  Outcome o;
  long long checked = 0;
  for (int n = 2; n <= 6; ++n) {
    Group g(n);
    const auto sets = normalized_sets_up_to_3(g);
    std::vector<std::string> failures(sets.size());
    parallel_for(sets.size(), kJobs, [&](std::size_t i) {
      auto exact = charpoly_exact(BiCayleyGraph::build(sets[i]), 200, 1);
      auto reps = spectrum_via_reps(sets[i]);  // residues > 1e-6 would throw
      if (exact.charpoly != reps.charpoly)
        failures[i] = "route mismatch at n=" + std::to_string(n) + " S=" + sets[i].to_string();
    });
    for (const auto& f : failures)
      if (!f.empty()) o.require(false, f);
    checked += static_cast<long long>(sets.size());
  }
  o.detail = std::to_string(checked) + " sets checked" + (o.detail.empty() ? "" : "; ") + o.detail;
  return o;
}

// 4. Theorem-level sweep through the CLI: holds for n in {2,3,5,7}, fails
//    for n in {4,6} with re-verifiable witnesses.
Outcome criterion4() {
  Outcome o;
  auto run = run_tool("verify theorem1 --n 2..7 --jobs 0");
  o.require(run.exit_code == 0, "tool exit code " + std::to_string(run.exit_code));
  if (run.exit_code != 0) return o;
  auto rows = Json::parse(run.out).at("result").at("rows");
  o.require(rows.size() == 6, "expected 6 rows");
  for (const auto& row : rows) {
    const int n = row.at("n").get<int>();
    const bool expect_holds = (n == 2) || (n % 2 == 1);
    o.require(row.at("match") == true, "row mismatch at n=" + std::to_string(n));
    o.require(row.at("bci3") == (expect_holds ? "holds" : "fails"),
              "bci3 wrong at n=" + std::to_string(n));
    o.require(row.at("bci2") == (expect_holds ? "holds" : "fails"),
              "bci2 wrong at n=" + std::to_string(n));
    if (!expect_holds) {
      // Re-verify the reported witness pair from scratch.
      if (!row.at("witness").is_object()) {
        o.require(false, "missing witness at n=" + std::to_string(n));
        continue;
      }
      Group g(n);
      auto parse_set = [&](const Json& arr) {
        std::vector<Element> elems;
        for (const auto& token : arr) elems.push_back(g.parse(token.get<std::string>()));
        return ConnectionSet(g, elems);
      };
      auto s = parse_set(row.at("witness").at("S"));
      auto t = parse_set(row.at("witness").at("T"));
      auto bijection = row.at("witness").at("iso").at("bijection").get<std::vector<int>>();
      o.require(verify_isomorphism(BiCayleyGraph::build(s), BiCayleyGraph::build(t), bijection),
                "witness bijection invalid at n=" + std::to_string(n));
      o.require(!bcay_equivalent(s, t).has_value(),
                "witness pair is equivalent at n=" + std::to_string(n));
    }
  }
  return o;
}

// 5. FIF verdict equals the 2-BCI verdict for every n in {2,...,6}.
Outcome criterion5() {
  Outcome o;
  BciGuards guards;
  guards.jobs = kJobs;
  for (int n = 2; n <= 6; ++n)
    o.require(crosscheck_fif_2bci(Group(n), guards), "FIF/2-BCI differ at n=" + std::to_string(n));
  return o;
}

// 6. Doubled-order pairs are non-isomorphic, reduced and ambient.
Outcome criterion6() {
  Outcome o;
  BciGuards guards;
  guards.jobs = kJobs;
  for (int n : {3, 5}) {
    auto r = verify_lemma_3_3(Group(n), guards);
    o.require(r.holds, "an isomorphic pair appeared at n=" + std::to_string(n));
    o.require(!r.pairs.empty(), "no (i,j) pairs at n=" + std::to_string(n));
    for (const auto& p : r.pairs)
      o.require(!p.reduced_isomorphic && !p.ambient_isomorphic,
                "pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") isomorphic");
  }
  return o;
}

// 7. Subgroup-restriction equivalence: the reduced verdict agrees with the
//    ambient verdict on 200 random normalized pairs per n in {3,4,5}.
Outcome criterion7() {
  Outcome o;
  IsoOptions opt;
  opt.charpoly_jobs = 1;
  for (int n : {3, 4, 5}) {
    Group g(n);
    std::mt19937 rng(1000 + n);
    const auto elems = g.elements();
    auto draw = [&] {
      int size = 1 + static_cast<int>(rng() % 3);
      std::vector<Element> p{kIdentity};
      while (static_cast<int>(p.size()) < size) {
        Element e = elems[rng() % elems.size()];
        if (std::find(p.begin(), p.end(), e) == p.end()) p.push_back(e);
      }
      return ConnectionSet(g, p);
    };
    std::vector<std::pair<ConnectionSet, ConnectionSet>> pairs;
    for (int trial = 0; trial < 200; ++trial) pairs.emplace_back(draw(), draw());
    std::vector<char> agree(pairs.size(), 1);
    parallel_for(pairs.size(), kJobs, [&](std::size_t i) {
      const auto& [s, t] = pairs[i];
      bool ambient = graphs_isomorphic(BiCayleyGraph::build(s), BiCayleyGraph::build(t), opt)
                         .isomorphic;
      agree[i] = reduced_iso_check(s, t, opt) == ambient;
    });
    for (size_t i = 0; i < pairs.size(); ++i)
      o.require(agree[i] == 1, "disagreement at n=" + std::to_string(n) + " pair " +
                                   pairs[i].first.to_string() + " / " +
                                   pairs[i].second.to_string());
  }
  o.detail = "600 random pairs" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// 8. Representation completeness and homomorphism property.
Outcome criterion8() {
  Outcome o;
  for (int n = 2; n <= 50; ++n) {
    Group g(n);
    int sum = 0;
    for (const auto& d : all_irreps(g)) sum += d.degree() * d.degree();
    o.require(sum == 4 * n, "degree identity fails at n=" + std::to_string(n));
  }
  auto mat_mul = [](const RepMatrix& x, const RepMatrix& y) {
    RepMatrix out;
    out.dim = x.dim;
    if (x.dim == 1) {
      out.entry[0] = x.entry[0] * y.entry[0];
      return out;
    }
    out.entry[0] = x.entry[0] * y.entry[0] + x.entry[1] * y.entry[2];
    out.entry[1] = x.entry[0] * y.entry[1] + x.entry[1] * y.entry[3];
    out.entry[2] = x.entry[2] * y.entry[0] + x.entry[3] * y.entry[2];
    out.entry[3] = x.entry[2] * y.entry[1] + x.entry[3] * y.entry[3];
    return out;
  };
  for (int n = 2; n <= 6; ++n) {
    Group g(n);
    for (const auto& d : all_irreps(g)) {
      for (Element x : g.elements()) {
        for (Element y : g.elements()) {
          auto lhs = irrep_value(g, d, g.multiply(x, y));
          auto rhs = mat_mul(irrep_value(g, d, x), irrep_value(g, d, y));
          double err = 0;
          for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(lhs.entry[i] - rhs.entry[i]));
          if (err > 1e-9) {
            o.require(false, d.name() + " not a homomorphism at n=" + std::to_string(n));
            break;
          }
        }
      }
    }
  }
  return o;
}

// 9. Structural invariants: valency, edge count, bipartite coefficient
//    symmetry, second spectral moment, and the R(g) automorphism property.
Outcome criterion9() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    Group g(n);
    for (const char* expr : {"1", "1,a", "1,a,b", "1,a^2,b", "a,b,b*a"}) {
      auto s = ConnectionSet::parse(g, expr);
      auto graph = BiCayleyGraph::build(s);
      o.require(graph.edge_count() == static_cast<long long>(g.order()) * s.size(),
                "edge count off");
      for (int v = 0; v < graph.vertex_count(); ++v)
        o.require(static_cast<int>(graph.neighbors(v).size()) == s.size(), "valency off");
      auto spec = charpoly_exact(graph, 200, kJobs);
      for (int i = 1; i < spec.degree(); i += 2)
        o.require(spec.charpoly[i] == 0, "odd coefficient nonzero");
      o.require(spec.charpoly[spec.degree() - 2] == -g.order() * s.size(),
                "second moment coefficient off");
      for (Element gg : g.elements()) {
        auto perm = right_translation_action(graph, gg);
        for (int v = 0; v < graph.vertex_count(); ++v)
          for (int w : graph.neighbors(v))
            o.require(graph.adjacent(perm[v], perm[w]), "R(g) broke an edge");
      }
    }
  }
  return o;
}

// 10. Homogeneity for n in {3, 5}.
Outcome criterion10() {
  Outcome o;
  for (int n : {3, 5})
    o.require(is_homogeneous(Group(n)).homogeneous,
              "not homogeneous at n=" + std::to_string(n));
  return o;
}

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "eigenvalue-1 multiplicities, odd n in {3,5,7}", 5, criterion1},
      {2, "eigenvalue-3 multiplicities, even n in {2,4,6}", 5, criterion2},
      {3, "route agreement, all |S| <= 3, n <= 6", 120, criterion3},
      {4, "theorem sweep n = 2..7 through the CLI", 900, criterion4},
      {5, "FIF <=> 2-BCI crosscheck, n in {2..6}", 300, criterion5},
      {6, "doubled-order non-isomorphism, n in {3,5}", 120, criterion6},
      {7, "reduced vs ambient verdicts, 200 random pairs x {3,4,5}", 300, criterion7},
      {8, "representation completeness and homomorphism checks", 60, criterion8},
      {9, "valency/moment/symmetry/R(g) invariant suite", 60, criterion9},
      {10, "homogeneity for n in {3,5}", 600, criterion10},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over budget (") +
                        std::to_string(c.budget_seconds) + "s)";
    }
    std::printf("criterion %2d [%s] %7.2fs  %s%s%s\n", c.number,
                outcome.pass ? "PASS" : "FAIL", elapsed, c.label,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
