#include "qbci/serialize.hpp"

#include <json.hpp>

namespace qbci {

namespace {

using Json = nlohmann::ordered_json;

Json element_list(const Group& g, const std::vector<Element>& elems) {
  Json out = Json::array();
  for (Element e : elems) out.push_back(g.format(e));
  return out;
}

Json alpha_json(const Group& g, const Automorphism& alpha) {
  Json out;
  if (alpha.is_sigma()) {
    out["r"] = alpha.sigma().r;
    out["s"] = alpha.sigma().s;
  } else {
    out["table"] = element_list(g, alpha.table().image);
  }
  return out;
}

Json charpoly_json(const std::vector<mpz_class>& coeffs) {
  Json out = Json::array();
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

Json witness_json(const BciWitness& w) {
  const Group& g = w.s.group();
  Json out;
  out["S"] = element_list(g, w.s.elements());
  out["T"] = element_list(g, w.t.elements());
  out["iso"] = Json{{"bijection", w.bijection}};
  out["equivalence_search_exhausted"] = w.equivalence_search_exhausted;
  return out;
}

Json stats_json(const SweepStats& stats, bool include_timing) {
  Json out;
  out["pairs"] = stats.pairs;
  out["spectral_rejects"] = stats.spectral_rejects;
  out["iso_calls"] = stats.iso_calls;
  if (include_timing) out["seconds"] = stats.seconds;
  return out;
}

}  // namespace

std::string to_json(const Group& g, const EquivalenceWitness& witness) {
  Json out;
  out["g"] = g.format(witness.g);
  out["alpha"] = alpha_json(g, witness.alpha);
  return out.dump();
}

std::string to_json(const IsoResult& result) {
  Json out;
  out["verdict"] = result.isomorphic ? "isomorphic" : "non-isomorphic";
  if (result.isomorphic) {
    out["bijection"] = result.bijection;
  } else {
    Json cert;
    cert["kind"] = result.certificate == IsoResult::Certificate::SpectralMismatch
                       ? "spectral-mismatch"
                       : "exhausted-search";
    if (result.certificate == IsoResult::Certificate::SpectralMismatch) {
      cert["charpoly_lhs"] = charpoly_json(result.charpoly_lhs);
      cert["charpoly_rhs"] = charpoly_json(result.charpoly_rhs);
    }
    out["certificate"] = cert;
  }
  return out.dump();
}

std::string to_json(const BciWitness& witness) { return witness_json(witness).dump(); }

std::string to_json(const BciReport& report, bool include_timing) {
  Json out;
  out["n"] = report.n;
  out["m"] = report.m;
  out["verdict"] = report.holds ? "holds" : "fails";
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(witness_json(w));
  out["witnesses"] = witnesses;
  out["stats"] = stats_json(report.stats, include_timing);
  return out.dump();
}

std::string to_json(const FifReport& report) {
  const Group g(report.n);
  Json out;
  out["n"] = report.n;
  out["verdict"] = report.holds ? "holds" : "fails";
  if (report.witness) {
    out["witness"] = Json{{"x", g.format(report.witness->first)},
                          {"y", g.format(report.witness->second)}};
  } else {
    out["witness"] = nullptr;
  }
  return out.dump();
}

std::string to_json(const Lemma33Result& result) {
  Json out;
  out["n"] = result.n;
  out["verdict"] = result.holds ? "holds" : "fails";
  Json pairs = Json::array();
  for (const auto& p : result.pairs) {
    pairs.push_back(Json{{"i", p.i},
                         {"j", p.j},
                         {"reduced_isomorphic", p.reduced_isomorphic},
                         {"ambient_isomorphic", p.ambient_isomorphic}});
  }
  out["pairs"] = pairs;
  return out.dump();
}

std::string to_json(const HomogeneityResult& result) {
  Json out;
  out["homogeneous"] = result.homogeneous;
  if (result.counterexample) {
    const auto& ce = *result.counterexample;
    const Group& g = ce.h.ambient;
    out["counterexample"] = Json{{"H", element_list(g, ce.h.carrier)},
                                 {"K", element_list(g, ce.k.carrier)},
                                 {"isomorphism", element_list(g, ce.isomorphism)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out.dump();
}

std::string to_json(const Theorem1Summary& summary) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : summary.rows) {
    Json r;
    r["n"] = row.n;
    r["bci2"] = row.bci2 ? Json(*row.bci2 ? "holds" : "fails") : Json(nullptr);
    r["bci3"] = row.bci3 ? Json(*row.bci3 ? "holds" : "fails") : Json(nullptr);
    r["expected"] = row.expected ? "holds" : "fails";
    r["match"] = row.match;
    r["witness"] = row.witness ? witness_json(*row.witness) : Json(nullptr);
    r["error"] = row.error.empty() ? Json(nullptr) : Json(row.error);
    rows.push_back(r);
  }
  out["rows"] = rows;
  out["all_match"] = summary.all_match;
  return out.dump();
}

std::string spectrum_payload_json(const SpectrumSummary& summary) {
  Json out;
  out["source"] = summary.source == SpectrumSummary::Source::Reps ? "reps" : "exact-oracle";
  out["degree"] = summary.degree();
  out["charpoly"] = charpoly_json(summary.charpoly);
  Json eigs = Json::array();
  for (const auto& c : summary.eigenvalues)
    eigs.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}});
  out["eigenvalues"] = eigs;
  return out.dump();
}

}  // namespace qbci
