#pragma once

#include <string>

#include "qbci/automorphisms.hpp"
#include "qbci/bci.hpp"
#include "qbci/bicayley.hpp"
#include "qbci/iso.hpp"
#include "qbci/spectrum.hpp"

// Deterministic JSON renderings of the report types: stable key order,
// byte-identical across runs (timing excluded on request).

namespace qbci {

std::string to_json(const Group& g, const EquivalenceWitness& witness);
std::string to_json(const IsoResult& result);
std::string to_json(const BciWitness& witness);
std::string to_json(const BciReport& report, bool include_timing = true);
std::string to_json(const FifReport& report);
std::string to_json(const Lemma33Result& result);
std::string to_json(const HomogeneityResult& result);
std::string to_json(const Theorem1Summary& summary);
std::string spectrum_payload_json(const SpectrumSummary& summary);

}  // namespace qbci
