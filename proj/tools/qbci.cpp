// qbci: construct bi-Cayley graphs over generalized quaternion groups,
// compute their spectra by two independent routes, and verify BCI-type
// properties at desk scale.
//
// Exit codes: 0 = the predicted verdict was reproduced (or the command has
// no prediction), 1 = a prediction or internal route was contradicted,
// 2 = usage or parse error, 3 = a guard bound stopped the computation.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "qbci/bci.hpp"
#include "qbci/errors.hpp"
#include "qbci/serialize.hpp"
#include "qbci/version.hpp"

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct CommonFlags {
  int jobs = 0;
  bool no_timing = false;
  std::string out_path;
};

struct NRange {
  int lo = 0;
  int hi = 0;
};

// "4" or "2..6", inclusive.
NRange parse_n_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  NRange r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  if (r.lo > r.hi) throw CLI::ValidationError("--n", "range lower bound exceeds upper bound");
  return r;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += " ";
    out += argv[i];
  }
  return out;
}

void emit(const Json& doc, const CommonFlags& flags) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!flags.out_path.empty()) {
    std::ofstream file(flags.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open --out path " + flags.out_path);
    file << text;
  }
}

Json make_document(const std::string& command, Json parameters, Json result,
                   const CommonFlags& flags, Clock::time_point start) {
  Json doc;
  doc["command"] = command;
  doc["version"] = qbci::kVersion;
  doc["parameters"] = std::move(parameters);
  doc["result"] = std::move(result);
  if (!flags.no_timing)
    doc["timing_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  return doc;
}

qbci::BciGuards guards_from(const CommonFlags& flags, int guard_n) {
  qbci::BciGuards guards;
  guards.jobs = flags.jobs;
  guards.max_n = guard_n;
  return guards;
}

int run_spectrum(const std::string& command, int n, const std::string& set_expr,
                 const std::string& route, const std::string& csv_path,
                 const CommonFlags& flags) {
  const auto start = Clock::now();
  const qbci::Group group(n);
  const auto set = qbci::ConnectionSet::parse(group, set_expr);

  std::optional<qbci::SpectrumSummary> reps, exact;
  if (route == "reps" || route == "both") reps = qbci::spectrum_via_reps(set);
  if (route == "exact" || route == "both")
    exact = qbci::charpoly_exact(qbci::BiCayleyGraph::build(set), 200, flags.jobs);

  const qbci::SpectrumSummary& primary = exact ? *exact : *reps;
  Json result;
  result["order"] = group.order();
  result["vertices"] = 2 * group.order();
  result["valency"] = set.size();
  Json set_json = Json::array();
  for (qbci::Element e : set.elements()) set_json.push_back(group.format(e));
  result["set"] = std::move(set_json);
  result["spectrum"] = Json::parse(qbci::spectrum_payload_json(primary));

  bool agree = true;
  if (route == "both") {
    agree = reps->charpoly == exact->charpoly;
    result["routes_agree"] = agree;
    if (!agree) {
      result["reps_charpoly"] = Json::parse(reps->charpoly_json());
      result["exact_charpoly"] = Json::parse(exact->charpoly_json());
    }
  }

  emit(make_document(command, Json{{"n", n}, {"set", set_expr}, {"route", route}},
                     std::move(result), flags, start),
       flags);
  if (!csv_path.empty()) {
    std::ofstream file(csv_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open --csv path " + csv_path);
    file << primary.eigenvalues_csv();
  }
  if (!agree) {
    std::cerr << "spectrum routes disagree for S = " << set.to_string() << "\n";
    return kExitContradiction;
  }
  return kExitOk;
}

int run_verify_fif(const std::string& command, int n, const CommonFlags& flags) {
  const auto start = Clock::now();
  auto report = qbci::is_fif(qbci::Group(n));
  const bool predicted = (n == 2) || (n % 2 == 1);
  Json result = Json::parse(qbci::to_json(report));
  result["predicted"] = predicted ? "holds" : "fails";
  result["matches_prediction"] = report.holds == predicted;
  emit(make_document(command, Json{{"n", n}}, std::move(result), flags, start), flags);
  return report.holds == predicted ? kExitOk : kExitContradiction;
}

int run_verify_bci(const std::string& command, int n, int m, int guard_n,
                   const CommonFlags& flags) {
  const auto start = Clock::now();
  auto report = qbci::is_m_bci(qbci::Group(n), m, guards_from(flags, guard_n));
  const bool predicted = (m == 1) || (n == 2) || (n % 2 == 1);
  Json result = Json::parse(qbci::to_json(report, !flags.no_timing));
  result["predicted"] = predicted ? "holds" : "fails";
  result["matches_prediction"] = report.holds == predicted;
  emit(make_document(command, Json{{"n", n}, {"m", m}}, std::move(result), flags, start), flags);
  return report.holds == predicted ? kExitOk : kExitContradiction;
}

int run_verify_theorem1(const std::string& command, const NRange& range, int guard_n,
                        const CommonFlags& flags) {
  const auto start = Clock::now();
  std::vector<int> ns;
  for (int n = range.lo; n <= range.hi; ++n) ns.push_back(n);
  auto summary = qbci::verify_theorem_1(ns, guards_from(flags, guard_n));
  Json result = Json::parse(qbci::to_json(summary));
  emit(make_document(command,
                     Json{{"n_lo", range.lo}, {"n_hi", range.hi}, {"guard_n", guard_n}},
                     std::move(result), flags, start),
       flags);
  if (summary.any_guard_error) return kExitGuard;
  return summary.all_match ? kExitOk : kExitContradiction;
}

int run_verify_lemma33(const std::string& command, int n, int guard_n, const CommonFlags& flags) {
  const auto start = Clock::now();
  auto result = qbci::verify_lemma_3_3(qbci::Group(n), guards_from(flags, guard_n));
  Json payload = Json::parse(qbci::to_json(result));
  payload["predicted"] = "holds";
  emit(make_document(command, Json{{"n", n}}, std::move(payload), flags, start), flags);
  return result.holds ? kExitOk : kExitContradiction;
}

int run_verify_homogeneous(const std::string& command, int n, int guard_n,
                           const CommonFlags& flags) {
  const auto start = Clock::now();
  auto result = qbci::is_homogeneous(qbci::Group(n), guard_n);
  Json payload = Json::parse(qbci::to_json(result));
  const bool has_prediction = n % 2 == 1;
  payload["predicted"] = has_prediction ? Json("homogeneous") : Json(nullptr);
  emit(make_document(command, Json{{"n", n}}, std::move(payload), flags, start), flags);
  if (has_prediction && !result.homogeneous) return kExitContradiction;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-Cayley graph spectra and BCI verification for generalized quaternion groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qbci::kVersion);

  CommonFlags flags;
  int n = 3;
  int m = 2;
  int guard_n = 7;
  std::string set_expr;
  std::string route = "both";
  std::string csv_path;
  std::string n_range_text = "3";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", flags.jobs, "worker threads (0 = all hardware threads)");
    cmd->add_flag("--no-timing", flags.no_timing, "omit timing fields for byte-stable output");
    cmd->add_option("--out", flags.out_path, "also write the JSON document to this path");
  };

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of BCay(Q_4n, S)");
  spectrum->add_option("--n", n, "group parameter n (order 4n)")->required();
  spectrum->add_option("--set", set_expr, "connection set, e.g. \"1,a,b\"")->required();
  spectrum->add_option("--route", route, "reps | exact | both")
      ->check(CLI::IsMember({"reps", "exact", "both"}));
  spectrum->add_option("--csv", csv_path, "write (eigenvalue, multiplicity) CSV to this path");
  add_common(spectrum);

  auto* verify = app.add_subcommand("verify", "verify a property and compare to its prediction");
  verify->require_subcommand(1);

  auto* fif = verify->add_subcommand("fif", "fused/inverse-fused property of Q_4n");
  fif->add_option("--n", n)->required();
  add_common(fif);

  auto* bci = verify->add_subcommand("bci", "m-BCI property of Q_4n");
  bci->add_option("--n", n)->required();
  bci->add_option("--m", m)->required();
  bci->add_option("--guard-n", guard_n, "sweep guard bound on n");
  add_common(bci);

  auto* theorem1 = verify->add_subcommand("theorem1", "2-BCI and 3-BCI across a range of n");
  theorem1->add_option("--n", n_range_text, "single n or inclusive range lo..hi")->required();
  theorem1->add_option("--guard-n", guard_n, "sweep guard bound on n");
  add_common(theorem1);

  auto* lemma33 = verify->add_subcommand("lemma33", "doubled-order non-isomorphism (odd n)");
  lemma33->add_option("--n", n)->required();
  lemma33->add_option("--guard-n", guard_n, "sweep guard bound on n");
  add_common(lemma33);

  auto* homogeneous = verify->add_subcommand("homogeneous", "subgroup-isomorphism extension");
  homogeneous->add_option("--n", n)->required();
  homogeneous->add_option("--guard-n", guard_n, "guard bound on n");
  add_common(homogeneous);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = join_args(argc, argv);
  try {
    if (spectrum->parsed()) return run_spectrum(command, n, set_expr, route, csv_path, flags);
    if (fif->parsed()) return run_verify_fif(command, n, flags);
    if (bci->parsed()) return run_verify_bci(command, n, m, guard_n, flags);
    if (theorem1->parsed())
      return run_verify_theorem1(command, parse_n_range(n_range_text), guard_n, flags);
    if (lemma33->parsed()) return run_verify_lemma33(command, n, guard_n, flags);
    if (homogeneous->parsed()) return run_verify_homogeneous(command, n, guard_n, flags);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const qbci::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const qbci::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContradiction;
  }
}
