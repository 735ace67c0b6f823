#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qbci/bicayley.hpp"
#include "qbci/irreps.hpp"

namespace qbci {

struct EigenvalueCluster {
  double value = 0.0;
  int multiplicity = 0;
};

/// Spectrum of a bi-Cayley graph. The exact integer characteristic
/// polynomial is the authority for every comparison; the clustered real
/// eigenvalues are presentation-layer only.
struct SpectrumSummary {
  enum class Source { Reps, ExactOracle };

  std::vector<mpz_class> charpoly;  // constant term first, degree 2|G|, monic
  std::vector<EigenvalueCluster> eigenvalues;
  Source source = Source::ExactOracle;

  int degree() const { return static_cast<int>(charpoly.size()) - 1; }

  /// Exact multiplicity of an integer root, by repeated synthetic division.
  int integer_eigenvalue_multiplicity(const mpz_class& value) const;

  /// CSV rows (eigenvalue, multiplicity), ascending.
  std::string eigenvalues_csv() const;
  /// JSON array of decimal-string coefficients, constant term first.
  std::string charpoly_json() const;
};

/// Route 1 (representation factorization): multiplies the per-irrep factors
/// det(lambda^2 I - rho(S) rho(S^-1)) raised to deg(rho). Only valid over
/// the full group Q_4n; coefficients are validated to be near-integers
/// (absolute tolerance 1e-6) and snapped exactly.
SpectrumSummary spectrum_via_reps(const ConnectionSet& s);

/// Same, with an explicit ambient: proper subgroups are rejected with an
/// unsupported-route error directing callers to charpoly_exact.
SpectrumSummary spectrum_via_reps(const ConnectionSet& s, const Subgroup& ambient);

/// Route 2 (exact oracle): integer characteristic polynomial of the full
/// adjacency matrix, via fraction-free (Bareiss) determinants of t I - A at
/// 2|G|+1 integer points and exact rational interpolation. Works for any
/// ambient, including proper subgroups.
SpectrumSummary charpoly_exact(const BiCayleyGraph& graph, int max_vertices = 200, int jobs = 0);

/// Exact determinant of a square integer matrix (row-major), fraction-free.
mpz_class bareiss_determinant(std::vector<mpz_class> matrix, int n);

/// Coefficient tolerances used by the reps route.
inline constexpr double kCoefficientTolerance = 1e-6;
inline double eigenvalue_cluster_tolerance(int set_size) { return 1e-9 * (1 + set_size); }

}  // namespace qbci
