#include "qbci/spectrum.hpp"

#include <quadmath.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qbci/errors.hpp"
#include "rep_tables.hpp"

namespace qbci {

namespace detail {
std::vector<mpz_class> adjacency_charpoly(const std::vector<std::vector<std::uint8_t>>& adjacency,
                                          int jobs);
}

namespace {

using Quad = __float128;

mpz_class quad_to_integer(Quad x) {
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.0Qf", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return mpz_class(s);
}

std::vector<EigenvalueCluster> cluster_sorted(std::vector<std::pair<double, int>> vals,
                                              double tol) {
  std::sort(vals.begin(), vals.end());
  std::vector<EigenvalueCluster> out;
  for (const auto& [v, mult] : vals) {
    if (!out.empty() && std::abs(v - out.back().value) <= tol) {
      out.back().multiplicity += mult;
    } else {
      out.push_back({v, mult});
    }
  }
  return out;
}

}  // namespace

int SpectrumSummary::integer_eigenvalue_multiplicity(const mpz_class& value) const {
  std::vector<mpz_class> coeff = charpoly;  // constant first
  int multiplicity = 0;
  while (coeff.size() > 1) {
    // Synthetic division by (x - value): quotient from the top down.
    std::vector<mpz_class> quotient(coeff.size() - 1);
    mpz_class carry = 0;
    for (size_t i = coeff.size(); i-- > 1;) {
      carry = coeff[i] + value * carry;
      quotient[i - 1] = carry;
    }
    mpz_class remainder = coeff[0] + value * carry;
    if (remainder != 0) break;
    ++multiplicity;
    coeff = std::move(quotient);
  }
  return multiplicity;
}

std::string SpectrumSummary::eigenvalues_csv() const {
  std::string out = "eigenvalue,multiplicity\n";
  char buf[64];
  for (const auto& c : eigenvalues) {
    std::snprintf(buf, sizeof buf, "%.12g,%d\n", c.value, c.multiplicity);
    out += buf;
  }
  return out;
}

std::string SpectrumSummary::charpoly_json() const {
  std::string out = "[";
  for (size_t i = 0; i < charpoly.size(); ++i) {
    if (i) out += ",";
    out += "\"" + charpoly[i].get_str() + "\"";
  }
  return out + "]";
}

SpectrumSummary spectrum_via_reps(const ConnectionSet& s, const Subgroup& ambient) {
  if (!ambient.is_whole_group())
    throw std::invalid_argument(
        "spectrum_via_reps: the representation tables cover the full group Q_4n only; "
        "use charpoly_exact for proper-subgroup ambients");
  return spectrum_via_reps(s);
}

SpectrumSummary spectrum_via_reps(const ConnectionSet& s) {
  using detail::Cx;
  const Group& g = s.group();
  const auto irreps = all_irreps(g);

  // Full product prod_l p_l(lambda)^(d_l) in extended precision; the final
  // coefficients are integers of magnitude ~|G|^|S| scale, far beyond what
  // double can carry at the 1e-6 absolute tolerance.
  std::vector<Cx<Quad>> product{Cx<Quad>{1, 0}};
  std::vector<std::pair<double, int>> roots;  // (eigenvalue, multiplicity)
  for (const auto& d : irreps) {
    const auto factor = detail::factor_poly_t<Quad>(g, d, s.elements());
    for (int rep = 0; rep < d.degree(); ++rep) product = detail::poly_mul(product, factor);

    // Factor roots: the matrix rho(S) rho(S^-1) is Hermitian positive
    // semidefinite, so its eigenvalues mu are real >= 0 and the lambda
    // roots are +-sqrt(mu), each carried with multiplicity d_l.
    using Ops = detail::RealOps<Quad>;
    if (d.degree() == 1) {
      Quad mu = -factor[0].re;  // factor is lambda^2 - mu
      if (mu < 0) mu = 0;
      double r = static_cast<double>(Ops::sqrt(mu));
      roots.push_back({r, 1});
      roots.push_back({-r, 1});
    } else {
      Quad tr = -factor[2].re;
      Quad det = factor[0].re;
      Quad disc = tr * tr - 4 * det;
      if (disc < 0) disc = 0;
      Quad sq = Ops::sqrt(disc);
      for (Quad mu : {(tr + sq) / 2, (tr - sq) / 2}) {
        if (mu < 0) mu = 0;
        double r = static_cast<double>(Ops::sqrt(mu));
        roots.push_back({r, d.degree()});
        roots.push_back({-r, d.degree()});
      }
    }
  }

  const size_t expected_degree = static_cast<size_t>(2 * g.order());
  if (product.size() != expected_degree + 1)
    throw ConsistencyError("representation factor degrees do not sum to 2|G|");

  SpectrumSummary out;
  out.source = SpectrumSummary::Source::Reps;
  out.charpoly.resize(product.size());
  for (size_t i = 0; i < product.size(); ++i) {
    const Quad re = product[i].re;
    const Quad im = product[i].im;
    const Quad rounded = rintq(re);
    if (fabsq(im) > kCoefficientTolerance)
      throw ConsistencyError("reps-route coefficient " + std::to_string(i) +
                             " has imaginary residue above tolerance");
    if (fabsq(re - rounded) > kCoefficientTolerance)
      throw ConsistencyError("reps-route coefficient " + std::to_string(i) +
                             " is not an integer within tolerance");
    out.charpoly[i] = quad_to_integer(rounded);
  }
  if (out.charpoly.back() != 1) throw ConsistencyError("reps-route polynomial is not monic");

  out.eigenvalues = cluster_sorted(std::move(roots), eigenvalue_cluster_tolerance(s.size()));
  int total = 0;
  for (const auto& c : out.eigenvalues) total += c.multiplicity;
  if (total != 2 * g.order())
    throw ConsistencyError("reps-route eigenvalue multiplicities do not sum to 2|G|");
  return out;
}

SpectrumSummary charpoly_exact(const BiCayleyGraph& graph, int max_vertices, int jobs) {
  const int dim = graph.vertex_count();
  if (dim > max_vertices)
    throw ResourceLimitError("charpoly_exact: " + std::to_string(dim) +
                             " vertices exceed the guard bound of " +
                             std::to_string(max_vertices));

  const auto adjacency = graph.full_adjacency();
  SpectrumSummary out;
  out.source = SpectrumSummary::Source::ExactOracle;
  out.charpoly = detail::adjacency_charpoly(adjacency, jobs);

  // Presentation-layer eigenvalues from a standard symmetric solver,
  // cross-checked against the exact polynomial through the first two
  // power sums.
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = adjacency[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<std::pair<double, int>> vals;
  vals.reserve(dim);
  for (int i = 0; i < dim; ++i) vals.push_back({solver.eigenvalues()[i], 1});
  out.eigenvalues = cluster_sorted(std::move(vals), eigenvalue_cluster_tolerance(graph.valency()));

  int total = 0;
  double sum = 0, sum_sq = 0;
  for (const auto& c : out.eigenvalues) {
    total += c.multiplicity;
    sum += c.value * c.multiplicity;
    sum_sq += c.value * c.value * c.multiplicity;
  }
  // For a monic polynomial, sum(lambda) = -c_{d-1} and
  // sum(lambda^2) = c_{d-1}^2 - 2 c_{d-2}.
  const double c_top1 = out.charpoly[dim - 1].get_d();
  const double c_top2 = out.charpoly[dim - 2].get_d();
  const double scale = 1.0 + std::abs(sum_sq);
  if (total != dim || std::abs(sum + c_top1) > 1e-6 * scale ||
      std::abs(sum_sq - (c_top1 * c_top1 - 2 * c_top2)) > 1e-6 * scale)
    throw ConsistencyError("float eigenvalues disagree with the exact polynomial moments");
  return out;
}

}  // namespace qbci
