#include "qbci/irreps.hpp"

#include <stdexcept>

#include "rep_tables.hpp"

namespace qbci {

namespace {

int eta_count(const Group& g) {
  // (n-1)/2 for odd n, (n-2)/2 for even n, exactly as the tables state.
  if (g.n() % 2 == 1) return (g.n() - 1) / 2;
  return (g.n() - 2) / 2;
}

std::complex<double> to_std(detail::Cx<double> v) { return {v.re, v.im}; }

RepMatrix to_public(const detail::Mat<double>& m) {
  RepMatrix out;
  out.dim = m.dim;
  for (int i = 0; i < 4; ++i) out.entry[i] = to_std(m.e[i]);
  return out;
}

}  // namespace

namespace detail {

void validate_descriptor(const Group& g, const IrrepDescriptor& d) {
  using K = IrrepDescriptor::Kind;
  switch (d.kind) {
    case K::Psi1:
    case K::Psi2:
    case K::Psi3:
    case K::Psi4:
      return;
    case K::Phi:
      if (d.index < 1 || d.index > g.n() - 1 || d.index % 2 == 0)
        throw std::invalid_argument("phi_j requires odd j with 1 <= j <= n-1, got j = " +
                                    std::to_string(d.index) + " for n = " +
                                    std::to_string(g.n()));
      return;
    case K::Eta:
      if (d.index < 1 || d.index > eta_count(g))
        throw std::invalid_argument("eta_h index out of range for n = " + std::to_string(g.n()) +
                                    ": h = " + std::to_string(d.index));
      return;
  }
  throw std::invalid_argument("unknown irrep kind");
}

}  // namespace detail

std::string IrrepDescriptor::name() const {
  using K = Kind;
  switch (kind) {
    case K::Psi1: return "psi1";
    case K::Psi2: return "psi2";
    case K::Psi3: return "psi3";
    case K::Psi4: return "psi4";
    case K::Phi: return "phi_" + std::to_string(index);
    case K::Eta: return "eta_" + std::to_string(index);
  }
  return "?";
}

std::vector<IrrepDescriptor> all_irreps(const Group& g) {
  using K = IrrepDescriptor::Kind;
  std::vector<IrrepDescriptor> out{{K::Psi1, 0}, {K::Psi2, 0}, {K::Psi3, 0}, {K::Psi4, 0}};
  for (int j = 1; j <= g.n() - 1; j += 2) out.push_back({K::Phi, j});
  for (int h = 1; h <= eta_count(g); ++h) out.push_back({K::Eta, h});
  return out;
}

std::complex<double> RepMatrix::trace() const {
  return dim == 1 ? entry[0] : entry[0] + entry[3];
}

std::complex<double> RepMatrix::det() const {
  return dim == 1 ? entry[0] : entry[0] * entry[3] - entry[1] * entry[2];
}

RepMatrix irrep_value(const Group& g, const IrrepDescriptor& d, Element x) {
  return to_public(detail::irrep_value_t<double>(g, d, x));
}

RepMatrix rep_sum(const IrrepDescriptor& d, const ConnectionSet& s) {
  return to_public(detail::rep_sum_t<double>(s.group(), d, s.elements()));
}

ComplexPoly factor_charpoly(const IrrepDescriptor& d, const ConnectionSet& s) {
  auto poly = detail::factor_poly_t<double>(s.group(), d, s.elements());
  ComplexPoly out;
  out.reserve(poly.size());
  for (auto c : poly) out.push_back(to_std(c));
  return out;
}

}  // namespace qbci
