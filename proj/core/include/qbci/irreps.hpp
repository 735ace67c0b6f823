#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qbci/bicayley.hpp"
#include "qbci/group.hpp"

namespace qbci {

/// The inequivalent irreducible C-representations of Q_4n:
///   psi1..psi4 of degree 1,
///   phi_j of degree 2 for odd j, 1 <= j <= n-1,
///   eta_h of degree 2 for 1 <= h <= (n-1)/2 (n odd) or (n-2)/2 (n even).
/// The psi3/psi4 values on the coset b<a> depend on the parity of n.
struct IrrepDescriptor {
  enum class Kind { Psi1, Psi2, Psi3, Psi4, Phi, Eta };
  Kind kind = Kind::Psi1;
  int index = 0;  // j for Phi, h for Eta, unused for Psi*

  int degree() const { return (kind == Kind::Phi || kind == Kind::Eta) ? 2 : 1; }
  std::string name() const;
  friend auto operator<=>(const IrrepDescriptor&, const IrrepDescriptor&) = default;
};

/// The complete list for Q_4n, in table order. Sum of squared degrees = 4n.
std::vector<IrrepDescriptor> all_irreps(const Group& g);

/// 1x1 or 2x2 complex matrix, row-major; dim == 1 uses entry[0] only.
struct RepMatrix {
  int dim = 1;
  std::array<std::complex<double>, 4> entry{};

  std::complex<double> trace() const;
  std::complex<double> det() const;
};

/// Table entry for b^eps a^k under the descriptor. Throws when the
/// descriptor is invalid for this group (wrong parity range, bad index).
RepMatrix irrep_value(const Group& g, const IrrepDescriptor& d, Element x);

/// rho(S) = sum over s in S of rho(s).
RepMatrix rep_sum(const IrrepDescriptor& d, const ConnectionSet& s);

/// Complex-coefficient polynomial, constant term first.
using ComplexPoly = std::vector<std::complex<double>>;

/// p_rho(lambda) = det(lambda^2 I - rho(S) rho(S^-1)), degree 2 * deg(rho).
ComplexPoly factor_charpoly(const IrrepDescriptor& d, const ConnectionSet& s);

}  // namespace qbci
