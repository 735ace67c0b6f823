#pragma once

// Internal: representation table entries and factor polynomials, generic
// over the real scalar so the public API can run in double while the
// full-product route runs in extended precision.

#include <quadmath.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qbci/bicayley.hpp"
#include "qbci/group.hpp"
#include "qbci/irreps.hpp"

namespace qbci::detail {

template <class R>
struct RealOps;

template <>
struct RealOps<double> {
  // cos/sin of pi * num / den
  static double cospi(long long num, long long den) {
    return std::cos(M_PI * static_cast<double>(num) / static_cast<double>(den));
  }
  static double sinpi(long long num, long long den) {
    return std::sin(M_PI * static_cast<double>(num) / static_cast<double>(den));
  }
  static double sqrt(double x) { return std::sqrt(x); }
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct RealOps<__float128> {
  static __float128 pi() {
    static const __float128 value = 2 * asinq(1);
    return value;
  }
  static __float128 cospi(long long num, long long den) {
    return cosq(pi() * num / den);
  }
  static __float128 sinpi(long long num, long long den) {
    return sinq(pi() * num / den);
  }
  static __float128 sqrt(__float128 x) { return sqrtq(x); }
  static __float128 abs(__float128 x) { return fabsq(x); }
};

/// Minimal complex type: only +, -, *, conj are ever needed here, which
/// keeps __float128 instantiations free of libstdc++ specializations.
template <class R>
struct Cx {
  R re{};
  R im{};
  friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(Cx a, Cx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Cx conj() const { return {re, -im}; }
};

template <class R>
struct Mat {
  int dim = 1;
  std::array<Cx<R>, 4> e{};

  static Mat scalar(Cx<R> v) { return Mat{1, {v}}; }
  static Mat diag2(Cx<R> a, Cx<R> b) { return Mat{2, {a, Cx<R>{}, Cx<R>{}, b}}; }
  static Mat anti2(Cx<R> upper, Cx<R> lower) {
    return Mat{2, {Cx<R>{}, upper, lower, Cx<R>{}}};
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat out{a.dim, {}};
    for (int i = 0; i < 4; ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.dim == 1) return Mat{1, {a.e[0] * b.e[0]}};
    Mat out{2, {}};
    out.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
    out.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
    out.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
    out.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
    return out;
  }
  Cx<R> trace() const { return dim == 1 ? e[0] : e[0] + e[3]; }
  Cx<R> det() const { return dim == 1 ? e[0] : e[0] * e[3] - e[1] * e[2]; }
};

void validate_descriptor(const Group& g, const IrrepDescriptor& d);

/// omega^m with omega = e^(i pi / n), exponent reduced mod 2n.
template <class R>
Cx<R> unity_root(const Group& g, long long m) {
  const int mod = g.exponent_modulus();
  long long r = m % mod;
  if (r < 0) r += mod;
  return {RealOps<R>::cospi(r, g.n()), RealOps<R>::sinpi(r, g.n())};
}

template <class R>
Mat<R> irrep_value_t(const Group& g, const IrrepDescriptor& d, Element x) {
  validate_descriptor(g, d);
  if (!g.valid(x)) throw std::invalid_argument("irrep_value: element not in group");
  using K = IrrepDescriptor::Kind;
  const bool odd_n = g.n() % 2 == 1;
  const R one = 1;
  const R sign = (x.k % 2 == 0) ? one : -one;
  switch (d.kind) {
    case K::Psi1:
      return Mat<R>::scalar({one, 0});
    case K::Psi2:
      return Mat<R>::scalar({x.eps ? -one : one, 0});
    case K::Psi3:
      if (x.eps == 0) return Mat<R>::scalar({sign, 0});
      return odd_n ? Mat<R>::scalar({0, sign}) : Mat<R>::scalar({sign, 0});
    case K::Psi4:
      if (x.eps == 0) return Mat<R>::scalar({sign, 0});
      return odd_n ? Mat<R>::scalar({0, -sign}) : Mat<R>::scalar({-sign, 0});
    case K::Phi: {
      const long long kj = static_cast<long long>(x.k) * d.index;
      Cx<R> w = unity_root<R>(g, kj);
      Cx<R> winv = unity_root<R>(g, -kj);
      if (x.eps == 0) return Mat<R>::diag2(w, winv);
      Cx<R> minus_w{-w.re, -w.im};
      return Mat<R>::anti2(winv, minus_w);
    }
    case K::Eta: {
      const long long kh = 2LL * x.k * d.index;
      Cx<R> w = unity_root<R>(g, kh);
      Cx<R> winv = unity_root<R>(g, -kh);
      if (x.eps == 0) return Mat<R>::diag2(w, winv);
      return Mat<R>::anti2(winv, w);
    }
  }
  throw std::logic_error("unreachable irrep kind");
}

template <class R>
Mat<R> rep_sum_t(const Group& g, const IrrepDescriptor& d, const std::vector<Element>& elems) {
  Mat<R> acc{d.degree(), {}};
  for (Element x : elems) acc = acc + irrep_value_t<R>(g, d, x);
  return acc;
}

/// Coefficients of det(lambda^2 I - rho(S) rho(S^-1)), constant first.
template <class R>
std::vector<Cx<R>> factor_poly_t(const Group& g, const IrrepDescriptor& d,
                                 const std::vector<Element>& elems) {
  std::vector<Element> inv;
  inv.reserve(elems.size());
  for (Element x : elems) inv.push_back(g.inverse(x));
  const Mat<R> m = rep_sum_t<R>(g, d, elems) * rep_sum_t<R>(g, d, inv);
  const Cx<R> one{1, 0};
  if (d.degree() == 1) {
    // lambda^2 - m
    return {Cx<R>{} - m.e[0], Cx<R>{}, one};
  }
  // lambda^4 - tr(m) lambda^2 + det(m)
  return {m.det(), Cx<R>{}, Cx<R>{} - m.trace(), Cx<R>{}, one};
}

template <class R>
std::vector<Cx<R>> poly_mul(const std::vector<Cx<R>>& a, const std::vector<Cx<R>>& b) {
  std::vector<Cx<R>> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

}  // namespace qbci::detail
