#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "qbci/errors.hpp"
#include "qbci/parallel.hpp"
#include "qbci/spectrum.hpp"

// Exact integer linear algebra for the spectrum oracle: fraction-free
// (Bareiss) determinants and Newton-form rational interpolation.

namespace qbci {

mpz_class bareiss_determinant(std::vector<mpz_class> a, int n) {
  if (n == 0) return 1;
  if (static_cast<int>(a.size()) != n * n)
    throw std::invalid_argument("bareiss_determinant: matrix size mismatch");
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * n + j]; };

  mpz_class prev = 1;
  mpz_class t1, t2;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // a[i][j] = (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev, exactly.
        mpz_mul(t1.get_mpz_t(), at(k, k).get_mpz_t(), at(i, j).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  mpz_class det = at(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

namespace detail {

/// Monic-expected polynomial through (points[i], values[i]), degree
/// points.size()-1, constant term first. Throws ConsistencyError if any
/// interpolated coefficient is non-integral.
std::vector<mpz_class> interpolate_integer_polynomial(const std::vector<long>& points,
                                                      const std::vector<mpz_class>& values) {
  const size_t count = points.size();
  if (count == 0 || values.size() != count)
    throw std::invalid_argument("interpolation needs matching nonempty point/value lists");

  // Newton divided differences.
  std::vector<mpq_class> dd(count);
  for (size_t i = 0; i < count; ++i) dd[i] = mpq_class(values[i]);
  for (size_t level = 1; level < count; ++level) {
    for (size_t i = count - 1; i >= level; --i) {
      mpq_class num = dd[i] - dd[i - 1];
      dd[i] = num / mpq_class(points[i] - points[i - level]);
      if (i == level) break;
    }
  }

  // Expand the Newton form into monomial coefficients.
  std::vector<mpq_class> coeff(count, mpq_class(0));
  std::vector<mpq_class> basis{mpq_class(1)};  // prod_{j<level} (x - points[j])
  for (size_t level = 0; level < count; ++level) {
    for (size_t j = 0; j < basis.size(); ++j) coeff[j] += dd[level] * basis[j];
    if (level + 1 < count) {
      basis.insert(basis.begin(), mpq_class(0));
      for (size_t j = 0; j + 1 < basis.size(); ++j)
        basis[j] -= mpq_class(points[level]) * basis[j + 1];
    }
  }

  std::vector<mpz_class> out(count);
  for (size_t i = 0; i < count; ++i) {
    coeff[i].canonicalize();
    if (coeff[i].get_den() != 1)
      throw ConsistencyError("interpolated characteristic polynomial is not integral");
    out[i] = coeff[i].get_num();
  }
  return out;
}

std::vector<mpz_class> adjacency_charpoly(const std::vector<std::vector<std::uint8_t>>& adjacency,
                                          int jobs) {
  const int dim = static_cast<int>(adjacency.size());
  const int point_count = dim + 1;
  std::vector<long> points(point_count);
  // 0, 1, -1, 2, -2, ... keeps entries small on both sides of zero.
  for (int i = 0; i < point_count; ++i) points[i] = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);

  std::vector<mpz_class> values(point_count);
  parallel_for(point_count, jobs, [&](std::size_t idx) {
    std::vector<mpz_class> m(static_cast<size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        m[static_cast<size_t>(r) * dim + c] =
            (r == c ? points[idx] : 0) - static_cast<int>(adjacency[r][c]);
    values[idx] = bareiss_determinant(std::move(m), dim);
  });

  auto coeffs = interpolate_integer_polynomial(points, values);
  if (coeffs.back() != 1)
    throw ConsistencyError("characteristic polynomial is not monic after interpolation");
  return coeffs;
}

}  // namespace detail

}  // namespace qbci
