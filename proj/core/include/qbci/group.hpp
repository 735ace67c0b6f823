#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qbci {

/// Element of the generalized quaternion group
///   Q_4n = < a, b | a^(2n) = 1, b^2 = a^n, a^b = a^(-1) >
/// written b^eps * a^k with eps in {0,1} and k reduced mod 2n.
struct Element {
  std::uint8_t eps = 0;
  int k = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kIdentity{0, 0};

/// The group Q_4n itself: owns the parameter n (order 4n, exponents mod 2n)
/// and element-level arithmetic. All operations are pure; Group is freely
/// copyable and shareable across threads.
class Group {
 public:
  explicit Group(int n);

  int n() const { return n_; }
  int order() const { return 4 * n_; }
  int exponent_modulus() const { return 2 * n_; }  // |<a>| = 2n

  bool valid(Element x) const;

  /// b^e1 a^k1 * b^e2 a^k2 = b^(e1+e2) a^((-1)^e2 k1 + k2 + [e1=e2=1] n)
  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const;
  Element power(Element x, long long e) const;

  /// Smallest t >= 1 with x^t = 1. Closed form: 2n/gcd(k,2n) on <a>,
  /// 4 on the coset b<a>.
  int element_order(Element x) const;

  /// All 4n elements in canonical order: 1, a, a^2, ..., a^(2n-1), b, ba, ...
  std::vector<Element> elements() const;

  /// Canonical dense index of an element, matching elements() order.
  int index_of(Element x) const;
  Element element_at(int index) const;

  Element a(int k = 1) const;  // a^k
  Element b(int k = 0) const;  // b * a^k

  /// Element grammar used by the CLI and all reports:
  /// "1", "a", "a^k", "b", "b*a", "b*a^k". Exponents reduce mod 2n on parse.
  std::string format(Element x) const;
  Element parse(const std::string& token) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  int n_;
  int mod(long long k) const;
};

}  // namespace qbci
