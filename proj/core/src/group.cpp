#include "qbci/group.hpp"

#include <numeric>
#include <stdexcept>

namespace qbci {

Group::Group(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Q_4n requires n >= 2, got n = " + std::to_string(n));
}

int Group::mod(long long k) const {
  const int m = 2 * n_;
  int r = static_cast<int>(k % m);
  return r < 0 ? r + m : r;
}

bool Group::valid(Element x) const {
  return (x.eps == 0 || x.eps == 1) && x.k >= 0 && x.k < 2 * n_;
}

Element Group::multiply(Element x, Element y) const {
  const long long k1 = x.k, k2 = y.k;
  long long k = (y.eps ? -k1 : k1) + k2;
  if (x.eps && y.eps) k += n_;
  return Element{static_cast<std::uint8_t>((x.eps + y.eps) & 1), mod(k)};
}

Element Group::inverse(Element x) const {
  if (x.eps == 0) return Element{0, mod(-static_cast<long long>(x.k))};
  // (b a^k)^-1 = b a^(k-n)
  return Element{1, mod(static_cast<long long>(x.k) - n_)};
}

Element Group::power(Element x, long long e) const {
  if (e < 0) return power(inverse(x), -e);
  Element acc = kIdentity;
  Element base = x;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

int Group::element_order(Element x) const {
  if (x.eps == 0) return 2 * n_ / std::gcd(x.k, 2 * n_);
  return 4;
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  out.reserve(4 * n_);
  for (int eps = 0; eps <= 1; ++eps)
    for (int k = 0; k < 2 * n_; ++k) out.push_back(Element{static_cast<std::uint8_t>(eps), k});
  return out;
}

int Group::index_of(Element x) const { return x.eps * 2 * n_ + x.k; }

Element Group::element_at(int index) const {
  if (index < 0 || index >= 4 * n_) throw std::out_of_range("element index out of range");
  return Element{static_cast<std::uint8_t>(index / (2 * n_)), index % (2 * n_)};
}

Element Group::a(int k) const { return Element{0, mod(k)}; }
Element Group::b(int k) const { return Element{1, mod(k)}; }

std::string Group::format(Element x) const {
  if (!valid(x)) throw std::invalid_argument("element not reduced for this group");
  if (x.eps == 0) {
    if (x.k == 0) return "1";
    if (x.k == 1) return "a";
    return "a^" + std::to_string(x.k);
  }
  if (x.k == 0) return "b";
  if (x.k == 1) return "b*a";
  return "b*a^" + std::to_string(x.k);
}

namespace {

// Strips every space character; the grammar is whitespace-insensitive.
std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

long long parse_exponent(const std::string& s, size_t pos) {
  if (pos >= s.size()) throw std::invalid_argument("missing exponent after '^'");
  size_t used = 0;
  long long v = std::stoll(s.substr(pos), &used);
  if (pos + used != s.size()) throw std::invalid_argument("trailing characters in exponent");
  return v;
}

}  // namespace

Element Group::parse(const std::string& token) const {
  const std::string s = strip_spaces(token);
  if (s.empty()) throw std::invalid_argument("empty element token");
  if (s == "1") return kIdentity;
  if (s == "a") return a(1);
  if (s == "b") return b(0);
  if (s.rfind("a^", 0) == 0) return a(static_cast<int>(mod(parse_exponent(s, 2))));
  if (s == "b*a") return b(1);
  if (s.rfind("b*a^", 0) == 0) return b(static_cast<int>(mod(parse_exponent(s, 4))));
  throw std::invalid_argument("unrecognized element token '" + token + "'");
}

}  // namespace qbci
