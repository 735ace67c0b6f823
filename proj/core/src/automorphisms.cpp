#include "qbci/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qbci/errors.hpp"

namespace qbci {

namespace {

bool is_bijection(const Group& g, const std::vector<Element>& image) {
  std::vector<char> seen(g.order(), 0);
  for (Element y : image) {
    int idx = g.index_of(y);
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  return true;
}

// Builds the table of the map a -> ia, b -> ib by expressing every element
// as b^eps a^k; returns nothing if the images violate the presentation.
std::optional<AutTable> table_from_generator_images(const Group& g, Element ia, Element ib) {
  const int n = g.n();
  // Relations: ia^(2n) = 1 (automatic), ib^2 = ia^n, ib^-1 ia ib = ia^-1.
  if (g.multiply(ib, ib) != g.power(ia, n)) return std::nullopt;
  if (g.multiply(g.multiply(g.inverse(ib), ia), ib) != g.inverse(ia)) return std::nullopt;

  AutTable t;
  t.image.resize(g.order());
  for (int k = 0; k < 2 * n; ++k) {
    Element ak = g.power(ia, k);
    t.image[g.index_of(g.a(k))] = ak;
    t.image[g.index_of(g.b(k))] = g.multiply(ib, ak);
  }
  if (!is_bijection(g, t.image)) return std::nullopt;
  return t;
}

std::vector<Automorphism> enumerate_q8_automorphisms(const Group& g) {
  std::vector<Automorphism> out;
  for (Element ia : g.elements()) {
    if (g.element_order(ia) != 4) continue;
    for (Element ib : g.elements()) {
      if (g.element_order(ib) != 4) continue;
      auto t = table_from_generator_images(g, ia, ib);
      if (t) out.emplace_back(std::move(*t));
    }
  }
  return out;  // ordered by (index of ia, index of ib)
}

void check_sigma(const Group& g, const SigmaRS& s) {
  const int m = g.exponent_modulus();
  if (s.r < 0 || s.r >= m || s.s < 0 || s.s >= m)
    throw std::invalid_argument("sigma_{r,s}: r, s must be reduced mod 2n");
  if (std::gcd(s.r, m) != 1)
    throw std::invalid_argument("sigma_{r,s}: gcd(r, 2n) = 1 required, got r = " +
                                std::to_string(s.r));
}

void check_table(const Group& g, const AutTable& t) {
  if (static_cast<int>(t.image.size()) != g.order())
    throw std::invalid_argument("automorphism table has wrong size for this group");
}

int mod_inverse(int r, int m) {
  // Extended Euclid; r is coprime to m by construction.
  long long t = 0, new_t = 1, q = m, new_q = r;
  while (new_q != 0) {
    long long quot = q / new_q;
    long long tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = q - quot * new_q;
    q = new_q;
    new_q = tmp;
  }
  long long inv = t % m;
  return static_cast<int>(inv < 0 ? inv + m : inv);
}

AutTable to_table(const Group& g, const Automorphism& alpha) {
  AutTable t;
  t.image.resize(g.order());
  for (Element x : g.elements()) t.image[g.index_of(x)] = apply_automorphism(g, alpha, x);
  return t;
}

}  // namespace

std::string Automorphism::describe(const Group& g) const {
  if (is_sigma()) {
    const auto& s = sigma();
    return "sigma_{" + std::to_string(s.r) + "," + std::to_string(s.s) + "}";
  }
  std::string out = "table[";
  const auto& t = table();
  for (size_t i = 0; i < t.image.size(); ++i) {
    if (i) out += ",";
    out += g.format(t.image[i]);
  }
  return out + "]";
}

Element apply_automorphism(const Group& g, const Automorphism& alpha, Element x) {
  if (!g.valid(x)) throw std::invalid_argument("apply_automorphism: element not in group");
  if (alpha.is_sigma()) {
    const auto& s = alpha.sigma();
    check_sigma(g, s);
    const int m = g.exponent_modulus();
    int rk = static_cast<int>((static_cast<long long>(s.r) * x.k) % m);
    if (x.eps == 0) return Element{0, rk};
    return Element{1, (rk + s.s) % m};
  }
  const auto& t = alpha.table();
  check_table(g, t);
  return t.image[g.index_of(x)];
}

Automorphism compose(const Group& g, const Automorphism& alpha, const Automorphism& beta) {
  if (alpha.is_sigma() && beta.is_sigma()) {
    check_sigma(g, alpha.sigma());
    check_sigma(g, beta.sigma());
    const int m = g.exponent_modulus();
    const auto& s1 = alpha.sigma();
    const auto& s2 = beta.sigma();
    // x^(alpha beta): a -> a^(r1 r2), b a^i -> b a^(r2(r1 i + s1) + s2)
    int r = static_cast<int>((static_cast<long long>(s1.r) * s2.r) % m);
    int s = static_cast<int>((static_cast<long long>(s2.r) * s1.s + s2.s) % m);
    return Automorphism(SigmaRS{r, s});
  }
  AutTable t;
  t.image.resize(g.order());
  for (Element x : g.elements())
    t.image[g.index_of(x)] = apply_automorphism(g, beta, apply_automorphism(g, alpha, x));
  return Automorphism(std::move(t));
}

Automorphism invert(const Group& g, const Automorphism& alpha) {
  if (alpha.is_sigma()) {
    check_sigma(g, alpha.sigma());
    const int m = g.exponent_modulus();
    const auto& s = alpha.sigma();
    int rinv = mod_inverse(s.r, m);
    int sinv = static_cast<int>((m - (static_cast<long long>(rinv) * s.s) % m) % m);
    return Automorphism(SigmaRS{rinv, sinv});
  }
  const auto& t = alpha.table();
  check_table(g, t);
  AutTable inv;
  inv.image.resize(g.order());
  for (Element x : g.elements()) inv.image[g.index_of(t.image[g.index_of(x)])] = x;
  return Automorphism(std::move(inv));
}

std::vector<Automorphism> enumerate_automorphisms(const Group& g) {
  if (g.n() == 2) return enumerate_q8_automorphisms(g);

  const int m = g.exponent_modulus();
  std::vector<Automorphism> out;
  for (int r = 1; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    for (int s = 0; s < m; ++s) {
      Automorphism alpha{SigmaRS{r, s}};
      // Verify via the presentation: the generator images must satisfy the
      // defining relations, which makes the map a homomorphism.
      Element ia = apply_automorphism(g, alpha, g.a());
      Element ib = apply_automorphism(g, alpha, g.b());
      if (g.multiply(ib, ib) != g.power(ia, g.n()) ||
          g.multiply(g.multiply(g.inverse(ib), ia), ib) != g.inverse(ia))
        throw ConsistencyError("sigma map violates the presentation relations");
      out.push_back(alpha);
    }
  }
  return out;
}

FusionVerdict are_fused(const Group& g, Element x, Element y) {
  return are_fused(g, x, y, enumerate_automorphisms(g));
}

FusionVerdict are_fused(const Group& g, Element x, Element y,
                        const std::vector<Automorphism>& auts) {
  for (const auto& alpha : auts)
    if (apply_automorphism(g, alpha, x) == y) return {Fusion::Fused, alpha};
  const Element yinv = g.inverse(y);
  for (const auto& alpha : auts)
    if (apply_automorphism(g, alpha, x) == yinv) return {Fusion::InverseFused, alpha};
  return {Fusion::Neither, std::nullopt};
}

namespace {

// Minimal generating sequence of h, built greedily; subgroups of Q_4n need
// at most two generators.
std::vector<Element> generating_sequence(const Subgroup& h) {
  std::vector<Element> gens;
  std::set<Element> have{kIdentity};
  for (Element x : h.carrier) {
    if (have.count(x)) continue;
    gens.push_back(x);
    auto closed = generated_subgroup(h.ambient, gens);
    have.insert(closed.carrier.begin(), closed.carrier.end());
    if (static_cast<int>(have.size()) == h.order()) break;
  }
  return gens;
}

// Extends gens -> images to a map on all of h by product closure; returns the
// image vector over h.carrier or nothing on conflict.
std::optional<std::vector<Element>> extend_generator_map(const Subgroup& h, const Subgroup& k,
                                                         const std::vector<Element>& gens,
                                                         const std::vector<Element>& images) {
  const Group& g = h.ambient;
  std::vector<Element> img(h.carrier.size());
  std::vector<char> known(h.carrier.size(), 0);
  auto set_image = [&](Element x, Element y) -> bool {
    int idx = h.carrier_index(x);
    if (idx < 0 || !k.contains(y)) return false;
    if (known[idx]) return img[idx] == y;
    known[idx] = 1;
    img[idx] = y;
    return true;
  };
  if (!set_image(kIdentity, kIdentity)) return std::nullopt;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!set_image(gens[i], images[i])) return std::nullopt;

  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < h.carrier.size(); ++i) {
      if (!known[i]) continue;
      for (size_t j = 0; j < h.carrier.size(); ++j) {
        if (!known[j]) continue;
        Element xy = g.multiply(h.carrier[i], h.carrier[j]);
        int idx = h.carrier_index(xy);
        Element imgxy = g.multiply(img[i], img[j]);
        if (!known[idx]) {
          if (!set_image(xy, imgxy)) return std::nullopt;
          grew = true;
        } else if (img[idx] != imgxy) {
          return std::nullopt;
        }
      }
    }
  }
  for (char c : known)
    if (!c) return std::nullopt;
  std::set<Element> image_set(img.begin(), img.end());
  if (static_cast<int>(image_set.size()) != k.order()) return std::nullopt;
  return img;
}

}  // namespace

std::vector<std::vector<Element>> subgroup_isomorphisms(const Subgroup& h, const Subgroup& k) {
  std::vector<std::vector<Element>> out;
  if (h.order() != k.order()) return out;
  const Group& g = h.ambient;
  const auto gens = generating_sequence(h);
  if (gens.empty()) {  // trivial subgroup
    out.push_back({kIdentity});
    return out;
  }

  std::vector<std::vector<Element>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    const int ord = g.element_order(gens[i]);
    for (Element y : k.carrier)
      if (g.element_order(y) == ord) candidates[i].push_back(y);
  }

  std::vector<Element> images(gens.size());
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (depth == gens.size()) {
      auto img = extend_generator_map(h, k, gens, images);
      if (img) out.push_back(std::move(*img));
      return;
    }
    for (Element y : candidates[depth]) {
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HomogeneityResult is_homogeneous(const Group& g, int guard_n) {
  if (g.n() > guard_n)
    throw ResourceLimitError("homogeneity check: n = " + std::to_string(g.n()) +
                             " exceeds guard bound " + std::to_string(guard_n));

  const auto subgroups = all_subgroups(g);
  const auto auts = enumerate_automorphisms(g);
  std::vector<AutTable> tables;
  tables.reserve(auts.size());
  for (const auto& alpha : auts) tables.push_back(to_table(g, alpha));

  for (const auto& h : subgroups) {
    for (const auto& k : subgroups) {
      if (h.order() != k.order()) continue;
      // Restrictions of full automorphisms mapping h onto k.
      std::set<std::vector<Element>> restrictions;
      for (const auto& t : tables) {
        std::vector<Element> restricted;
        restricted.reserve(h.carrier.size());
        bool onto_k = true;
        for (Element x : h.carrier) {
          Element y = t.image[g.index_of(x)];
          if (!k.contains(y)) {
            onto_k = false;
            break;
          }
          restricted.push_back(y);
        }
        if (onto_k) restrictions.insert(std::move(restricted));
      }
      for (const auto& iso : subgroup_isomorphisms(h, k)) {
        if (!restrictions.count(iso))
          return {false, HomogeneityCounterexample{h, k, iso}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace qbci
