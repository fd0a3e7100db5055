#include "covariant/haar.hpp"

#include <cmath>
#include <string>

#include "covariant/errors.hpp"

namespace covariant {
namespace {

// Strictly positive, element-dependent test function.
double probe(Element x) { return 1.0 + static_cast<double>(x); }

}  // namespace

HaarData weil_normalize(double u, double v) {
  if (!(std::isfinite(u) && u > 0.0)) throw NonPositiveWeight("group weight u must be positive; got " + std::to_string(u));
  if (!(std::isfinite(v) && v > 0.0)) throw NonPositiveWeight("subgroup weight v must be positive; got " + std::to_string(v));
  return HaarData(u, v);
}

HaarData probability_on_subgroup(double u, std::size_t subgroup_order) {
  return weil_normalize(u, 1.0 / static_cast<double>(subgroup_order));
}

double modular_function(const FiniteGroup& g, const HaarData& haar, Element x) {
  g.require_element(x);
  double plain = 0.0, translated = 0.0;
  for (Element y = 0; y < g.order(); ++y) {
    plain += haar.u() * probe(y);
    translated += haar.u() * probe(g.product(y, x));
  }
  return plain / translated;
}

double quotient_modular_function(const CosetDecomposition& d, const HaarData& haar, Element coset) {
  const FiniteGroup& q = *d.quotient;
  q.require_element(coset, "coset");
  double plain = 0.0, translated = 0.0;
  for (Element c = 0; c < q.order(); ++c) {
    plain += haar.w() * probe(c);
    translated += haar.w() * probe(q.product(c, coset));
  }
  return plain / translated;
}

double subgroup_modular_function(const Subgroup& n, const HaarData& haar, Element s) {
  const FiniteGroup& g = n.group();
  n.position(s);
  double plain = 0.0, translated = 0.0;
  for (Element t : n.members()) {
    plain += haar.v() * probe(t);
    translated += haar.v() * probe(g.product(t, s));
  }
  return plain / translated;
}

double sigma_n(const Subgroup& n, const HaarData& haar, Element x) {
  if (!n.is_normal()) throw NotNormal("sigma_N requires a normal subgroup");
  const FiniteGroup& g = n.group();
  g.require_element(x);
  // The pushforward mu(E) = lambda_N(x^-1 E x) puts mass v on {s} exactly
  // when x^-1 s x lies in N.
  double pushed = 0.0, plain = 0.0;
  for (Element s : n.members()) {
    const double mass = n.contains(g.conjugate(x, s)) ? haar.v() : 0.0;
    pushed += probe(s) * mass;
    plain += probe(s) * haar.v();
  }
  return pushed / plain;
}

void require_automorphism(const FiniteGroup& g, std::span<const Element> alpha) {
  if (alpha.size() != g.order()) {
    throw NotAnAutomorphism("map has " + std::to_string(alpha.size()) + " entries for a group of order " +
                            std::to_string(g.order()));
  }
  std::vector<bool> hit(g.order(), false);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] >= g.order() || hit[alpha[i]]) {
      throw NotAnAutomorphism("map is not a bijection at element " + std::to_string(i));
    }
    hit[alpha[i]] = true;
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (alpha[g.product(a, b)] != g.product(alpha[a], alpha[b])) {
        throw NotAnAutomorphism("map does not preserve the product of (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
      }
    }
  }
}

double haar_modulus(const FiniteGroup& g, std::span<const Element> alpha, const HaarData& haar) {
  require_automorphism(g, alpha);
  double plain = 0.0, composed = 0.0;
  for (Element y = 0; y < g.order(); ++y) {
    plain += haar.u() * probe(y);
    composed += haar.u() * probe(alpha[y]);
  }
  return plain / composed;
}

std::vector<Element> inner_automorphism(const FiniteGroup& g, Element x) {
  std::vector<Element> alpha(g.order());
  for (Element s = 0; s < g.order(); ++s) alpha[s] = g.conjugate(x, s);
  return alpha;
}

}  // namespace covariant
