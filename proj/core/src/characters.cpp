#include "covariant/characters.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

#include "covariant/errors.hpp"

namespace covariant {

std::complex<double> root_of_unity(std::uint64_t k, std::uint32_t m) {
  k %= m;
  if ((4 * k) % m == 0) {
    switch ((4 * k) / m) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

Character::Character(Subgroup domain, std::uint32_t modulus, std::vector<std::uint32_t> exponents)
    : domain_(std::move(domain)), modulus_(modulus), exponents_(std::move(exponents)) {
  values_.reserve(exponents_.size());
  for (auto k : exponents_) values_.push_back(root_of_unity(k, modulus_));
}

Character Character::make(Subgroup domain, std::uint32_t modulus, std::vector<std::uint32_t> exponents) {
  if (modulus == 0) throw InvalidCharacter("character modulus must be positive");
  if (modulus > std::max<std::size_t>(1, domain.size())) {
    throw InvalidCharacter("character modulus " + std::to_string(modulus) + " exceeds |N| = " +
                           std::to_string(domain.size()));
  }
  if (exponents.size() != domain.size()) {
    throw InvalidCharacter("character has " + std::to_string(exponents.size()) +
                           " exponents for a domain of size " + std::to_string(domain.size()));
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] >= modulus) {
      throw InvalidCharacter("exponent at element " + std::to_string(domain.members()[i]) +
                             " is not reduced mod " + std::to_string(modulus));
    }
  }
  Character xi(std::move(domain), modulus, std::move(exponents));
  const FiniteGroup& g = xi.domain_.group();
  if (xi.exponent(g.identity()) != 0) throw InvalidCharacter("character is not 1 at the identity");
  const auto members = xi.domain_.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto lhs = xi.exponent(g.product(members[i], members[j]));
      if (lhs != (xi.exponents_[i] + xi.exponents_[j]) % modulus) {
        throw InvalidCharacter("character is not a homomorphism at (" + std::to_string(members[i]) +
                               "," + std::to_string(members[j]) + ")");
      }
    }
  }
  return xi;
}

Character Character::trivial(Subgroup domain) {
  const std::size_t n = domain.size();
  return Character(std::move(domain), 1, std::vector<std::uint32_t>(n, 0));
}

Character Character::make_unchecked(Subgroup domain, std::uint32_t modulus,
                                    std::vector<std::uint32_t> exponents) {
  return Character(std::move(domain), modulus, std::move(exponents));
}

bool Character::is_trivial() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto k) { return k == 0; });
}

bool Character::is_homomorphism() const noexcept {
  const FiniteGroup& g = domain_.group();
  const auto members = domain_.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const auto p = domain_.position(g.product(members[i], members[j]));
      if (exponents_[p] != (exponents_[i] + exponents_[j]) % modulus_) return false;
    }
  }
  return true;
}

std::string Character::key() const {
  std::string out = std::to_string(modulus_) + ":";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CyclicFactor> cyclic_decomposition(const FiniteGroup& abelian) {
  if (!abelian.is_abelian()) throw std::invalid_argument("cyclic_decomposition requires an abelian group");
  if (abelian.order() == 1) return {};

  Element best = abelian.identity();
  std::size_t best_order = 1;
  for (Element x = 0; x < abelian.order(); ++x) {
    const std::size_t k = abelian.element_order(x);
    if (k > best_order) {
      best = x;
      best_order = k;
    }
  }

  auto a = std::make_shared<const FiniteGroup>(abelian);
  const Element gens[] = {best};
  const CosetDecomposition d = coset_decomposition(Subgroup::generated_by(a, gens));
  std::vector<CyclicFactor> factors{{best, best_order}};
  for (const CyclicFactor& f : cyclic_decomposition(*d.quotient)) {
    // A coset of maximal-order quotient element always holds a lift of the
    // same order because <best> has maximal order.
    bool lifted = false;
    for (Element x = 0; x < abelian.order() && !lifted; ++x) {
      if (d.coset_of[x] == f.generator && abelian.element_order(x) == f.order) {
        factors.push_back({x, f.order});
        lifted = true;
      }
    }
    if (!lifted) throw std::logic_error("cyclic_decomposition: no lift of matching order");
  }
  return factors;
}

std::vector<Character> enumerate_characters(const Subgroup& n) {
  if (n.size() > kCharacterEnumerationLimit) {
    throw TooLarge("character enumeration is limited to |N| <= " + std::to_string(kCharacterEnumerationLimit) +
                   "; got " + std::to_string(n.size()));
  }
  auto ng = std::make_shared<const FiniteGroup>(n.as_group());
  const CosetDecomposition ab = coset_decomposition(commutator_subgroup(Subgroup::whole(ng)));
  const FiniteGroup& a = *ab.quotient;
  const auto factors = cyclic_decomposition(a);

  std::uint32_t modulus = 1;
  for (const auto& f : factors) modulus = std::lcm(modulus, static_cast<std::uint32_t>(f.order));

  // Coordinates of every element of A in the cyclic basis.
  const std::size_t r = factors.size();
  std::vector<std::vector<std::size_t>> coords(a.order(), std::vector<std::size_t>(r, 0));
  {
    std::vector<std::size_t> e(r, 0);
    for (std::size_t count = 0; count < a.order(); ++count) {
      Element x = a.identity();
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t p = 0; p < e[i]; ++p) x = a.product(x, factors[i].generator);
      }
      coords[x] = e;
      for (std::size_t i = r; i-- > 0;) {
        if (++e[i] < factors[i].order) break;
        e[i] = 0;
      }
    }
  }

  std::vector<Character> result;
  std::vector<std::size_t> k(r, 0);
  for (std::size_t count = 0; count < a.order(); ++count) {
    std::vector<std::uint32_t> exps(n.size());
    for (std::size_t pos = 0; pos < n.size(); ++pos) {
      const auto& e = coords[ab.coset_of[pos]];
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < r; ++i) total += k[i] * e[i] * (modulus / factors[i].order);
      exps[pos] = static_cast<std::uint32_t>(total % modulus);
    }
    result.push_back(Character::make(n, modulus, std::move(exps)));
    for (std::size_t i = r; i-- > 0;) {
      if (++k[i] < factors[i].order) break;
      k[i] = 0;
    }
  }
  return result;
}

Character conjugate_character(const Character& xi, Element x) {
  const Subgroup& n = xi.domain();
  if (!n.is_normal()) throw NotNormal("conjugating a character requires a normal domain");
  const FiniteGroup& g = n.group();
  g.require_element(x, "conjugator");
  std::vector<std::uint32_t> exps;
  exps.reserve(n.size());
  for (Element s : n.members()) exps.push_back(xi.exponent(g.conjugate(x, s)));
  return Character::make(n, xi.modulus(), std::move(exps));
}

}  // namespace covariant
