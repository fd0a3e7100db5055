#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "covariant/group.hpp"

namespace covariant {

/// exp(2*pi*i*k/m), exact at multiples of a quarter turn.
std::complex<double> root_of_unity(std::uint64_t k, std::uint32_t m);

/// A character xi: N -> T of a subgroup N, stored exactly: xi(s) =
/// zeta_m^exponent(s) with zeta_m = exp(2*pi*i/m).
class Character {
 public:
  /// `exponents[i]` is the exponent at domain.members()[i]. Throws
  /// InvalidCharacter unless the map is a homomorphism into Z/m with
  /// 1 <= m <= |N|.
  static Character make(Subgroup domain, std::uint32_t modulus, std::vector<std::uint32_t> exponents);
  static Character trivial(Subgroup domain);

  /// Skips every check. Only for mutation tests of the verifier, which must
  /// be able to feed a deliberately broken map through the checks.
  static Character make_unchecked(Subgroup domain, std::uint32_t modulus,
                                  std::vector<std::uint32_t> exponents);

  const Subgroup& domain() const noexcept { return domain_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }

  /// Throws NotInDomain.
  std::uint32_t exponent(Element s) const { return exponents_[domain_.position(s)]; }
  std::complex<double> evaluate(Element s) const { return values_[domain_.position(s)]; }
  std::complex<double> operator()(Element s) const { return evaluate(s); }
  /// Unchecked lookup by position in domain().members().
  std::complex<double> value_at(std::size_t position) const noexcept { return values_[position]; }

  bool is_trivial() const noexcept;
  /// Residue-level homomorphism test.
  bool is_homomorphism() const noexcept;

  /// Compact exponent listing "m:k0,k1,..." in member order.
  std::string key() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_ && a.domain_ == b.domain_;
  }

 private:
  Character(Subgroup domain, std::uint32_t modulus, std::vector<std::uint32_t> exponents);

  Subgroup domain_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exponents_;
  std::vector<std::complex<double>> values_;
};

/// A cyclic factor of an abelian group: `generator` has order `order`.
struct CyclicFactor {
  Element generator;
  std::size_t order;
};

/// Decomposes an abelian group into a direct product of cyclic factors by
/// repeatedly splitting off an element of maximal order. Factors come out
/// with non-increasing orders.
std::vector<CyclicFactor> cyclic_decomposition(const FiniteGroup& abelian);

inline constexpr std::size_t kCharacterEnumerationLimit = 512;

/// All characters of N, trivial first, via N/[N,N]. All share the modulus
/// m = exponent of the abelianization. Throws TooLarge above |N| = 512.
std::vector<Character> enumerate_characters(const Subgroup& n);

/// s -> xi(x^-1 s x). Throws NotNormal if the domain is not normal.
Character conjugate_character(const Character& xi, Element x);

}  // namespace covariant
