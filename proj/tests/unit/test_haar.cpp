#include <complex>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "covariant/builtin_groups.hpp"
#include "covariant/covariant_space.hpp"
#include "covariant/errors.hpp"
#include "covariant/haar.hpp"

using namespace covariant;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace

TEST(Haar, WeilNormalization) {
  EXPECT_EQ(weil_normalize(1.0, 1.0).w(), 1.0);
  EXPECT_EQ(weil_normalize(2.0, 1.0).w(), 2.0);
  EXPECT_DOUBLE_EQ(probability_on_subgroup(1.0, 3).w(), 3.0);
  EXPECT_DOUBLE_EQ(probability_on_subgroup(2.0, 4).w(), 8.0);
  EXPECT_EQ(HaarData{}.u(), 1.0);
  EXPECT_THROW(weil_normalize(0.0, 1.0), NonPositiveWeight);
  EXPECT_THROW(weil_normalize(1.0, -1.0), NonPositiveWeight);
  EXPECT_THROW(weil_normalize(1.0, std::numeric_limits<double>::infinity()), NonPositiveWeight);
}

TEST(Haar, FiniteWeilFormulaByDirectSummation) {
  // sum_{G/N} w * sum_N v f(xs) == sum_G u f(x), computed without the library.
  const GroupPtr d4 = share(parse_group_selector("D4"));
  for (const Subgroup& n : enumerate_normal_subgroups(d4)) {
    const CosetDecomposition d = coset_decomposition(n);
    for (const auto& [u, v] : std::vector<std::pair<double, double>>{{1, 1}, {2, 1}, {3, 2}, {1, 0.25}}) {
      const HaarData haar = weil_normalize(u, v);
      std::vector<double> f(d4->order());
      std::iota(f.begin(), f.end(), 1.0);
      double group_side = 0.0, quotient_side = 0.0;
      for (double value : f) group_side += u * value;
      for (Element rep : d.representatives) {
        double inner = 0.0;
        for (Element s : n.members()) inner += v * f[d4->product(rep, s)];
        quotient_side += haar.w() * inner;
      }
      EXPECT_NEAR(group_side, quotient_side, 1e-12);
    }
  }
}

TEST(Haar, ModularFunctionsAreOneOnFiniteGroups) {
  for (const std::string& name : standard_zoo()) {
    const GroupPtr g = share(parse_group_selector(name));
    const HaarData haar = weil_normalize(2.0, 0.5);
    for (const Subgroup& n : enumerate_normal_subgroups(g)) {
      const CosetDecomposition d = coset_decomposition(n);
      for (Element x = 0; x < g->order(); ++x) {
        EXPECT_DOUBLE_EQ(modular_function(*g, haar, x), 1.0);
        EXPECT_DOUBLE_EQ(sigma_n(n, haar, x), 1.0);
        EXPECT_DOUBLE_EQ(quotient_modular_function(d, haar, d.projection(x)), 1.0);
        if (n.contains(x)) EXPECT_DOUBLE_EQ(subgroup_modular_function(n, haar, x), sigma_n(n, haar, x));
      }
    }
  }
}

TEST(Haar, Modulus) {
  const FiniteGroup s3 = parse_group_selector("S3");
  std::vector<Element> identity(6);
  std::iota(identity.begin(), identity.end(), Element{0});
  EXPECT_DOUBLE_EQ(haar_modulus(s3, identity), 1.0);
  for (Element x = 0; x < 6; ++x) EXPECT_DOUBLE_EQ(haar_modulus(s3, inner_automorphism(s3, x), weil_normalize(3, 1)), 1.0);
}

TEST(Haar, NonAutomorphismsRejected) {
  const FiniteGroup z4 = parse_group_selector("Z4");
  const std::vector<Element> not_a_bijection = {0, 1, 1, 3};
  const std::vector<Element> not_a_homomorphism = {0, 2, 1, 3};
  const std::vector<Element> negation = {0, 3, 2, 1};
  EXPECT_THROW(require_automorphism(z4, not_a_bijection), NotAnAutomorphism);
  EXPECT_THROW(haar_modulus(z4, not_a_homomorphism), NotAnAutomorphism);
  EXPECT_DOUBLE_EQ(haar_modulus(z4, negation), 1.0);
  const GroupPtr s3 = share(parse_group_selector("S3"));
  EXPECT_THROW(sigma_n(Subgroup::from_members(s3, {0, 2}), HaarData{}, 1), NotNormal);
  EXPECT_THROW(subgroup_modular_function(Subgroup::from_members(s3, {0, 3, 4}), HaarData{}, 1), NotInDomain);
}
