#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "covariant/builtin_groups.hpp"
#include "covariant/errors.hpp"
#include "covariant/group.hpp"
#include "covariant/group_io.hpp"

using namespace covariant;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

/// Independent oracle: a subset is a normal subgroup iff it contains e, is
/// closed under product and inverse, and is closed under conjugation.
std::vector<std::vector<Element>> brute_force_normal_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & (std::uint64_t{1} << g.identity()))) continue;
    auto in = [&](Element x) { return (mask >> x) & 1u; };
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      if (!in(g.inverse(a))) ok = false;
      for (Element b = 0; b < n && ok; ++b) {
        if (in(b) && !in(g.product(a, b))) ok = false;
        if (!in(g.product(g.product(g.inverse(b), a), b))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x)
      if (in(x)) members.push_back(x);
    found.push_back(members);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

std::vector<std::vector<Element>> member_lists(const std::vector<Subgroup>& subgroups) {
  std::vector<std::vector<Element>> out;
  for (const Subgroup& s : subgroups) out.emplace_back(s.members().begin(), s.members().end());
  return out;
}

Element by_label(const FiniteGroup& g, const std::string& label) {
  const auto& labels = g.labels();
  return static_cast<Element>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

}  // namespace

TEST(FiniteGroup, TwoElementTable) {
  const FiniteGroup g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_EQ(g.inverse(1), 1u);
}

TEST(FiniteGroup, RepeatedEntryNamesTheRow) {
  const std::string msg = message_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); });
  EXPECT_NE(msg.find("row 1"), std::string::npos) << msg;
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), NotAGroup);
}

TEST(FiniteGroup, ShapeErrorsAreMalformedTable) {
  EXPECT_THROW(FiniteGroup::from_table({}), MalformedTable);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), MalformedTable);
  const std::string msg = message_of([] { FiniteGroup::from_table({{0, 1}, {1, 2}}); });
  EXPECT_NE(msg.find("cell"), std::string::npos) << msg;
}

TEST(FiniteGroup, NonAssociativeLoopRejected) {
  EXPECT_THROW(load_group_file(COVARIANT_TEST_DATA_DIR "/non_associative.json", AssociativityCheck::strict), NotAGroup);
  const std::string msg = message_of(
      [] { load_group_file(COVARIANT_TEST_DATA_DIR "/non_associative.json", AssociativityCheck::strict); });
  EXPECT_NE(msg.find("associativity"), std::string::npos) << msg;
}

TEST(FiniteGroup, S3HasThreeConjugacyClasses) {
  const FiniteGroup s3 = parse_group_selector("S3");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.conjugacy_classes().size(), 3u);

  // Brute-force class count: orbits of s -> x^-1 s x.
  std::set<std::set<Element>> orbits;
  for (Element s = 0; s < 6; ++s) {
    std::set<Element> orbit;
    for (Element x = 0; x < 6; ++x) orbit.insert(s3.product(s3.product(s3.inverse(x), s), x));
    orbits.insert(orbit);
  }
  EXPECT_EQ(orbits.size(), 3u);
}

TEST(FiniteGroup, Conjugation) {
  const FiniteGroup s3 = parse_group_selector("S3");
  EXPECT_EQ(s3.conjugate(by_label(s3, "(12)"), by_label(s3, "(123)")), by_label(s3, "(132)"));
  for (Element s = 0; s < 6; ++s) EXPECT_EQ(s3.conjugate(s3.identity(), s), s);
  const FiniteGroup z6 = parse_group_selector("Z6");
  for (Element x = 0; x < 6; ++x)
    for (Element s = 0; s < 6; ++s) EXPECT_EQ(conjugate(z6, x, s), s);
  EXPECT_THROW(s3.conjugate(6, 0), IndexOutOfRange);
}

TEST(BuiltinGroups, Families) {
  EXPECT_EQ(builtin_group(GroupFamily::cyclic, 4).order(), 4u);
  EXPECT_EQ(builtin_group("symmetric", 3).order(), 6u);
  EXPECT_EQ(builtin_group(GroupFamily::dihedral, 4).order(), 8u);
  EXPECT_EQ(builtin_group(GroupFamily::quaternion8, 8).order(), 8u);

  const FiniteGroup h3 = builtin_group("heisenberg_mod", 3);
  EXPECT_EQ(h3.order(), 27u);
  std::size_t central = 0;
  for (Element z = 0; z < 27; ++z) {
    bool commutes = true;
    for (Element x = 0; x < 27; ++x) commutes = commutes && h3.product(z, x) == h3.product(x, z);
    central += commutes;
  }
  EXPECT_EQ(central, 3u);
  EXPECT_EQ(h3.center().size(), 3u);

  EXPECT_THROW(builtin_group("octonions", 8), UnknownFamily);
  EXPECT_THROW(builtin_group(GroupFamily::cyclic, 0), ParameterOutOfRange);
}

TEST(BuiltinGroups, Selectors) {
  EXPECT_EQ(parse_group_selector("Z2xZ2").order(), 4u);
  EXPECT_FALSE(parse_group_selector("S3").is_abelian());
  EXPECT_TRUE(parse_group_selector("Z2xZ2").is_abelian());
  EXPECT_EQ(parse_group_selector("trivial").order(), 1u);
  EXPECT_EQ(parse_group_selector("cyclic:5").order(), 5u);
  EXPECT_THROW(parse_group_selector("X9"), UnknownFamily);
  EXPECT_EQ(standard_zoo().size(), 8u);
}

TEST(NormalSubgroups, MatchBruteForceOnZoo) {
  for (const std::string& name : standard_zoo()) {
    const GroupPtr g = share(parse_group_selector(name));
    if (g->order() > 20) continue;  // 2^27 subsets is too many for the oracle
    EXPECT_EQ(member_lists(enumerate_normal_subgroups(g)), brute_force_normal_subgroups(*g)) << name;
  }
}

TEST(NormalSubgroups, Examples) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  EXPECT_EQ(member_lists(enumerate_normal_subgroups(s3)),
            (std::vector<std::vector<Element>>{{0}, {0, 3, 4}, {0, 1, 2, 3, 4, 5}}));

  const GroupPtr q8 = share(parse_group_selector("Q8"));
  std::vector<std::size_t> sizes;
  for (const Subgroup& n : enumerate_normal_subgroups(q8)) sizes.push_back(n.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4, 4, 4, 8}));

  const GroupPtr z4 = share(parse_group_selector("Z4"));
  EXPECT_EQ(member_lists(enumerate_normal_subgroups(z4)),
            (std::vector<std::vector<Element>>{{0}, {0, 2}, {0, 1, 2, 3}}));
}

TEST(NormalSubgroups, HeisenbergCountsAgainstClassUnionOracle) {
  // H3 is too large for the subset oracle; every normal subgroup is a union
  // of conjugacy classes, so check closure over all class unions instead.
  const GroupPtr h3 = share(parse_group_selector("H3"));
  const auto classes = h3->conjugacy_classes();
  ASSERT_EQ(classes.size(), 11u);
  std::vector<std::vector<Element>> oracle;
  for (std::uint32_t mask = 0; mask < (1u << classes.size()); ++mask) {
    std::vector<Element> members;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if ((mask >> c) & 1u) members.insert(members.end(), classes[c].begin(), classes[c].end());
    std::sort(members.begin(), members.end());
    if (members.empty() || members[0] != h3->identity()) continue;
    bool closed = true;
    for (Element a : members)
      for (Element b : members) closed = closed && std::binary_search(members.begin(), members.end(), h3->product(a, b));
    if (closed) oracle.push_back(members);
  }
  std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  EXPECT_EQ(member_lists(enumerate_normal_subgroups(h3)), oracle);
}

TEST(Subgroup, Validation) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  EXPECT_THROW(Subgroup::from_members(s3, {0, 2, 3}), NotASubgroup);
  EXPECT_THROW(Subgroup::from_members(s3, {3, 4}), NotASubgroup);
  EXPECT_THROW(Subgroup::from_members(s3, {0, 9}), IndexOutOfRange);
  const Subgroup h = Subgroup::from_members(s3, {0, 2});
  EXPECT_FALSE(h.is_normal());
  EXPECT_THROW(coset_decomposition(h), NotNormal);
  EXPECT_THROW(h.position(3), NotInDomain);
  const std::vector<Element> gen = {3};
  EXPECT_EQ(Subgroup::generated_by(s3, gen).size(), 3u);
}

TEST(Cosets, Examples) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  const CosetDecomposition d = coset_decomposition(Subgroup::from_members(s3, {0, 3, 4}));
  EXPECT_EQ(d.coset_count(), 2u);
  EXPECT_EQ(d.representatives, (std::vector<Element>{0, 1}));
  EXPECT_EQ(d.quotient->order(), 2u);
  EXPECT_EQ(d.projection(2), 1u);
  EXPECT_EQ(d.projection(4), 0u);

  // Quotient by {e} is a copy of G.
  const CosetDecomposition trivial = coset_decomposition(Subgroup::trivial(s3));
  EXPECT_EQ(trivial.coset_count(), 6u);
  for (Element a = 0; a < 6; ++a) {
    EXPECT_EQ(trivial.projection(a), a);
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(trivial.quotient->product(a, b), s3->product(a, b));
  }

  EXPECT_EQ(coset_decomposition(Subgroup::whole(s3)).quotient->order(), 1u);
}

TEST(Cosets, ProjectionIsAHomomorphism) {
  for (const std::string& name : standard_zoo()) {
    const GroupPtr g = share(parse_group_selector(name));
    for (const Subgroup& n : enumerate_normal_subgroups(g)) {
      const CosetDecomposition d = coset_decomposition(n);
      EXPECT_EQ(d.coset_count() * n.size(), g->order());
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
          ASSERT_EQ(d.projection(g->product(a, b)), d.quotient->product(d.projection(a), d.projection(b)));
    }
  }
}

TEST(Commutator, S3DerivedSubgroupIsA3) {
  const GroupPtr s3 = share(parse_group_selector("S3"));
  const Subgroup derived = commutator_subgroup(Subgroup::whole(s3));
  EXPECT_EQ(std::vector<Element>(derived.members().begin(), derived.members().end()), (std::vector<Element>{0, 3, 4}));
}

TEST(GroupIo, RoundTrip) {
  const FiniteGroup z3 = load_group_file(COVARIANT_TEST_DATA_DIR "/z3.json");
  EXPECT_EQ(z3.order(), 3u);
  EXPECT_EQ(z3.name(), "z3");
  EXPECT_EQ(z3.label(1), "a");
  const std::string text = serialize_group(z3);
  EXPECT_EQ(load_group(text), z3);
  EXPECT_EQ(serialize_group(load_group(text)), text);

  const FiniteGroup d4 = parse_group_selector("D4");
  EXPECT_EQ(load_group(serialize_group(d4)).table(), d4.table());
}

TEST(GroupIo, Diagnostics) {
  EXPECT_THROW(load_group("{"), MalformedTable);
  EXPECT_THROW(load_group(R"({"order": 2, "table": [[0, 1]]})"), MalformedTable);
  EXPECT_THROW(load_group(R"({"order": 2, "table": [[0, 1], [1, "x"]]})"), MalformedTable);
  EXPECT_THROW(load_group_file(COVARIANT_TEST_DATA_DIR "/missing.json"), MalformedTable);
  const std::string msg = message_of([] { load_group_file(COVARIANT_TEST_DATA_DIR "/bad_latin.json"); });
  EXPECT_NE(msg.find("row 1"), std::string::npos) << msg;
}
