#include <gtest/gtest.h>

#include "braceblock/catalog.hpp"
#include "braceblock/maps.hpp"
#include "braceblock/permutation.hpp"
#include "braceblock/report.hpp"
#include "oracles.hpp"

using namespace braceblock;

namespace {

Element el(const FiniteGroup& g, std::string_view name) {
  auto x = g.find(name);
  EXPECT_TRUE(x.has_value()) << name;
  return x.value_or(0);
}

std::vector<std::string> catalog_specs() {
  return {"cyclic(1)",         "cyclic(2)",   "cyclic(6)",       "dihedral(3)",
          "dihedral(4)",       "quaternion8", "symmetric(3)",    "symmetric(4)",
          "metacyclic(7,3,2)", "gl(2,2)",     "gl(2,3)",         "sl(2,3)",
          "direct_product(cyclic(2),quaternion8)"};
}

}  // namespace

TEST(ValidateGroup, CyclicOfOrderTwo) {
  const auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.inv(1), 1);
  EXPECT_TRUE(g.is_abelian());
}

TEST(ValidateGroup, MissingInverse) {
  try {
    FiniteGroup::from_table({{0, 1}, {1, 1}});
    FAIL() << "expected MissingInverse";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingInverse);
  }
}

TEST(ValidateGroup, NoIdentity) {
  try {
    FiniteGroup::from_table({{1, 0}, {0, 1}});
    FAIL() << "expected NoIdentity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoIdentity);
  }
}

TEST(ValidateGroup, NotAssociativeNamesTriple) {
  // A Latin square with identity 0 that is not a group (order 5 loop).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL() << "expected NotAssociative";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAssociative);
    EXPECT_NE(std::string(e.what()).find('('), std::string::npos);
  }
}

TEST(ValidateGroup, BadShape) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), Error);
  EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {2, 0}}), Error);
}

TEST(Catalog, EveryGroupRevalidates) {
  for (const auto& spec : catalog_specs()) {
    const auto g = make_catalog_group(spec);
    EXPECT_NO_THROW(FiniteGroup::from_table(g.rows())) << spec;
    EXPECT_EQ(subgroup_closure(g, g.generators()).size(), g.order()) << spec;
  }
}

TEST(Catalog, QuaternionMatchesQuaternionArithmetic) {
  const auto g = make_catalog_group("quaternion8");
  EXPECT_EQ(g.rows(), oracle::quaternion_table());
  const std::vector<std::string> names{"1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
  EXPECT_EQ(g.names(), names);
}

TEST(Catalog, SymmetricMatchesComposition) {
  for (int n : {3, 4}) {
    EXPECT_EQ(make_catalog_group(GroupSpec::symmetric(n)).rows(), oracle::symmetric_table(n));
  }
}

TEST(Catalog, MetacyclicMatchesPresentation) {
  const auto g = make_catalog_group("metacyclic(7,3,2)");
  EXPECT_EQ(g.order(), 21u);
  EXPECT_EQ(g.rows(), oracle::metacyclic_table(7, 3, 2));
  const Element s = el(g, "s");
  const Element t = el(g, "t");
  EXPECT_EQ(g.element_order(s), 7);
  EXPECT_EQ(g.element_order(t), 3);
  EXPECT_EQ(g.mul(g.mul(t, s), g.inv(t)), g.pow(s, 2));
}

TEST(Catalog, MetacyclicRejectsBadRoots) {
  for (const char* spec : {"metacyclic(7,3,3)", "metacyclic(7,3,1)", "metacyclic(7,3,8)"}) {
    try {
      make_catalog_group(spec);
      FAIL() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadParameters) << spec;
    }
  }
}

TEST(Catalog, GeneralLinearMatchesMatrixProducts) {
  const auto g = make_catalog_group("gl(2,3)");
  ASSERT_EQ(g.order(), 48u);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto x = *matrix_of(g, static_cast<Element>(a));
      const auto y = *matrix_of(g, static_cast<Element>(b));
      const oracle::Mat z = oracle::mat_mul({x[0], x[1], x[2], x[3]}, {y[0], y[1], y[2], y[3]}, 3);
      const auto c = *matrix_of(g, g.mul(static_cast<Element>(a), static_cast<Element>(b)));
      EXPECT_EQ((oracle::Mat{c[0], c[1], c[2], c[3]}), z);
    }
  }
  EXPECT_EQ(make_catalog_group("gl(2,2)").order(), 6u);
  EXPECT_EQ(make_catalog_group("sl(2,3)").order(), 24u);
}

TEST(Catalog, Sizes) {
  EXPECT_EQ(make_catalog_group("cyclic(1)").order(), 1u);
  EXPECT_EQ(make_catalog_group("dihedral(4)").order(), 8u);
  EXPECT_EQ(make_catalog_group("direct_product(cyclic(2),sl(2,3))").order(), 48u);
  try {
    make_catalog_group("symmetric(6)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Catalog, SpecRoundTrip) {
  for (const auto& spec : catalog_specs()) {
    EXPECT_EQ(GroupSpec::parse(spec).to_string(), spec);
  }
  EXPECT_THROW(GroupSpec::parse("cyclic("), Error);
  EXPECT_THROW(GroupSpec::parse("nosuch(3)"), Error);
}

TEST(Structure, CenterExamples) {
  const auto q8 = make_catalog_group("quaternion8");
  EXPECT_EQ(center(q8).items(), (std::vector<Element>{0, el(q8, "a2")}));
  EXPECT_EQ(center(make_catalog_group("symmetric(4)")).size(), 1u);
  EXPECT_EQ(center(make_catalog_group("cyclic(4)")).size(), 4u);
}

TEST(Structure, CommutatorSubgroupExamples) {
  const auto q8 = make_catalog_group("quaternion8");
  EXPECT_EQ(commutator_subgroup(q8).items(), (std::vector<Element>{0, el(q8, "a2")}));
  EXPECT_EQ(commutator_subgroup(make_catalog_group("cyclic(6)")).size(), 1u);
  // Independent count: even permutations of S4 by inversion parity.
  const auto perms = oracle::all_perms(4);
  std::size_t even = 0;
  for (const auto& p : perms) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    }
    even += inversions % 2 == 0;
  }
  const auto s4 = make_catalog_group("symmetric(4)");
  EXPECT_EQ(commutator_subgroup(s4).size(), even);
  EXPECT_EQ(even, 12u);
}

TEST(Structure, NilpotencyClassTwo) {
  EXPECT_TRUE(nilpotency_class_at_most_two(make_catalog_group("quaternion8")));
  EXPECT_TRUE(nilpotency_class_at_most_two(make_catalog_group("dihedral(4)")));
  EXPECT_FALSE(nilpotency_class_at_most_two(make_catalog_group("symmetric(4)")));
  EXPECT_TRUE(nilpotency_class_at_most_two(make_catalog_group("cyclic(5)")));
}

TEST(Structure, CentreAndDerivedAreSubgroups) {
  for (const auto& spec : catalog_specs()) {
    const auto g = make_catalog_group(spec);
    for (const ElementSet* s : {&g.center(), &g.commutator_subgroup()}) {
      for (Element x : *s) {
        EXPECT_TRUE(s->contains(g.inv(x))) << spec;
        for (Element y : *s) EXPECT_TRUE(s->contains(g.mul(x, y))) << spec;
      }
    }
  }
}

TEST(Structure, OrdersAndClosure) {
  const auto q8 = make_catalog_group("quaternion8");
  EXPECT_EQ(element_order(q8, 0), 1);
  EXPECT_EQ(element_order(q8, el(q8, "a")), 4);
  const std::array<Element, 1> a{el(q8, "a")};
  EXPECT_EQ(subgroup_closure(q8, a).items(),
            (std::vector<Element>{0, el(q8, "a"), el(q8, "a2"), el(q8, "a3")}));
}

TEST(Conjugation, Examples) {
  const auto q8 = make_catalog_group("quaternion8");
  const Element a = el(q8, "a");
  EXPECT_EQ(conjugation_map(q8, a)(el(q8, "b")), el(q8, "a2b"));
  EXPECT_EQ(conjugation_map(q8, el(q8, "a2")), identity_map(q8));
  EXPECT_EQ(compose(conjugation_map(q8, a), conjugation_map(q8, q8.inv(a))), identity_map(q8));
  EXPECT_TRUE(is_endomorphism(q8, conjugation_map(q8, a)));
}

TEST(Translations, RegularRepresentations) {
  for (const auto& spec : catalog_specs()) {
    const auto g = make_catalog_group(spec);
    const auto n = g.order();
    EXPECT_TRUE(left_translation(g, 0).is_identity());
    EXPECT_TRUE(right_translation(g, 0).is_identity());
    for (std::size_t x = 0; x < n; ++x) {
      const auto ex = static_cast<Element>(x);
      for (std::size_t y = 0; y < n; ++y) {
        const auto ey = static_cast<Element>(y);
        EXPECT_EQ(left_translation(g, ex) * left_translation(g, ey),
                  left_translation(g, g.mul(ex, ey)));
        EXPECT_EQ(right_translation(g, ex) * right_translation(g, ey),
                  right_translation(g, g.mul(ex, ey)));
        EXPECT_EQ(left_translation(g, ex) * right_translation(g, ey),
                  right_translation(g, ey) * left_translation(g, ex));
        // Conjugating rho(y) by lambda(x) leaves it fixed.
        EXPECT_EQ(left_translation(g, ex) * right_translation(g, ey) *
                      left_translation(g, ex).inverse(),
                  right_translation(g, ey));
      }
      if (x != 0) EXPECT_FALSE(left_translation(g, ex).is_identity());
    }
  }
}

TEST(Translations, CentralInvolutionActsAlikeOnBothSides) {
  const auto q8 = make_catalog_group("quaternion8");
  EXPECT_EQ(right_translation(q8, el(q8, "a2")), left_translation(q8, el(q8, "a2")));
}

TEST(Permutation, Basics) {
  const Permutation p({1, 2, 0, 3});
  EXPECT_EQ(p.order(), 3);
  EXPECT_EQ(p.cycles(), "(0 1 2)");
  EXPECT_EQ(Permutation::identity(4).cycles(), "()");
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
}

TEST(Json, GroupRoundTrip) {
  for (const auto& spec : catalog_specs()) {
    const auto g = make_catalog_group(spec);
    const Json j = group_to_json(g);
    EXPECT_EQ(j["order"], g.order());
    const auto back = group_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.table(), g.table());
    EXPECT_EQ(back.names(), g.names());
    EXPECT_EQ(back.name(), g.name());
  }
  EXPECT_THROW(group_from_json(Json::parse(R"({"table": [[0,1],[1,1]]})")), Error);
  EXPECT_THROW(group_from_json(Json::parse(R"({"name": "x"})")), Error);
}
