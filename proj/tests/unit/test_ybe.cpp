#include <gtest/gtest.h>

#include "braceblock/catalog.hpp"
#include "braceblock/environment.hpp"
#include "braceblock/ybe.hpp"

using namespace braceblock;

namespace {

struct Q8 {
  FiniteGroup g = make_catalog_group("quaternion8");
  MapEnvironment env{g};
  BinaryOpTable circ(std::string_view spec) const {
    return circle_table(g, identity_map(g), env.parse(spec));
  }
};

// Brute-force braid check with explicit tuple composition.
bool braid_by_hand(const YbeMap& r) {
  const auto n = static_cast<Element>(r.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        auto [q1, r1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, r3] = r(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(YbeMap, TrivialBraceFormula) {
  Q8 q;
  const auto dot = dot_table(q.g);
  const auto r = ybe_map(dot, dot);
  const auto rp = ybe_inverse_map(dot, dot);
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      EXPECT_EQ(r(a, b), std::make_pair(b, q.g.mul(q.g.mul(q.g.inv(b), a), b)));
      EXPECT_EQ(rp(a, b), std::make_pair(q.g.mul(q.g.mul(a, b), q.g.inv(a)), a));
    }
  }
}

TEST(YbeMap, AbelianTrivialBraceIsFlip) {
  const auto dot = dot_table(make_catalog_group("direct_product(cyclic(2),cyclic(4))"));
  const auto flip = YbeMap::flip(8);
  EXPECT_EQ(ybe_map(dot, dot).images(), flip.images());
  EXPECT_EQ(ybe_inverse_map(dot, dot).images(), flip.images());
}

TEST(YbeMap, RejectsNonBrace) {
  const auto s4 = make_catalog_group("symmetric(4)");
  const auto one = EndoWord::integer(s4, 1);
  const auto dot = circle_table(s4, sign_map(s4, *s4.find("(12)")), one);
  const auto circ = circle_table(s4, sign_map(s4, *s4.find("(13)")), one);
  try {
    ybe_map(dot, circ);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotABrace);
  }
}

TEST(Braid, TrivialMaps) {
  for (const auto& r : {YbeMap::flip(5), YbeMap::identity(5)}) {
    EXPECT_TRUE(check_braid(r).passed);
    EXPECT_TRUE(braid_by_hand(r));
    EXPECT_TRUE(r.is_bijective());
  }
  EXPECT_EQ(check_braid(YbeMap::flip(4)).cases, 64u);
}

TEST(Braid, BrokenMapFailsWithWitness) {
  auto images = YbeMap::flip(3).images();
  std::swap(images[1], images[5]);
  const YbeMap bad(3, images);
  const auto r = check_braid(bad);
  EXPECT_EQ(r.passed, braid_by_hand(bad));
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(Braid, QuaternionBraces) {
  Q8 q;
  const auto dot = dot_table(q.g);
  for (const char* spec : {"f2+f3", "f1", "f4", "-1-f4", "-1"}) {
    const auto circ = q.circ(spec);
    for (const auto& [x, y] : {std::pair{&dot, &circ}, std::pair{&circ, &dot}}) {
      const auto r = ybe_map(*x, *y);
      const auto rp = ybe_inverse_map(*x, *y);
      EXPECT_TRUE(r.is_bijective()) << spec;
      EXPECT_TRUE(check_braid(r).passed) << spec;
      EXPECT_TRUE(braid_by_hand(r)) << spec;
      EXPECT_TRUE(check_braid(rp).passed) << spec;
      EXPECT_TRUE(check_nondegenerate(r).passed) << spec;
      EXPECT_TRUE(check_nondegenerate(rp).passed) << spec;
      EXPECT_TRUE(check_inverse_pair(r, rp).passed) << spec;
      EXPECT_TRUE(check_involutive(r, *x).passed) << spec;
    }
  }
}

TEST(Nondegenerate, Examples) {
  EXPECT_TRUE(check_nondegenerate(YbeMap::flip(4)).passed);
  const YbeMap collapse(3, std::vector<std::pair<Element, Element>>(9, {0, 0}));
  EXPECT_FALSE(check_nondegenerate(collapse).passed);
  EXPECT_FALSE(collapse.is_bijective());
}

TEST(InversePair, Examples) {
  EXPECT_TRUE(check_inverse_pair(YbeMap::flip(4), YbeMap::flip(4)).passed);
  Q8 q;
  const auto dot = dot_table(q.g);
  const auto r = ybe_map(dot, q.circ("f2+f3"));
  const auto wrong = ybe_inverse_map(dot, q.circ("f4"));
  EXPECT_FALSE(check_inverse_pair(r, wrong).passed);
  EXPECT_FALSE(check_inverse_pair(r, YbeMap::identity(8)).passed);
}

TEST(Involutive, Examples) {
  const auto c4 = dot_table(make_catalog_group("cyclic(4)"));
  const auto rc = ybe_map(c4, c4);
  EXPECT_TRUE(is_involutive(rc));
  EXPECT_TRUE(check_involutive(rc, c4).passed);

  Q8 q;
  const auto dot = dot_table(q.g);
  const auto rq = ybe_map(dot, dot);
  EXPECT_FALSE(is_involutive(rq));
  EXPECT_TRUE(check_involutive(rq, dot).passed);

  const auto c2cubed = q.circ("f1");
  ASSERT_TRUE(c2cubed.is_commutative());
  const auto r = ybe_map(c2cubed, dot);
  EXPECT_TRUE(is_involutive(r));
  EXPECT_TRUE(check_involutive(r, c2cubed).passed);
  // Mismatched abelianness witness makes the biconditional fail.
  EXPECT_FALSE(check_involutive(r, dot).passed);
}

TEST(YbeMap, ShapeValidation) {
  EXPECT_THROW(YbeMap(3, std::vector<std::pair<Element, Element>>(8)), Error);
}
