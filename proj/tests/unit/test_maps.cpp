#include <gtest/gtest.h>

#include <set>

#include "braceblock/catalog.hpp"
#include "braceblock/environment.hpp"
#include "braceblock/report.hpp"
#include "braceblock/sampling.hpp"
#include "oracles.hpp"

using namespace braceblock;

namespace {

struct Q8 {
  FiniteGroup g = make_catalog_group("quaternion8");
  MapEnvironment env{g};
  Element operator[](std::string_view name) const { return *g.find(name); }
  GMap map(std::string_view name) const { return *env.resolve(name); }
  EndoWord word(std::string_view spec) const { return env.parse(spec); }
};

}  // namespace

TEST(Extend, QuaternionPhiOne) {
  Q8 q;
  const std::array<Element, 2> gens{q["a"], q["b"]};
  const std::array<Element, 2> imgs{q["a3b"], q["a3"]};
  const GMap f = extend_from_generators(q.g, gens, imgs);
  EXPECT_TRUE(is_endomorphism(q.g, f));
  EXPECT_EQ(f, q.map("f1"));
  // Quaternion arithmetic: a -> -k, b -> -i, so ab = k -> (-k)(-i) = ki = j = b.
  EXPECT_EQ(f(q["ab"]), q["b"]);
}

TEST(Extend, IdentityAssignment) {
  Q8 q;
  const std::array<Element, 2> gens{q["a"], q["b"]};
  EXPECT_EQ(extend_from_generators(q.g, gens, gens), identity_map(q.g));
}

TEST(Extend, InconsistentAssignment) {
  Q8 q;
  const std::array<Element, 2> gens{q["a"], q["b"]};
  const std::array<Element, 2> imgs{q["b"], q["b"]};
  try {
    extend_from_generators(q.g, gens, imgs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (const char* spec : {"cyclic(2)", "cyclic(4)", "symmetric(3)", "quaternion8", "dihedral(4)"}) {
    const auto g = make_catalog_group(spec);
    EXPECT_EQ(enumerate_endomorphisms(g).size(), oracle::count_endomorphisms(g.rows())) << spec;
  }
  EXPECT_EQ(enumerate_endomorphisms(make_catalog_group("quaternion8")).size(), 28u);
  EXPECT_EQ(enumerate_endomorphisms(make_catalog_group("symmetric(3)")).size(), 10u);
  EXPECT_EQ(enumerate_endomorphisms(make_catalog_group("cyclic(2)")).size(), 2u);
}

TEST(Enumerate, DistinctClosedAndContainsIdentityAndZero) {
  for (const char* spec : {"quaternion8", "symmetric(3)", "dihedral(4)", "metacyclic(7,3,2)"}) {
    const auto g = make_catalog_group(spec);
    const auto all = enumerate_endomorphisms(g);
    const std::set<GMap> set(all.begin(), all.end());
    EXPECT_EQ(set.size(), all.size()) << spec;
    EXPECT_TRUE(set.contains(identity_map(g))) << spec;
    EXPECT_TRUE(set.contains(zero_map(g))) << spec;
    for (const auto& f : all) {
      for (const auto& h : all) EXPECT_TRUE(set.contains(compose(f, h))) << spec;
    }
  }
}

TEST(Enumerate, OrderIsLexicographicOnGeneratorImages) {
  const auto g = make_catalog_group("dihedral(4)");
  const auto all = enumerate_endomorphisms(g);
  for (std::size_t i = 1; i < all.size(); ++i) {
    std::vector<Element> prev, cur;
    for (Element x : g.generators()) {
      prev.push_back(all[i - 1](x));
      cur.push_back(all[i](x));
    }
    EXPECT_LT(prev, cur);
  }
}

TEST(Enumerate, BudgetGuard) {
  try {
    enumerate_endomorphisms(make_catalog_group("gl(2,3)"), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(CommutatorCentral, Examples) {
  Q8 q;
  EXPECT_TRUE(is_commutator_central(q.g, identity_map(q.g)));
  for (const auto& f : enumerate_endomorphisms(q.g)) EXPECT_TRUE(is_commutator_central(q.g, f));
  const auto s4 = make_catalog_group("symmetric(4)");
  EXPECT_FALSE(is_commutator_central(s4, identity_map(s4)));
  for (const FiniteGroup* g : std::array<const FiniteGroup*, 2>{&q.g, &s4}) {
    EXPECT_TRUE(is_commutator_central(*g, zero_map(*g)));
    EXPECT_TRUE(is_abelian_map(*g, zero_map(*g)));
  }
  GMap bogus = identity_map(q.g);
  std::swap(bogus.images[1], bogus.images[2]);
  EXPECT_THROW(is_abelian_map(q.g, bogus), Error);
}

TEST(CommutatorCentral, AbelianImpliesCommutatorCentral) {
  for (const char* spec : {"symmetric(4)", "metacyclic(7,3,2)", "dihedral(4)"}) {
    const auto g = make_catalog_group(spec);
    for (const auto& f : enumerate_endomorphisms(g)) {
      if (is_abelian_map(g, f)) EXPECT_TRUE(is_commutator_central(g, f)) << spec;
    }
  }
}

TEST(ImagesCommute, Examples) {
  const auto s4 = make_catalog_group("symmetric(4)");
  const GMap t12 = sign_map(s4, *s4.find("(12)"));
  const GMap t13 = sign_map(s4, *s4.find("(13)"));
  const GMap t34 = sign_map(s4, *s4.find("(34)"));
  EXPECT_FALSE(images_commute_mod_center(s4, t12, t13));
  EXPECT_TRUE(images_commute_mod_center(s4, t12, t34));
  EXPECT_TRUE(images_commute_mod_center(s4, t12, zero_map(s4)));
  const auto gl = make_catalog_group("gl(2,3)");
  EXPECT_TRUE(images_commute_mod_center(gl, det_row_map(gl, 1), det_row_map(gl, 2)));
}

TEST(EvalWord, Examples) {
  Q8 q;
  for (std::size_t x = 0; x < 8; ++x) {
    const auto e = static_cast<Element>(x);
    EXPECT_EQ(eval_word(q.g, q.word("-1"), e), q.g.inv(e));
    EXPECT_EQ(eval_word(q.g, q.word("0"), e), kIdentity);
    EXPECT_EQ(eval_word(q.g, q.word("1"), e), e);
  }
  EXPECT_EQ(eval_word(q.g, q.word("f2+f3"), q["a"]), kIdentity);
  EXPECT_EQ(eval_word(q.g, q.word("f2+f3"), q["a2b"]), q["b"]);
}

TEST(EvalWord, OrderOfTermsMatters) {
  // phi2 + phi3 and phi3 + phi2 differ somewhere but agree modulo the center.
  Q8 q;
  const auto x = q.word("f2+f3");
  const auto y = q.word("f3+f2");
  bool differ = false;
  for (std::size_t e = 0; e < 8; ++e) differ |= x(q.g, static_cast<Element>(e)) != y(q.g, static_cast<Element>(e));
  EXPECT_TRUE(differ);
  EXPECT_TRUE(same_circle(q.g, identity_map(q.g), x, y));
}

TEST(PsiAlpha, Examples) {
  Q8 q;
  const GMap id = identity_map(q.g);
  EXPECT_EQ(psi_alpha_map(q.g, id, q.word("0")), zero_map(q.g));
  EXPECT_EQ(psi_alpha_map(q.g, q.map("f3"), q.word("1")), q.map("f3"));
  // The value at a3b is b only up to the central a2.
  const Element v = psi_alpha_map(q.g, id, q.word("f1"))(q["a3b"]);
  EXPECT_EQ(v, q["a2b"]);
  EXPECT_TRUE(q.g.center().contains(q.g.mul(q.g.inv(v), q["b"])));
}

TEST(ComposeWord, Examples) {
  Q8 q;
  const auto w = q.word("f2+3*f3-f1");
  const auto same = compose_word(identity_map(q.g), "id", w);
  const auto zero = compose_word(zero_map(q.g), "zero", w);
  const auto f4 = compose_word(q.map("f4"), "f4", q.word("1"));
  EXPECT_EQ(f4(q.g, q["a"]), q["a3"]);
  for (std::size_t x = 0; x < 8; ++x) {
    const auto e = static_cast<Element>(x);
    EXPECT_EQ(same(q.g, e), w(q.g, e));
    EXPECT_EQ(zero(q.g, e), kIdentity);
    EXPECT_EQ(compose_word(q.map("f4"), "f4", w)(q.g, e), q.map("f4")(w(q.g, e)));
  }
}

TEST(ReverseWord, InverseRelation) {
  // alpha(g^-1) = alpha*(g)^-1, exhaustively over sampled words.
  for (const char* spec : {"quaternion8", "symmetric(3)", "dihedral(4)"}) {
    const auto g = make_catalog_group(spec);
    auto sampler = WordSampler::over_endomorphisms(g, 7);
    for (int trial = 0; trial < 40; ++trial) {
      const EndoWord alpha = sampler.next();
      const EndoWord star = reverse_word(alpha);
      for (std::size_t x = 0; x < g.order(); ++x) {
        const auto e = static_cast<Element>(x);
        EXPECT_EQ(alpha(g, g.inv(e)), g.inv(star(g, e))) << spec;
      }
    }
  }
  Q8 q;
  const auto single = q.word("f1");
  EXPECT_EQ(reverse_word(single).to_string(), "f1");
  EXPECT_EQ(reverse_word(q.word("f1+f2")).to_string(), "f2+f1");
}

namespace {

// Checks psi(s) = 1, psi(t) = t^(1-j) against psi_n(t) = t^(1-j^n) for n <= 8.
// Returns whether the C(n, i) convention disagrees with the closed form somewhere.
bool binomial_closed_form(const std::string& spec, int q, int j) {
  const auto m = make_catalog_group(spec);
  const Element s = *m.find("s");
  const Element t = *m.find("t");
  auto mod = [q](long long x) { return static_cast<int>((x % q + q) % q); };
  const GMap psi = metacyclic_map(m, mod(1 - j));
  bool lower_differs = false;
  long long jn = 1;
  for (int n = 0; n <= 8; ++n) {
    const int exponent = mod(1 - jn);
    const GMap expected = metacyclic_map(m, exponent);
    const GMap got = psi_alpha_map(m, psi, binomial_word(m, psi, "psi", n));
    EXPECT_EQ(got(s), kIdentity) << spec << " n=" << n;
    EXPECT_EQ(got(t), m.pow(t, exponent)) << spec << " n=" << n;
    EXPECT_EQ(got, expected) << spec << " n=" << n;
    lower_differs |= psi_alpha_map(m, psi, binomial_word_lower(m, psi, "psi", n)) != expected;
    jn = jn * j % q;
  }
  return lower_differs;
}

}  // namespace

TEST(Binomial, MetacyclicClosedForm) {
  // With q = 3 the only primitive root is 2, so 1 - j = -1 and both
  // conventions agree; q = 5 with j = 3 separates them.
  EXPECT_FALSE(binomial_closed_form("metacyclic(7,3,2)", 3, 2));
  EXPECT_TRUE(binomial_closed_form("metacyclic(11,5,3)", 5, 3));
  EXPECT_FALSE(binomial_closed_form("metacyclic(11,5,3)", 5, 2));
}

TEST(Binomial, SmallCases) {
  const auto m = make_catalog_group("metacyclic(7,3,2)");
  const GMap psi = metacyclic_map(m, 2);
  EXPECT_EQ(psi_alpha_map(m, psi, binomial_word(m, psi, "psi", 0)), zero_map(m));
  EXPECT_EQ(psi_alpha_map(m, psi, binomial_word(m, psi, "psi", 1)), psi);
  const auto s4 = make_catalog_group("symmetric(4)");
  try {
    binomial_word(s4, identity_map(s4), "id", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAbelian);
  }
}

TEST(SignMap, Examples) {
  const auto s4 = make_catalog_group("symmetric(4)");
  const Element t12 = *s4.find("(12)");
  EXPECT_EQ(sign_map(s4, 0), zero_map(s4));
  const GMap f = sign_map(s4, t12);
  EXPECT_EQ(f(*s4.find("(123)")), kIdentity);
  EXPECT_EQ(f(*s4.find("(1234)")), t12);
  EXPECT_TRUE(is_abelian_map(s4, f));
  try {
    sign_map(s4, *s4.find("(123)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvolution);
  }
}

TEST(MetacyclicMap, Examples) {
  const auto m = make_catalog_group("metacyclic(7,3,2)");
  EXPECT_EQ(metacyclic_map(m, 0), zero_map(m));
  const GMap p = metacyclic_map(m, 1);
  EXPECT_EQ(compose(p, p), p);
  EXPECT_TRUE(is_commutator_central(m, metacyclic_map(m, 2)));
}

TEST(DetRowMap, Examples) {
  const auto gl = make_catalog_group("gl(2,3)");
  const Element diag21 = *gl.find("[2,0;0,1]");
  const Element diag12 = *gl.find("[1,0;0,2]");
  EXPECT_EQ(det_row_map(gl, 1)(kIdentity), kIdentity);
  EXPECT_EQ(det_row_map(gl, 1)(diag21), diag21);
  EXPECT_EQ(det_row_map(gl, 2)(diag21), diag12);
  for (std::size_t x = 0; x < gl.order(); ++x) {
    const auto m = *matrix_of(gl, static_cast<Element>(x));
    if (oracle::mat_det({m[0], m[1], m[2], m[3]}, 3) == 1) {
      EXPECT_EQ(det_row_map(gl, 1)(static_cast<Element>(x)), kIdentity);
    }
  }
  for (int t : {1, 2}) {
    EXPECT_TRUE(is_endomorphism(gl, det_row_map(gl, t)));
    EXPECT_TRUE(is_abelian_map(gl, det_row_map(gl, t)));
  }
  EXPECT_THROW(det_row_map(gl, 3), Error);
}

TEST(SameCircle, Examples) {
  Q8 q;
  const GMap id = identity_map(q.g);
  EXPECT_TRUE(same_circle(q.g, id, q.word("f4"), q.word("f4")));
  EXPECT_FALSE(same_circle(q.g, id, q.word("0"), q.word("-1")));
  // Words differing by the central a2 pointwise: f1 and 3*f1 (f1 of order 2 values
  // times a2 give inverses) agree on every g with a value of order <= 2 or 4.
  EXPECT_TRUE(same_circle(q.g, id, q.word("f1"), q.word("3*f1")));
}

TEST(WordParser, Grammar) {
  Q8 q;
  EXPECT_EQ(q.word("0").terms().size(), 0u);
  EXPECT_EQ(q.word("-1").to_string(), "-1");
  EXPECT_EQ(q.word("f2+f3").to_string(), "f2+f3");
  EXPECT_EQ(q.word("-1-f4").to_string(), "-1-f4");
  EXPECT_EQ(q.word(" 3*f1 - 2*id ").to_string(), "3*f1-2");
  EXPECT_EQ(q.word("e3").terms().size(), 1u);
  EXPECT_EQ(q.word("0*f1+f2").to_string(), "f2");
}

TEST(WordParser, Errors) {
  Q8 q;
  auto kind_of = [&](std::string_view spec) {
    try {
      q.word(spec);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadTable;
  };
  EXPECT_EQ(kind_of(""), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("f1+"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("f1 f2"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3*"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("f9"), ErrorKind::UnknownName);
  EXPECT_EQ(kind_of("e999"), ErrorKind::UnknownName);
  try {
    q.word("f1 ) f2");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("')'"), std::string::npos);
  }
}

TEST(MapSpec, Grammar) {
  Q8 q;
  EXPECT_EQ(parse_map_spec(q.g, "id", q.env), identity_map(q.g));
  EXPECT_EQ(parse_map_spec(q.g, "zero", q.env), zero_map(q.g));
  EXPECT_EQ(parse_map_spec(q.g, "gens:a->a3b,b->a3", q.env), q.map("f1"));
  const auto s5 = make_catalog_group("symmetric(5)");
  const MapEnvironment env5(s5);
  EXPECT_EQ(parse_map_spec(s5, "sign:(12)(35)", env5), sign_map(s5, *s5.find("(12)(35)")));
  EXPECT_THROW(parse_map_spec(q.g, "gens:a->zz", q.env), Error);
  EXPECT_THROW(parse_map_spec(q.g, "wat:1", q.env), Error);
  EXPECT_THROW(parse_map_spec(q.g, "nosuch", q.env), Error);
}

TEST(QuaternionEnvironment, ConjugatesAreEndomorphisms) {
  Q8 q;
  for (const char* s : {"a", "b", "ab"}) {
    for (const char* t : {"a", "b", "ab"}) {
      if (std::string_view(s) == t) continue;
      for (int k = 1; k <= 4; ++k) {
        const auto name = "f" + std::to_string(k) + "_" + s + "_" + t;
        ASSERT_TRUE(q.env.resolve(name).has_value()) << name;
        EXPECT_TRUE(is_endomorphism(q.g, *q.env.resolve(name))) << name;
      }
    }
  }
  EXPECT_EQ(q.map("f1_a_b"), q.map("f1"));
}

TEST(LemmaProperties, HoldForCommutatorCentralMaps) {
  // Every part of the congruence suite, sampled over several groups.
  for (const char* spec : {"quaternion8", "dihedral(4)", "metacyclic(7,3,2)", "symmetric(3)"}) {
    const auto g = make_catalog_group(spec);
    auto sampler = WordSampler::over_endomorphisms(g, 11);
    for (const auto& psi : sampler.pool()) {
      if (!is_commutator_central(g, psi)) continue;
      std::vector<std::pair<EndoWord, EndoWord>> pairs;
      for (int i = 0; i < 4; ++i) pairs.emplace_back(sampler.next(), sampler.next());
      for (const auto& r : verify_lemma_congruences(g, psi, pairs)) {
        EXPECT_TRUE(r.passed) << spec << " " << r.check << ": " << r.detail;
      }
    }
  }
}

TEST(LemmaProperties, FailWithoutCommutatorCentrality) {
  const auto s4 = make_catalog_group("symmetric(4)");
  auto sampler = WordSampler::over_endomorphisms(s4, 3);
  std::vector<std::pair<EndoWord, EndoWord>> pairs{{EndoWord::integer(s4, 1), EndoWord::integer(s4, 1)}};
  for (int i = 0; i < 5; ++i) pairs.emplace_back(sampler.next(), sampler.next());
  const auto reps = verify_lemma_congruences(s4, identity_map(s4), pairs);
  EXPECT_FALSE(reps[4].passed);
  ASSERT_TRUE(reps[4].witness.has_value());
}

TEST(LemmaProperties, ZeroMapPassesTrivially) {
  const auto s4 = make_catalog_group("symmetric(4)");
  auto sampler = WordSampler::over_endomorphisms(s4, 5);
  std::vector<std::pair<EndoWord, EndoWord>> pairs{{sampler.next(), sampler.next()}};
  for (const auto& r : verify_lemma_congruences(s4, zero_map(s4), pairs)) EXPECT_TRUE(r.passed);
}

TEST(Sampler, DeterministicForSeed) {
  const auto g = make_catalog_group("quaternion8");
  auto x = WordSampler::over_endomorphisms(g, 42);
  auto y = WordSampler::over_endomorphisms(g, 42);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(x.next().to_string(), y.next().to_string());
}

TEST(Json, MapRoundTrip) {
  Q8 q;
  const Json j = map_to_json(q.g, q.map("f1"));
  EXPECT_EQ(j["group"], "quaternion8");
  EXPECT_EQ(map_from_json(q.g, Json::parse(j.dump())), q.map("f1"));
  EXPECT_THROW(map_from_json(q.g, Json::parse(R"({"images": [0, 1]})")), Error);
}
