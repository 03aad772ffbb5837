#include <catch_amalgamated.hpp>

#include "fix3/constructors.hpp"
#include "fix3/coset.hpp"

using namespace fix3;

TEST_CASE("symmetric and alternating groups") {
  CHECK(sym_group(5)->order() == 120);
  CHECK(sym_group(5)->is_transitive());
  CHECK(alt_group(4)->order() == 12);
  CHECK(alt_group(6)->order() == 360);
  CHECK(alt_group(7)->order() == 2520);
  CHECK(alt_group(8)->order() == 20160);
}

TEST_CASE("Mathieu groups validate at construction") {
  CHECK(mathieu11()->order() == 7920);
  CHECK(mathieu22()->order() == 443520);
  CHECK(mathieu22()->degree() == 22);
  CHECK(mathieu22()->is_transitive());
}

TEST_CASE("projective family orders and degrees") {
  CHECK(psl_group(2, 7).group->order() == 168);
  CHECK(psl_group(2, 7).group->degree() == 8);
  CHECK(psl_group(2, 8).group->order() == 504);
  CHECK(psl_group(2, 11).group->order() == 660);
  CHECK(psl_group(3, 3).group->order() == 5616);
  CHECK(psl_group(3, 4).group->order() == 20160);
  CHECK(psl_group(3, 5).group->order() == 372000);
  CHECK(psu_group(3, 3).group->order() == 6048);
  CHECK(psu_group(3, 3).group->degree() == 28);
  CHECK(psu_group(3, 4).group->order() == 62400);
  CHECK(psu_group(3, 5).group->order() == 126000);
  CHECK(pgl3_group(4).group->order() == 60480);
  CHECK(pgu3_group(3).group->order() == 6048);
  CHECK(pgu3_group(5).group->order() == 378000);
  CHECK_THROWS_AS(psu_group(3, 2), refusal_error);
  CHECK_THROWS_AS(psl_group(3, 83), refusal_error);
}

TEST_CASE("constructions are deterministic") {
  auto a = psl_group(3, 3).group;
  auto b = psl_group(3, 3).group;
  REQUIRE(a->generators().size() == b->generators().size());
  for (std::size_t i = 0; i < a->generators().size(); ++i)
    CHECK(a->generators()[i] == b->generators()[i]);
  CHECK(mathieu11()->generators() == mathieu11()->generators());
  ExampleCase t1 = torus_psu3(3);
  ExampleCase t2 = torus_psu3(3);
  CHECK(t1.subgroup.group->generators() == t2.subgroup.group->generators());
  CHECK(t1.seed == t2.seed);
}

TEST_CASE("singer subgroups") {
  ExampleCase e2 = singer_psl3(2);
  CHECK(e2.expected_stab_order == 7);
  CHECK(e2.expected_degree == 24);
  ExampleCase e3 = singer_psl3(3);
  CHECK(e3.expected_stab_order == 13);
  CHECK(e3.expected_degree == 432);
  ExampleCase e4 = singer_psl3(4);
  CHECK(e4.expected_stab_order == 7);
  CHECK(e4.expected_degree == 2880);

  // the full Singer subgroup acts regularly on the plane
  ExampleCase pg = singer_pgl3(4);
  CHECK(pg.expected_stab_order == 21);
  CHECK(pg.expected_degree == 2880);
  GroupPtr S = pg.subgroup.group;
  CHECK(S->order() == 21);
  CHECK(S->degree() == 21);
  CHECK(S->is_transitive());
}

TEST_CASE("torus subgroups") {
  CHECK(torus_psu3(3).expected_degree == 864);
  CHECK(torus_psu3(4).expected_degree == 4800);
  CHECK(torus_psu3(4).expected_stab_order == 13);
  CHECK(torus_pgu3(3).expected_stab_order == 7);
  CHECK_THROWS_AS(torus_psu3(2), refusal_error);
}

TEST_CASE("psl4 and psu4 cases") {
  ExampleCase p3 = psl4_case(3);
  CHECK(p3.group->order() == 6065280);
  CHECK(p3.expected_degree == 466560);
  CHECK(p3.expected_stab_order == 13);

  ExampleCase u3 = psu4_case();
  CHECK(u3.group->order() == 3265920);
  CHECK(u3.expected_degree == 466560);
  CHECK(u3.expected_stab_order == 7);

  ExampleCase p5 = psl4_case(5);
  CHECK(p5.group->order() == 7254000000ull);
  CHECK(p5.expected_stab_order == 31);
  CHECK(p5.expected_degree == 234000000ull);
  REQUIRE(p5.normalizer_witness.has_value());
  const Perm& u = *p5.normalizer_witness;
  CHECK(u.order() == 3);
  const Perm x = p5.subgroup.group->generators().front();
  const Perm xu = conjugate(x, u);
  CHECK(xu != x);
  CHECK(p5.subgroup.group->contains(xu));
}

TEST_CASE("maximal-class 3-groups") {
  ExampleCase es = maxclass3("extraspecial27");
  CHECK(es.group->order() == 27);
  CHECK(es.expected_degree == 9);
  // exponent 3
  es.group->for_each_element([](const Perm& g) {
    CHECK(g.power(3).is_identity());
    return true;
  });
  ExampleCase w = maxclass3("wreath33");
  CHECK(w.group->order() == 81);
  CHECK(w.expected_degree == 27);
  // centers have order 3
  for (const ExampleCase* ex : {&es, &w}) {
    std::size_t z = 0;
    ex->group->for_each_element([&](const Perm& g) {
      bool central = true;
      for (const Perm& h : ex->group->generators())
        central = central && commutes(g, h);
      z += central;
      return true;
    });
    CHECK(z == 3);
  }
  CHECK_THROWS_AS(maxclass3("nonsense"), refusal_error);
}

TEST_CASE("field3p examples") {
  ExampleCase e2 = field3p(2);
  CHECK(e2.group->order() == 144);
  CHECK(e2.expected_degree == 9);
  CHECK(e2.natural);
  ExampleCase e3 = field3p(3);
  CHECK(e3.group->order() == 2106);
  CHECK(e3.expected_degree == 27);
  // |C_A(g)| logic: every nontrivial element fixes 0, 1 or 3 points
  e2.group->for_each_element([](const Perm& g) {
    if (!g.is_identity()) {
      const auto f = g.fixed_point_count();
      CHECK((f == 0 || f == 1 || f == 3));
    }
    return true;
  });
}

TEST_CASE("z3 x frobenius examples") {
  ExampleCase e7 = z3xfrob_agl(7);
  CHECK(e7.group->order() == 126);
  CHECK(e7.expected_degree == 21);
  ExampleCase e5 = z3xfrob_agl(5);
  CHECK(e5.expected_degree == 15);

  // kernel K = 1 x (translations) has three orbits on the cosets,
  // transitively permuted by the central Z3
  CosetAction act = coset_action(e7.group, e7.subgroup);
  REQUIRE(act.degree == 21);
  // kernel elements: fixed-point-free elements of F plus identity, here
  // represented by the embedded translation x -> x+1 of AGL(1,7)
  std::vector<Perm> kgens;
  for (const Perm& g : e7.group->generators())
    if (g[0] == 0 && !g.is_identity()) {
      // embedded F-generators fix the Z3 part {0,1,2}
      kgens.push_back(g);
      break;
    }
  REQUIRE(!kgens.empty());
  // not Frobenius-validated: construct K as the embedded translation group
  std::vector<Point> img(act.degree);
  // push the kernel generator through the coset action
  const Perm& k = kgens.front();
  for (Point i = 0; i < act.degree; ++i) {
    Perm rep = canonical_coset_rep(act.subgroup,
                                   compose(act.representatives[i], k));
    for (Point j = 0; j < act.degree; ++j)
      if (act.representatives[j] == rep) {
        img[i] = j;
        break;
      }
  }
  GroupPtr K = make_group({Perm::from_images(std::move(img))});
  const auto orbits = K->orbits();
  CHECK(orbits.size() == 3);
  for (const auto& orb : orbits) CHECK(orb.size() == 7);

  // a non-Frobenius complement is refused
  GroupPtr s4 = sym_group(4);
  CHECK_THROWS_AS(z3xfrob(s4, pointwise_stabilizer(s4, {0}), "bad"),
                  refusal_error);
}

TEST_CASE("twisted field example") {
  ExampleCase ex = twisted(2, 2);
  CHECK(ex.group->order() == 12096);
  CHECK(ex.expected_degree == 192);
  CHECK(ex.expected_stab_order == 63);

  // A : H acts regularly: |A| * 3 = degree
  CHECK(3 * 64 == ex.expected_degree);

  // fixed points of a nontrivial m in M contain a full H-orbit
  CosetAction act = coset_action(ex.group, ex.subgroup);
  const Perm m = ex.subgroup.group->generators().front();
  std::vector<Point> img(act.degree);
  for (Point i = 0; i < act.degree; ++i) {
    Perm rep = canonical_coset_rep(act.subgroup,
                                   compose(act.representatives[i], m));
    for (Point j = 0; j < act.degree; ++j)
      if (act.representatives[j] == rep) {
        img[i] = j;
        break;
      }
  }
  const Perm mact = Perm::from_images(std::move(img));
  CHECK(mact.fixed_point_count() == 3);
}

TEST_CASE("fukushima example") {
  ExampleCase ex = fukushima_default();
  CHECK(ex.group->order() == 168);
  CHECK(ex.expected_degree == 24);
  CHECK(ex.expected_stab_order == 7);
  const Perm alpha = ex.subgroup.group->generators().front();
  CHECK(alpha.order() == 7);
  CHECK(std::gcd<std::uint64_t>(7, 24) == 1);

  // violated preconditions are refused by name
  GroupPtr z9 = cyclic_group(9);
  CHECK_THROWS_MATCHES(
      fukushima(z9, z9->generators().front(), "bad"), refusal_error,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("coprime")));
}

TEST_CASE("alternating case list") {
  const auto cases = alt_cases();
  REQUIRE(cases.size() == 7);
  CHECK(cases[0].expected_degree == 15);
  CHECK(cases[1].expected_degree == 5);
  CHECK(cases[2].expected_degree == 6);
  CHECK(cases[3].expected_degree == 15);
  CHECK(cases[4].expected_degree == 15);
  CHECK(cases[5].expected_degree == 360);
  CHECK(cases[6].expected_degree == 2880);
  for (const auto& ex : cases) {
    CHECK(ex.subgroup.order() == ex.expected_stab_order);
    CHECK(ex.group->order() ==
          checked_mul(ex.expected_degree, ex.expected_stab_order));
  }
}

TEST_CASE("AGL(1,q) and affine groups") {
  CHECK(agl1(7)->order() == 42);
  CHECK(agl1(5)->order() == 20);
  CHECK(agl1(8)->order() == 56);
}
