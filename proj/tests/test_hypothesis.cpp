#include <catch_amalgamated.hpp>

#include "fix3/hypothesis.hpp"
#include "fix3/constructors.hpp"

using namespace fix3;

TEST_CASE("A5 on 15 points: verdict and spectrum") {
  GroupPtr a5 = alt_group(5);
  CosetAction act = coset_action(a5, sylow_subgroup(a5, 2));
  ExhaustiveResult res = check_exhaustive(act.image);
  CHECK(res.verdict.satisfied);
  CHECK(res.verdict.max_fix_nontrivial == 3);
  REQUIRE(res.verdict.witness3.has_value());
  CHECK(res.verdict.witness3->fixed_point_count() == 3);
  const FixedPointSpectrum expected{{0, 44}, {3, 15}, {15, 1}};
  CHECK(res.spectrum == expected);
  // orbit counting: sum k*count = |G|
  std::uint64_t total = 0;
  for (const auto& [k, c] : res.spectrum) total += k * c;
  CHECK(total == 60);
}

TEST_CASE("sym(4) natural action fails") {
  ExhaustiveResult res = check_exhaustive(sym_group(4));
  CHECK(!res.verdict.satisfied);
  // transpositions fix two points; nothing fixes three
  CHECK(res.verdict.max_fix_nontrivial == 2);
}

TEST_CASE("M11 on 11 points satisfies the hypothesis") {
  ExhaustiveResult res = check_exhaustive(mathieu11());
  CHECK(res.verdict.satisfied);
  std::uint64_t total = 0, count = 0;
  for (const auto& [k, c] : res.spectrum) {
    total += k * c;
    count += c;
  }
  CHECK(total == 7920);
  CHECK(count == 7920);
}

TEST_CASE("tree tier matches the exhaustive tier") {
  struct Probe {
    GroupPtr action;
    const char* label;
  };
  std::vector<Probe> probes;
  probes.push_back({mathieu11(), "m11"});
  probes.push_back({sym_group(4), "s4"});
  probes.push_back({sym_group(5), "s5"});
  probes.push_back({alt_group(6), "a6"});
  {
    GroupPtr a5 = alt_group(5);
    probes.push_back({coset_action(a5, sylow_subgroup(a5, 2)).image,
                      "a5/15"});
  }
  {
    GroupPtr a6 = alt_group(6);
    probes.push_back({coset_action(a6, sylow_subgroup(a6, 2)).image,
                      "a6/45"});
    probes.push_back(
        {coset_action(a6, find_subgroup_of_order(a6, 24, 5)).image, "a6/15"});
  }
  probes.push_back({psl_group(2, 8).group, "psl2(8)/9"});
  probes.push_back({cyclic_group(8), "z8 regular"});
  for (const auto& p : probes) {
    INFO(p.label);
    ExhaustiveResult ex = check_exhaustive(p.action);
    HypothesisVerdict tr = check_tree(p.action);
    CHECK(ex.verdict.satisfied == tr.satisfied);
    CHECK(ex.verdict.max_fix_nontrivial == tr.max_fix_nontrivial);
  }
}

TEST_CASE("A8 on 2880 points at the tree tier") {
  GroupPtr a8 = alt_group(8);
  CosetAction act = coset_action(a8, sylow_subgroup(a8, 7));
  REQUIRE(act.degree == 2880);
  HypothesisVerdict v = check_tree(act.image);
  CHECK(v.satisfied);
  REQUIRE(v.witness3.has_value());
  CHECK(v.witness3->fixed_point_count() == 3);
}

TEST_CASE("structural certificate for the psl3(3) Singer subgroup") {
  ExampleCase ex = singer_psl3(3);
  StructuralCertificate cert =
      structural_certificate(ex.group, ex.subgroup, true);
  CHECK(cert.h_order == 13);
  CHECK(cert.self_centralizing_verified);
  CHECK(cert.normalizer_index == 3);
  CHECK(cert.implied_degree == 432);
  CHECK(!cert.conditional);
  HypothesisVerdict v = certificate_verdict(cert);
  CHECK(v.satisfied);
  CHECK(v.tier == Tier::structural);
}

TEST_CASE("certificates are sound against the built actions") {
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    ExampleCase ex = singer_psl3(q);
    StructuralCertificate cert =
        structural_certificate(ex.group, ex.subgroup, true);
    CosetAction act = coset_action(ex.group, ex.subgroup);
    REQUIRE(act.degree == cert.implied_degree);
    ExhaustiveResult res = check_exhaustive(act.image);
    CHECK(res.verdict.satisfied);
    // all nonzero fixed-point counts equal 3
    for (const auto& [k, c] : res.spectrum)
      if (k != 0 && k != act.degree) CHECK(k == 3);
  }
}

TEST_CASE("certificates refuse non-qualifying subgroups") {
  GroupPtr a5 = alt_group(5);
  // <(1 2 3)>: centralizer has order 3 but the normalizer index is 2
  Subgroup X(a5, {Perm::from_cycles(5, {{1, 2, 3}})}, 3);
  CHECK_THROWS_AS(structural_certificate(a5, X, true), refusal_error);
  // non-cyclic subgroup
  Subgroup V = sylow_subgroup(a5, 2);
  CHECK_THROWS_AS(structural_certificate(a5, V, true), refusal_error);
}

TEST_CASE("conditional certificate demands a genuine witness") {
  ExampleCase ex = singer_psl3(3);
  // a correct witness: any normalizer element of order 3 outside H; find
  // one by brute force
  std::optional<Perm> u;
  const auto helems = ex.subgroup.group->elements();
  std::unordered_set<Perm, PermHash> hset(helems.begin(), helems.end());
  const Perm x = ex.subgroup.group->generators().front();
  ex.group->for_each_element([&](const Perm& g) {
    if (g.order() == 3 && hset.count(conjugate(x, g)) && conjugate(x, g) != x) {
      u = g;
      return false;
    }
    return true;
  });
  REQUIRE(u.has_value());
  StructuralCertificate cert = structural_certificate(
      ex.group, ex.subgroup, false, "table lookup", u);
  CHECK(cert.conditional);
  CHECK(certificate_verdict(cert).tier == Tier::conditional);
  // a non-normalizing witness is refused
  CHECK_THROWS_AS(
      structural_certificate(ex.group, ex.subgroup, false, "table lookup",
                             ex.group->generators().front()),
      refusal_error);
}

TEST_CASE("normalizer-index audit on exhaustive cases") {
  GroupPtr a5 = alt_group(5);
  CosetAction act = coset_action(a5, sylow_subgroup(a5, 2));
  AuditReport rep = lemma22_audit(act.image, 5);
  CHECK(rep.passed);

  // field3p(2): elements with one fixed point have their normalizer inside
  // the stabilizer (part a); the audit covers k = 1 samples
  ExampleCase f = field3p(2);
  CHECK(lemma22_audit(f.group, 5).passed);
}

TEST_CASE("center audit distinguishes the families") {
  CHECK(center_audit(alt_group(5)).passed);     // |Z| = 1
  ExampleCase z = z3xfrob_agl(7);
  AuditReport rep = center_audit(z.group);      // |Z| = 3
  CHECK(rep.passed);
  CHECK(rep.detail == "|Z(G)| = 3");
  // a group with |Z| = 2 fails
  GroupPtr z2 = make_group({Perm::from_cycles(4, {{1, 2}, {3, 4}}),
                            Perm::from_cycles(4, {{1, 2}})});
  CHECK(!center_audit(z2).passed);
}

TEST_CASE("sylow audit") {
  // a7/360: stabilizer of order 7 carries a full Sylow 7-subgroup
  CHECK(sylow_audit(2520, 7).passed);
  // |G| = 2520 has 7-part 7; a stabilizer of order 49 would be impossible,
  // and a stabilizer order 5 in a group of 5^2-part 25 must fail
  CHECK(!sylow_audit(100, 5).passed);
  // primes below 5 are exempt
  CHECK(sylow_audit(48, 2).passed);
}

TEST_CASE("burnside audit") {
  GroupPtr a5 = alt_group(5);
  CosetAction act = coset_action(a5, sylow_subgroup(a5, 2));
  CHECK(burnside_audit(spectrum_of(act.image), 60).passed);
  FixedPointSpectrum bad{{0, 59}, {15, 1}};
  CHECK(!burnside_audit(bad, 60).passed);
}
