#include <catch_amalgamated.hpp>

#include "fix3/groupfile.hpp"
#include "fix3/report.hpp"

using namespace fix3;

TEST_CASE("group file parsing") {
  GroupPtr G = parse_group_text("degree 5\ngen (1 2)\ngen (1 2 3 4 5)\n");
  CHECK(G->order() == 120);

  GroupPtr id = parse_group_text("degree 3\ngen ()\n");
  CHECK(id->order() == 1);

  GroupPtr gi = parse_group_text("degree 4\ngenimg 2 1 4 3\n");
  CHECK(gi->generators().front() == Perm::from_cycles(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_MATCHES(parse_group_text("degree 4\ngenimg 1 1 2 3\n"),
                       parse_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("line 2")));
  CHECK_THROWS_AS(parse_group_text("gen (1 2)\n"), parse_error);
  CHECK_THROWS_AS(parse_group_text("degree 3\nfoo bar\n"), parse_error);
  CHECK_THROWS_AS(parse_group_text("degree 3\ngen (1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_group_text("degree 3\n"), parse_error);
}

TEST_CASE("emit/parse round trip reproduces M11 exactly") {
  GroupPtr m11 = mathieu11();
  const std::string text = emit_group(*m11);
  GroupPtr back = parse_group_text(text);
  REQUIRE(back->generators().size() == m11->generators().size());
  for (std::size_t i = 0; i < m11->generators().size(); ++i)
    CHECK(back->generators()[i] == m11->generators()[i]);
  CHECK(emit_group(*back) == text);
}

TEST_CASE("recipe construction") {
  ExampleCase a = make_case("alt:5", "syl:2");
  CHECK(a.expected_degree == 15);
  ExampleCase m = make_case("m11", "point");
  CHECK(m.natural);
  CHECK(m.expected_stab_order == 720);
  ExampleCase s = make_case("psl3:3", "singer");
  CHECK(s.expected_stab_order == 13);
  ExampleCase t = make_case("twisted:2,2", "");
  CHECK(t.expected_degree == 192);
  CHECK_THROWS_AS(make_case("nope:1", ""), refusal_error);
  CHECK_THROWS_AS(make_case("alt:5", "weird"), refusal_error);
}

TEST_CASE("run_case on fast rows") {
  for (const CaseSpec& spec : builtin_table()) {
    if (spec.id != "a5-syl2" && spec.id != "neg-psl2-8-borel" &&
        spec.id != "field3p-2" && spec.id != "aut-psl2-2p")
      continue;
    Report rep = run_case(spec);
    INFO(spec.id << " " << rep.error_text);
    CHECK(rep.ok);
    CHECK(!rep.error);
    const auto j = report_json(rep);
    CHECK(j["case"] == spec.id);
    CHECK(j.contains("verdict"));
    CHECK(j.contains("millis"));
  }
}

TEST_CASE("reports are deterministic given seeds") {
  const CaseSpec* spec = nullptr;
  static const auto table = builtin_table();
  for (const auto& s : table)
    if (s.id == "psu3-3-torus") spec = &s;
  REQUIRE(spec);
  Report a = run_case(*spec);
  Report b = run_case(*spec);
  CHECK(a.seed == b.seed);
  CHECK(a.spectrum == b.spectrum);
  CHECK(a.verdict.satisfied == b.verdict.satisfied);
  auto ja = report_json(a), jb = report_json(b);
  ja.erase("millis");
  jb.erase("millis");
  CHECK(ja == jb);
}

TEST_CASE("classify_small counts for tiny degrees") {
  CHECK(classify_small(1).size() == 1);
  CHECK(classify_small(2).size() == 1);
  CHECK(classify_small(3).size() == 2);
  const auto deg4 = classify_small(4);
  CHECK(deg4.size() == 5);
  for (const auto& c : deg4) CHECK(!c.satisfied);  // degree < 5: impossible
  CHECK_THROWS_AS(classify_small(7), refusal_error);
}

TEST_CASE("classify_small(5) leaves exactly the natural sym(5)") {
  const auto classes = classify_small(5);
  CHECK(classes.size() == 5);
  std::vector<GroupOrder> surv;
  for (const auto& c : classes)
    if (c.satisfied) surv.push_back(c.order);
  CHECK(surv == std::vector<GroupOrder>{120});
}
