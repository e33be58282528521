#include "doctest.h"
#include "hopfforge/json_io.hpp"

using namespace hopfforge;

TEST_CASE("hopfdata round trip is byte-identical") {
  auto g = GroupDatum::make(12);
  Bosonization X = bosonize(build_nichols(build_M_ik(g, 2, 3)));
  std::string a = hopfdata_to_json(X.A, "bosonization");
  HopfDocument doc = hopfdata_from_json(a);
  CHECK(doc.construction == "bosonization");
  CHECK_FALSE(doc.lifting.has_value());
  CHECK(doc.A.mult == X.A.mult);
  CHECK(doc.A.comult == X.A.comult);
  CHECK(doc.A.antipode == X.A.antipode);
  CHECK(doc.A.grading == X.A.grading);
  CHECK(hopfdata_to_json(doc.A, doc.construction) == a);

  LiftingData d = random_lifting(g, Family::A, validate_I(g, {{2, 3}}), {}, 4);
  DeformationRun run = run_deformation(g, d);
  std::string b = hopfdata_to_json(run.D, "deformed", &run.data);
  HopfDocument back = hopfdata_from_json(b);
  REQUIRE(back.lifting.has_value());
  CHECK(back.lifting->zeta == run.data.zeta);
  CHECK_FALSE(back.A.grading.has_value());
  CHECK(hopfdata_to_json(back.A, back.construction, &*back.lifting) == b);
  // scalars with non-trivial cyclotomic part survive
  HopfData H = function_algebra(g)->phi;
  std::string h = hopfdata_to_json(dual(H));
  CHECK(hopfdata_to_json(hopfdata_from_json(h).A) == h);
}

TEST_CASE("module, Nichols and lifting round trips") {
  auto g = GroupDatum::make(12);
  YDModule M = build_M_I(g, validate_I(g, {{2, 3}, {2, 9}}), HBasis::Phi);
  std::string s = ydmodule_to_json(M);
  YDModule back = ydmodule_from_json(s);
  CHECK(same_structure(M, back));
  CHECK(ydmodule_to_json(back) == s);

  NicholsData B = build_nichols(build_M_L(g, validate_L(g, {1, 3})));
  std::string n = nichols_to_json(B);
  CHECK(nichols_to_json(nichols_from_json(n)) == n);

  LiftingData d = random_lifting(g, Family::C, validate_I(g, {{2, 3}}), validate_L(g, {3}), 2);
  std::string l = lifting_to_json(d);
  LiftingData e = lifting_from_json(l);
  CHECK(lifting_to_json(e) == l);
  CHECK(lifting_to_json(validate_lifting(g, e)) == l);
  CHECK(schema_of(l) == "liftingdata/v1");
}

TEST_CASE("malformed input is a ParseError") {
  CHECK_THROWS_AS(hopfdata_from_json("{"), ParseError);
  CHECK_THROWS_AS(hopfdata_from_json("{\"schema\":\"ydmodule/v1\"}"), ParseError);
  CHECK_THROWS_AS(lifting_from_json("{\"schema\":\"liftingdata/v1\",\"kind\":\"Q\"}"), ParseError);
  auto g = GroupDatum::make(12);
  std::string s = hopfdata_to_json(function_algebra(g)->theta);
  std::string bad = s;
  bad.replace(bad.find("\"1/1\""), 5, "\"2/2\"");
  CHECK_THROWS_AS(hopfdata_from_json(bad), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/x.json"), ParseError);
}
