#include <catch_amalgamated.hpp>

#include <string>

#include "nlft/errors.hpp"
#include "nlft/spec_io.hpp"

using namespace nlft;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("measure documents parse", "[io]") {
  Measure mu = measure_from_spec(R"({"ac": {"kind": "table", "xs": [-1, 0, 1], "ys": [0, 2, 0]},
                                     "atoms": [{"x": 0.5, "mass": 1.5}], "period": 4})");
  REQUIRE(mu.periodic());
  CHECK(mu.half_period() == 2.0);
  REQUIRE(mu.atoms().size() == 1);
  CHECK(mu.atoms()[0].mass == 1.5);
  CHECK(mu.density(0.0) == 2.0);

  Measure plain = measure_from_spec(R"({"ac": {"kind": "constant", "value": 0.25}})");
  CHECK_FALSE(plain.periodic());
  CHECK(plain.atoms().empty());
  CHECK(plain.density(3.0) == 0.25);
}

TEST_CASE("measure documents round trip", "[io]") {
  const std::string text = R"({"ac": {"kind": "table", "xs": [-1, 0, 1], "ys": [0.1, 2, 0.1]},
                               "atoms": [{"x": 0.1, "mass": 0.3333333333333333}], "period": null})";
  Measure a = measure_from_spec(text);
  Measure b = measure_from_spec(measure_to_spec(a));
  CHECK(measure_to_spec(a) == measure_to_spec(b));
  CHECK(b.atoms()[0].mass == a.atoms()[0].mass);
}

TEST_CASE("measure errors name the field", "[io]") {
  CHECK_THROWS_WITH(measure_from_spec(R"({"ac": {"kind": "none"}, "atoms": [{"x": 0, "mass": 1}, {"x": 1, "mass": -2}]})"),
                    ContainsSubstring("atoms[1].mass"));
  CHECK_THROWS_WITH(measure_from_spec(R"({"ac": {"kind": "constant"}})"), ContainsSubstring("ac.value"));
  CHECK_THROWS_WITH(measure_from_spec(R"({"ac": {"kind": "blob"}})"), ContainsSubstring("ac.kind"));
  CHECK_THROWS_WITH(measure_from_spec(R"({"ac": {"kind": "table", "xs": [0, 1], "ys": [1, "a"]}})"),
                    ContainsSubstring("ac.ys[1]"));
  CHECK_THROWS_WITH(measure_from_spec(R"({"atoms": []})"), ContainsSubstring("ac"));
  CHECK_THROWS_WITH(measure_from_spec(R"({"ac": {"kind": "none"}, "period": "x"})"), ContainsSubstring("period"));
  CHECK_THROWS_WITH(measure_from_spec("{not json"), ContainsSubstring("malformed"));
  CHECK_THROWS_AS(measure_from_file("/nonexistent/measure.json"), InputError);
}

TEST_CASE("potential documents", "[io]") {
  Potential d = potential_from_spec(R"({"kind": "discrete", "spacing": 0.5, "masses": [0.1, -0.2]})");
  REQUIRE(std::holds_alternative<DiscretePotential>(d));
  CHECK(std::get<DiscretePotential>(d).first_index == 1);
  Potential d0 = potential_from_spec(R"({"kind": "discrete", "spacing": 0.5, "masses": [0.1], "first_index": 0})");
  CHECK(std::get<DiscretePotential>(d0).first_index == 0);
  Potential s = potential_from_spec(R"({"kind": "step", "breakpoints": [0, 1, 2], "values": [1, -1]})");
  REQUIRE(std::holds_alternative<StepPotential>(s));
  CHECK(std::get<StepPotential>(s).length() == 2.0);
  Potential back = potential_from_spec(potential_to_spec(s));
  CHECK(std::get<StepPotential>(back).values == std::get<StepPotential>(s).values);
}

TEST_CASE("potential errors name the field", "[io]") {
  CHECK_THROWS_WITH(potential_from_spec(R"({"kind": "discrete", "masses": [0.1]})"), ContainsSubstring("spacing"));
  CHECK_THROWS_WITH(potential_from_spec(R"({"kind": "discrete", "spacing": 1, "masses": [0.1, null]})"),
                    ContainsSubstring("masses[1]"));
  CHECK_THROWS_WITH(potential_from_spec(R"({"kind": "step", "breakpoints": [0, 1], "values": [1, 2]})"),
                    ContainsSubstring("values"));
  CHECK_THROWS_WITH(potential_from_spec(R"({"kind": "wave"})"), ContainsSubstring("kind"));
}
