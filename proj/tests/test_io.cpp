#include <cstdio>
#include <fstream>

#include "catch_amalgamated.hpp"
#include "skewpbw/io.hpp"

using namespace skewpbw;

namespace {

std::string message_of(std::string const& text) {
  try {
    parse_definition(text);
  } catch (error const& e) {
    CHECK(e.code() == errc::parse_error);
    return e.what();
  }
  FAIL("no error for " << text);
  return "";
}

template <class F>
errc code_of(F&& fn) {
  try {
    fn();
  } catch (error const& e) {
    return e.code();
  }
  return errc::param_range;
}

// Z_2[y]/(y^2), delta = d/dy
constexpr char const* weyl = R"({
  "name": "weyl",
  "ring": {"orders": [2, 2],
           "constants": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
           "one": [1, 0]},
  "maps": [
    {"id": "id", "kind": "endomorphism", "matrix": [[1, 0], [0, 1]]},
    {"id": "d", "kind": "derivation", "partner": "id", "matrix": [[0, 1], [0, 0]]}
  ],
  "extension": {"variables": 1, "sigmas": ["id"], "deltas": ["d"]}
})";

json with(json doc, json::json_pointer const& p, json v) {
  doc[p] = std::move(v);
  return doc;
}

}  // namespace

TEST_CASE("definitions parse and verify", "[io]") {
  auto const def = parse_definition(weyl);
  CHECK(def.name == "weyl");
  CHECK(def.ring->size() == 4);
  REQUIRE(def.maps.size() == 2);
  REQUIRE(def.extension);
  CHECK_FALSE(def.extension->verified());
  CHECK(verify_presentation(*def.extension).ok);
  CHECK(def.extension->flags().derivation_type);
}

TEST_CASE("extension defaults to identity sigmas and zero deltas", "[io]") {
  auto doc = json::parse(weyl);
  doc["extension"] = {{"variables", 2}};
  auto const def = definition_from_json(doc);
  REQUIRE(def.extension);
  CHECK(def.extension->vars() == 2);
  CHECK(def.extension->system().all_sigmas_identity());
  CHECK(def.extension->system().all_deltas_zero());
  CHECK(def.extension->d(0, 1) == def.ring->one());
}

TEST_CASE("every corpus entry round-trips through JSON", "[io]") {
  for (auto const& e : corpus::all()) {
    INFO(e.name);
    json const doc = export_entry(e);
    auto const back = parse_definition(doc.dump(2));
    if (back.extension) CHECK(verify_presentation(*back.extension).ok);
    Definition orig;
    orig.name = e.name;
    orig.ring = e.ring;
    orig.grading = e.grading;
    if (e.extension)
      orig.extension = std::const_pointer_cast<Extension>(e.extension);
    CHECK(structurally_equal(orig, back));
    CHECK(export_entry(e) == definition_to_json(back.name, back.ring, back.grading,
                                                back.extension));
  }
}

TEST_CASE("structural equality notices differences", "[io]") {
  auto const a = parse_definition(weyl);
  auto const b = definition_from_json(
      with(json::parse(weyl), "/maps/1/matrix"_json_pointer, {{0, 0}, {0, 0}}));
  CHECK_FALSE(structurally_equal(a, b));
  auto const c = definition_from_json(
      with(json::parse(weyl), "/ring/degrees"_json_pointer, {0, 1}));
  CHECK_FALSE(structurally_equal(a, c));
  CHECK(structurally_equal(a, parse_definition(weyl)));
}

TEST_CASE("syntax errors carry line and column", "[io][errors]") {
  std::string const bad = "{\n  \"ring\": {\n    \"orders\": [2,, 2]\n  }\n}";
  auto const msg = message_of(bad);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
  CHECK(msg.find("parse error") == std::string::npos);
}

TEST_CASE("schema errors carry the JSON path", "[io][errors]") {
  auto const base = json::parse(weyl);
  auto const msg = [&](json const& doc) {
    try {
      definition_from_json(doc);
    } catch (error const& e) {
      CHECK(e.code() == errc::parse_error);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(msg(json::array()).find("/: expected an object") != std::string::npos);
  CHECK(msg(json::object()).find("missing \"ring\"") != std::string::npos);
  CHECK(msg(with(base, "/ring/orders/1"_json_pointer, "two")).find("/ring/orders/1") !=
        std::string::npos);
  CHECK(msg(with(base, "/maps/1/partner"_json_pointer, "nope")).find("unknown map \"nope\"") !=
        std::string::npos);
  CHECK(msg(with(base, "/maps/1/kind"_json_pointer, "automorphism")).find("/maps/1/kind") !=
        std::string::npos);
  CHECK(msg(with(base, "/maps/1/id"_json_pointer, "id")).find("duplicate map id") !=
        std::string::npos);
  CHECK(msg(with(base, "/extension/sigmas"_json_pointer, {"id", "id"}))
            .find("/extension/sigmas") != std::string::npos);
  CHECK(msg(with(base, "/extension/variables"_json_pointer, 0)).find("at least one") !=
        std::string::npos);
  auto two = with(base, "/extension"_json_pointer, {{"variables", 2}});
  CHECK(msg(with(two, "/extension/d"_json_pointer, {{{"i", 2}, {"j", 1}, {"value", {1, 0}}}}))
            .find("need i < j") != std::string::npos);
  CHECK(msg(with(two, "/extension/d"_json_pointer, {{{"i", 1}, {"j", 3}, {"value", {1, 0}}}}))
            .find("1..2") != std::string::npos);
  CHECK(msg(with(two, "/extension/d"_json_pointer, {{{"i", 1}, {"j", 2}, {"value", {1}}}}))
            .find("2 coordinates") != std::string::npos);
  CHECK(msg(with(two, "/extension/tails"_json_pointer,
                 {{{"i", 1}, {"j", 2}, {"linear", {{0, 0}}}}}))
            .find("/extension/tails/0/linear") != std::string::npos);
}

TEST_CASE("domain errors pass through the parser", "[io][errors]") {
  auto const base = json::parse(weyl);
  CHECK(code_of([&] {
          definition_from_json(with(base, "/maps/0/matrix"_json_pointer, {{1, 1}, {0, 0}}));
        }) == errc::not_multiplicative);
  CHECK(code_of([&] {
          definition_from_json(with(base, "/ring/one"_json_pointer, {0, 1}));
        }) == errc::bad_identity);
  CHECK(code_of([&] {
          definition_from_json(with(base, "/ring/degrees"_json_pointer, {1, 1}));
        }) == errc::inhomogeneous_constant);
  auto two = with(base, "/extension"_json_pointer, {{"variables", 2}});
  CHECK(code_of([&] {
          definition_from_json(
              with(two, "/extension/d"_json_pointer, {{{"i", 1}, {"j", 2}, {"value", {0, 0}}}}));
        }) == errc::zero_d);
}

TEST_CASE("load_definition reads files", "[io]") {
  std::string const path = "skewpbw_io_test.json";
  {
    std::ofstream out(path);
    out << weyl;
  }
  CHECK(load_definition(path).ring->size() == 4);
  std::remove(path.c_str());
  CHECK(code_of([&] { load_definition(path); }) == errc::parse_error);
}

TEST_CASE("expression parser", "[io][expr]") {
  auto const A = corpus::by_name("weyl_like_2").extension;
  auto const x = SkewPolynomial::variable(A, 0);
  auto const y = SkewPolynomial::constant(A, A->ring().encode({0, 1}));
  auto const one = SkewPolynomial::one(A);
  CHECK(parse_polynomial(A, "x") == x);
  CHECK(parse_polynomial(A, "[0,1]*x + [1,0]") == y * x + one);
  // right coefficients normalize to the left
  CHECK(parse_polynomial(A, "x*[0,1]") == y * x + one);
  CHECK(to_string(parse_polynomial(A, "x * [0, 1]")) == "[0,1]*x^1 + [1,0]");
  CHECK(parse_polynomial(A, "x^3") == x * x * x);
  CHECK(parse_polynomial(A, "x^0") == one);
  CHECK(parse_polynomial(A, "-x + x").is_zero());
  CHECK(parse_polynomial(A, "3") == one);  // characteristic 2
  CHECK(parse_polynomial(A, "([0,1] + 1) * x") == (y + one) * x);
  for (auto const& f : enumerate_window(A, 2, 2, 10'000)) {
    INFO(to_string(f));
    CHECK(parse_polynomial(A, to_string(f)) == f);
  }

  auto const B = corpus::by_name("commutative_z4_xy").extension;
  auto const p = parse_polynomial(B, "[2]*x1^2*x2 - x2");
  CHECK(parse_polynomial(B, to_string(p)) == p);
  CHECK(p.support() == 2);
}

TEST_CASE("expression parser errors", "[io][expr][errors]") {
  auto const A = corpus::by_name("weyl_like_2").extension;
  auto const B = corpus::by_name("commutative_z4_xy").extension;
  auto const msg = [](ExtensionPtr const& E, std::string const& s) {
    try {
      parse_polynomial(E, s);
    } catch (error const& e) {
      CHECK(e.code() == errc::parse_error);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(msg(A, "x +").find("end of expression") != std::string::npos);
  CHECK(msg(A, "[1]").find("2 coordinates") != std::string::npos);
  CHECK(msg(A, "[1,0").find("']'") != std::string::npos);
  CHECK(msg(A, "x^-1").find("negative exponent") != std::string::npos);
  CHECK(msg(A, "x2").find("no variable x2") != std::string::npos);
  CHECK(msg(A, "x y").find("column 3") != std::string::npos);
  CHECK(msg(B, "x").find("x1..x2") != std::string::npos);
  CHECK(msg(A, "(x").find("')'") != std::string::npos);
  auto const bad = corpus::corrupted_weyl_fixture();
  CHECK(code_of([&] { parse_polynomial(bad, "x1"); }) == errc::unverified);
}

TEST_CASE("report JSON", "[io]") {
  auto const& e = corpus::by_name("swap");
  auto const r = run_check({TheoremId::T1, instance_of(e), e.budget, true});
  json const j = report_json(r);
  CHECK(j["id"] == "T1");
  CHECK(j["instance"] == "swap");
  CHECK(j["verdict"] == to_string(Verdict::precondition_failed));
  CHECK(j.contains("witness"));
  CHECK(j["preconditions"].size() == r.preconditions.size());
  CHECK(j["conclusions"].size() == 2);
  CHECK(j["budget"]["degree"] == e.budget.degree_cap);
  CHECK_FALSE(j.contains("seconds"));
  REQUIRE(j.contains("ni_check"));
  CHECK_FALSE(j["ni_check"]["witnesses"].empty());
  CHECK(j["ni_check"]["witnesses"][0].contains("result_probe"));
  CHECK(report_json(r) == j);
}
