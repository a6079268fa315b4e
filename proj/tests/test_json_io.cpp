#include <catch2/catch_amalgamated.hpp>

#include <liefp/json_io.hpp>

using namespace liefp;

TEST_CASE("subspace json round trip") {
  auto s = span({{1, 0, 2}, {0, 1, 1}}, 3, 5);
  auto j = subspace_to_json(s);
  CHECK(j.at("p") == 5);
  CHECK(j.at("dim") == 3);  // ambient dimension
  auto back = subspace_from_json(j);
  CHECK(back.basis == s.basis);
  CHECK(back.p == 5);
  CHECK(back.ambient == 3);
}

TEST_CASE("subspace json canonicalizes on load") {
  json j = {{"p", 3}, {"dim", 2}, {"basis", {{2, 2}}}};
  auto s = subspace_from_json(j);
  REQUIRE(s.basis.size() == 1);
  CHECK(s.basis[0] == std::vector<std::uint32_t>{1, 1});

  // negative entries reduce mod p
  json jn = {{"p", 5}, {"dim", 2}, {"basis", {{-1, 0}}}};
  CHECK(subspace_from_json(jn).basis[0] == std::vector<std::uint32_t>{1, 0});

  // dependent rows collapse
  json jd = {{"p", 3}, {"dim", 2}, {"basis", {{1, 1}, {2, 2}}}};
  CHECK(subspace_from_json(jd).basis.size() == 1);
}

TEST_CASE("subspace json rejects malformed input") {
  CHECK_THROWS_AS(subspace_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(subspace_from_json(json{{"p", 3}, {"dim", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(subspace_from_json(json{{"p", 4}, {"dim", 2}, {"basis", json::array()}}),
                  std::invalid_argument);
  json bad_row = {{"p", 3}, {"dim", 2}, {"basis", {{1, 0, 0}}}};
  CHECK_THROWS_AS(subspace_from_json(bad_row), std::invalid_argument);
}

TEST_CASE("representation json round trip") {
  auto rep = gl_natural_rep(2, 5);
  auto j = rep_to_json(rep);
  CHECK(j.at("p") == 5);
  CHECK(j.at("d") == 2);
  CHECK(j.at("label") == "gl:2");
  REQUIRE(j.at("operators").size() == 4);
  auto back = rep_from_json(j);
  CHECK(back.p == rep.p);
  CHECK(back.d == rep.d);
  CHECK(back.label == rep.label);
  REQUIRE(back.operators.size() == rep.operators.size());
  for (std::size_t i = 0; i < rep.operators.size(); ++i)
    CHECK(back.operators[i].a == rep.operators[i].a);
}

TEST_CASE("representation json validates shape") {
  json j;
  j["p"] = 5;
  j["d"] = 2;
  j["operators"] = json::array({json::array({json::array({1, 0, 0})})});
  CHECK_THROWS_AS(rep_from_json(j), std::invalid_argument);  // 1x3 operator on d=2

  json missing;
  missing["p"] = 5;
  CHECK_THROWS_AS(rep_from_json(missing), std::invalid_argument);

  json empty_ops;
  empty_ops["p"] = 5;
  empty_ops["d"] = 2;
  empty_ops["operators"] = json::array();
  CHECK_THROWS_AS(rep_from_json(empty_ops), std::invalid_argument);  // validate_rep wants ops
}

TEST_CASE("orbit report json") {
  auto rep = gl_natural_rep(2, 3);
  auto ex = exhaustive_min_orbit(rep);
  auto j = orbit_report_to_json(ex);
  CHECK(j.at("u") == 2);
  CHECK(j.at("bound") == "exact");
  CHECK(j.at("mode") == "exhaustive");
  CHECK_FALSE(j.contains("seed"));
  CHECK_FALSE(j.contains("prng"));
  REQUIRE(j.at("witnesses").size() >= 1);
  CHECK(j.at("witnesses")[0].at("dim") == 2);
  CHECK(j.at("witnesses")[0].at("vector").size() == 2);

  auto sm = sampled_min_orbit(rep, 100, 7);
  auto js = orbit_report_to_json(sm);
  CHECK(js.at("mode") == "sampled");
  CHECK(js.at("bound") == "upper");
  CHECK(js.at("seed") == 7);
  CHECK(js.at("prng") == "splitmix64");
}

TEST_CASE("subspace family json") {
  auto fam = orbit_subspace_family(gl_natural_rep(2, 3));
  auto j = family_to_json(fam);
  CHECK(j.at("min_dim") == 2);
  CHECK(j.at("distinct_subspaces") == j.at("entries").size());
  std::uint64_t total = 0;
  for (const auto& e : j.at("entries")) {
    CHECK(e.contains("subspace"));
    total += e.at("orbit_count").get<std::uint64_t>();
  }
  CHECK(total == 4);  // (3^2 - 1) / 2 projective points
}

TEST_CASE("cartan matrix json") {
  std::vector<std::vector<int>> a2 = {{2, -1}, {-1, 2}};
  auto j = cartan_to_json(a2);
  CHECK(cartan_from_json(j) == a2);
  json wrapped;
  wrapped["cartan"] = j;
  CHECK(cartan_from_json(wrapped) == a2);

  CHECK_THROWS_AS(cartan_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(cartan_from_json(json::parse("[[2,-1]]")), std::invalid_argument);  // not square
  CHECK_THROWS_AS(cartan_from_json(json::parse("[[2,\"x\"],[0,2]]")), std::invalid_argument);
  CHECK_THROWS_AS(cartan_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("chevalley algebra json for sl2") {
  auto rs = build_root_system('A', 1);
  auto alg = chevalley_algebra(rs);
  auto j = chevalley_to_json(alg);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("rank") == 1);
  CHECK(j.at("family") == "A");
  REQUIRE(j.at("basis").size() == 3);
  CHECK(j.at("basis")[0] == "e[1]");
  CHECK(j.at("basis")[1] == "h1");
  CHECK(j.at("basis")[2] == "e[-1]");

  // [e,h] = -2e, [e,f] = h, [h,f] = -2f
  json expected = json::array({
      json::array({0, 1, json::array({json::array({0, -2})})}),
      json::array({0, 2, json::array({json::array({1, 1})})}),
      json::array({1, 2, json::array({json::array({2, -2})})}),
  });
  CHECK(j.at("brackets") == expected);
}

TEST_CASE("ideal json round trip") {
  json spec = json::array({"1*v1^2+2*v2^2", "1*v1*v2"});
  auto j = ideal_from_json(spec, 3, 2);
  REQUIRE(j.gens.size() == 2);
  CHECK(to_string(j.gens[0]) == "1*v1^2+2*v2^2");
  CHECK(ideal_to_json(j) == spec);

  json wrapped;
  wrapped["generators"] = spec;
  CHECK(ideal_from_json(wrapped, 3, 2).gens.size() == 2);

  CHECK_THROWS_AS(ideal_from_json(json::object(), 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(json::array({1}), 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(json::array({"1*v1+1"}), 3, 2), std::invalid_argument);
}

TEST_CASE("report serialization is byte stable") {
  auto rep = gl_natural_rep(2, 3);
  json report;
  report["inputs"] = {{"system", "gl2"}, {"p", 3}};
  report["results"] = orbit_report_to_json(exhaustive_min_orbit(rep));
  report["status"] = "ok";
  std::string once = report.dump(2);
  std::string twice = json::parse(once).dump(2);
  CHECK(once == twice);
}
