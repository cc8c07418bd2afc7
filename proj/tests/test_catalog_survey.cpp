#include <algorithm>
#include <set>

#include "doctest.h"
#include "powerclass/catalog.hpp"
#include "powerclass/groups.hpp"
#include "powerclass/survey.hpp"
#include "support/oracles.hpp"

using namespace powerclass;

namespace {

std::vector<std::string> specs_of_order(const Catalog& c, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& e : c)
    if (e.order == n) out.push_back(e.spec);
  return out;
}

}  // namespace

TEST_CASE("invariant factor lists") {
  CHECK(invariant_factor_lists(1) == std::vector<std::vector<std::size_t>>{{}});
  CHECK(invariant_factor_lists(8).size() == 3);
  CHECK(invariant_factor_lists(36).size() == 4);
  CHECK(invariant_factor_lists(16).size() == 5);
  for (std::size_t n = 2; n <= 64; ++n)
    for (const auto& list : invariant_factor_lists(n)) {
      std::size_t prod = 1;
      for (std::size_t i = 0; i < list.size(); ++i) {
        prod *= list[i];
        if (i > 0) REQUIRE(list[i] % list[i - 1] == 0);
      }
      REQUIRE(prod == n);
    }
}

TEST_CASE("catalog examples") {
  const auto c = generate_catalog(12);
  CHECK(specs_of_order(c, 1) == std::vector<std::string>{"cyclic:1"});
  const auto eight = specs_of_order(c, 8);
  CHECK(eight.size() == 5);
  CHECK(std::count(eight.begin(), eight.end(), "dihedral:4") == 1);
  CHECK(std::count(eight.begin(), eight.end(), "quaternion:2") == 1);
  CHECK(std::count(eight.begin(), eight.end(), "cyclic:8") == 1);
  CHECK(specs_of_order(c, 9).size() == 2);
  CHECK(specs_of_order(c, 12).size() == 4);
  CHECK(std::is_sorted(c.begin(), c.end(), [](const auto& a, const auto& b) {
    return std::tie(a.order, a.spec) < std::tie(b.order, b.spec);
  }));
}

TEST_CASE("catalog entries are distinct and constructible") {
  const auto c = generate_catalog(48);
  std::set<std::string> seen;
  for (const auto& e : c) {
    CAPTURE(e.spec);
    REQUIRE(seen.insert(e.spec).second);
    const auto g = construct_group(e.spec);
    REQUIRE(g.order() == e.order);
    if (e.order <= 16) REQUIRE(oracle::brute_is_group(g));
  }
}

TEST_CASE("survey flags exactly the odd prime-power cyclic groups") {
  const auto r = run_survey(generate_catalog(15), {});
  CHECK(r.mismatches.empty());
  CHECK(r.overfull_groups ==
        std::vector<std::string>{"cyclic:3", "cyclic:5", "cyclic:7", "cyclic:9", "cyclic:11", "cyclic:13"});
  CHECK(run_survey(generate_catalog(2), {}).overfull_groups.empty());
}

TEST_CASE("survey with witnesses and oracle") {
  SurveyOptions opt;
  opt.witness = true;
  opt.oracle_max_order = 10;
  const auto r = run_survey(generate_catalog(27), opt);
  CHECK(r.mismatches.empty());
  for (const auto& rep : r.reports) {
    CAPTURE(rep.spec);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->verified);
    if (rep.spec == "cyclic:27") CHECK(rep.witness->colors_used == 27);
    if (rep.spec == "cyclic:15") CHECK(rep.witness->colors_used == 14);
    if (rep.spec == "cyclic:21") CHECK(rep.witness->colors_used == 20);
    CHECK(rep.oracle.has_value() == (rep.order <= 10));
  }
}

TEST_CASE("survey output is reproducible and thread-independent") {
  SurveyOptions opt;
  opt.witness = true;
  opt.oracle_max_order = 8;
  const auto cat = generate_catalog(30);
  const auto a = survey_to_json(run_survey(cat, opt), opt, 30).dump(2);
  const auto b = survey_to_json(run_survey(cat, opt), opt, 30).dump(2);
  const auto s = survey_to_json(run_survey_serial(cat, opt), opt, 30).dump(2);
  CHECK(a == b);
  CHECK(a == s);
  opt.threads = 1;
  CHECK(survey_to_json(run_survey(cat, opt), opt, 30).dump(2) == a);
}

TEST_CASE("survey json shape") {
  const auto j = survey_to_json(run_survey(generate_catalog(4), {}), {}, 4);
  CHECK(j.contains("params"));
  CHECK(j["reports"].size() == generate_catalog(4).size());
  CHECK(j["summary"]["overfull_groups"] == nlohmann::json::array({"cyclic:3"}));
  CHECK(j["summary"]["mismatches"].empty());
}
