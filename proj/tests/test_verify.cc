#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expsum/verify.hpp"

using namespace expsum;

TEST_CASE("display matching under round-up") {
  // enclosure straddling a display boundary accepts both round-ups
  CHECK(detail::display_matches_up(BigRat(65215, 100000),
                                   BigRat(65225, 100000), "0.6522"));
  CHECK(detail::display_matches_up(BigRat(65215, 100000),
                                   BigRat(65225, 100000), "0.6523"));
  CHECK(!detail::display_matches_up(BigRat(65215, 100000),
                                    BigRat(65225, 100000), "0.6524"));
  // a reference printed one unit above the certified ceiling is tolerated
  // only when the enclosure itself is unambiguous
  CHECK(detail::display_matches_up(BigRat(65217586, 100000000),
                                   BigRat(65217587, 100000000), "0.6522"));
  CHECK(detail::display_matches_up(BigRat(65217586, 100000000),
                                   BigRat(65217587, 100000000), "0.6523"));
  CHECK(!detail::display_matches_up(BigRat(65217586, 100000000),
                                    BigRat(65217587, 100000000), "0.6524"));
}

TEST_CASE("display matching under round-down") {
  CHECK(detail::display_matches_down(BigRat(4243925, 10000000),
                                     BigRat(4243926, 10000000), "0.424"));
  CHECK(!detail::display_matches_down(BigRat(4243925, 10000000),
                                      BigRat(4243926, 10000000), "0.425"));
  // values with leading zeros in the fraction must not be misparsed
  CHECK(detail::display_matches_down(BigRat(577350, 1000000),
                                     BigRat(577351, 1000000), "0.577"));
  CHECK(!detail::display_matches_down(BigRat(577350, 1000000),
                                      BigRat(577351, 1000000), "0.583"));
}

TEST_CASE("scaled ceil/floor helpers") {
  BigInt thousand(1000);
  CHECK(detail::ceil_scaled(BigRat(1, 3), thousand) == 334);
  CHECK(detail::floor_scaled(BigRat(1, 3), thousand) == 333);
  CHECK(detail::ceil_scaled(BigRat(1, 2), thousand) == 500);
  CHECK(detail::floor_scaled(BigRat(-1, 3), thousand) == -334);
}

TEST_CASE("single check execution") {
  CheckResult r = run_check("lemma-5.1", Profile::Quick);
  CHECK(r.status == CheckStatus::Pass);
  CHECK_THROWS_AS(run_check("no-such-check", Profile::Quick), UnknownCheck);
}

TEST_CASE("origin-class rule helper") {
  CHECK(detail::positive_origin_rule(3));
  CHECK(detail::positive_origin_rule(4));
  CHECK(detail::positive_origin_rule(8));
  CHECK(!detail::positive_origin_rule(1));
  CHECK(!detail::positive_origin_rule(2));
  CHECK(!detail::positive_origin_rule(6));
}

TEST_CASE("report structure") {
  std::vector<CheckResult> rs{{"a", CheckStatus::Pass, "fine"},
                              {"b", CheckStatus::Fail, "broken"},
                              {"c", CheckStatus::Informational, "fyi"}};
  nlohmann::json j = report_json(rs, Profile::Quick);
  CHECK(j.at("profile") == "quick");
  REQUIRE(j.at("checks").size() == 3);
  CHECK(j["checks"][0]["check_id"] == "a");
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][2]["status"] == "informational");
}

TEST_CASE("table display rejects a perturbed value (negative control)") {
  // shift the certified n=5 full-plane enclosure by one display unit and
  // confirm the reference no longer matches
  BigRat lo(6892971, 10000000), hi(6892981, 10000000);
  CHECK(detail::display_matches_up(lo, hi, "0.690"));
  BigRat off(1, 1000);
  CHECK(!detail::display_matches_up(BigRat(lo + off), BigRat(hi + off), "0.690"));
}
