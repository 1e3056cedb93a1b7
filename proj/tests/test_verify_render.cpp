#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "peano/counting.hpp"
#include "peano/render.hpp"
#include "peano/verify.hpp"
#include "peano/word.hpp"

using namespace peano;

namespace {

std::vector<VerificationRecord> strip_elapsed(std::vector<VerificationRecord> r) {
  for (auto& rec : r) rec.elapsed_ms = 0.0;
  return r;
}

bool same_content(const std::vector<VerificationRecord>& a,
                  const std::vector<VerificationRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].suite != b[i].suite || a[i].n != b[i].n ||
        a[i].pattern != b[i].pattern || a[i].ell != b[i].ell ||
        a[i].oracle != b[i].oracle || a[i].formula != b[i].formula ||
        a[i].match != b[i].match) {
      return false;
    }
  }
  return true;
}

// First and last "x,y" vertex of the rendered polyline.
std::pair<std::pair<long, long>, std::pair<long, long>> end_points(
    const std::string& svg) {
  const auto from = svg.find("points=\"") + 8;
  const auto to = svg.find('"', from);
  const std::string pts = svg.substr(from, to - from);
  const auto first = pts.substr(0, pts.find(' '));
  const auto last = pts.substr(pts.rfind(' ') + 1);
  auto parse = [](const std::string& s) {
    const auto comma = s.find(',');
    return std::make_pair(std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1)));
  };
  return {parse(first), parse(last)};
}

}  // namespace

TEST_CASE("rises suite: one matching record per iteration") {
  SuiteConfig cfg;
  cfg.suites = {"rises"};
  cfg.max_n = 4;
  const VerifyOutcome out = run_suites(cfg);
  REQUIRE(out.records.size() == 4);
  for (const auto& r : out.records) {
    CHECK(r.suite == "rises");
    CHECK(r.match);
  }
  CHECK(out.status == VerifyStatus::all_match);
  CHECK(exit_code(out.status) == 0);
}

TEST_CASE("frequencies suite at max n 1 is a single matching record") {
  SuiteConfig cfg;
  cfg.suites = {"frequencies"};
  cfg.max_n = 1;
  const VerifyOutcome out = run_suites(cfg);
  REQUIRE(out.records.size() == 1);
  CHECK(out.records[0].oracle == "(1,1,1,0)");
  CHECK(out.records[0].formula == "(1,1,1,0)");
  CHECK(out.records[0].match);
}

TEST_CASE("tables suite reports the suspect entries as mismatches") {
  SuiteConfig cfg;
  cfg.suites = {"tables"};
  cfg.max_n = 2;
  cfg.max_ell = 1;
  const VerifyOutcome out = run_suites(cfg);
  REQUIRE(out.records.size() == 52);  // 13 instances x 2 iterations x l in {0,1}

  bool saw_suspect = false;
  for (const auto& r : out.records) {
    if (r.pattern == "[1-1^1)" && r.n == 2) {
      saw_suspect = true;
      CHECK(!r.match);
      CHECK(r.oracle == "4");
      CHECK(r.formula == "5");
    }
  }
  CHECK(saw_suspect);
  CHECK(out.status == VerifyStatus::suspect_only);
  CHECK(exit_code(out.status) == 10);
  CHECK(out.mismatches == 3);
  CHECK(out.suspect_mismatches == 3);
}

TEST_CASE("worker count does not change report content") {
  SuiteConfig one;
  one.suites = {"all"};
  one.max_n = 3;
  one.max_ell = 2;
  one.workers = 1;
  SuiteConfig eight = one;
  eight.workers = 8;
  const VerifyOutcome a = run_suites(one);
  const VerifyOutcome b = run_suites(eight);
  CHECK(a.status == b.status);
  REQUIRE(same_content(strip_elapsed(a.records), strip_elapsed(b.records)));

  // and a re-run with the same config is byte-identical modulo elapsed
  const VerifyOutcome c = run_suites(one);
  REQUIRE(same_content(strip_elapsed(a.records), strip_elapsed(c.records)));
}

TEST_CASE("unknown suites are rejected") {
  SuiteConfig cfg;
  cfg.suites = {"nonsense"};
  CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
}

TEST_CASE("known errata are exactly the two even-iteration rows") {
  CHECK(is_known_erratum(TauKind::tau1, 1, 1, std::nullopt, 2));
  CHECK(is_known_erratum(TauKind::tau2, 1, 1, std::nullopt, 4));
  CHECK(is_known_erratum(TauKind::tau3, 1, 1, 1, 6));
  CHECK(!is_known_erratum(TauKind::tau1, 1, 1, std::nullopt, 3));
  CHECK(!is_known_erratum(TauKind::tau3, 1, 1, 1, 5));
  CHECK(!is_known_erratum(TauKind::tau1, 1, 2, std::nullopt, 2));
  CHECK(!is_known_erratum(TauKind::tau3, 1, 1, 2, 2));
  CHECK(!is_known_erratum(TauKind::tau3, 1, 2, 1, 2));
}

TEST_CASE("report lines carry exactly the agreed keys, in order") {
  SuiteConfig cfg;
  cfg.suites = {"powers"};
  cfg.max_n = 2;
  cfg.max_ell = 2;
  const VerifyOutcome out = run_suites(cfg);
  std::ostringstream os;
  write_report(os, out.records);

  std::istringstream is(os.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(is, line)) {
    ++lines;
    const auto j = nlohmann::ordered_json::parse(line);
    const std::vector<std::string> keys = {"suite",  "n",       "pattern", "l",
                                           "oracle", "formula", "match",   "elapsed_ms"};
    REQUIRE(j.size() == keys.size());
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      REQUIRE(it.key() == keys[i]);
    }
    CHECK(j["l"].is_number());  // powers records carry l
    CHECK(j["match"].is_boolean());
  }
  CHECK(lines == out.records.size());

  // suites without an l serialize it as null
  SuiteConfig freq;
  freq.suites = {"frequencies"};
  freq.max_n = 1;
  std::ostringstream os2;
  write_report(os2, run_suites(freq).records);
  const auto j2 = nlohmann::ordered_json::parse(os2.str());
  CHECK(j2["l"].is_null());
}

TEST_CASE("records come out in canonical order") {
  SuiteConfig cfg;
  cfg.suites = {"tables", "rises"};
  cfg.max_n = 2;
  cfg.max_ell = 1;
  const VerifyOutcome out = run_suites(cfg);
  for (std::size_t i = 1; i < out.records.size(); ++i) {
    const auto& a = out.records[i - 1];
    const auto& b = out.records[i];
    const auto ka = std::tie(a.suite, a.n, a.pattern, a.ell);
    const auto kb = std::tie(b.suite, b.n, b.pattern, b.ell);
    REQUIRE(ka <= kb);
  }
}

TEST_CASE("svg polyline geometry") {
  const std::string svg = render_svg(1);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  // up, right, down from the origin; y is flipped on screen
  CHECK(svg.find("points=\"0,0 0,-1 1,-1 1,0\"") != std::string::npos);

  const std::string svg2 = render_svg(2);
  const auto [first2, last2] = end_points(svg2);
  CHECK(first2 == std::make_pair(0L, 0L));
  CHECK(last2 == std::make_pair(3L, 0L));  // (#2 - #4, #1 - #3) = (3, 0)

  CHECK_THROWS_AS(render_svg(0), std::out_of_range);
  CHECK_THROWS_AS(render_svg(11), std::out_of_range);
}

TEST_CASE("net displacement equals the frequency imbalance") {
  for (int n = 1; n <= 10; ++n) {
    const auto [first, last] = end_points(render_svg(n));
    CHECK(first == std::make_pair(0L, 0L));
    const FrequencyVector f = frequency_formula(n);
    const BigCount dx = f.of(2) - f.of(4);
    const BigCount dy = f.of(1) - f.of(3);
    REQUIRE(BigCount(last.first) == dx);
    REQUIRE(BigCount(-last.second) == dy);  // svg y is flipped
    REQUIRE(dx == boost::multiprecision::pow(BigCount(2), n) - 1);
    REQUIRE(dy == 0);
  }
}

TEST_CASE("vertex count is 4^n") {
  for (int n = 1; n <= 5; ++n) {
    const std::string svg = render_svg(n);
    const auto from = svg.find("points=\"") + 8;
    const auto to = svg.find('"', from);
    std::size_t vertices = 1;
    for (std::size_t i = from; i < to; ++i) {
      if (svg[i] == ' ') ++vertices;
    }
    REQUIRE(vertices == word_length(n) + 1);
  }
}
