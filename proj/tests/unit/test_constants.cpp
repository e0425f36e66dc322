#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "betabranch/algebraic/parse.hpp"
#include "betabranch/constants/registry.hpp"
#include "betabranch/constants/verify.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"

using namespace betabranch;
using namespace betabranch::constants;
using algebraic::FieldElement;
using algebraic::Rational;

namespace {

/// H = Holds, E = EqualityBoundary, F = Fails, one letter per report.
std::string outcomes(const std::vector<VerificationReport>& reports) {
  std::string s;
  for (const auto& r : reports)
    s += r.outcome == Outcome::Holds ? 'H' : r.outcome == Outcome::Fails ? 'F' : 'E';
  return s;
}

struct Expected {
  const char* branching_points;
  const char* sequence_bounds;
  const char* first_half;
};

/// Reference outcomes computed independently in 60-digit floating point.
const std::map<std::string, Expected>& reference() {
  static const std::map<std::string, Expected> table{
      {"q_aleph0", {"HEEH", "HHHH", "HHHHHHHHHEHH"}},
      {"r1", {"HFFH", "HEFH", "FHFFFFFHFFFF"}},
      {"r2", {"HFFH", "HHEH", "FHEFHFFHFFFF"}},
      {"r3", {"HFFH", "HHHH", "EHHFHFFHFFEF"}},
      {"r4", {"HFFH", "HHHH", "HHHEHHHHHFHE"}},
      {"r5", {"HFFH", "HHHH", "HHHFHFEHHFHF"}},
      {"q_2", {"HFFH", "HFFH", "FHFFFFFFFFFF"}},
  };
  return table;
}

}  // namespace

TEST_CASE("registry decimals match the reference digits") {
  const std::map<std::string, std::string> printed{{"golden", "1.61803"}, {"q_2", "1.71064"}, {"q_f", "1.75488"},
                                                   {"q_aleph0", "1.64541"}, {"r1", "1.69765"}, {"r2", "1.68042"},
                                                   {"r3", "1.67602"}, {"r4", "1.65462"}, {"r5", "1.66184"}};
  CHECK(registry().size() == printed.size());
  for (const auto& b : registry()) {
    CHECK(printed.at(b.name) == b.approx);
    const auto r = algebraic::refine(b.value, Rational(1, 1000000));
    CHECK(algebraic::rational_to_decimal(r.lo(), 5) == b.approx);
    CHECK(algebraic::rational_to_decimal(r.hi(), 5) == b.approx);
    CHECK(compare(b.value, Rational(1)) > 0);
    CHECK(compare(b.value, Rational(2)) < 0);
    CHECK(algebraic::parse_polynomial(b.relation) == b.polynomial);
  }
  CHECK(algebraic::to_decimal(lookup("golden").value, 10) == "1.6180339887");
}

TEST_CASE("lookup and the alpha family") {
  CHECK(lookup("q_aleph0").approx == "1.64541");
  CHECK(alpha(3).value == lookup("q_aleph0").value);
  CHECK(lookup("alpha5").value == alpha(5).value);
  CHECK(lookup("alpha_5").relation == "x^9=x^8+x^7+x^5-x^2-1");
  CHECK_THROWS_AS(alpha(2), Error);
  CHECK_THROWS_AS(lookup("q_17"), Error);
  CHECK_THROWS_AS(lookup("alpha_"), Error);
  for (const auto& s : sample_bases()) {
    CHECK(compare(s.value, lookup("golden").value) > 0);
    CHECK(compare(s.value, lookup("q_aleph0").value) < 0);
  }
}

TEST_CASE("verification outcomes agree with the reference table") {
  for (const auto& [name, expected] : reference()) {
    CAPTURE(name);
    const expansions::Base b(lookup(name).value);
    CHECK(outcomes(verify_prop_branching_points(b, name)) == expected.branching_points);
    CHECK(outcomes(verify_lemma_sequence_bounds(b, name)) == expected.sequence_bounds);
    CHECK(outcomes(verify_prop_first_half(b, name)) == expected.first_half);
  }
  for (const auto& s : sample_bases()) {
    CAPTURE(s.name);
    const expansions::Base b(s.value);
    CHECK(outcomes(verify_prop_branching_points(b, s.name)) == "HHHH");
    CHECK(outcomes(verify_lemma_sequence_bounds(b, s.name)) == "HHHH");
    CHECK(outcomes(verify_prop_first_half(b, s.name)) == "HHHHHHHHHHHH");
  }
}

TEST_CASE("reports carry windows and transcripts") {
  const expansions::Base b(lookup("r4").value);
  const auto reports = verify_prop_first_half(b, "r4");
  REQUIRE(reports.size() == 12);
  CHECK(reports[0].id == "first-half-1");
  CHECK(reports[0].inside_window == std::optional<bool>(true));   // r4 < r3
  CHECK(reports[3].inside_window == std::optional<bool>(false));  // window ends at r4
  CHECK(reports[9].inside_window == std::optional<bool>(false));  // window ends at q_aleph0
  for (const auto& r : reports) {
    CHECK_FALSE(r.transcript.empty());
    for (const auto& c : r.transcript) {
      CHECK((c.actual == "<" || c.actual == ">" || c.actual == "="));
      if (r.outcome == Outcome::Holds) CHECK(c.actual == c.expect);
    }
  }
  const auto j = to_json(reports[3]);
  CHECK(j["outcome"] == "EqualityBoundary");
  CHECK(j["id"] == "first-half-4");
  CHECK(j["transcript"].is_array());
  CHECK(outcomes(verify_prop_first_half(b, "r4", 25)) == outcomes(reports));
  CHECK_THROWS_AS(verify_prop_first_half(b, "r4", 2), Error);
  CHECK_THROWS_AS(verify_prop_branching_points(expansions::Base(lookup("golden").value), "golden"), Error);
}

TEST_CASE("second-half checks at q_aleph0") {
  const auto reports = verify_prop_second_half(2000);
  REQUIRE(reports.size() == 4);
  CHECK(outcomes(reports) == "HHHH");
  CHECK(reports[1].transcript.size() == 26);
}

TEST_CASE("alpha family properties") {
  const auto reports = verify_alpha_properties(10);
  CHECK(reports.size() == 2 + 2 * 8);
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.outcome == Outcome::Holds);
  }
  CHECK_THROWS_AS(verify_alpha_properties(2), Error);
}

TEST_CASE("identity suites") {
  for (const auto& nb : registry()) {
    const expansions::Base b(nb.value);
    std::vector<FieldElement> points;
    for (int i = 1; i < 10; ++i) points.push_back(b.element(Rational(i, 7)));
    CHECK(outcomes(verify_identities(b, nb.name, points)) == "HH");
  }
}

TEST_CASE("shifted branching values avoid the unique-expansion set (property)") {
  // For q below q_aleph0, T_0^{-j}(y) + 1 never has a unique expansion: it falls
  // strictly between two consecutive members of the explicit family.
  for (const auto& s : sample_bases()) {
    const expansions::Base b(s.value);
    const auto family = expansions::u_family(b, 60);
    for (const char* word : {"01|10", "011|10", "10|01", "100|01"}) {
      const FieldElement y = expansions::eval_word(b, expansions::EventuallyPeriodicWord::parse(word));
      FieldElement t = y;
      for (int j = 1; j <= 10; ++j) {
        t = t * b.switch_lo();
        const FieldElement v = t + Rational(1);
        const auto above = std::find_if(family.begin(), family.end(), [&](const auto& e) { return v < e.value; });
        REQUIRE(above != family.begin());
        REQUIRE(above != family.end());
        CHECK((above - 1)->value < v);
      }
    }
  }
}
