#include "betabranch/constants/verify.hpp"

#include <set>

#include "betabranch/branching/classify.hpp"
#include "betabranch/branching/membership.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"

namespace betabranch::constants {

using algebraic::FieldElement;
using algebraic::Rational;
using expansions::EventuallyPeriodicWord;
using expansions::Word;

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::EqualityBoundary: return "EqualityBoundary";
  }
  return "?";
}

namespace {

const char* symbol(std::strong_ordering c) { return c < 0 ? "<" : c > 0 ? ">" : "="; }

Outcome worse(Outcome a, Outcome b) {
  if (a == Outcome::Fails || b == Outcome::Fails) return Outcome::Fails;
  if (a == Outcome::EqualityBoundary || b == Outcome::EqualityBoundary) return Outcome::EqualityBoundary;
  return Outcome::Holds;
}

/// Accumulates exact comparisons into a report.
class Checker {
 public:
  explicit Checker(VerificationReport& report) : r_(report) {}

  /// Strict inequality lhs `expect` rhs; equality is a boundary case.
  Outcome strict(const FieldElement& a, const std::string& ad, const char* expect, const FieldElement& b,
                 const std::string& bd) {
    const auto c = compare(a, b);
    record(a, ad, expect, b, bd, c);
    const std::string actual = symbol(c);
    Outcome o = actual == expect ? Outcome::Holds : actual == "=" ? Outcome::EqualityBoundary : Outcome::Fails;
    r_.outcome = worse(r_.outcome, o);
    return o;
  }

  /// Exact identity a = b.
  Outcome equal(const FieldElement& a, const std::string& ad, const FieldElement& b, const std::string& bd) {
    const auto c = compare(a, b);
    record(a, ad, "=", b, bd, c);
    Outcome o = c == 0 ? Outcome::Holds : Outcome::Fails;
    r_.outcome = worse(r_.outcome, o);
    return o;
  }

  /// a in the open interval (lo, hi).
  Outcome inside(const FieldElement& a, const std::string& ad, const FieldElement& lo, const std::string& lod,
                 const FieldElement& hi, const std::string& hid) {
    return worse(strict(a, ad, ">", lo, lod), strict(a, ad, "<", hi, hid));
  }

 private:
  void record(const FieldElement& a, const std::string& ad, const char* expect, const FieldElement& b,
              const std::string& bd, std::strong_ordering c) {
    r_.transcript.push_back(
        {ad, bd, expect, symbol(c), algebraic::to_decimal(a, 8), algebraic::to_decimal(b, 8)});
  }

  VerificationReport& r_;
};

FieldElement word_value(const Base& base, std::string_view text) {
  return expansions::eval_word(base, EventuallyPeriodicWord::parse(text));
}

std::string word_desc(std::string_view text) { return "(" + std::string(text) + ")_q"; }

void require_golden_to_qf(const Base& base, const char* what) {
  if (!base.above_golden() || !base.below_qf())
    throw Error(ErrorKind::BaseOutOfRange,
                std::string(what) + " requires (1+sqrt5)/2 < q < q_f, got q = " + base.approx(6));
}

/// Window ((1+sqrt5)/2, end) in which an item is claimed to hold.
void set_window(VerificationReport& r, const Base& base, const NamedBase& end) {
  r.window = "((1+sqrt5)/2, " + end.approx + "...) [" + end.name + "]";
  r.inside_window = base.above_golden() && compare(base.value(), end.value) < 0;
}

VerificationReport report(std::string id, const std::string& name, std::string statement) {
  VerificationReport r;
  r.id = std::move(id);
  r.base = name;
  r.statement = std::move(statement);
  return r;
}

}  // namespace

std::vector<VerificationReport> verify_prop_branching_points(const Base& base, const std::string& name) {
  require_golden_to_qf(base, "the branching point memberships");
  const auto [jlo, jhi] = expansions::j_interval(base);
  const NamedBase& end = lookup("q_aleph0");
  struct Item {
    expansions::Digit d;
    bool high;
    const char* lo;
    const char* hi;
  };
  const Item items[] = {{0, false, "|10", "1|10"}, {0, true, "11|10", "111|10"}, {1, false, "000|01", "00|01"},
                        {1, true, "0|01", "|01"}};
  std::vector<VerificationReport> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Item& it = items[i];
    const std::string point = it.high ? "(1+q^3)/(q^4-1)" : "(q+q^2)/(q^4-1)";
    const std::string lhs = "T_" + std::to_string(it.d) + "(" + point + ")";
    VerificationReport r = report("branching-points-" + std::to_string(i + 1), name,
                                  lhs + " in (" + word_desc(it.lo) + ", " + word_desc(it.hi) + ")");
    Checker c(r);
    c.inside(expansions::t_map(base, it.d, it.high ? jhi : jlo), lhs, word_value(base, it.lo), word_desc(it.lo),
             word_value(base, it.hi), word_desc(it.hi));
    set_window(r, base, end);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_lemma_sequence_bounds(const Base& base, const std::string& name) {
  require_golden_to_qf(base, "the sequence bounds");
  const FieldElement rhs = expansions::t_map(base, 1, base.switch_hi());
  const std::string rhs_desc = "T_1(1/(q(q-1)))";
  const char* words[] = {"01|10", "011|10", "10|01", "100|01"};
  const char* windows[] = {"r1", "r1", "r2", "r2"};
  std::vector<VerificationReport> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string lhs = "T_0^-1" + word_desc(words[i]);
    VerificationReport r = report("sequence-bounds-" + std::to_string(i + 1), name, lhs + " < " + rhs_desc);
    Checker c(r);
    c.strict(word_value(base, words[i]) * base.switch_lo(), lhs, "<", rhs, rhs_desc);
    set_window(r, base, lookup(windows[i]));
    if (i == 0 || i == 3) r.note = "follows from item " + std::string(i == 0 ? "2" : "3") + " by monotonicity";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_prop_first_half(const Base& base, const std::string& name, std::size_t j_max) {
  require_golden_to_qf(base, "the first-half memberships");
  if (j_max < 3) throw Error(ErrorKind::InvalidArgument, "j_max must be at least 3");
  struct Group {
    const char* y;
    const char* j1_lo;
    const char* j1_hi;
    const char* window;
  };
  const Group groups[] = {{"01|10", "111|10", "1111|10", "r3"},
                          {"011|10", "1111|10", "11111|10", "r4"},
                          {"100|01", "111|10", "1111|10", "r5"},
                          {"10|01", "1111|10", "11111|10", "q_aleph0"}};
  std::vector<VerificationReport> out;
  std::size_t item = 0;
  for (const Group& g : groups) {
    const FieldElement y = word_value(base, g.y);
    const NamedBase& end = lookup(g.window);
    auto term = [&](std::size_t j) {
      FieldElement t = y;
      for (std::size_t i = 0; i < j; ++i) t = t * base.switch_lo();
      return t + Rational(1);
    };
    auto desc = [&](const std::string& j) { return "T_0^-" + j + word_desc(g.y) + "+1"; };

    {
      VerificationReport r = report("first-half-" + std::to_string(++item), name,
                                    desc("1") + " in (" + word_desc(g.j1_lo) + ", " + word_desc(g.j1_hi) + ")");
      Checker c(r);
      c.inside(term(1), desc("1"), word_value(base, g.j1_lo), word_desc(g.j1_lo), word_value(base, g.j1_hi),
               word_desc(g.j1_hi));
      set_window(r, base, end);
      out.push_back(std::move(r));
    }
    {
      VerificationReport r = report("first-half-" + std::to_string(++item), name,
                                    desc("2") + " in (" + word_desc("1|10") + ", " + word_desc("11|10") + ")");
      Checker c(r);
      c.inside(term(2), desc("2"), word_value(base, "1|10"), word_desc("1|10"), word_value(base, "11|10"),
               word_desc("11|10"));
      set_window(r, base, end);
      out.push_back(std::move(r));
    }
    {
      VerificationReport r = report("first-half-" + std::to_string(++item), name,
                                    desc("j") + " in (" + word_desc("|10") + ", " + word_desc("1|10") + ") for all j >= 3");
      Checker c(r);
      const FieldElement lo = word_value(base, "|10");
      const FieldElement hi = word_value(base, "1|10");
      for (std::size_t j = 3; j <= j_max; ++j)
        c.inside(term(j), desc(std::to_string(j)), lo, word_desc("|10"), hi, word_desc("1|10"));
      // The terms y/q^j + 1 decrease strictly to 1, so the j = 3 term bounds them from
      // above and the limit 1 from below.
      c.strict(term(3), desc("3"), "<", hi, word_desc("1|10"));
      c.strict(base.element(1), "lim_j " + desc("j") + " = 1", ">", lo, word_desc("|10"));
      r.note = "checked for 3 <= j <= " + std::to_string(j_max) + "; tail certified by monotone convergence to 1";
      set_window(r, base, end);
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

Word w(std::string_view s) { return expansions::parse_word(s); }

/// Family words for one endpoint: P^inf, P^k A, P^k B for k >= 0.
std::vector<EventuallyPeriodicWord> family(const Word& p, const Word& a_pre, const Word& a_per, const Word& b_pre,
                                           const Word& b_per, std::size_t k_max) {
  std::vector<EventuallyPeriodicWord> out{EventuallyPeriodicWord({}, p)};
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (auto [pre, per] : {std::pair{a_pre, a_per}, std::pair{b_pre, b_per}}) {
      Word full = expansions::power(p, k);
      full.insert(full.end(), pre.begin(), pre.end());
      out.emplace_back(std::move(full), per);
    }
  }
  return out;
}

}  // namespace

std::vector<VerificationReport> verify_prop_second_half(std::size_t max_states) {
  const NamedBase& qa = lookup("q_aleph0");
  const Base base(qa.value);
  const auto [jlo, jhi] = expansions::j_interval(base);
  const std::string jlo_d = "(q+q^2)/(q^4-1)", jhi_d = "(1+q^3)/(q^4-1)";
  std::vector<VerificationReport> out;

  {
    VerificationReport r = report("second-half-a", qa.name,
                                  "T_0(" + jhi_d + ") = " + word_desc("111|10") + " and T_1(" + jlo_d + ") = " +
                                      word_desc("000|01"));
    Checker c(r);
    c.equal(expansions::t_map(base, 0, jhi), "T_0(" + jhi_d + ")", word_value(base, "111|10"), word_desc("111|10"));
    c.equal(expansions::t_map(base, 1, jlo), "T_1(" + jlo_d + ")", word_value(base, "000|01"), word_desc("000|01"));
    out.push_back(std::move(r));
  }

  // Families up to k = 8 already cover every length-30 prefix.
  const auto hi_family = family(w("1001"), w("0111"), w("10"), w("101000"), w("01"), 8);
  const auto lo_family = family(w("0110"), w("1000"), w("01"), w("010111"), w("10"), 8);
  {
    VerificationReport r = report("second-half-b", qa.name,
                                  "the listed expansions of both J_q endpoints evaluate to the endpoints (k = 0..5)");
    Checker c(r);
    for (std::size_t i = 0; i < 13; ++i) {
      const auto& e = hi_family[i];
      c.equal(expansions::eval_word(base, e), word_desc(expansions::to_string(e)), jhi, jhi_d);
    }
    for (std::size_t i = 0; i < 13; ++i) {
      const auto& e = lo_family[i];
      c.equal(expansions::eval_word(base, e), word_desc(expansions::to_string(e)), jlo, jlo_d);
    }
    out.push_back(std::move(r));
  }

  {
    VerificationReport r = report("second-half-c", qa.name,
                                  "both J_q endpoints have countably infinitely many expansions and are null infinite");
    std::string note;
    for (const auto& [x, d] : {std::pair{jlo, jlo_d}, std::pair{jhi, jhi_d}}) {
      const auto g = branching::build_state_graph(base, x, max_states);
      const auto card = branching::classify_paths(g);
      const auto null = branching::is_null_infinite(g);
      r.transcript.push_back({"card " + d, "CountablyInfinite", "=",
                              card.kind == branching::Cardinality::Kind::CountablyInfinite ? "=" : "!=",
                              branching::to_string(card), std::to_string(g.states.size()) + " states"});
      r.transcript.push_back({"null infinite " + d, "Yes", "=", null == branching::Verdict::Yes ? "=" : "!=",
                              std::string(branching::to_string(null)), ""});
      if (card.kind != branching::Cardinality::Kind::CountablyInfinite || null != branching::Verdict::Yes)
        r.outcome = Outcome::Fails;
    }
    out.push_back(std::move(r));
  }

  {
    constexpr std::size_t n = 30;
    VerificationReport r = report("second-half-d", qa.name,
                                  "the admissible length-30 prefixes of both endpoints are exactly those of the families");
    for (const auto& [x, fam, d] : {std::tuple{jlo, &lo_family, jlo_d}, std::tuple{jhi, &hi_family, jhi_d}}) {
      std::set<Word> expected;
      for (const auto& e : *fam) expected.insert(e.prefix(n));
      const auto got = branching::enumerate_prefixes(base, x, n);
      const std::set<Word> actual(got.begin(), got.end());
      const bool same = actual == expected;
      r.transcript.push_back({"prefixes(" + d + ", 30)", "family prefixes", "=", same ? "=" : "!=",
                              std::to_string(actual.size()) + " words", std::to_string(expected.size()) + " words"});
      if (!same) r.outcome = Outcome::Fails;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_alpha_properties(std::size_t k_max) {
  if (k_max < 3) throw Error(ErrorKind::InvalidArgument, "k_max must be at least 3");
  std::vector<NamedBase> alphas;
  for (std::size_t k = 3; k <= k_max; ++k) alphas.push_back(alpha(static_cast<unsigned>(k)));
  std::vector<VerificationReport> out;

  auto ordering_row = [](VerificationReport& r, const NamedBase& a, const char* expect, const NamedBase& b) {
    const auto c = compare(a.value, b.value);
    r.transcript.push_back({a.name, b.name, expect, symbol(c), algebraic::to_decimal(a.value, 8),
                            algebraic::to_decimal(b.value, 8)});
    if (std::string(symbol(c)) != expect) r.outcome = Outcome::Fails;
  };
  {
    VerificationReport r = report("alpha-a", "alpha_3", "alpha_3 = q_aleph0");
    ordering_row(r, alphas[0], "=", lookup("q_aleph0"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r =
        report("alpha-b", "alpha_3..alpha_" + std::to_string(k_max), "alpha_3 < alpha_4 < ... < alpha_k_max < q_f");
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i) ordering_row(r, alphas[i], "<", alphas[i + 1]);
    ordering_row(r, alphas.back(), "<", lookup("q_f"));
    out.push_back(std::move(r));
  }
  for (std::size_t k = 3; k <= k_max; ++k) {
    const NamedBase& a = alphas[k - 3];
    const Base base(a.value);
    {
      const std::string target = std::string(k, '1') + "|10";
      VerificationReport r = report("alpha-c-" + std::to_string(k), a.name,
                                    "T_0((1+q^3)/(q^4-1)) = " + word_desc(target));
      Checker c(r);
      c.equal(expansions::t_map(base, 0, expansions::j_interval(base).second), "T_0((1+q^3)/(q^4-1))",
              word_value(base, target), word_desc(target));
      out.push_back(std::move(r));
    }
    {
      VerificationReport r = report("alpha-d-" + std::to_string(k), a.name, "P_q = U_{k,q} with k = " + std::to_string(k));
      const auto p = branching::p_q_set(base);
      const auto u = branching::u_k_set(base, k);
      bool same = p.size() == u.size();
      for (std::size_t i = 0; same && i < p.size(); ++i) same = p[i].value == u[i].value;
      std::string pw, uw;
      for (const auto& e : p) pw += (pw.empty() ? "" : " ") + expansions::to_string(e.word);
      for (const auto& e : u) uw += (uw.empty() ? "" : " ") + expansions::to_string(e.word);
      r.transcript.push_back({"P_q", "U_{k,q}", "=", same ? "=" : "!=", pw, uw});
      if (!same) r.outcome = Outcome::Fails;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_identities(const Base& base, const std::string& name,
                                                  const std::vector<FieldElement>& points) {
  const auto [jlo, jhi] = expansions::j_interval(base);
  std::vector<VerificationReport> out;
  {
    VerificationReport r = report("identities-period-four", name, "T_1(T_0(J_lo)) = J_hi and T_0(T_1(J_hi)) = J_lo");
    Checker c(r);
    c.equal(expansions::t_map(base, 1, expansions::t_map(base, 0, jlo)), "T_1(T_0((q+q^2)/(q^4-1)))", jhi,
            "(1+q^3)/(q^4-1)");
    c.equal(expansions::t_map(base, 0, expansions::t_map(base, 1, jhi)), "T_0(T_1((1+q^3)/(q^4-1)))", jlo,
            "(q+q^2)/(q^4-1)");
    out.push_back(std::move(r));
  }
  {
    VerificationReport r = report("identities-scaling", name, "T_1 o T_0 and T_0 o T_1 scale distances to 1/(q^2-1), q/(q^2-1) by q^2");
    Checker c(r);
    const FieldElement q2 = base.q() * base.q();
    const FieldElement a = (q2 - Rational(1)).inverse();
    const FieldElement b = base.q() * a;
    for (const FieldElement& y : points) {
      const std::string yd = algebraic::to_string(y, "q");
      c.equal(expansions::t_map(base, 1, expansions::t_map(base, 0, y)) - a, "T_1(T_0(" + yd + ")) - 1/(q^2-1)",
              q2 * (y - a), "q^2(y - 1/(q^2-1))");
      c.equal(b - expansions::t_map(base, 0, expansions::t_map(base, 1, y)), "q/(q^2-1) - T_0(T_1(" + yd + "))",
              q2 * (b - y), "q^2(q/(q^2-1) - y)");
    }
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json transcript = nlohmann::json::array();
  for (const auto& c : r.transcript)
    transcript.push_back({{"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"expect", c.expect},
                          {"actual", c.actual},
                          {"lhs_approx", c.lhs_approx},
                          {"rhs_approx", c.rhs_approx}});
  nlohmann::json j{{"id", r.id},
                   {"base", r.base},
                   {"outcome", to_string(r.outcome)},
                   {"statement", r.statement},
                   {"transcript", transcript}};
  if (!r.window.empty()) j["window"] = r.window;
  if (r.inside_window) j["inside_window"] = *r.inside_window;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace betabranch::constants
