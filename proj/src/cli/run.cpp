#include "betabranch/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "betabranch/branching/classify.hpp"
#include "betabranch/branching/membership.hpp"
#include "betabranch/branching/serialize.hpp"
#include "betabranch/branching/state_graph.hpp"
#include "betabranch/branching/tree.hpp"
#include "betabranch/cli/specs.hpp"
#include "betabranch/constants/registry.hpp"
#include "betabranch/constants/verify.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"

namespace betabranch::cli {

using algebraic::FieldElement;
using algebraic::Rational;
using branching::Cardinality;
using expansions::Base;
using nlohmann::json;

namespace {

/// Input error detected by the command layer itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Dot: return "dot";
  }
  return "?";
}

/// The requested format, or `fallback`; rejects formats the command cannot produce.
Format pick_format(const RunConfig& c, Format fallback, std::initializer_list<Format> allowed) {
  const Format f = c.format.value_or(fallback);
  if (std::find(allowed.begin(), allowed.end(), f) != allowed.end()) return f;
  std::string list;
  for (Format a : allowed) list += (list.empty() ? "" : "|") + std::string(format_name(a));
  throw UsageError(c.command + " supports --format " + list + ", not " + std::string(format_name(f)));
}

std::size_t max_states(const RunConfig& c) {
  return c.max_states == 0 ? branching::default_max_states() : c.max_states;
}

BaseSpec one_base(const RunConfig& c) {
  if (c.bases.size() != 1) throw UsageError(c.command + " needs exactly one --base");
  return parse_base_spec(c.bases.front());
}

std::string one_point(const RunConfig& c) {
  if (c.points.size() != 1) throw UsageError(c.command + " needs exactly one --x");
  return c.points.front();
}

bool is_unknown(const Cardinality& card) { return card.kind == Cardinality::Kind::Unknown; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

int cmd_constants(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Text, {Format::Text, Format::Json, Format::Csv});
  const int digits = static_cast<int>(c.digits.value_or(12));
  std::vector<constants::NamedBase> list = constants::registry();
  if (c.all) {
    for (std::size_t k = 3; k <= c.k_max; ++k) list.push_back(constants::alpha(static_cast<unsigned>(k)));
    for (const auto& s : constants::sample_bases()) list.push_back(s);
  }
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& b : list)
      arr.push_back({{"name", b.name},
                     {"relation", b.relation},
                     {"polynomial", algebraic::to_string(b.polynomial)},
                     {"approx", b.approx},
                     {"value", algebraic::to_decimal(b.value, digits)}});
    out << arr.dump(2) << "\n";
  } else if (f == Format::Csv) {
    out << "name,relation,polynomial,approx,value\n";
    for (const auto& b : list)
      out << b.name << ',' << csv_field(b.relation) << ',' << csv_field(algebraic::to_string(b.polynomial)) << ','
          << b.approx << ',' << algebraic::to_decimal(b.value, digits) << "\n";
  } else {
    for (const auto& b : list)
      out << std::left << std::setw(10) << b.name << "  " << std::setw(digits + 3)
          << algebraic::to_decimal(b.value, digits) << "  " << b.relation << "\n";
  }
  return exit_status::ok;
}

int cmd_expand(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Text, {Format::Text, Format::Json});
  const BaseSpec b = one_base(c);
  const std::string point = one_point(c);
  const FieldElement x = parse_point_spec(b.base, point);
  const std::size_t n = c.digits.value_or(20);
  const std::string mode = c.mode.empty() ? "greedy" : c.mode;
  std::vector<std::string> words;
  if (mode == "greedy" || mode == "lazy") {
    const auto m = mode == "greedy" ? expansions::ExpansionMode::Greedy : expansions::ExpansionMode::Lazy;
    words.push_back(expansions::to_string(expansions::greedy_lazy(b.base, x, n, m)));
  } else if (mode == "all") {
    for (const auto& w : branching::enumerate_prefixes(b.base, x, n)) words.push_back(expansions::to_string(w));
  } else {
    throw UsageError("expand --mode must be greedy, lazy or all, not '" + mode + "'");
  }
  if (f == Format::Json) {
    json j{{"base", b.text}, {"point", point}, {"mode", mode}, {"digits", n}};
    if (mode == "all")
      j["prefixes"] = words;
    else
      j["word"] = words.front();
    out << j.dump(2) << "\n";
  } else {
    for (const auto& w : words) out << w << "\n";
  }
  return exit_status::ok;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Json, {Format::Json, Format::Text, Format::Dot});
  const BaseSpec b = one_base(c);
  const std::string point = one_point(c);
  const FieldElement x = parse_point_spec(b.base, point);
  const std::size_t limit = max_states(c);
  const branching::StateGraph g = branching::build_state_graph(b.base, x, limit);
  const Cardinality card = branching::classify_expansions(g, limit);
  if (f == Format::Dot) {
    out << branching::to_dot(g);
  } else if (f == Format::Json) {
    json j{{"base", b.text},
           {"approx", b.base.approx(6)},
           {"point", point},
           {"rep", algebraic::to_string(x, "q")},
           {"classification", branching::kind_name(card.kind)},
           {"cardinality", branching::to_json(card)},
           {"states", g.states.size()},
           {"branching_states", g.branching_count()},
           {"complete", g.complete}};
    out << j.dump(2) << "\n";
  } else {
    out << branching::to_string(card) << "\n"
        << "states: " << g.states.size() << " (" << g.branching_count() << " branching), "
        << (g.complete ? "complete" : "incomplete") << "\n";
  }
  return is_unknown(card) ? exit_status::unknown : exit_status::ok;
}

int cmd_unique(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Text, {Format::Text, Format::Json});
  const BaseSpec b = one_base(c);
  const std::string point = one_point(c);
  const FieldElement x = parse_point_spec(b.base, point);
  const auto u = expansions::is_unique(b.base, x, c.max_steps);
  std::string expansion;
  if (u.kind == expansions::Uniqueness::Kind::Unique) {
    const auto orbit = expansions::follow_forced(b.base, x, c.max_steps);
    if (const auto* cyc = std::get_if<expansions::Cycle>(&orbit))
      expansion = expansions::to_string(expansions::EventuallyPeriodicWord(cyc->prefix, cyc->cycle));
  }
  if (f == Format::Json) {
    json j{{"base", b.text}, {"point", point}, {"unique", expansions::to_string(u.kind)}};
    if (!expansion.empty()) j["expansion"] = expansion;
    if (u.kind == expansions::Uniqueness::Kind::NotUnique) j["witness"] = expansions::to_string(u.witness);
    out << j.dump(2) << "\n";
  } else {
    out << expansions::to_string(u.kind);
    if (!expansion.empty()) out << "  " << expansion;
    if (u.kind == expansions::Uniqueness::Kind::NotUnique)
      out << "  reaches the switch region after " << (u.witness.empty() ? "no digits" : expansions::to_string(u.witness));
    out << "\n";
  }
  return u.kind == expansions::Uniqueness::Kind::Unknown ? exit_status::unknown : exit_status::ok;
}

int cmd_tree(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Dot, {Format::Dot, Format::Json});
  const BaseSpec b = one_base(c);
  const FieldElement x = parse_point_spec(b.base, one_point(c));
  const branching::TreeMode mode = branching::parse_tree_mode(c.mode.empty() ? "full" : c.mode);
  const auto t = branching::export_tree(b.base, x, mode, c.depth, max_states(c));
  if (f == Format::Json)
    out << branching::to_json(t).dump(2) << "\n";
  else
    out << branching::to_dot(t);
  return exit_status::ok;
}

int cmd_null_infinite(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Text, {Format::Text, Format::Json});
  const BaseSpec b = one_base(c);
  const std::string point = one_point(c);
  const FieldElement x = parse_point_spec(b.base, point);
  const auto g = branching::build_state_graph(b.base, x, max_states(c));
  const auto v = branching::is_null_infinite(g);
  if (f == Format::Json)
    out << json{{"base", b.text},
                {"point", point},
                {"null_infinite", branching::to_string(v)},
                {"states", g.states.size()},
                {"complete", g.complete}}
               .dump(2)
        << "\n";
  else
    out << branching::to_string(v) << "\n";
  return v == branching::Verdict::Unknown ? exit_status::unknown : exit_status::ok;
}

int cmd_membership(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Text, {Format::Text, Format::Json});
  const BaseSpec b = one_base(c);
  const auto m = branching::b_aleph0_membership(b.base, max_states(c));
  if (f == Format::Json) {
    json j = branching::to_json(m);
    j["base"] = b.text;
    out << j.dump(2) << "\n";
  } else {
    out << branching::to_string(m.kind);
    if (m.witness) out << "  witness " << expansions::to_string(m.witness->word);
    out << "  (" << m.checks.size() << " points of P_q checked)\n";
  }
  return m.kind == branching::Membership::Kind::Unknown ? exit_status::unknown : exit_status::ok;
}

struct SweepRow {
  std::string base, approx, point, classification, k, null_infinite, states, complete, error;
};

SweepRow sweep_row(const std::string& base_text, const std::string& point, std::size_t limit) {
  SweepRow r{base_text, "", point, "", "", "", "", "", ""};
  try {
    const BaseSpec b = parse_base_spec(base_text);
    r.approx = b.base.approx(6);
    const FieldElement x = parse_point_spec(b.base, point);
    const auto g = branching::build_state_graph(b.base, x, limit);
    const Cardinality card = branching::classify_expansions(g, limit);
    r.classification = branching::kind_name(card.kind);
    if (card.kind == Cardinality::Kind::Finite) r.k = card.count.get_str();
    if (card.kind == Cardinality::Kind::Unknown) r.error = card.reason;
    r.null_infinite = branching::to_string(branching::is_null_infinite(g));
    r.states = std::to_string(g.states.size());
    r.complete = g.complete ? "true" : "false";
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const Format f = pick_format(c, Format::Csv, {Format::Csv, Format::Json});
  if (c.bases.empty() || c.points.empty()) throw UsageError("sweep needs at least one --base and one --x");
  const std::size_t limit = max_states(c);
  std::vector<std::pair<std::string, std::string>> jobs;
  for (const auto& b : c.bases)
    for (const auto& p : c.points) jobs.emplace_back(b, p);

  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = sweep_row(jobs[i].first, jobs[i].second, limit);
  };
  const std::size_t n_threads = std::min<std::size_t>(jobs.size(), std::max(2u, std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  bool unknown = false;
  for (const auto& r : rows) unknown = unknown || !r.error.empty() || r.classification == "Unknown";
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"base", r.base},
                     {"approx", r.approx},
                     {"point", r.point},
                     {"classification", r.classification},
                     {"k", r.k},
                     {"null_infinite", r.null_infinite},
                     {"states", r.states},
                     {"complete", r.complete},
                     {"error", r.error}});
    out << arr.dump(2) << "\n";
  } else {
    out << "base,approx,point,classification,k,null_infinite,states,complete,error\n";
    for (const auto& r : rows)
      out << csv_field(r.base) << ',' << r.approx << ',' << csv_field(r.point) << ',' << r.classification << ','
          << r.k << ',' << r.null_infinite << ',' << r.states << ',' << r.complete << ',' << csv_field(r.error) << "\n";
  }
  return unknown ? exit_status::unknown : exit_status::ok;
}

struct VerifyFamily {
  std::string name;
  bool needs_base;
  std::function<std::vector<constants::VerificationReport>(const Base&, const std::string&)> run;
};

std::vector<FieldElement> identity_points(const Base& base) {
  const auto [jlo, jhi] = expansions::j_interval(base);
  const FieldElement q2m1 = base.q() * base.q() - Rational(1);
  const FieldElement mid = (base.q() + Rational(1)) * q2m1.inverse() * Rational(1, 2);
  return {jlo, jhi, base.switch_lo(), base.switch_hi(), base.element(Rational(1, 2)), mid};
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Format f = pick_format(c, Format::Text, {Format::Text, Format::Json});
  if (c.all == !c.item.empty()) throw UsageError("verify needs exactly one of --all and --item ID");
  if (c.bases.size() > 1) throw UsageError("verify takes at most one --base");
  const BaseSpec b = parse_base_spec(c.bases.empty() ? "q_aleph0" : c.bases.front());
  const std::size_t limit = max_states(c);
  const std::size_t j_max = c.digits.value_or(10);
  const std::vector<VerifyFamily> families{
      {"branching-points", true, [](const Base& q, const std::string& n) { return constants::verify_prop_branching_points(q, n); }},
      {"sequence-bounds", true, [](const Base& q, const std::string& n) { return constants::verify_lemma_sequence_bounds(q, n); }},
      {"first-half", true,
       [j_max](const Base& q, const std::string& n) { return constants::verify_prop_first_half(q, n, j_max); }},
      {"second-half", false, [limit](const Base&, const std::string&) { return constants::verify_prop_second_half(limit); }},
      {"alpha", false, [&c](const Base&, const std::string&) { return constants::verify_alpha_properties(c.k_max); }},
      {"identities", true,
       [](const Base& q, const std::string& n) { return constants::verify_identities(q, n, identity_points(q)); }},
  };

  auto selected = [&](const std::string& id) {
    return c.all || id == c.item || id.rfind(c.item + "-", 0) == 0;
  };
  std::vector<constants::VerificationReport> reports;
  for (const auto& fam : families) {
    const bool wanted = c.all || c.item == fam.name || c.item.rfind(fam.name + "-", 0) == 0;
    if (!wanted) continue;
    if (c.all && fam.needs_base && !(b.base.above_golden() && b.base.below_qf()) && fam.name != "identities") {
      err << "note: skipping " << fam.name << " (requires (1+sqrt5)/2 < q < q_f)\n";
      continue;
    }
    for (auto& r : fam.run(b.base, b.text))
      if (selected(r.id)) reports.push_back(std::move(r));
  }
  if (reports.empty()) throw UsageError("no verification item matches '" + c.item + "'");

  json artifact{{"base", b.text}, {"approx", b.base.approx(6)}, {"reports", json::array()}};
  for (const auto& r : reports) artifact["reports"].push_back(constants::to_json(r));
  if (f == Format::Json) {
    out << artifact.dump(2) << "\n";
  } else {
    std::size_t w_id = 4, w_base = 4;
    for (const auto& r : reports) {
      w_id = std::max(w_id, r.id.size());
      w_base = std::max(w_base, r.base.size());
    }
    for (const auto& r : reports)
      out << std::left << std::setw(static_cast<int>(w_id)) << r.id << "  " << std::setw(static_cast<int>(w_base))
          << r.base << "  " << constants::to_string(r.outcome) << "\n";
  }
  return exit_status::ok;
}

/// Runs one command with `sink` as primary output, writing the --out file if requested.
int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = exit_status::usage;
  const std::string& cmd = c.command;
  if (cmd == "constants") status = cmd_constants(c, buffer);
  else if (cmd == "expand") status = cmd_expand(c, buffer);
  else if (cmd == "classify") status = cmd_classify(c, buffer);
  else if (cmd == "unique") status = cmd_unique(c, buffer);
  else if (cmd == "tree") status = cmd_tree(c, buffer);
  else if (cmd == "null-infinite") status = cmd_null_infinite(c, buffer);
  else if (cmd == "membership") status = cmd_membership(c, buffer);
  else if (cmd == "sweep") status = cmd_sweep(c, buffer);
  else if (cmd == "verify") status = cmd_verify(c, buffer, err);
  else throw UsageError("unknown command '" + cmd + "'");

  if (c.out.empty()) {
    out << buffer.str();
    return status;
  }
  if (cmd == "verify" && c.format.value_or(Format::Text) == Format::Text) {
    // Text goes to the terminal and the JSON transcript to the artifact file.
    out << buffer.str();
    RunConfig as_json = c;
    as_json.format = Format::Json;
    as_json.out.clear();
    std::ostringstream artifact;
    std::ostringstream ignored;
    cmd_verify(as_json, artifact, ignored);
    buffer.str(artifact.str());
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + c.out + "' for writing");
  file << buffer.str();
  return status;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_status::usage;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return exit_status::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool undecided = e.kind() == ErrorKind::IncompleteGraph || e.kind() == ErrorKind::EnumerationBound;
    return undecided ? exit_status::unknown : exit_status::usage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of binary expansions in non-integer bases 1 < q < 2", "betabranch"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    sub->add_option("--out", c.out, "Write the output to this file");
  };
  auto add_base = [&](CLI::App* sub, bool many) {
    auto* o = sub->add_option("--base", c.bases,
                              "Base: registry name, alpha_K, rational, or polynomial in x with optional @lo,hi");
    if (!many) o->expected(1);
  };
  auto add_point = [&](CLI::App* sub, bool many) {
    auto* o = sub->add_option("--x", c.points, "Point: word:PRE|PER or fe:<expression in q>");
    if (!many) o->expected(1);
  };
  auto add_states = [&](CLI::App* sub) {
    sub->add_option("--max-states", c.max_states, "State graph limit (default BETA_BRANCH_MAX_STATES or 20000)")
        ->check(CLI::PositiveNumber);
  };

  auto* constants_cmd = app.add_subcommand("constants", "List the named bases with refined decimals");
  constants_cmd->add_option("--digits", c.digits, "Decimal digits")->check(CLI::PositiveNumber);
  constants_cmd->add_flag("--all", c.all, "Include alpha_3..alpha_K and the sample bases");
  constants_cmd->add_option("--k-max", c.k_max, "Largest alpha index with --all")->check(CLI::Range(3, 64));
  add_format(constants_cmd);

  auto* expand = app.add_subcommand("expand", "Greedy, lazy or all admissible expansion prefixes");
  add_base(expand, false);
  add_point(expand, false);
  expand->add_option("--mode", c.mode, "greedy, lazy or all");
  expand->add_option("--digits", c.digits, "Number of digits")->check(CLI::PositiveNumber);
  add_format(expand);

  auto* classify = app.add_subcommand("classify", "Cardinality of the set of expansions of a point");
  add_base(classify, false);
  add_point(classify, false);
  add_states(classify);
  add_format(classify);

  auto* unique = app.add_subcommand("unique", "Whether a point has a unique expansion");
  add_base(unique, false);
  add_point(unique, false);
  unique->add_option("--max-steps", c.max_steps, "Forced-orbit step limit")->check(CLI::PositiveNumber);
  add_format(unique);

  auto* tree = app.add_subcommand("tree", "Export the branching tree as DOT or JSON");
  add_base(tree, false);
  add_point(tree, false);
  tree->add_option("--mode", c.mode, "full, infinite or continuum");
  tree->add_option("--depth", c.depth, "Bifurcation levels to unroll");
  add_states(tree);
  add_format(tree);

  auto* verify = app.add_subcommand("verify", "Re-derive the identities and inequalities with exact arithmetic");
  add_base(verify, false);
  verify->add_option("--item", c.item, "Item id or family (e.g. branching-points, first-half-10, alpha-c)");
  verify->add_flag("--all", c.all, "Run every item");
  verify->add_option("--digits", c.digits, "Largest j checked explicitly in 'for all j' items")
      ->check(CLI::Range(3, 200));
  verify->add_option("--k-max", c.k_max, "Largest alpha index")->check(CLI::Range(3, 64));
  add_states(verify);
  add_format(verify);

  auto* null_inf = app.add_subcommand("null-infinite", "Whether a point is null infinite");
  add_base(null_inf, false);
  add_point(null_inf, false);
  add_states(null_inf);
  add_format(null_inf);

  auto* membership = app.add_subcommand("membership", "Whether the base has a point with countably many expansions");
  add_base(membership, false);
  add_states(membership);
  add_format(membership);

  auto* sweep = app.add_subcommand("sweep", "Classify every (base, point) pair; CSV rows in input order");
  add_base(sweep, true);
  add_point(sweep, true);
  add_states(sweep);
  add_format(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_status::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_status::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << "run '" << app.get_subcommands().front()->get_name() << " --help' for usage\n";
    return exit_status::usage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (!format.empty())
    c.format = format == "text" ? Format::Text : format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Dot;
  return execute(c, out, err);
}

}  // namespace betabranch::cli
