#include "fpa/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "fpa/bstree.hpp"
#include "fpa/equivariance.hpp"
#include "fpa/fa_decision.hpp"
#include "fpa/invariance.hpp"
#include "fpa/out_presentation.hpp"
#include "fpa/quotient.hpp"
#include "fpa/relations.hpp"
#include "fpa/tree_geometry.hpp"
#include "fpa/tripod.hpp"

namespace fpa::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string signature = "C2,C3";
  std::string shape = "single_edge";
  std::string word;
  std::string aut;
  std::string format = "text";
  std::string factors;
  std::string factors_file;
  bool explain = false;
  std::string suite;
  std::vector<std::string> groups;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t radius = 3;
  std::size_t bound = 6;
  std::optional<std::size_t> oracle;
  bool subdivide = false;
  bool corrupt_order = false;
};

void emit(std::ostream& out, Config const& c, json const& j, std::string const& text) {
  if (c.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

int cmd_reduce(Config const& c, std::ostream& out) {
  auto sig = parse_signature(c.signature);
  auto w = sig->parse(c.word);
  auto cr = sig->cyclically_reduce(w);
  json j{{"reduced", sig->format(w)},
         {"length", w.size()},
         {"cyclic_core", sig->format(cr.core.word)},
         {"conjugator", sig->format(cr.conjugator)}};
  emit(out, c, j,
       "reduced: " + sig->format(w) + "\ncyclic core: " + sig->format(cr.core.word) +
           "\nconjugator: " + sig->format(cr.conjugator));
  return 0;
}

int cmd_translen(Config const& c, std::ostream& out) {
  auto sig = parse_signature(c.signature);
  FreeProductGraph fp(sig, parse_shape(c.shape));
  auto w = sig->parse(c.word);
  auto symbolic = translation_length(fp, w);
  json j{{"word", sig->format(w)}, {"shape", c.shape}, {"symbolic", symbolic}};
  std::string text = std::to_string(symbolic);
  int code = 0;
  if (c.oracle) {
    BassSerreTree t(fp.graph(), fp.base());
    auto loop = fp.embed(w);
    std::size_t value;
    if (*c.oracle == 0) {
      auto r = translation_length_oracle_adaptive(t, loop);
      value = r.value;
      j["oracle_radius"] = r.radius;
      j["oracle_converged"] = r.converged;
    } else {
      value = translation_length_oracle(t, loop, *c.oracle);
      j["oracle_radius"] = *c.oracle;
    }
    j["oracle"] = value;
    j["agree"] = value == symbolic;
    text += " " + std::to_string(value) + (value == symbolic ? "" : " MISMATCH");
    code = value == symbolic ? 0 : 1;
  }
  emit(out, c, j, text);
  return code;
}

int cmd_act(Config const& c, std::ostream& out) {
  auto sig = parse_signature(c.signature);
  auto a = parse_automorphism(sig, c.aut);
  auto w = sig->parse(c.word);
  auto img = a.apply(w);
  emit(out, c, json{{"automorphism", a.format()}, {"word", sig->format(w)}, {"image", sig->format(img)}},
       sig->format(img));
  return 0;
}

int cmd_fa_check(Config const& c, std::ostream& out, std::ostream& err) {
  if (c.factors.empty() == c.factors_file.empty()) {
    err << "fa-check: give exactly one of --factors and --factors-file\n";
    return kUsage;
  }
  auto classes = c.factors.empty() ? load_factor_file(c.factors_file) : parse_factor_spec(c.factors);
  auto v = decide(classes);
  json trace = json::array();
  for (auto const& t : v.trace) trace.push_back({{"condition", t.condition}, {"citation", t.citation}});
  json j{{"verdict", to_string(v.result)}};
  if (c.explain) j["trace"] = trace;
  emit(out, c, j, c.explain ? explain(v) : to_string(v.result));
  return exit_code(v.result);
}

std::vector<GroupPtr> resolve_groups(std::vector<std::string> const& names,
                                     std::vector<std::string> const& fallback) {
  std::vector<GroupPtr> out;
  for (auto const& n : names.empty() ? fallback : names) out.push_back(groups::resolve(n));
  return out;
}

SuiteReport run_suite(Config const& c) {
  SuiteReport all;
  all.suite = c.suite;
  auto add = [&](SuiteReport const& r) {
    SuiteReport copy = r;
    for (auto& f : copy.failures) f.instance = r.suite + ": " + f.instance;
    all.merge(copy);
  };
  if (c.suite == "relations") {
    auto gs = resolve_groups(c.groups, {"C2", "C3", "S3"});
    std::vector<FactorSpec> fs;
    for (auto const& g : gs) fs.push_back(FactorSpec::finite(g));
    Composer compose;
    if (c.corrupt_order) compose = [](Automorphism const& a, Automorphism const& b) { return b.then(a); };
    add(verify_relation_suite(make_signature(fs), {c.trials, c.seed, c.jobs}, compose));
  } else if (c.suite == "two-factors") {
    InvarianceOptions opt{c.trials.value_or(100), 10, c.seed, c.jobs};
    if (c.groups.empty()) {
      for (auto [h, k] : {std::pair{"C2", "C2"}, {"C2", "C3"}, {"C3", "C3"}, {"S3", "S3"}})
        add(invariance_suite_two_factors(groups::resolve(h), groups::resolve(k), opt));
    } else {
      auto gs = resolve_groups(c.groups, {});
      if (gs.size() != 2) throw CLI::ValidationError("--groups", "two-factors needs exactly two groups");
      add(invariance_suite_two_factors(gs[0], gs[1], opt));
    }
  } else if (c.suite == "hz") {
    InvarianceOptions opt{c.trials.value_or(100), 10, c.seed, c.jobs};
    for (auto const& h : resolve_groups(c.groups, {"C2", "S3"})) add(invariance_suite_h_z(h, opt));
  } else if (c.suite == "out-tripod") {
    for (auto const& a : resolve_groups(c.groups, {"C2", "C3", "S3"}))
      add(out_presentation_suite(a, c.bound).report);
  } else if (c.suite == "tripod-geom") {
    for (auto const& a : resolve_groups(c.groups, {"C2", "C3", "S3"}))
      add(tripod_action_geometry(a, std::max<std::size_t>(c.radius, 6)).report);
  } else if (c.suite == "equivariance") {
    add(equivariance_suite(c.trials.value_or(20), c.seed));
  } else if (c.suite == "lemmas") {
    TrialOptions opt;
    opt.trials = c.trials.value_or(1000);
    opt.seed = c.seed;
    add(run_all_lemma_trials(opt));
  } else if (c.suite == "quotients") {
    auto gs = resolve_groups(c.groups, {"C2", "C2", "C3", "C3"});
    std::vector<FactorSpec> fs;
    for (auto const& g : gs) fs.push_back(FactorSpec::finite(g));
    auto q = no_prop_t_quotient(make_signature(fs));
    add(verify_quotient(q, c.trials.value_or(100), c.seed));
    add(verify_quotient_word(q, 5 * c.trials.value_or(100), c.seed));
  }
  all.finalize();
  return all;
}

int cmd_verify(Config const& c, std::ostream& out) {
  auto r = run_suite(c);
  emit(out, c, r.to_json(), r.summary());
  return r.ok() ? 0 : 1;
}

int cmd_ball_dump(Config const& c, std::ostream& out) {
  auto sig = parse_signature(c.signature);
  FreeProductGraph fp(sig, parse_shape(c.shape));
  BassSerreTree t(fp.graph(), fp.base());
  out << t.to_dot(t.ball(t.base_vertex(), c.radius, c.subdivide));
  return 0;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Free products, their automorphisms and Bass-Serre trees", "fpa"};
  app.require_subcommand(1);
  auto formats = CLI::IsMember({"text", "json"});
  auto shapes = CLI::IsMember({"single_edge", "star", "loop_for_z"});
  auto sig_opt = [&](CLI::App* s) {
    s->add_option("--sig", c.signature, "factors, e.g. C2,C3,S3 or S3,Z")->capture_default_str();
  };
  auto fmt_opt = [&](CLI::App* s) { s->add_option("--format", c.format)->check(formats)->capture_default_str(); };

  auto* reduce = app.add_subcommand("reduce", "normal form and cyclic reduction of a word");
  sig_opt(reduce);
  fmt_opt(reduce);
  reduce->add_option("word", c.word, "e.g. \"f0.1 f1.2\"")->required();

  auto* translen = app.add_subcommand("translen", "translation length on the Bass-Serre tree");
  sig_opt(translen);
  fmt_opt(translen);
  translen->add_option("--shape", c.shape)->check(shapes)->capture_default_str();
  translen->add_option("--oracle", c.oracle, "also compute the ball minimum at radius R (0: adaptive)");
  translen->add_option("word", c.word)->required();

  auto* act = app.add_subcommand("act", "apply an automorphism to a word");
  sig_opt(act);
  fmt_opt(act);
  act->add_option("--aut", c.aut, "e.g. \"pc(0,1.1); fa(1,-1)\"")->required();
  act->add_option("word", c.word)->required();

  auto* fa = app.add_subcommand("fa-check", "decide Property (FA) for a free product");
  fmt_opt(fa);
  fa->add_option("--factors", c.factors, "e.g. C2:4,S3:1");
  fa->add_option("--factors-file", c.factors_file)->check(CLI::ExistingFile);
  fa->add_flag("--explain", c.explain);

  auto* verify = app.add_subcommand("verify", "run a check suite; JSON report by default");
  verify->add_option("--suite", c.suite)
      ->required()
      ->check(CLI::IsMember(
          {"relations", "two-factors", "hz", "out-tripod", "tripod-geom", "equivariance", "lemmas", "quotients"}));
  verify->add_option("--groups", c.groups, "group names or JSON files")->delimiter(',');
  verify->add_option("--trials", c.trials);
  verify->add_option("--seed", c.seed)->capture_default_str();
  verify->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--bound", c.bound, "inner witness bound")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--radius", c.radius)->check(CLI::PositiveNumber);
  std::string vformat = "json";
  verify->add_option("--format", vformat)->check(formats)->capture_default_str();
  verify->add_flag("--corrupt-order", c.corrupt_order)->group("");

  auto* dump = app.add_subcommand("ball-dump", "DOT graph of a ball about the base vertex");
  sig_opt(dump);
  dump->add_option("--shape", c.shape)->check(shapes)->capture_default_str();
  dump->add_option("--radius", c.radius)->check(CLI::PositiveNumber)->capture_default_str();
  dump->add_flag("--subdivide", c.subdivide);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (verify->parsed()) c.format = vformat;

  try {
    if (reduce->parsed()) return cmd_reduce(c, out);
    if (translen->parsed()) return cmd_translen(c, out);
    if (act->parsed()) return cmd_act(c, out);
    if (fa->parsed()) return cmd_fa_check(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out);
    if (dump->parsed()) return cmd_ball_dump(c, out);
  } catch (CLI::ValidationError const& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}

}  // namespace fpa::cli
