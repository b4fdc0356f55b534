#include "rigidroots/cli.hpp"

#include "rigidroots/canseq.hpp"
#include "rigidroots/rewrite.hpp"
#include "rigidroots/stdwords.hpp"
#include "rigidroots/svg.hpp"
#include "rigidroots/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace rigid::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string m;
  std::string root;
  std::string word;
  std::string rules;
  std::string suite = "all";
  std::string out_path;
  int bound = 0;
  int max_rounds = 10;
  bool json = false;
};

Integer parse_m(const std::string& text) {
  if (text.empty()) throw UsageError("--m is required");
  Integer m;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    m = v;
  } catch (const std::exception&) {
    throw UsageError("--m: not an integer: '" + text + "'");
  }
  if (m < 2) throw UsageError("--m must be >= 2, got " + text);
  return m;
}

Root parse_root_flag(const std::string& text) {
  if (text.empty()) throw UsageError("--root is required");
  try {
    Root r = parse_root(text);
    to_i64(r.a);
    to_i64(r.b);
    return r;
  } catch (const std::exception& e) {
    throw UsageError(std::string("--root: ") + e.what());
  }
}

json root_json(const Root& r) { return json::array({to_i64(r.a), to_i64(r.b)}); }

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) return to_i64(v);
  return v.str();
}

std::string seq_text(const Sequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.json)
    out << j.dump(2) << '\n';
  else
    out << text;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  if (!o.root.empty()) {
    const Root r = parse_root_flag(o.root);
    const RootClass c = classify(m, r);
    json j{{"m", to_i64(m)}, {"root", root_json(r)}, {"class", to_string(c)}, {"quadratic_form", integer_json(quadratic_form(m, r))}};
    std::ostringstream t;
    t << r << ": " << to_string(c) << " (a^2 + b^2 - mab = " << quadratic_form(m, r) << ")\n";
    if (c == RootClass::RealPositive) {
      j["real_index"] = real_root_index(m, r);
      t << "real index " << real_root_index(m, r) << '\n';
    } else if (c == RootClass::ImaginaryPositive) {
      const Root rep = orbit_representative(m, r.a >= r.b ? r : r.swapped());
      j["orbit_representative"] = root_json(rep);
      t << "orbit representative " << rep << '\n';
      if (r.a >= r.b) {
        j["level"] = level(m, r).level;
        t << "level " << level(m, r).level << '\n';
      }
    }
    emit(out, o, j, t.str());
    return 0;
  }
  const int bound = o.bound > 0 ? o.bound : 30;
  json list = json::array();
  std::ostringstream t;
  for (const Root& r : enumerate_reduced(m, bound)) {
    const RootClass c = classify(m, r);
    list.push_back({{"root", root_json(r)}, {"class", to_string(c)}});
    t << r << ' ' << to_string(c) << '\n';
  }
  emit(out, o, {{"m", to_i64(m)}, {"bound", bound}, {"roots", list}}, t.str());
  return 0;
}

int cmd_canseq(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  const Root r = parse_root_flag(o.root);
  const std::vector<CanonicalData> chain = all_canonical_data(m, r);
  json rows = json::array();
  std::ostringstream t;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const CanonicalData& c = chain[k];
    rows.push_back({{"k", k + 1}, {"seq", c.seq}, {"N", c.N}, {"rho", to_string(c.rho)}, {"type", to_string(c.ty)}});
    t << "c" << k + 1 << " = " << seq_text(c.seq) << "  N=" << c.N << "  rho=" << to_string(c.rho)
      << "  type " << to_string(c.ty) << '\n';
  }
  emit(out, o, {{"m", to_i64(m)}, {"root", root_json(r)}, {"chain", rows}}, t.str());
  return 0;
}

int cmd_level(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  const Root r = parse_root_flag(o.root);
  const LevelInfo info = level(m, r);
  json gammas = json::array();
  std::ostringstream t;
  t << "level " << info.level << "\n";
  for (std::size_t i = 0; i < info.gammas.size(); ++i) {
    gammas.push_back(to_string(info.gammas[i]));
    t << "gamma_" << i << " = " << to_string(info.gammas[i]) << '\n';
  }
  emit(out, o, {{"m", to_i64(m)}, {"root", root_json(r)}, {"level", info.level}, {"gammas", gammas}}, t.str());
  return 0;
}

int cmd_word(const Options& o, std::ostream& out) {
  const Root r = parse_root_flag(o.root);
  json j{{"root", root_json(r)}, {"s", s_of_root(r)}, {"crossing", crossing_word(r)}};
  std::ostringstream t;
  t << "s" << r << " = " << display(s_of_root(r)) << '\n';
  t << "crossing word = " << display(crossing_word(r)) << '\n';
  if (r.a >= r.b) {
    j["s_axb"] = dyck_word(r);
    t << "s^{" << r.a << "x" << r.b << "} = " << display(dyck_word(r)) << '\n';
  }
  if (!o.m.empty()) {
    const Integer m = parse_m(o.m);
    const Word nf = gs_basis(m).normal_form(s_of_root(r));
    j["m"] = to_i64(m);
    j["normal_form"] = nf;
    t << "normal form in W(" << m << ") = " << display(nf) << '\n';
  }
  emit(out, o, j, t.str());
  return 0;
}

int cmd_standard(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  const Root r = parse_root_flag(o.root);
  const StdCaseKey key = dispatch_case(m, r);
  const Word w = standard_word(m, r);
  json j{{"m", to_i64(m)}, {"root", root_json(r)}, {"form", to_string(key.form)}, {"word", w}};
  std::ostringstream t;
  t << display(w) << '\n' << "form " << to_string(key.form);
  if (key.form == StdForm::Real) {
    j["real_index"] = key.real_index;
    t << ", n=" << key.real_index;
  } else {
    j["level"] = key.level;
    j["N_L"] = key.N_L;
    j["type"] = to_string(key.ty);
    t << ", L=" << key.level << ", N_L=" << key.N_L << ", type " << to_string(key.ty);
  }
  t << '\n';
  emit(out, o, j, t.str());
  return 0;
}

RewriteSystem load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--rules: cannot read " + path);
  try {
    return RewriteSystem(parse_rules(in));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json rules_json(const RewriteSystem& s) {
  json rules = json::array();
  for (const Rule& r : s.rules()) rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
  return rules;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  Word w;
  try {
    w = parse_word(o.word);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
  const RewriteSystem sys = o.rules.empty() ? gs_basis(parse_m(o.m)) : load_rules(o.rules);
  const Word nf = sys.normal_form(w);
  json j{{"word", w}, {"normal_form", nf}};
  if (!o.m.empty()) j["m"] = to_i64(parse_m(o.m));
  emit(out, o, j, display(nf) + "\n");
  return 0;
}

int cmd_gs_basis(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  if (m < 3) throw UsageError("gs-basis needs m >= 3");
  const RewriteSystem gs = gs_basis(m);
  emit(out, o, {{"m", to_i64(m)}, {"rules", rules_json(gs)}}, format_rules(gs));
  return 0;
}

int cmd_complete(const Options& o, std::ostream& out) {
  const RewriteSystem start = o.rules.empty() ? defining_relations(parse_m(o.m)) : load_rules(o.rules);
  const CompletionResult res = complete(start, o.max_rounds);
  json j{{"rounds", res.rounds}, {"closed", true}, {"rules", rules_json(res.system)}};
  std::ostringstream t;
  t << format_rules(res.system) << "# " << res.system.size() << " rules, closed after " << res.rounds << (res.rounds == 1 ? " round\n" : " rounds\n");
  if (!o.m.empty()) {
    const Integer m = parse_m(o.m);
    j["m"] = to_i64(m);
    if (o.rules.empty() && m >= 3) {
      const bool same = res.system == gs_basis(m);
      j["equals_gs_basis"] = same;
      t << "# " << (same ? "equals" : "differs from") << " the closed basis for m = " << m << '\n';
    }
  }
  emit(out, o, j, t.str());
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  if (m < 3) throw UsageError("verify needs m >= 3");
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = campaign_names();
  } else {
    const auto& names = campaign_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
      throw UsageError("--suite: unknown campaign '" + o.suite + "'");
    suites = {o.suite};
  }
  const int bound = o.bound > 0 ? o.bound : 100;
  bool ok = true;
  json reports = json::array();
  std::string text;
  for (const std::string& s : suites) {
    const CampaignReport rep = run_campaign(s, m, bound);
    ok = ok && rep.ok();
    reports.push_back(to_json(rep));
    text += to_text(rep);
  }
  emit(out, o, {{"ok", ok}, {"reports", reports}}, text);
  return ok ? 0 : 1;
}

int cmd_svg(const Options& o, std::ostream& out) {
  const Integer m = parse_m(o.m);
  const Root r = parse_root_flag(o.root);
  if (o.out_path.empty()) {
    out << render_svg(m, r);
    return 0;
  }
  emit_svg(m, r, o.out_path);
  emit(out, o, {{"m", to_i64(m)}, {"root", root_json(r)}, {"path", o.out_path}, {"crossing", crossing_word(r)}},
       "wrote " + o.out_path + "\n");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigid reflections of W(m) and roots of H(m)", "rigidroots"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json, "structured output")->configurable(false);

  auto m_opt = [&](CLI::App* s) { s->add_option("--m", o.m, "rank parameter m >= 2"); };
  auto root_opt = [&](CLI::App* s) { s->add_option("--root", o.root, "root as a,b or [a,b]"); };
  auto json_opt = [&](CLI::App* s) { s->add_flag("--json", o.json, "structured output"); };

  struct Entry {
    CLI::App* app;
    int (*fn)(const Options&, std::ostream&);
  };
  std::vector<Entry> cmds;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    json_opt(s);
    cmds.push_back({s, fn});
    return s;
  };

  auto* roots = add("roots", "classify a root, or list reduced roots a >= b up to a bound", cmd_roots);
  m_opt(roots);
  root_opt(roots);
  roots->add_option("--bound", o.bound, "max a + b for the listing (default 30)");
  auto* canseq = add("canseq", "canonical sequences of a root", cmd_canseq);
  m_opt(canseq);
  root_opt(canseq);
  auto* lvl = add("level", "level of an imaginary root", cmd_level);
  m_opt(lvl);
  root_opt(lvl);
  auto* word = add("word", "reflection word, s^{a x b} and crossing word", cmd_word);
  m_opt(word);
  root_opt(word);
  auto* standard = add("standard", "standard word of s^{a x b} from the closed forms", cmd_standard);
  m_opt(standard);
  root_opt(standard);
  auto* reduce = add("reduce", "normal form of a word", cmd_reduce);
  m_opt(reduce);
  reduce->add_option("--word", o.word, "word over 1,2,3 (e for empty)")->required();
  reduce->add_option("--rules", o.rules, "rule file instead of the closed basis for m");
  auto* gs = add("gs-basis", "the closed rewriting basis of W(m)", cmd_gs_basis);
  m_opt(gs);
  auto* comp = add("complete", "complete the defining relations of W(m) or a rule file", cmd_complete);
  m_opt(comp);
  comp->add_option("--rules", o.rules, "rule file, one 'lhs -> rhs' per line");
  comp->add_option("--max-rounds", o.max_rounds, "round limit (default 10)")->check(CLI::PositiveNumber);
  auto* ver = add("verify", "run verification campaigns", cmd_verify);
  m_opt(ver);
  ver->add_option("--suite", o.suite, "injectivity, identities, stdwords, structure or all (default)");
  ver->add_option("--bound", o.bound, "max a + b (default 100)")->check(CLI::PositiveNumber);
  auto* svg = add("svg", "draw the segment of a root over its grid", cmd_svg);
  m_opt(svg);
  root_opt(svg);
  svg->add_option("--out", o.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rigidroots: " << e.what() << '\n';
    return 2;
  }

  for (const Entry& c : cmds) {
    if (!c.app->parsed()) continue;
    try {
      return c.fn(o, out);
    } catch (const UsageError& e) {
      err << "rigidroots " << c.app->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const std::invalid_argument& e) {
      err << "rigidroots " << c.app->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const std::domain_error& e) {
      err << "rigidroots " << c.app->get_name() << ": " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      err << "rigidroots " << c.app->get_name() << ": error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace rigid::cli
