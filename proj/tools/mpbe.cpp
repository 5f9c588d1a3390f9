// Command-line front end: one algebra file in, one report out.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mpbe/errors.hpp"
#include "mpbe/report.hpp"

using namespace mpbe;
using report::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string text;
  AlgebraDocument doc;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Input i{ss.str(), {}};
  i.doc = parse_algebra(i.text);
  return i;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ElementSet parse_set(const FiniteAlgebra& a, const std::string& s) {
  ElementSet out;
  for (const auto& tok : split(s, ',')) {
    auto e = a.find(tok);
    if (!e) throw UsageError("unknown element '" + tok + "'");
    out.insert(*e);
  }
  return out;
}

std::vector<Flag> parse_flags(const std::string& s) {
  std::vector<Flag> out;
  for (const auto& tok : split(s, ',')) {
    auto f = flag_from_name(tok);
    if (!f) throw UsageError("unknown flag '" + tok + "'");
    out.push_back(*f);
  }
  return out;
}

Mode parse_mode(const std::string& s) {
  auto m = mode_from_name(s);
  if (!m) throw UsageError("unknown mode '" + s + "'");
  return *m;
}

Variant parse_variant(const std::string& s) {
  if (s == "be") return Variant::be;
  if (s == "bck_meet") return Variant::bck_meet;
  throw UsageError("unknown variant '" + s + "'");
}

std::vector<NamedPair> select_pairs(const AlgebraDocument& doc, const std::vector<std::string>& names) {
  if (names.empty()) return document_pairs(doc);
  std::vector<NamedPair> out;
  for (const auto& n : names) out.push_back(find_pair(doc, n));
  return out;
}

std::vector<MonadicPair> bare(const std::vector<NamedPair>& ps) {
  std::vector<MonadicPair> out;
  for (const auto& p : ps) out.push_back(p.pair);
  return out;
}

std::string words(const Json& arr) {
  std::string s;
  for (const auto& e : arr) {
    if (!s.empty()) s += ' ';
    s += e.get<std::string>();
  }
  return s;
}

std::string tuple_text(const Json& arr) { return "(" + [&] {
  std::string s;
  for (const auto& e : arr) s += (s.empty() ? "" : ",") + e.get<std::string>();
  return s;
}() + ")"; }

std::string verdict_text(const Json& v) {
  std::string s = v["status"].get<std::string>();
  if (v.contains("witness")) s += " " + tuple_text(v["witness"]);
  if (v.contains("note")) s += " [" + v["note"].get<std::string>() + "]";
  return s;
}

void render_text(const std::string& cmd, const Json& p, std::ostream& out) {
  if (cmd == "check") {
    out << "algebra " << p["algebra"]["name"].get<std::string>() << " (" << p["algebra"]["elements"].size()
        << " elements)\n";
    for (const auto& b : {"pseudo_be", "pseudo_bck"})
      if (p.contains(b))
        for (const auto& v : p[b]) out << v["name"].get<std::string>() << ' ' << verdict_text(v) << '\n';
    if (p.contains("flags"))
      for (const auto& [name, v] : p["flags"].items()) out << name << ' ' << verdict_text(v) << '\n';
  } else if (cmd == "mop") {
    out << "mop " << p["count"].get<std::size_t>() << " (" << p["mode"].get<std::string>() << ")\n";
    for (const auto& q : p["pairs"])
      out << "exists " << words(q["exists"]) << " | forall " << words(q["forall"]) << " | fixed " << words(q["fixed"])
          << '\n';
  } else if (cmd == "ds") {
    for (const auto& d : p["systems"]) {
      out << "ds " << words(d["members"]);
      if (d["normal"].get<bool>()) out << " normal";
      if (d.contains("monadic"))
        for (const auto& [name, on] : d["monadic"].items())
          if (on.get<bool>()) out << " monadic:" << name;
      out << '\n';
    }
    if (p.contains("correspondence"))
      for (const auto& c : p["correspondence"])
        out << "correspondence " << c["pair"].get<std::string>() << ' ' << c["variant"].get<std::string>() << ' '
            << verdict_text(c["verdict"]) << '\n';
  } else if (cmd == "gen") {
    out << "ds " << words(p["generated"]) << '\n';
  } else if (cmd == "quotient") {
    out << p["document"].get<std::string>();
    if (p.contains("pair_check"))
      out << "# pair " << (p["pair_check"]["holds"].get<bool>() ? "monadic" : "not monadic") << '\n';
  } else if (cmd == "verify") {
    for (const auto& v : p["verdicts"]) {
      if (v["status"] != "fails") continue;
      out << "FAIL " << v["law"].get<std::string>();
      if (v.contains("pair")) out << " pair " << v["pair"].get<std::string>();
      if (v.contains("second")) out << "," << v["second"].get<std::string>();
      out << ' ' << tuple_text(v["witness"]);
      if (v.contains("note")) out << " [" << v["note"].get<std::string>() << "]";
      out << '\n';
    }
    const Json& s = p["summary"];
    out << "laws " << s["laws"] << " holds " << s["holds"] << " fails " << s["fails"] << " not_applicable "
        << s["not_applicable"] << " instances " << s["instances"] << '\n';
  } else if (cmd == "search") {
    out << "search " << p["status"].get<std::string>() << " nodes " << p["nodes"] << '\n';
    for (const auto& s : p["sizes"])
      out << "size " << s["size"] << " candidates " << s["candidates"] << " pseudo_be " << s["pseudo_be"]
          << " canonical " << s["canonical"] << " in_class " << s["in_class"] << '\n';
    if (p.contains("counterexample")) {
      const Json& c = p["counterexample"];
      out << "witness " << tuple_text(c["verdict"]["witness"])
          << (c["reverified"].get<bool>() ? " reverified" : " NOT reverified") << '\n';
      out << c["document"].get<std::string>();
    }
  } else if (cmd == "laws") {
    for (const auto& l : p["laws"])
      out << l["id"].get<std::string>() << (l["conjecture"].get<bool>() ? " [conjecture]" : "") << "  "
          << l["anchor"].get<std::string>() << '\n';
  }
}

struct Options {
  std::string file;
  std::vector<std::string> pairs;
  std::string set;
  std::string mode = "plain";
  std::string variant;
  std::vector<std::string> laws;
  bool conjectures = false;
  bool all_mop = false;
  bool unpruned = false;
  bool json = false;
  bool text = false;
  unsigned threads = 1;
  std::size_t min_size = 1;
  std::size_t max_size = 4;
  std::string require;
  std::string forbid;
  std::uint64_t budget = 0;
  bool no_iso = false;
};

report::RunReport run_check(const Options& o) {
  Input in = read_input(o.file);
  report::RunReport r{"check", report::digest(in.text)};
  try {
    Model m = classify(in.doc.algebra);
    r.payload = report::classification(m);
  } catch (const PreconditionUnmet&) {
    r.payload = {{"algebra", report::algebra(in.doc.algebra)},
                 {"pseudo_be", report::verdicts(in.doc.algebra, check_pseudo_be(in.doc.algebra))}};
    r.exit_status = kExitFailure;
  }
  return r;
}

report::RunReport run_mop(const Options& o) {
  Input in = read_input(o.file);
  Model m = classify(in.doc.algebra);
  Mode mode = parse_mode(o.mode);
  MopStats st;
  auto pairs = enumerate_mop(m, {.mode = mode, .unpruned = o.unpruned}, &st);
  return {"mop", report::digest(in.text), report::mop(m, pairs, mode, st)};
}

report::RunReport run_ds(const Options& o) {
  Input in = read_input(o.file);
  Model m = classify(in.doc.algebra);
  auto named = select_pairs(in.doc, o.pairs);
  auto pairs = bare(named);
  report::RunReport r{"ds", report::digest(in.text), report::systems(m, enumerate_ds(m, pairs), named)};
  if (!o.variant.empty()) {
    Variant v = parse_variant(o.variant);
    Json list = Json::array();
    for (const auto& np : named) {
      Correspondence c = correspondence_report(m, np.pair, v);
      Json j = report::correspondence(m, c, v);
      j["pair"] = np.name;
      if (!c.verdict.holds()) r.exit_status = kExitFailure;
      list.push_back(std::move(j));
    }
    r.payload["correspondence"] = list;
  }
  return r;
}

report::RunReport run_gen(const Options& o) {
  Input in = read_input(o.file);
  const FiniteAlgebra& a = in.doc.algebra;
  classify(a);
  ElementSet x = parse_set(a, o.set);
  return {"gen", report::digest(in.text), report::generated(a, x, generated_ds(a, x))};
}

report::RunReport run_quotient(const Options& o) {
  Input in = read_input(o.file);
  const FiniteAlgebra& a = in.doc.algebra;
  Model m = classify(a);
  ElementSet d = parse_set(a, o.set);
  if (!is_deductive_system(a, d)) throw UsageError(a.format_set(d) + " is not a deductive system");
  std::optional<NamedPair> np;
  if (!o.pairs.empty()) np = find_pair(in.doc, o.pairs.front());
  report::RunReport r{"quotient", report::digest(in.text)};
  try {
    QuotientAlgebra q = quotient(a, theta_from_ds(a, d), np ? &np->pair : nullptr);
    r.payload = report::quotient(a, d, q);
    if (q.pair_report && !q.pair_report->holds()) r.exit_status = kExitFailure;
  } catch (const WitnessError& e) {
    r.payload = {{"system", report::set(a, d)}, {"error", e.what()}, {"witness", report::tuple(a, e.witness())}};
    r.exit_status = kExitFailure;
  }
  return r;
}

report::RunReport run_verify(const Options& o) {
  Input in = read_input(o.file);
  Model m = classify(in.doc.algebra);
  std::vector<NamedPair> named;
  if (o.all_mop) {
    auto mop = enumerate_mop(m);
    for (std::size_t i = 0; i < mop.size(); ++i) named.push_back({"mop" + std::to_string(i + 1), mop[i]});
  } else {
    named = select_pairs(in.doc, o.pairs);
  }
  LawFilter filter{o.laws, o.conjectures};
  for (const auto& id : o.laws)
    if (id.back() != '*' && !find_law(id)) throw UsageError("unknown law '" + id + "'");
  auto vs = verify_suite(m, bare(named), filter, o.threads);
  report::RunReport r{"verify", report::digest(in.text), report::suite(m, vs, named)};
  if (summarize(vs).fails) r.exit_status = kExitFailure;
  return r;
}

report::RunReport run_search(const Options& o) {
  SearchSpec spec;
  spec.min_size = o.min_size;
  spec.max_size = o.max_size;
  spec.require = parse_flags(o.require);
  spec.forbid = parse_flags(o.forbid);
  spec.law = o.laws.empty() ? std::string() : o.laws.front();
  spec.iso_rejection = !o.no_iso;
  spec.prune = !o.unpruned;
  spec.budget = o.budget;
  spec.threads = o.threads;
  SearchResult res = search_counterexample(spec);
  report::RunReport r{"search", "", report::search(spec, res)};
  if (res.status == SearchStatus::found) r.exit_status = kExitFailure;
  return r;
}

report::RunReport run_laws(const Options&) { return {"laws", "", report::catalog()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monadic pseudo BE-algebra toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::kVersion));
  Options o;

  auto common = [&](CLI::App* sub, bool file) {
    if (file) sub->add_option("file", o.file, "algebra file")->required();
    sub->add_flag("--json", o.json, "JSON report");
    sub->add_flag("--text", o.text, "text report (default)");
  };
  auto* check = app.add_subcommand("check", "classify an algebra");
  common(check, true);
  auto* mop = app.add_subcommand("mop", "enumerate monadic operators");
  common(mop, true);
  mop->add_option("--mode", o.mode, "plain|bc|hoop");
  mop->add_flag("--unpruned", o.unpruned, "scan every map pair (n <= 5)");
  auto* ds = app.add_subcommand("ds", "list deductive systems");
  common(ds, true);
  ds->add_option("--pair", o.pairs, "pair name (repeatable); default all declared pairs");
  ds->add_option("--variant", o.variant, "be|bck_meet correspondence report");
  auto* gen = app.add_subcommand("gen", "generated deductive system");
  common(gen, true);
  gen->add_option("--set", o.set, "elements, comma separated")->required();
  auto* quo = app.add_subcommand("quotient", "quotient by a deductive system");
  common(quo, true);
  quo->add_option("--set", o.set, "deductive system, comma separated")->required();
  quo->add_option("--pair", o.pairs, "pair name for induced quantifiers");
  auto* ver = app.add_subcommand("verify", "run the law suite");
  common(ver, true);
  ver->add_option("--pair", o.pairs, "pair name (repeatable); default all declared pairs");
  ver->add_option("--law", o.laws, "law id or prefix ending in * (repeatable)");
  ver->add_flag("--conjectures", o.conjectures, "include conjectures");
  ver->add_flag("--mop", o.all_mop, "use every enumerated monadic operator");
  ver->add_option("--threads", o.threads, "worker threads");
  auto* sea = app.add_subcommand("search", "bounded counterexample search");
  common(sea, false);
  sea->add_option("--law", o.laws, "target law id");
  sea->add_option("--min-size", o.min_size, "smallest size");
  sea->add_option("--max-size", o.max_size, "largest size (<= 5)");
  sea->add_option("--require", o.require, "flags that must hold, comma separated");
  sea->add_option("--forbid", o.forbid, "flags that must fail, comma separated");
  sea->add_option("--budget", o.budget, "node limit, 0 for none");
  sea->add_flag("--no-iso", o.no_iso, "keep isomorphic copies");
  sea->add_flag("--unpruned", o.unpruned, "test psBE4/psBE5 only on complete tables (n <= 4)");
  sea->add_option("--threads", o.threads, "worker threads");
  auto* laws = app.add_subcommand("laws", "export the law catalog");
  common(laws, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  report::RunReport r;
  try {
    if (cmd == "check") r = run_check(o);
    else if (cmd == "mop") r = run_mop(o);
    else if (cmd == "ds") r = run_ds(o);
    else if (cmd == "gen") r = run_gen(o);
    else if (cmd == "quotient") r = run_quotient(o);
    else if (cmd == "verify") r = run_verify(o);
    else if (cmd == "search") r = run_search(o);
    else r = run_laws(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream out;
  if (o.json && !o.text) out << report::to_json(r).dump(2) << '\n';
  else render_text(cmd, r.payload, out);
  std::cout << out.str() << std::flush;
  return r.exit_status;
}
