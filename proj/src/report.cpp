#include "mpbe/report.hpp"

#include <cstdint>
#include <cstdio>

namespace mpbe::report {

namespace {

Json names(const FiniteAlgebra& a, const std::vector<Elem>& xs) {
  Json j = Json::array();
  for (Elem x : xs) j.push_back(a.element_name(x));
  return j;
}

std::string_view variant_name(Variant v) { return v == Variant::be ? "be" : "bck_meet"; }

Json optional_table(const FiniteAlgebra& a, const std::optional<Table>& t) {
  return t ? table(a, *t) : Json(nullptr);
}

}  // namespace

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json tuple(const FiniteAlgebra& a, std::span<const Elem> t) { return names(a, {t.begin(), t.end()}); }

Json set(const FiniteAlgebra& a, ElementSet s) { return names(a, s.members()); }

Json map(const FiniteAlgebra& a, const UnaryMap& m) { return names(a, m.images()); }

Json table(const FiniteAlgebra& a, const Table& t) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < t.size(); ++x) {
    auto r = t.row(static_cast<Elem>(x));
    rows.push_back(names(a, {r.begin(), r.end()}));
  }
  return rows;
}

Json verdict(const FiniteAlgebra& a, const Verdict& v) {
  Json j = {{"name", v.name}, {"status", status_name(v.status)}, {"instances", v.instances}};
  if (v.fails()) {
    j["witness"] = tuple(a, v.witness);
    j["violations"] = v.violations;
    Json all = Json::array();
    for (const auto& w : v.witnesses) all.push_back(tuple(a, w));
    j["witnesses"] = all;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json verdicts(const FiniteAlgebra& a, const VerdictSet& vs) {
  Json j = Json::array();
  for (const auto& v : vs.items) j.push_back(verdict(a, v));
  return j;
}

Json algebra(const FiniteAlgebra& a) {
  Json j = {{"name", a.name()},
            {"elements", a.element_names()},
            {"one", a.element_name(a.one())},
            {"arrow", table(a, a.arrow_table())},
            {"squig", table(a, a.squig_table())}};
  if (a.zero()) j["zero"] = a.element_name(*a.zero());
  return j;
}

Json classification(const Model& m) {
  const FiniteAlgebra& a = m.algebra();
  Json flags = Json::object();
  for (Flag f : all_flags()) flags[std::string(flag_name(f))] = verdict(a, m.report()[f]);
  const DerivedOps& d = m.ops();
  Json derived = {{"zero", d.zero ? Json(a.element_name(*d.zero)) : Json(nullptr)},
                  {"minus", d.neg_minus ? map(a, *d.neg_minus) : Json(nullptr)},
                  {"sim", d.neg_sim ? map(a, *d.neg_sim) : Json(nullptr)},
                  {"odot", optional_table(a, d.odot)},
                  {"oplus", optional_table(a, d.oplus)},
                  {"meet", optional_table(a, d.meet)},
                  {"join", optional_table(a, d.join)}};
  return {{"algebra", algebra(a)},
          {"pseudo_be", verdicts(a, check_pseudo_be(a))},
          {"pseudo_bck", verdicts(a, check_pseudo_bck(a))},
          {"flags", flags},
          {"derived", derived}};
}

Json monadic_check(const FiniteAlgebra& a, const MonadicCheckReport& r) {
  return {{"mode", mode_name(r.mode)}, {"holds", r.holds()}, {"axioms", verdicts(a, r.axioms)}};
}

Json pair(const FiniteAlgebra& a, const MonadicPair& p, std::string_view name) {
  Json j = Json::object();
  if (!name.empty()) j["name"] = name;
  j["exists"] = map(a, p.exists);
  j["forall"] = map(a, p.forall);
  return j;
}

Json mop(const Model& m, std::span<const MonadicPair> pairs, Mode mode, const MopStats& stats) {
  const FiniteAlgebra& a = m.algebra();
  Json list = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Json p = pair(a, pairs[i], "");
    FixedSets fs = fixed_set(m, pairs[i]);
    p["fixed"] = set(a, fs.fixed());
    p["image_forall"] = set(a, fs.image_forall);
    list.push_back(std::move(p));
  }
  return {{"mode", mode_name(mode)},
          {"count", pairs.size()},
          {"pairs", list},
          {"stats",
           {{"exists_candidates", stats.exists_candidates},
            {"forall_candidates", stats.forall_candidates},
            {"pairs_checked", stats.pairs_checked}}}};
}

Json systems(const Model& m, std::span<const DeductiveSystem> ds, std::span<const NamedPair> pairs) {
  const FiniteAlgebra& a = m.algebra();
  Json list = Json::array();
  for (const auto& d : ds) {
    Json e = {{"members", set(a, d.members)}, {"normal", d.normal}};
    if (!pairs.empty()) {
      Json mon = Json::object();
      for (std::size_t i = 0; i < pairs.size(); ++i) mon[pairs[i].name] = static_cast<bool>(d.monadic[i]);
      e["monadic"] = mon;
    }
    list.push_back(std::move(e));
  }
  Json pj = Json::array();
  for (const auto& p : pairs) pj.push_back(pair(a, p.pair, p.name));
  return {{"count", ds.size()}, {"pairs", pj}, {"systems", list}};
}

Json correspondence(const Model& m, const Correspondence& c, Variant v) {
  const FiniteAlgebra& a = m.algebra();
  Json sys = Json::array(), con = Json::array();
  for (const auto& s : c.systems) sys.push_back(set(a, s));
  for (const auto& k : c.congruences) con.push_back(format_partition(a, k));
  return {{"variant", variant_name(v)}, {"verdict", verdict(a, c.verdict)}, {"systems", sys}, {"congruences", con}};
}

Json generated(const FiniteAlgebra& a, ElementSet x, ElementSet g) {
  return {{"set", set(a, x)}, {"generated", set(a, g)}};
}

Json quotient(const FiniteAlgebra& a, ElementSet d, const QuotientAlgebra& q) {
  std::vector<NamedMap> maps;
  if (q.pair) {
    maps.push_back({"q_exists", q.pair->exists});
    maps.push_back({"q_forall", q.pair->forall});
  }
  Json proj = Json::object();
  for (std::size_t x = 0; x < a.size(); ++x)
    proj[a.element_name(static_cast<Elem>(x))] = q.algebra.element_name(q.projection[x]);
  Json j = {{"system", set(a, d)},
            {"classes", q.algebra.size()},
            {"projection", proj},
            {"arrow_equals_squig", q.arrow_equals_squig},
            {"algebra", algebra(q.algebra)},
            {"document", serialize(q.algebra, maps)}};
  if (q.pair) j["pair"] = pair(q.algebra, *q.pair, "q");
  if (q.pair_report) j["pair_check"] = monadic_check(q.algebra, *q.pair_report);
  return j;
}

Json suite(const Model& m, std::span<const LawVerdict> vs, std::span<const NamedPair> pairs) {
  const FiniteAlgebra& a = m.algebra();
  Json list = Json::array();
  for (const auto& lv : vs) {
    Json e = verdict(a, lv.verdict);
    e.erase("name");
    Json head = {{"law", lv.law}};
    if (lv.pair) head["pair"] = pairs[*lv.pair].name;
    if (lv.second) head["second"] = pairs[*lv.second].name;
    head.update(e);
    list.push_back(std::move(head));
  }
  SuiteSummary s = summarize(vs);
  return {{"summary",
           {{"laws", s.laws},
            {"holds", s.holds},
            {"fails", s.fails},
            {"not_applicable", s.not_applicable},
            {"instances", s.instances}}},
          {"verdicts", list}};
}

Json search(const SearchSpec& spec, const SearchResult& r) {
  Json req = Json::array(), forb = Json::array();
  for (Flag f : spec.require) req.push_back(flag_name(f));
  for (Flag f : spec.forbid) forb.push_back(flag_name(f));
  Json sizes = Json::array();
  for (const auto& s : r.stats.sizes)
    sizes.push_back({{"size", s.size},
                     {"candidates", s.candidates},
                     {"pseudo_be", s.pseudo_be},
                     {"canonical", s.canonical},
                     {"in_class", s.in_class},
                     {"pairs_checked", s.pairs_checked}});
  Json j = {{"spec",
             {{"law", spec.law},
              {"min_size", spec.min_size},
              {"max_size", spec.max_size},
              {"require", req},
              {"forbid", forb},
              {"iso_rejection", spec.iso_rejection},
              {"prune", spec.prune},
              {"budget", spec.budget}}},
            {"status", search_status_name(r.status)},
            {"nodes", r.stats.nodes},
            {"sizes", sizes}};
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    Json cx = {{"algebra", algebra(c.algebra)}, {"verdict", verdict(c.algebra, c.verdict)}, {"reverified", c.reverified}};
    if (c.pair) cx["pair"] = pair(c.algebra, *c.pair, "cx");
    if (c.second) cx["second"] = pair(c.algebra, *c.second, "cx2");
    cx["document"] = c.document();
    j["counterexample"] = cx;
  }
  return j;
}

Json law(const Law& l) {
  Json hyp = Json::array();
  for (Flag f : l.hypothesis) hyp.push_back(flag_name(f));
  return {{"id", l.id},
          {"anchor", l.anchor},
          {"hypothesis", hyp},
          {"scope", scope_name(l.scope)},
          {"domain", domain_name(l.domain)},
          {"mode", mode_name(l.pair_mode)},
          {"arity", l.arity},
          {"conjecture", l.conjecture}};
}

Json catalog() {
  Json list = Json::array();
  for (const Law& l : mpbe::catalog()) list.push_back(law(l));
  return {{"count", list.size()}, {"laws", list}};
}

Json to_json(const RunReport& r) {
  return {{"tool", kTool},
          {"version", kVersion},
          {"input_digest", r.input_digest.empty() ? Json(nullptr) : Json(r.input_digest)},
          {"subcommand", r.subcommand},
          {"payload", r.payload},
          {"exit_status", r.exit_status}};
}

}  // namespace mpbe::report
