#include "mpbe/quantifiers.hpp"

#include <algorithm>
#include <array>

#include "mpbe/errors.hpp"

namespace mpbe {

namespace {

Elem E(std::size_t i) { return static_cast<Elem>(i); }

constexpr std::array<std::string_view, 3> kModeNames = {"plain", "bc", "hoop"};

void require_mode(const Model& m, Mode mode) {
  if (mode == Mode::bounded_commutative && (!m.has_odot() || !m.has_oplus()))
    throw ModeUnavailable("mode bc needs both the pseudo-product and the sum");
  if (mode == Mode::pseudo_hoop && !m.has_odot()) throw ModeUnavailable("mode hoop needs the pseudo-product");
}

/// Early-exit version of check_monadic used by enumeration.
bool is_monadic(const Model& m, const std::vector<Elem>& e, const std::vector<Elem>& f, Mode mode) {
  const std::size_t n = m.size();
  const Elem one = m.one();
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    if (m.arrow(x, e[x]) != one || m.squig(x, e[x]) != one) return false;
    if (m.arrow(f[x], x) != one || m.squig(f[x], x) != one) return false;
    if (e[f[x]] != f[x]) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem x = E(i), y = E(j);
      if (f[m.arrow(x, e[y])] != m.arrow(e[x], e[y])) return false;
      if (f[m.squig(x, e[y])] != m.squig(e[x], e[y])) return false;
      if (f[m.arrow(e[x], y)] != m.arrow(e[x], f[y])) return false;
      if (f[m.squig(e[x], y)] != m.squig(e[x], f[y])) return false;
    }
  if (mode != Mode::plain)
    for (std::size_t i = 0; i < n; ++i) {
      Elem x = E(i);
      if (f[m.odot(x, x)] != m.odot(f[x], f[x])) return false;
      if (mode == Mode::bounded_commutative && f[m.oplus(x, x)] != m.oplus(f[x], f[x])) return false;
    }
  return true;
}

/// Every map with g(1) = 1 and g(x) ∈ allowed[x], filtered by idempotence.
std::vector<UnaryMap> idempotent_maps(const Model& m, const std::vector<ElementSet>& allowed) {
  const std::size_t n = m.size();
  std::vector<std::vector<Elem>> choices(n);
  for (std::size_t x = 0; x < n; ++x) choices[x] = allowed[x].members();
  choices[m.one()] = {m.one()};
  std::vector<UnaryMap> out;
  std::vector<Elem> img(n);
  std::vector<std::size_t> pos(n, 0);
  for (auto& c : choices)
    if (c.empty()) return out;
  while (true) {
    for (std::size_t x = 0; x < n; ++x) img[x] = choices[x][pos[x]];
    bool idem = true;
    for (std::size_t x = 0; x < n && idem; ++x) idem = img[img[x]] == img[x];
    if (idem) out.emplace_back(img);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

bool next_map(std::vector<Elem>& v, std::size_t n) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (++v[k] < n) return true;
    v[k] = 0;
  }
  return false;
}

}  // namespace

std::vector<NamedPair> document_pairs(const AlgebraDocument& doc) {
  std::vector<NamedPair> out;
  constexpr std::string_view kSuffix = "_exists";
  for (const auto& m : doc.maps) {
    if (!m.name.ends_with(kSuffix)) continue;
    std::string base = m.name.substr(0, m.name.size() - kSuffix.size());
    if (const UnaryMap* f = doc.find_map(base + "_forall")) out.push_back({base, {m.map, *f}});
  }
  return out;
}

NamedPair find_pair(const AlgebraDocument& doc, std::string_view prefix) {
  auto pairs = document_pairs(doc);
  for (const auto& p : pairs)
    if (p.name == prefix) return p;
  const NamedPair* hit = nullptr;
  for (const auto& p : pairs) {
    if (!p.name.starts_with(prefix)) continue;
    if (hit) throw InvalidAlgebra("pair prefix '" + std::string(prefix) + "' is ambiguous");
    hit = &p;
  }
  if (!hit) throw InvalidAlgebra("no pair named '" + std::string(prefix) + "'");
  return *hit;
}

std::string_view mode_name(Mode m) { return kModeNames[static_cast<std::size_t>(m)]; }

std::optional<Mode> mode_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kModeNames.size(); ++i)
    if (kModeNames[i] == name) return static_cast<Mode>(i);
  return std::nullopt;
}

bool MonadicCheckReport::holds_plain() const {
  for (const auto& v : axioms.items)
    if (v.name != "M6" && v.name != "M7" && v.fails()) return false;
  return true;
}

MonadicCheckReport check_monadic(const Model& m, const MonadicPair& p, Mode mode) {
  require_mode(m, mode);
  const std::size_t n = m.size();
  const Elem one = m.one();
  const UnaryMap& ex = p.exists;
  const UnaryMap& fa = p.forall;
  MonadicCheckReport r{.mode = mode};
  auto& v = r.axioms.items;
  for (const char* name : {"M1", "M2", "M3.arrow", "M3.squig", "M4.arrow", "M4.squig", "M5"})
    v.push_back({.name = name});
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    v[0].check(m.arrow(x, ex(x)) == one && m.squig(x, ex(x)) == one, {x});
    v[1].check(m.arrow(fa(x), x) == one && m.squig(fa(x), x) == one, {x});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem x = E(i), y = E(j);
      v[2].check(fa(m.arrow(x, ex(y))) == m.arrow(ex(x), ex(y)), {x, y});
      v[3].check(fa(m.squig(x, ex(y))) == m.squig(ex(x), ex(y)), {x, y});
      v[4].check(fa(m.arrow(ex(x), y)) == m.arrow(ex(x), fa(y)), {x, y});
      v[5].check(fa(m.squig(ex(x), y)) == m.squig(ex(x), fa(y)), {x, y});
    }
  for (std::size_t i = 0; i < n; ++i) v[6].check(ex(fa(E(i))) == fa(E(i)), {E(i)});
  if (mode != Mode::plain) {
    Verdict m6{.name = "M6"};
    for (std::size_t i = 0; i < n; ++i) m6.check(fa(m.odot(E(i), E(i))) == m.odot(fa(E(i)), fa(E(i))), {E(i)});
    v.push_back(std::move(m6));
  }
  if (mode == Mode::bounded_commutative) {
    Verdict m7{.name = "M7"};
    for (std::size_t i = 0; i < n; ++i) m7.check(fa(m.oplus(E(i), E(i))) == m.oplus(fa(E(i)), fa(E(i))), {E(i)});
    v.push_back(std::move(m7));
  }
  return r;
}

std::vector<MonadicPair> enumerate_mop(const Model& m, const MopOptions& opts, MopStats* stats) {
  require_mode(m, opts.mode);
  const std::size_t n = m.size();
  MopStats local;
  std::vector<MonadicPair> out;
  if (opts.unpruned) {
    if (n > 5) throw PreconditionUnmet("unpruned enumeration is limited to 5 elements");
    std::vector<Elem> f(n, 0);
    do {
      std::vector<Elem> e(n, 0);
      do {
        ++local.pairs_checked;
        if (is_monadic(m, e, f, opts.mode)) out.push_back({UnaryMap(e), UnaryMap(f)});
      } while (next_map(e, n));
    } while (next_map(f, n));
  } else {
    std::vector<ElementSet> up(n), down(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (m.leq(E(x), E(y))) {
          up[x].insert(E(y));
          down[y].insert(E(x));
        }
    auto exists_c = idempotent_maps(m, up);
    auto forall_c = idempotent_maps(m, down);
    local.exists_candidates = exists_c.size();
    local.forall_candidates = forall_c.size();
    for (const auto& f : forall_c) {
      ElementSet fi = f.image();
      for (const auto& e : exists_c) {
        if (e.image() != fi) continue;
        ++local.pairs_checked;
        if (is_monadic(m, e.images(), f.images(), opts.mode)) out.push_back({e, f});
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (stats) *stats = local;
  return out;
}

FixedSets fixed_set(const Model& m, const MonadicPair& p) {
  FixedSets s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Elem x = E(i);
    if (p.exists(x) == x) s.fixed_exists.insert(x);
    if (p.forall(x) == x) s.fixed_forall.insert(x);
    if (p.forall(x) == m.one()) s.kernel.insert(x);
  }
  s.image_forall = p.forall.image();
  s.image_exists = p.exists.image();
  return s;
}

Verdict residuation_check(const Model& m, const MonadicPair& p) {
  if (!m.holds(Flag::condition_T)) throw PreconditionUnmet("residuation needs condition (T)");
  Verdict v{.name = "residuated"};
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      Elem x = E(i), y = E(j);
      v.check(m.leq(p.exists(x), y) == m.leq(x, p.forall(y)), {x, y});
    }
  return v;
}

namespace {

void require_bounded_good(const Model& m) {
  if (!m.has_negations()) throw PreconditionUnmet("algebra is not bounded");
  if (!m.holds(Flag::good)) throw PreconditionUnmet("algebra is not good");
}

/// Strict on bounded commutative algebras, reporting otherwise.
void enforce(const Model& m, const VerdictSet& conds) {
  if (!(m.holds(Flag::bounded) && m.holds(Flag::commutative))) return;
  if (const Verdict* f = conds.first_failure()) throw ConditionFailed(f->name, f->witness);
}

/// x ↦ (q x⁻)~ together with the check that it equals (q x~)⁻.
std::pair<UnaryMap, Verdict> conjugate(const Model& m, const UnaryMap& q) {
  const std::size_t n = m.size();
  std::vector<Elem> img(n);
  Verdict twin{.name = "twin"};
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    img[i] = m.sim(q(m.minus(x)));
    twin.check(img[i] == m.minus(q(m.sim(x))), {x});
  }
  return {UnaryMap(std::move(img)), std::move(twin)};
}

Mode validation_mode(const Model& m) {
  if (m.has_odot() && m.has_oplus()) return Mode::bounded_commutative;
  if (m.has_odot()) return Mode::pseudo_hoop;
  return Mode::plain;
}

}  // namespace

Construction build_from_tau(const Model& m, const UnaryMap& t) {
  require_bounded_good(m);
  if (!m.has_oplus()) throw PreconditionUnmet("the sum is not defined on this algebra");
  const std::size_t n = m.size();
  auto mi = [&](Elem x) { return m.minus(x); };
  auto si = [&](Elem x) { return m.sim(x); };
  auto P = [&](Elem x, Elem y) { return m.oplus(x, y); };
  VerdictSet c;
  for (int k = 1; k <= 6; ++k) c.items.push_back({.name = "U" + std::to_string(k)});
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    c.items[0].check(m.leq(t(x), x), {x});
    c.items[1].check(si(t(mi(x))) == mi(t(si(x))), {x});
    c.items[4].check(t(si(P(mi(x), mi(x)))) == si(P(mi(t(x)), mi(t(x)))) &&
                         t(mi(P(si(x), si(x)))) == mi(P(si(t(x)), si(t(x)))),
                     {x});
    c.items[5].check(t(P(x, x)) == P(t(x), t(x)), {x});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem x = E(i), y = E(j);
      c.items[2].check(t(P(x, mi(t(y)))) == P(t(x), mi(t(y))) && t(P(si(t(x)), y)) == P(si(t(x)), t(y)), {x, y});
      Elem v = P(t(x), t(y));
      c.items[3].check(t(P(x, t(y))) == v && t(P(t(x), y)) == v, {x, y});
    }
  enforce(m, c);
  auto [ex, twin] = conjugate(m, t);
  Construction out{.pair = {std::move(ex), t}, .conditions = std::move(c)};
  out.twin = std::move(twin);
  out.validation = check_monadic(m, out.pair, validation_mode(m));
  return out;
}

Construction build_from_sigma(const Model& m, const UnaryMap& s) {
  require_bounded_good(m);
  if (!m.has_odot()) throw PreconditionUnmet("the pseudo-product is not defined on this algebra");
  const std::size_t n = m.size();
  auto mi = [&](Elem x) { return m.minus(x); };
  auto si = [&](Elem x) { return m.sim(x); };
  auto O = [&](Elem x, Elem y) { return m.odot(x, y); };
  VerdictSet c;
  for (int k = 1; k <= 6; ++k) c.items.push_back({.name = "E" + std::to_string(k)});
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    c.items[0].check(m.leq(x, s(x)), {x});
    c.items[1].check(si(s(mi(x))) == mi(s(si(x))), {x});
    c.items[4].check(s(si(O(mi(x), mi(x)))) == si(O(mi(s(x)), mi(s(x)))) &&
                         s(mi(O(si(x), si(x)))) == mi(O(si(s(x)), si(s(x)))),
                     {x});
    c.items[5].check(s(O(x, x)) == O(s(x), s(x)), {x});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem x = E(i), y = E(j);
      c.items[2].check(s(O(x, si(s(y)))) == O(s(x), si(s(y))) && s(O(mi(s(x)), y)) == O(mi(s(x)), s(y)), {x, y});
      Elem v = O(s(x), s(y));
      c.items[3].check(s(O(x, s(y))) == v && s(O(s(x), y)) == v, {x, y});
    }
  enforce(m, c);
  auto [fa, twin] = conjugate(m, s);
  Construction out{.pair = {s, std::move(fa)}, .conditions = std::move(c)};
  out.twin = std::move(twin);
  out.validation = check_monadic(m, out.pair, validation_mode(m));
  return out;
}

UnaryMap dual_quantifier(const Model& m, Direction, const UnaryMap& q) {
  if (!m.has_negations() || !m.holds(Flag::involutive)) throw PreconditionUnmet("algebra is not bounded involutive");
  return conjugate(m, q).first;
}

Composition compose_pairs(const Model& m, const MonadicPair& p1, const MonadicPair& p2) {
  const std::size_t n = m.size();
  Composition c;
  c.bck = m.holds(Flag::pseudo_bck);
  c.forward = {p1.exists.after(p2.exists), p1.forall.after(p2.forall)};
  c.backward = {p2.exists.after(p1.exists), p2.forall.after(p1.forall)};
  c.commute_exists = c.forward.exists == c.backward.exists;
  c.commute_forall = c.forward.forall == c.backward.forall;
  c.forward_valid = check_monadic(m, c.forward).holds();
  c.backward_valid = check_monadic(m, c.backward).holds();
  if (c.commute() && c.forward_valid) c.composed = c.forward;
  c.order_defined = m.holds(Flag::poset);
  c.forall_leq = c.exists_geq = true;
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    c.forall_leq = c.forall_leq && m.leq(p1.forall(x), p2.forall(x));
    c.exists_geq = c.exists_geq && m.leq(p2.exists(x), p1.exists(x));
  }
  c.forall_absorbs = c.forward.forall == p1.forall;
  c.exists_absorbs = c.forward.exists == p1.exists;
  return c;
}

VerdictSet check_mv_quantifier(const Model& m, const UnaryMap& q, QuantifierKind kind) {
  if (!m.holds(Flag::bounded) || !m.holds(Flag::commutative) || !m.has_oplus() || !m.has_meet() || !m.has_join())
    throw NotBoundedCommutative();
  const std::size_t n = m.size();
  const bool uni = kind == QuantifierKind::universal;
  auto P = [&](Elem x, Elem y) { return m.oplus(x, y); };
  // x⊙y := (y⁻⊕x⁻)~
  auto O = [&](Elem x, Elem y) { return m.sim(P(m.minus(y), m.minus(x))); };
  auto lat = [&](Elem x, Elem y) { return uni ? m.meet(x, y) : m.join(x, y); };
  VerdictSet s;
  const std::string prefix = uni ? "MVU" : "MVE";
  for (int k = 1; k <= 6; ++k) s.items.push_back({.name = prefix + std::to_string(k)});
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i), qx = q(x);
    s.items[0].check(uni ? m.leq(qx, x) : m.leq(x, qx), {x});
    s.items[2].check(q(m.minus(qx)) == m.minus(qx) && q(m.sim(qx)) == m.sim(qx), {x});
    s.items[4].check(q(O(x, x)) == O(qx, qx), {x});
    s.items[5].check(q(P(x, x)) == P(qx, qx), {x});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem x = E(i), y = E(j);
      s.items[1].check(q(lat(x, y)) == lat(q(x), q(y)), {x, y});
      s.items[3].check(q(O(q(x), q(y))) == O(q(x), q(y)), {x, y});
    }
  return s;
}

}  // namespace mpbe
