#include "mpbe/classify.hpp"

#include "mpbe/errors.hpp"

namespace mpbe {

namespace {

constexpr std::array<std::string_view, kFlagCount> kFlagNames = {
    "pseudo_be",       "pseudo_bck", "condition_A",      "condition_M",      "condition_T", "distributive_i",
    "distributive_ii", "commutative", "bounded",         "good",             "involutive",  "poset",
    "meet_semilattice", "join_semilattice", "lattice",   "has_pP",           "pseudo_hoop", "pseudo_mv",
};

Elem E(std::size_t i) { return static_cast<Elem>(i); }

std::vector<ElementSet> up_sets(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<ElementSet> up(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a.leq(E(x), E(y))) up[x].insert(E(y));
  return up;
}

Verdict poset_verdict(const std::vector<ElementSet>& up) {
  Verdict v{.name = "poset"};
  const std::size_t n = up.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) v.check(!(up[x].contains(E(y)) && up[y].contains(E(x))), {E(x), E(y)});
  if (v.fails()) {
    v.note = "antisymmetry";
    return v;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (up[x].contains(E(y)) && up[y].contains(E(z))) v.check(up[x].contains(E(z)), {E(x), E(y), E(z)});
  if (v.fails()) v.note = "transitivity";
  return v;
}

/// Minimum of `s` under the order, if it exists.
std::optional<Elem> minimum(const std::vector<ElementSet>& up, ElementSet s) {
  for (Elem m : s.members())
    if (s.subset_of(up[m])) return m;
  return std::nullopt;
}

std::optional<Elem> maximum(const std::vector<ElementSet>& up, ElementSet s) {
  for (Elem m : s.members()) {
    bool top = true;
    for (Elem t : s.members())
      if (!up[t].contains(m)) { top = false; break; }
    if (top) return m;
  }
  return std::nullopt;
}

ProductResult product_on(const FiniteAlgebra& a, const std::vector<ElementSet>& up) {
  const std::size_t n = a.size();
  Table t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ElementSet s1, s2;
      for (std::size_t z = 0; z < n; ++z) {
        if (a.leq(E(x), a.arrow(E(y), E(z)))) s1.insert(E(z));
        if (a.leq(E(y), a.squig(E(x), E(z)))) s2.insert(E(z));
      }
      auto m1 = minimum(up, s1), m2 = minimum(up, s2);
      if (!m1 || !m2 || *m1 != *m2) return {std::nullopt, std::pair{E(x), E(y)}};
      t.at(E(x), E(y)) = *m1;
    }
  return {std::move(t), std::nullopt};
}

}  // namespace

std::string_view flag_name(Flag f) { return kFlagNames[static_cast<std::size_t>(f)]; }

std::optional<Flag> flag_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFlagCount; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

const std::array<Flag, kFlagCount>& all_flags() {
  static const std::array<Flag, kFlagCount> flags = [] {
    std::array<Flag, kFlagCount> f{};
    for (std::size_t i = 0; i < kFlagCount; ++i) f[i] = static_cast<Flag>(i);
    return f;
  }();
  return flags;
}

bool leq(const FiniteAlgebra& a, Elem x, Elem y) { return a.leq(x, y); }

VerdictSet check_pseudo_be(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  const Elem one = a.one();
  Verdict b1{.name = "psBE1"}, b2{.name = "psBE2"}, b3{.name = "psBE3"}, b4{.name = "psBE4"}, b5{.name = "psBE5"};
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    b1.check(a.arrow(x, x) == one && a.squig(x, x) == one, {x});
    b2.check(a.arrow(x, one) == one && a.squig(x, one) == one, {x});
    b3.check(a.arrow(one, x) == x && a.squig(one, x) == x, {x});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        b4.check(a.arrow(E(x), a.squig(E(y), E(z))) == a.squig(E(y), a.arrow(E(x), E(z))), {E(x), E(y), E(z)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      b5.check((a.arrow(E(x), E(y)) == one) == (a.squig(E(x), E(y)) == one), {E(x), E(y)});
  return {{b1, b2, b3, b4, b5}};
}

VerdictSet check_pseudo_bck(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  const Elem one = a.one();
  Verdict k1{.name = "psBCK1"}, k2{.name = "psBCK2"}, k3{.name = "psBCK3"}, k4{.name = "psBCK4"},
      k5{.name = "psBCK5"}, k6{.name = "psBCK6"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Elem X = E(x), Y = E(y), Z = E(z);
        k1.check(a.squig(a.arrow(X, Y), a.squig(a.arrow(Y, Z), a.arrow(X, Z))) == one, {X, Y, Z});
        k2.check(a.arrow(a.squig(X, Y), a.arrow(a.squig(Y, Z), a.squig(X, Z))) == one, {X, Y, Z});
      }
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    k3.check(a.arrow(one, x) == x, {x});
    k4.check(a.squig(one, x) == x, {x});
    k5.check(a.arrow(x, one) == one, {x});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) k6.check(!(a.leq(E(x), E(y)) && a.leq(E(y), E(x))), {E(x), E(y)});
  return {{k1, k2, k3, k4, k5, k6}};
}

ProductResult pseudo_product(const FiniteAlgebra& a) {
  auto up = up_sets(a);
  if (!poset_verdict(up).holds()) throw NotAPoset();
  return product_on(a, up);
}

namespace {

Verdict summarize(std::string name, const VerdictSet& set) {
  Verdict v{.name = std::move(name)};
  for (const auto& item : set.items) v.instances += item.instances;
  if (const Verdict* f = set.first_failure()) {
    v.status = Status::fails;
    v.witness = f->witness;
    v.witnesses = f->witnesses;
    v.violations = f->violations;
    v.note = f->name;
  }
  return v;
}

using Ternary = bool (*)(const FiniteAlgebra&, const std::vector<ElementSet>&, Elem, Elem, Elem);

Verdict scan3(const char* name, const FiniteAlgebra& a, const std::vector<ElementSet>& up, Ternary pred) {
  Verdict v{.name = name};
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) v.check(pred(a, up, E(x), E(y), E(z)), {E(x), E(y), E(z)});
  return v;
}

void classify_meet_join(const FiniteAlgebra& a, const std::vector<ElementSet>& up, ClassificationReport& r,
                        DerivedOps& ops) {
  const std::size_t n = a.size();
  if (!r.holds(Flag::poset)) {
    for (Flag f : {Flag::meet_semilattice, Flag::join_semilattice, Flag::lattice})
      r[f] = Verdict::not_applicable(std::string(flag_name(f)), "not a poset");
    return;
  }
  Verdict mv{.name = "meet_semilattice"}, jv{.name = "join_semilattice"};
  Table meet(n), join(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ElementSet lower, upper = up[x] & up[y];
      for (std::size_t z = 0; z < n; ++z)
        if (up[z].contains(E(x)) && up[z].contains(E(y))) lower.insert(E(z));
      auto g = maximum(up, lower);
      auto l = minimum(up, upper);
      mv.check(g.has_value(), {E(x), E(y)});
      jv.check(l.has_value(), {E(x), E(y)});
      if (g) meet.at(E(x), E(y)) = *g;
      if (l) join.at(E(x), E(y)) = *l;
    }
  if (mv.holds()) ops.meet = std::move(meet);
  if (jv.holds()) ops.join = std::move(join);
  Verdict lv{.name = "lattice", .instances = mv.instances};
  if (!mv.holds() || !jv.holds()) {
    const Verdict& bad = mv.holds() ? jv : mv;
    lv.status = Status::fails;
    lv.witness = bad.witness;
    lv.witnesses = bad.witnesses;
    lv.violations = bad.violations;
    lv.note = bad.name;
  }
  r[Flag::meet_semilattice] = std::move(mv);
  r[Flag::join_semilattice] = std::move(jv);
  r[Flag::lattice] = std::move(lv);
}

void classify_bounded(const FiniteAlgebra& a, const std::vector<ElementSet>& up, ClassificationReport& r,
                      DerivedOps& ops) {
  const std::size_t n = a.size();
  const Elem one = a.one();
  ElementSet least;
  for (std::size_t z = 0; z < n; ++z)
    if (up[z] == a.carrier()) least.insert(E(z));
  if (a.zero() && !least.contains(*a.zero()))
    throw DeclaredZeroMismatch("declared zero '" + a.element_name(*a.zero()) + "' is not a least element");
  Verdict bv{.name = "bounded", .instances = n};
  auto lm = least.members();
  if (lm.size() == 1) {
    ops.zero = lm[0];
  } else {
    bv.status = Status::fails;
    bv.violations = 1;
    if (lm.empty()) {
      bv.note = "no least element";
    } else {
      bv.witness = {lm[0], lm[1]};
      bv.witnesses = {bv.witness};
      bv.note = "several least elements";
    }
  }
  r[Flag::bounded] = std::move(bv);
  if (!ops.zero) {
    r[Flag::good] = Verdict::not_applicable("good", "not bounded");
    r[Flag::involutive] = Verdict::not_applicable("involutive", "not bounded");
    return;
  }
  const Elem zero = *ops.zero;
  std::vector<Elem> mi(n), si(n);
  for (std::size_t x = 0; x < n; ++x) {
    mi[x] = a.arrow(E(x), zero);
    si[x] = a.squig(E(x), zero);
  }
  ops.neg_minus = UnaryMap(mi);
  ops.neg_sim = UnaryMap(si);
  Verdict gv{.name = "good"}, iv{.name = "involutive"};
  for (std::size_t x = 0; x < n; ++x) {
    Elem ms = si[mi[x]], sm = mi[si[x]];
    gv.check(ms == sm, {E(x)});
    iv.check(ms == x && sm == x, {E(x)});
  }
  r[Flag::good] = std::move(gv);
  r[Flag::involutive] = std::move(iv);

  bool oplus_ok = true;
  Table oplus(n);
  for (std::size_t x = 0; x < n && oplus_ok; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem p = a.arrow(si[y], E(x)), q = a.squig(mi[x], E(y));
      if (p != q) { oplus_ok = false; break; }
      oplus.at(E(x), E(y)) = p;
    }
  if (oplus_ok) ops.oplus = std::move(oplus);
  (void)one;
}

void classify_hoop(const FiniteAlgebra& a, ClassificationReport& r, const DerivedOps& ops) {
  if (!ops.odot) {
    r[Flag::pseudo_hoop] = Verdict::not_applicable("pseudo_hoop", "no pseudo-product");
    return;
  }
  const std::size_t n = a.size();
  const Elem one = a.one();
  const Table& m = *ops.odot;
  VerdictSet s{{{.name = "psH1"}, {.name = "psH2"}, {.name = "psH3"}, {.name = "psH4"}, {.name = "psH5"}}};
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    s.items[0].check(m(x, one) == x && m(one, x) == x, {x});
    s.items[1].check(a.arrow(x, x) == one && a.squig(x, x) == one, {x});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem X = E(x), Y = E(y);
      for (std::size_t z = 0; z < n; ++z) {
        Elem Z = E(z);
        s.items[2].check(a.arrow(m(X, Y), Z) == a.arrow(X, a.arrow(Y, Z)), {X, Y, Z});
        s.items[3].check(a.squig(m(X, Y), Z) == a.squig(Y, a.squig(X, Z)), {X, Y, Z});
      }
      Elem v = m(a.arrow(X, Y), X);
      s.items[4].check(v == m(a.arrow(Y, X), Y) && v == m(X, a.squig(X, Y)) && v == m(Y, a.squig(Y, X)), {X, Y});
    }
  r[Flag::pseudo_hoop] = summarize("pseudo_hoop", s);
}

void classify_mv(const FiniteAlgebra& a, ClassificationReport& r, const DerivedOps& ops) {
  if (!r.holds(Flag::bounded) || !r.holds(Flag::commutative) || !ops.oplus) {
    r[Flag::pseudo_mv] = Verdict::not_applicable("pseudo_mv", "not bounded commutative");
    return;
  }
  const std::size_t n = a.size();
  const Elem one = a.one(), zero = *ops.zero;
  const Table& p = *ops.oplus;
  const UnaryMap& mi = *ops.neg_minus;
  const UnaryMap& si = *ops.neg_sim;
  // x⊙y := (y⁻⊕x⁻)~
  auto od = [&](Elem x, Elem y) { return si(p(mi(y), mi(x))); };
  VerdictSet s;
  for (int k = 1; k <= 8; ++k) s.items.push_back({.name = "psMV" + std::to_string(k)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        s.items[0].check(p(E(x), p(E(y), E(z))) == p(p(E(x), E(y)), E(z)), {E(x), E(y), E(z)});
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = E(i);
    s.items[1].check(p(x, zero) == x && p(zero, x) == x, {x});
    s.items[2].check(p(x, one) == one && p(one, x) == one, {x});
    s.items[7].check(si(mi(x)) == x, {x});
  }
  s.items[3].check(mi(one) == zero && si(one) == zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem x = E(i), y = E(j);
      s.items[4].check(si(p(mi(x), mi(y))) == mi(p(si(x), si(y))), {x, y});
      Elem v = p(x, od(si(x), y));
      s.items[5].check(v == p(y, od(si(y), x)) && v == p(od(x, mi(y)), y) && v == p(od(y, mi(x)), x), {x, y});
      s.items[6].check(od(x, p(mi(x), y)) == od(p(x, si(y)), y), {x, y});
    }
  r[Flag::pseudo_mv] = summarize("pseudo_mv", s);
}

}  // namespace

Model classify(const FiniteAlgebra& a) {
  ClassificationReport r;
  auto be = check_pseudo_be(a);
  if (!be.holds()) {
    const Verdict* f = be.first_failure();
    throw PreconditionUnmet("not a pseudo BE-algebra: " + f->name + " fails at " + a.format_tuple(f->witness));
  }
  const std::size_t n = a.size();
  DerivedOps ops;
  ops.up = up_sets(a);
  const auto& up = ops.up;

  r[Flag::pseudo_be] = summarize("pseudo_be", be);
  r[Flag::pseudo_bck] = summarize("pseudo_bck", check_pseudo_bck(a));

  r[Flag::condition_A] = scan3("condition_A", a, up, [](const FiniteAlgebra& a, const std::vector<ElementSet>& up,
                                                        Elem x, Elem y, Elem z) {
    return !up[x].contains(y) ||
           (a.leq(a.arrow(y, z), a.arrow(x, z)) && a.leq(a.squig(y, z), a.squig(x, z)));
  });
  r[Flag::condition_M] = scan3("condition_M", a, up, [](const FiniteAlgebra& a, const std::vector<ElementSet>& up,
                                                        Elem x, Elem y, Elem z) {
    return !up[x].contains(y) ||
           (a.leq(a.arrow(z, x), a.arrow(z, y)) && a.leq(a.squig(z, x), a.squig(z, y)));
  });
  r[Flag::condition_T] = scan3("condition_T", a, up, [](const FiniteAlgebra&, const std::vector<ElementSet>& up,
                                                        Elem x, Elem y, Elem z) {
    return !(up[x].contains(y) && up[y].contains(z)) || up[x].contains(z);
  });
  r[Flag::distributive_i] = scan3("distributive_i", a, up, [](const FiniteAlgebra& a, const std::vector<ElementSet>&,
                                                              Elem x, Elem y, Elem z) {
    return a.arrow(x, a.squig(y, z)) == a.squig(a.arrow(x, y), a.arrow(x, z));
  });
  r[Flag::distributive_ii] = scan3("distributive_ii", a, up, [](const FiniteAlgebra& a,
                                                                const std::vector<ElementSet>&, Elem x, Elem y,
                                                                Elem z) {
    return a.squig(x, a.arrow(y, z)) == a.arrow(a.squig(x, y), a.squig(x, z));
  });

  ops.cup1 = Table(n);
  ops.cup2 = Table(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ops.cup1.at(E(x), E(y)) = a.squig(a.arrow(E(x), E(y)), E(y));
      ops.cup2.at(E(x), E(y)) = a.arrow(a.squig(E(x), E(y)), E(y));
    }
  Verdict cv{.name = "commutative"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      cv.check(ops.cup1(E(x), E(y)) == ops.cup1(E(y), E(x)) && ops.cup2(E(x), E(y)) == ops.cup2(E(y), E(x)),
               {E(x), E(y)});
  r[Flag::commutative] = std::move(cv);

  r[Flag::poset] = poset_verdict(up);
  classify_bounded(a, up, r, ops);
  classify_meet_join(a, up, r, ops);

  if (r.holds(Flag::poset)) {
    auto pr = product_on(a, up);
    Verdict pv{.name = "has_pP", .instances = n * n};
    if (pr.table) {
      ops.odot = std::move(pr.table);
    } else {
      pv.fail({pr.failing->first, pr.failing->second});
      pv.instances = n * n;
    }
    r[Flag::has_pP] = std::move(pv);
  } else {
    r[Flag::has_pP] = Verdict::not_applicable("has_pP", "not a poset");
  }
  classify_hoop(a, r, ops);
  classify_mv(a, r, ops);
  return Model(a, std::move(r), std::move(ops));
}

}  // namespace mpbe
