#include "mpbe/deduction.hpp"

#include <algorithm>

#include "mpbe/errors.hpp"

namespace mpbe {

namespace {

Elem E(std::size_t i) { return static_cast<Elem>(i); }

Elem apply(const FiniteAlgebra& a, Implication imp, Elem x, Elem y) {
  return imp == Implication::arrow ? a.arrow(x, y) : a.squig(x, y);
}

}  // namespace

bool is_deductive_system(const FiniteAlgebra& a, ElementSet d, Implication imp) {
  if (!d.contains(a.one())) return false;
  const std::size_t n = a.size();
  for (Elem x : d.members())
    for (std::size_t y = 0; y < n; ++y)
      if (d.contains(apply(a, imp, x, E(y))) && !d.contains(E(y))) return false;
  return true;
}

bool is_normal(const FiniteAlgebra& a, ElementSet d) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (d.contains(a.arrow(E(x), E(y))) != d.contains(a.squig(E(x), E(y)))) return false;
  return true;
}

bool is_monadic_ds(ElementSet d, const UnaryMap& forall) {
  for (Elem x : d.members())
    if (!d.contains(forall(x))) return false;
  return true;
}

std::vector<DeductiveSystem> enumerate_ds(const Model& m, std::span<const MonadicPair> pairs) {
  const FiniteAlgebra& a = m.algebra();
  const std::size_t n = a.size();
  if (n > 20) throw PreconditionUnmet("deductive system enumeration is limited to 20 elements");
  std::vector<DeductiveSystem> out;
  const std::uint64_t one_bit = std::uint64_t{1} << a.one();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & one_bit)) continue;
    ElementSet d(mask);
    if (!is_deductive_system(a, d)) continue;
    DeductiveSystem ds{.members = d, .normal = is_normal(a, d)};
    for (const auto& p : pairs) ds.monadic.push_back(is_monadic_ds(d, p.forall));
    out.push_back(std::move(ds));
  }
  std::sort(out.begin(), out.end(), [](const DeductiveSystem& l, const DeductiveSystem& r) {
    if (l.members.size() != r.members.size()) return l.members.size() < r.members.size();
    return l.members.members() < r.members.members();
  });
  return out;
}

std::vector<DeductiveSystem> monadic_ds(const Model& m, const MonadicPair& p) {
  std::vector<DeductiveSystem> out;
  for (auto& d : enumerate_ds(m, std::span(&p, 1)))
    if (d.monadic[0]) out.push_back(std::move(d));
  return out;
}

ElementSet generated_ds(const FiniteAlgebra& a, ElementSet x) {
  const std::size_t n = a.size();
  ElementSet d = x | ElementSet::singleton(a.one());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem u : d.members())
      for (std::size_t y = 0; y < n; ++y)
        if (!d.contains(E(y)) && (d.contains(a.arrow(u, E(y))) || d.contains(a.squig(u, E(y))))) {
          d.insert(E(y));
          grew = true;
        }
  }
  return d;
}

ElementSet generated_ds_by_chains(const FiniteAlgebra& a, ElementSet x, Implication imp) {
  const std::size_t n = a.size();
  const auto gens = (x | ElementSet::singleton(a.one())).members();
  // level holds the elements reachable by chains of length k
  ElementSet level = ElementSet::singleton(a.one());
  ElementSet result;
  for (std::size_t k = 1; k <= n; ++k) {
    ElementSet next;
    for (std::size_t y = 0; y < n; ++y)
      for (Elem g : gens)
        if (level.contains(apply(a, imp, g, E(y)))) {
          next.insert(E(y));
          break;
        }
    result = result | next;
    level = next;
  }
  return result;
}

Congruence::Congruence(std::vector<Elem> labels) : labels_(std::move(labels)) {
  std::vector<int> remap(kMaxElements, -1);
  for (auto& l : labels_) {
    if (remap[l] < 0) remap[l] = static_cast<int>(count_++);
    l = static_cast<Elem>(remap[l]);
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Elem> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = E(i);
  return Congruence(std::move(l));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<Elem>(n, 0)); }

std::vector<ElementSet> Congruence::classes() const {
  std::vector<ElementSet> out(count_);
  for (std::size_t x = 0; x < labels_.size(); ++x) out[labels_[x]].insert(E(x));
  return out;
}

ElementSet Congruence::class_set(Elem x) const {
  ElementSet s;
  for (std::size_t y = 0; y < labels_.size(); ++y)
    if (labels_[y] == labels_[x]) s.insert(E(y));
  return s;
}

std::optional<std::vector<Elem>> compatibility_witness(const FiniteAlgebra& a, const Congruence& c) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!c.related(E(x), E(y))) continue;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          if (!c.related(E(u), E(v))) continue;
          if (!c.related(a.arrow(E(x), E(u)), a.arrow(E(y), E(v))) ||
              !c.related(a.squig(E(x), E(u)), a.squig(E(y), E(v))))
            return std::vector<Elem>{E(x), E(y), E(u), E(v)};
        }
    }
  return std::nullopt;
}

bool is_congruence(const FiniteAlgebra& a, const Congruence& c) { return !compatibility_witness(a, c); }

bool is_monadic_congruence(const Congruence& c, const UnaryMap& forall) {
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (c.related(E(x), E(y)) && !c.related(forall(E(x)), forall(E(y)))) return false;
  return true;
}

bool is_relative(const FiniteAlgebra& a, const Congruence& c) {
  return check_pseudo_bck(quotient(a, c).algebra).holds();
}

bool is_meet_compatible(const Model& m, const Congruence& c) {
  if (!m.has_meet()) throw PreconditionUnmet("algebra is not a meet-semilattice");
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!c.related(E(x), E(y))) continue;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (c.related(E(u), E(v)) && !c.related(m.meet(E(x), E(u)), m.meet(E(y), E(v)))) return false;
    }
  return true;
}

namespace {

struct PartitionSearch {
  const FiniteAlgebra& a;
  std::size_t n;
  std::vector<Elem> labels;
  std::vector<Congruence> found;

  /// Checks every 4-tuple that involves the newest element and whose results are labelled.
  bool consistent(std::size_t depth) const {
    auto lab = [&](Elem e) { return static_cast<std::size_t>(e) < depth; };
    const std::size_t i = depth - 1;
    for (std::size_t x = 0; x < depth; ++x)
      for (std::size_t y = 0; y < depth; ++y) {
        if (labels[x] != labels[y]) continue;
        for (std::size_t u = 0; u < depth; ++u)
          for (std::size_t v = 0; v < depth; ++v) {
            if (x != i && y != i && u != i && v != i) continue;
            if (labels[u] != labels[v]) continue;
            Elem p = a.arrow(E(x), E(u)), q = a.arrow(E(y), E(v));
            if (lab(p) && lab(q) && labels[p] != labels[q]) return false;
            p = a.squig(E(x), E(u));
            q = a.squig(E(y), E(v));
            if (lab(p) && lab(q) && labels[p] != labels[q]) return false;
          }
      }
    return true;
  }

  // A pruned tuple whose results get labelled later is rechecked at the leaf.
  void run(std::size_t depth, Elem next_label) {
    if (depth == n) {
      Congruence c(labels);
      if (is_congruence(a, c)) found.push_back(std::move(c));
      return;
    }
    for (Elem l = 0; l <= next_label; ++l) {
      labels[depth] = l;
      if (consistent(depth + 1)) run(depth + 1, l == next_label ? static_cast<Elem>(next_label + 1) : next_label);
    }
  }
};

}  // namespace

std::vector<CongruenceInfo> enumerate_congruences(const Model& m, const CongruenceOptions& opts) {
  const FiniteAlgebra& a = m.algebra();
  const std::size_t n = a.size();
  if (n > 10) throw PreconditionUnmet("congruence enumeration is limited to 10 elements");
  PartitionSearch s{a, n, std::vector<Elem>(n, 0), {}};
  s.run(0, 0);
  std::vector<CongruenceInfo> out;
  for (auto& c : s.found) {
    CongruenceInfo info{.partition = c, .relative = is_relative(a, c)};
    if (opts.pair) info.monadic = is_monadic_congruence(c, opts.pair->forall);
    if (m.has_meet()) info.meet_compatible = is_meet_compatible(m, c);
    out.push_back(std::move(info));
  }
  return out;
}

Congruence theta_from_ds(const FiniteAlgebra& a, ElementSet d) {
  const std::size_t n = a.size();
  auto rel = [&](Elem x, Elem y) { return d.contains(a.arrow(x, y)) && d.contains(a.arrow(y, x)); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (rel(E(x), E(y)) && rel(E(y), E(z)) && !rel(E(x), E(z)))
          throw NotACongruence("relation is not transitive", {E(x), E(y), E(z)});
  std::vector<Elem> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = E(x);
    for (std::size_t y = 0; y < x; ++y)
      if (rel(E(x), E(y))) {
        labels[x] = labels[y];
        break;
      }
  }
  Congruence c(std::move(labels));
  if (auto w = compatibility_witness(a, c)) throw NotACongruence("relation is not compatible", *w);
  if (c.class_set(a.one()) != d) throw NotACongruence("class of 1 differs from the deductive system", {});
  return c;
}

QuotientAlgebra quotient(const FiniteAlgebra& a, const Congruence& theta, const MonadicPair* pair) {
  const std::size_t n = a.size();
  const std::size_t k = theta.class_count();
  // Labels are in first-occurrence order, so class i has least member rep[i].
  std::vector<Elem> rep(k, 0);
  std::vector<bool> seen(k, false);
  for (std::size_t x = 0; x < n; ++x)
    if (!seen[theta.class_of(E(x))]) {
      seen[theta.class_of(E(x))] = true;
      rep[theta.class_of(E(x))] = E(x);
    }
  Table arrow(k), squig(k);
  std::vector<std::vector<bool>> set(k, std::vector<bool>(k, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem cx = theta.class_of(E(x)), cy = theta.class_of(E(y));
      Elem ar = theta.class_of(a.arrow(E(x), E(y))), sq = theta.class_of(a.squig(E(x), E(y)));
      if (!set[cx][cy]) {
        set[cx][cy] = true;
        arrow.at(cx, cy) = ar;
        squig.at(cx, cy) = sq;
      } else if (arrow(cx, cy) != ar || squig(cx, cy) != sq) {
        throw IllDefined("class operations disagree", {rep[cx], rep[cy], E(x), E(y)});
      }
    }
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) names[i] = a.element_name(rep[i]);
  std::optional<Elem> zero;
  if (a.zero()) zero = theta.class_of(*a.zero());
  QuotientAlgebra q{.algebra = FiniteAlgebra(a.name() + "_quotient", std::move(names), theta.class_of(a.one()), zero,
                                             arrow, squig),
                    .projection = theta.labels(),
                    .arrow_equals_squig = arrow == squig};
  if (pair) {
    std::vector<Elem> ex(k), fa(k);
    std::vector<bool> done(k, false);
    for (std::size_t x = 0; x < n; ++x) {
      Elem c = theta.class_of(E(x));
      Elem e = theta.class_of(pair->exists(E(x))), f = theta.class_of(pair->forall(E(x)));
      if (!done[c]) {
        done[c] = true;
        ex[c] = e;
        fa[c] = f;
      } else if (ex[c] != e || fa[c] != f) {
        throw IllDefined("quotient quantifiers are not well defined", {rep[c], E(x)});
      }
    }
    q.pair = MonadicPair{UnaryMap(std::move(ex)), UnaryMap(std::move(fa))};
    auto be = check_pseudo_be(q.algebra);
    if (be.holds()) q.pair_report = check_monadic(classify(q.algebra), *q.pair);
  }
  return q;
}

Correspondence correspondence_report(const Model& m, const MonadicPair& p, Variant variant) {
  const FiniteAlgebra& a = m.algebra();
  if (variant == Variant::be && !(m.holds(Flag::distributive_i) && m.holds(Flag::commutative)))
    throw PreconditionUnmet("variant be needs a distributive commutative algebra");
  if (variant == Variant::bck_meet && !m.holds(Flag::pseudo_bck))
    throw PreconditionUnmet("variant bck_meet needs a pseudo BCK-algebra");
  Correspondence r;
  r.verdict.name = variant == Variant::be ? "correspondence.be" : "correspondence.bck_meet";
  for (const auto& d : monadic_ds(m, p))
    if (variant == Variant::be || d.normal) r.systems.push_back(d.members);
  CongruenceOptions opts{.pair = &p};
  for (const auto& c : enumerate_congruences(m, opts))
    if (*c.monadic && (variant == Variant::be || c.relative)) r.congruences.push_back(c.partition);

  auto has_system = [&](ElementSet s) { return std::find(r.systems.begin(), r.systems.end(), s) != r.systems.end(); };
  auto has_congruence = [&](const Congruence& c) {
    return std::find(r.congruences.begin(), r.congruences.end(), c) != r.congruences.end();
  };
  r.verdict.check(r.systems.size() == r.congruences.size(), {});
  if (r.verdict.fails()) r.verdict.note = "counts differ";
  for (ElementSet d : r.systems) {
    bool ok = false;
    try {
      Congruence t = theta_from_ds(a, d);
      ok = has_congruence(t) && t.class_set(a.one()) == d;
    } catch (const NotACongruence&) {
      ok = false;
    }
    r.verdict.check(ok, d.members());
    if (!ok && r.verdict.note.empty()) r.verdict.note = "deductive system without matching congruence";
  }
  for (const auto& c : r.congruences) {
    ElementSet one = c.class_set(a.one());
    bool ok = has_system(one);
    if (ok) {
      try {
        ok = theta_from_ds(a, one) == c;
      } catch (const NotACongruence&) {
        ok = false;
      }
    }
    r.verdict.check(ok, one.members());
    if (!ok && r.verdict.note.empty()) r.verdict.note = "congruence not recovered from its class of 1";
  }
  return r;
}

std::string format_partition(const FiniteAlgebra& a, const Congruence& c) {
  std::string out;
  for (ElementSet s : c.classes()) {
    if (!out.empty()) out += ' ';
    out += a.format_set(s);
  }
  return out;
}

}  // namespace mpbe
