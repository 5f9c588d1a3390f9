#include "mpbe/laws.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "mpbe/errors.hpp"

namespace mpbe {

namespace {

using Check = std::function<bool(const LawContext&)>;
using C = const LawContext&;

bool implies(bool a, bool b) { return !a || b; }

/// Fluent construction of one catalog entry.
class Entry {
 public:
  Entry(std::string id, std::string anchor) {
    law_.id = std::move(id);
    law_.anchor = std::move(anchor);
  }
  Entry& hyp(std::initializer_list<Flag> f) {
    law_.hypothesis.assign(f);
    return *this;
  }
  Entry& needs(unsigned n) {
    law_.needs = n;
    return *this;
  }
  Entry& mode(Mode m) {
    law_.pair_mode = m;
    return *this;
  }
  Entry& pair() {
    law_.scope = Scope::pair;
    return *this;
  }
  Entry& pairs() {
    law_.scope = Scope::pair_pair;
    return *this;
  }
  Entry& over(Domain d) {
    law_.domain = d;
    return *this;
  }
  Entry& conjecture() {
    law_.conjecture = true;
    return *this;
  }
  Law check0(std::function<bool(C)> f) { return finish(0, std::move(f)); }
  Law check1(std::function<bool(C, Elem)> f) {
    return finish(1, [f](C c) { return f(c, c.x[0]); });
  }
  Law check2(std::function<bool(C, Elem, Elem)> f) {
    return finish(2, [f](C c) { return f(c, c.x[0], c.x[1]); });
  }
  Law check3(std::function<bool(C, Elem, Elem, Elem)> f) {
    return finish(3, [f](C c) { return f(c, c.x[0], c.x[1], c.x[2]); });
  }

 private:
  Law finish(std::size_t arity, Check f) {
    law_.arity = arity;
    law_.check = std::move(f);
    return std::move(law_);
  }
  Law law_;
};

template <typename F>
void for_each_map(std::size_t n, F&& f) {
  std::vector<Elem> img(n, 0);
  while (true) {
    f(UnaryMap(img));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++img[k] < n) break;
      img[k] = 0;
      if (k == 0) return;
    }
  }
}

std::optional<Construction> try_tau(const Model& m, const UnaryMap& t) {
  try {
    auto c = build_from_tau(m, t);
    if (!c.conditions.holds()) return std::nullopt;
    return c;
  } catch (const ConditionFailed&) {
    return std::nullopt;
  }
}

std::optional<Construction> try_sigma(const Model& m, const UnaryMap& s) {
  try {
    auto c = build_from_sigma(m, s);
    if (!c.conditions.holds()) return std::nullopt;
    return c;
  } catch (const ConditionFailed&) {
    return std::nullopt;
  }
}

bool forall_pointwise(C c, const std::function<bool(Elem)>& f) {
  for (std::size_t i = 0; i < c.n(); ++i)
    if (!f(static_cast<Elem>(i))) return false;
  return true;
}

bool forall_pointwise2(C c, const std::function<bool(Elem, Elem)>& f) {
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = 0; j < c.n(); ++j)
      if (!f(static_cast<Elem>(i), static_cast<Elem>(j))) return false;
  return true;
}

ElementSet fixed_of(C c) { return fixed_set(c.m, *c.p).fixed(); }

ElementSet one_class(C c) { return c.theta().class_set(c.one()); }

std::optional<Congruence> theta_or_none(const FiniteAlgebra& a, ElementSet d) {
  try {
    return theta_from_ds(a, d);
  } catch (const NotACongruence&) {
    return std::nullopt;
  }
}

void add_core(std::vector<Law>& v) {
  using F = Flag;
  v.push_back(Entry("P2.exchange", "x→(y⇝z)=y⇝(x→z)").hyp({F::pseudo_bck}).check3([](C c, Elem x, Elem y, Elem z) {
    return c.A(x, c.S(y, z)) == c.S(y, c.A(x, z));
  }));
  v.push_back(Entry("P2.exchange_dual", "x⇝(y→z)=y→(x⇝z)").check3([](C c, Elem x, Elem y, Elem z) {
    return c.S(x, c.A(y, z)) == c.A(y, c.S(x, z));
  }));
  v.push_back(Entry("P2.k_mixed", "x→(y⇝x)=1, x⇝(y→x)=1").check2([](C c, Elem x, Elem y) {
    return c.A(x, c.S(y, x)) == c.one() && c.S(x, c.A(y, x)) == c.one();
  }));
  v.push_back(Entry("P2.k_pure", "x→(y→x)=1, x⇝(y⇝x)=1").check2([](C c, Elem x, Elem y) {
    return c.A(x, c.A(y, x)) == c.one() && c.S(x, c.S(y, x)) == c.one();
  }));
  v.push_back(Entry("P2.mp_upper", "x→((x→y)⇝y)=1, x⇝((x⇝y)→y)=1").check2([](C c, Elem x, Elem y) {
    return c.A(x, c.S(c.A(x, y), y)) == c.one() && c.S(x, c.A(c.S(x, y), y)) == c.one();
  }));
  v.push_back(Entry("P2.leq_twin", "x→y=1 iff x⇝y=1").check2([](C c, Elem x, Elem y) {
    return (c.A(x, y) == c.one()) == (c.S(x, y) == c.one());
  }));
  v.push_back(Entry("P2.leq_reflexive", "x≤x").check1([](C c, Elem x) { return c.le(x, x); }));
  v.push_back(Entry("P2.antitone", "x≤y ⇒ y→z≤x→z, y⇝z≤x⇝z")
                  .hyp({F::pseudo_bck})
                  .check3([](C c, Elem x, Elem y, Elem z) {
                    return implies(c.le(x, y), c.le(c.A(y, z), c.A(x, z)) && c.le(c.S(y, z), c.S(x, z)));
                  }));
  v.push_back(Entry("P2.monotone", "x≤y ⇒ z→x≤z→y, z⇝x≤z⇝y")
                  .hyp({F::pseudo_bck})
                  .check3([](C c, Elem x, Elem y, Elem z) {
                    return implies(c.le(x, y), c.le(c.A(z, x), c.A(z, y)) && c.le(c.S(z, x), c.S(z, y)));
                  }));
  v.push_back(Entry("P2.suffixing", "x→y≤(z→x)→(z→y), x⇝y≤(z⇝x)⇝(z⇝y)")
                  .hyp({F::pseudo_bck})
                  .check3([](C c, Elem x, Elem y, Elem z) {
                    return c.le(c.A(x, y), c.A(c.A(z, x), c.A(z, y))) && c.le(c.S(x, y), c.S(c.S(z, x), c.S(z, y)));
                  }));
  v.push_back(Entry("P2.cup_upper", "x≤(x→y)⇝y, x≤(x⇝y)→y").hyp({F::pseudo_bck}).check2([](C c, Elem x, Elem y) {
    return c.le(x, c.S(c.A(x, y), y)) && c.le(x, c.A(c.S(x, y), y));
  }));

  // bounded pseudo BCK
  v.push_back(Entry("P2.neg_constants", "1⁻=1~=0, 0⁻=0~=1")
                  .hyp({F::pseudo_bck, F::bounded})
                  .needs(kNeedNegations)
                  .check0([](C c) {
                    return c.mi(c.one()) == c.zero() && c.si(c.one()) == c.zero() && c.mi(c.zero()) == c.one() &&
                           c.si(c.zero()) == c.one();
                  }));
  v.push_back(Entry("P2.double_neg", "x≤x⁻~, x≤x~⁻")
                  .hyp({F::pseudo_bck, F::bounded})
                  .needs(kNeedNegations)
                  .check1([](C c, Elem x) { return c.le(x, c.si(c.mi(x))) && c.le(x, c.mi(c.si(x))); }));
  v.push_back(Entry("P2.neg_antitone", "x≤y ⇒ y⁻≤x⁻, y~≤x~")
                  .hyp({F::pseudo_bck, F::bounded})
                  .needs(kNeedNegations)
                  .check2([](C c, Elem x, Elem y) {
                    return implies(c.le(x, y), c.le(c.mi(y), c.mi(x)) && c.le(c.si(y), c.si(x)));
                  }));
  v.push_back(Entry("P2.triple_neg", "x⁻~⁻=x⁻, x~⁻~=x~")
                  .hyp({F::pseudo_bck, F::bounded})
                  .needs(kNeedNegations)
                  .check1([](C c, Elem x) {
                    return c.mi(c.si(c.mi(x))) == c.mi(x) && c.si(c.mi(c.si(x))) == c.si(x);
                  }));
  v.push_back(Entry("P2.neg_arrow", "x→y⁻~=y⁻⇝x⁻=x⁻~→y⁻~")
                  .hyp({F::pseudo_bck, F::bounded})
                  .needs(kNeedNegations)
                  .check2([](C c, Elem x, Elem y) {
                    Elem l = c.A(x, c.si(c.mi(y)));
                    return l == c.S(c.mi(y), c.mi(x)) && l == c.A(c.si(c.mi(x)), c.si(c.mi(y)));
                  }));
  v.push_back(Entry("P2.neg_squig", "x⇝y~⁻=y~→x~=x~⁻⇝y~⁻")
                  .hyp({F::pseudo_bck, F::bounded})
                  .needs(kNeedNegations)
                  .check2([](C c, Elem x, Elem y) {
                    Elem l = c.S(x, c.mi(c.si(y)));
                    return l == c.A(c.si(y), c.si(x)) && l == c.S(c.mi(c.si(x)), c.mi(c.si(y)));
                  }));

  // pseudo BCK(pP)
  v.push_back(Entry("P2.pp_lower", "x⊙y≤x, x⊙y≤y")
                  .hyp({F::pseudo_bck, F::has_pP})
                  .needs(kNeedOdot)
                  .check2([](C c, Elem x, Elem y) { return c.le(c.O(x, y), x) && c.le(c.O(x, y), y); }));
  v.push_back(Entry("P2.pp_mp", "(x→y)⊙x≤x,y, x⊙(x⇝y)≤x,y")
                  .hyp({F::pseudo_bck, F::has_pP})
                  .needs(kNeedOdot)
                  .check2([](C c, Elem x, Elem y) {
                    Elem l = c.O(c.A(x, y), x), r = c.O(x, c.S(x, y));
                    return c.le(l, x) && c.le(l, y) && c.le(r, x) && c.le(r, y);
                  }));
  v.push_back(Entry("P2.pp_monotone", "x≤y ⇒ x⊙z≤y⊙z, z⊙x≤z⊙y")
                  .hyp({F::pseudo_bck, F::has_pP})
                  .needs(kNeedOdot)
                  .check3([](C c, Elem x, Elem y, Elem z) {
                    return implies(c.le(x, y), c.le(c.O(x, z), c.O(y, z)) && c.le(c.O(z, x), c.O(z, y)));
                  }));
  v.push_back(Entry("P2.pp_arrow", "x→y≤x⊙z→y⊙z, x⇝y≤z⊙x⇝z⊙y")
                  .hyp({F::pseudo_bck, F::has_pP})
                  .needs(kNeedOdot)
                  .check3([](C c, Elem x, Elem y, Elem z) {
                    return c.le(c.A(x, y), c.A(c.O(x, z), c.O(y, z))) && c.le(c.S(x, y), c.S(c.O(z, x), c.O(z, y)));
                  }));
  v.push_back(Entry("P2.pp_residuation", "x→(y→z)=x⊙y→z, x⇝(y⇝z)=y⊙x⇝z")
                  .hyp({F::pseudo_bck, F::has_pP})
                  .needs(kNeedOdot)
                  .check3([](C c, Elem x, Elem y, Elem z) {
                    return c.A(x, c.A(y, z)) == c.A(c.O(x, y), z) && c.S(x, c.S(y, z)) == c.S(c.O(y, x), z);
                  }));
  v.push_back(Entry("P2.pp_bounded", "x⊙0=0⊙x=0, x⁻⊙x=x⊙x~=0, x≤y⁻ iff y≤x~")
                  .hyp({F::pseudo_bck, F::has_pP, F::bounded})
                  .needs(kNeedOdot | kNeedNegations)
                  .check2([](C c, Elem x, Elem y) {
                    Elem z = c.zero();
                    return c.O(x, z) == z && c.O(z, x) == z && c.O(c.mi(x), x) == z && c.O(x, c.si(x)) == z &&
                           c.le(x, c.mi(y)) == c.le(y, c.si(x));
                  }));

  // class relationships
  v.push_back(Entry("R2.A_implies_T", "(A) ⇒ (T)").hyp({F::condition_A}).check0([](C c) {
    return c.m.holds(Flag::condition_T);
  }));
  v.push_back(Entry("R2.bck_conditions", "pseudo BCK ⇒ (A), (M), (T)").hyp({F::pseudo_bck}).check0([](C c) {
    return c.m.holds(Flag::condition_A) && c.m.holds(Flag::condition_M) && c.m.holds(Flag::condition_T);
  }));
  v.push_back(Entry("R2.both_distributive_be", "(i) and (ii) ⇒ x→y=x⇝y")
                  .hyp({F::distributive_i, F::distributive_ii})
                  .check2([](C c, Elem x, Elem y) { return c.A(x, y) == c.S(x, y); }));
  v.push_back(Entry("R6.distributive_M", "(i) ⇒ (M)").hyp({F::distributive_i}).check0([](C c) {
    return c.m.holds(Flag::condition_M);
  }));
  v.push_back(Entry("T4.commutative_bck", "commutative ⇒ pseudo BCK").hyp({F::commutative}).check0([](C c) {
    return c.m.holds(Flag::pseudo_bck) && c.m.holds(Flag::poset);
  }));
  v.push_back(Entry("R4.bc_involutive_pp", "bounded commutative ⇒ involutive, pP, lattice")
                  .hyp({F::bounded, F::commutative})
                  .check0([](C c) {
                    return c.m.holds(Flag::involutive) && c.m.holds(Flag::has_pP) && c.m.holds(Flag::lattice);
                  }));
  v.push_back(Entry("R4.bc_lattice_ops", "x∨y=(x→y)⇝y=(x⇝y)→y, x∧y=(x⁻∨y⁻)~=(x~∨y~)⁻")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedMeet | kNeedJoin)
                  .check2([](C c, Elem x, Elem y) {
                    Elem j = c.join(x, y), mt = c.meet(x, y);
                    return j == c.S(c.A(x, y), y) && j == c.A(c.S(x, y), y) &&
                           mt == c.si(c.join(c.mi(x), c.mi(y))) && mt == c.mi(c.join(c.si(x), c.si(y)));
                  }));
  v.push_back(Entry("R4.oplus_twin", "y~→x=x⁻⇝y")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations)
                  .check2([](C c, Elem x, Elem y) { return c.A(c.si(y), x) == c.S(c.mi(x), y); }));
  v.push_back(Entry("L4.oplus_demorgan", "x⊕y=(y⁻⊙x⁻)~=(y~⊙x~)⁻")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .check2([](C c, Elem x, Elem y) {
                    Elem s = c.P(x, y);
                    return s == c.si(c.O(c.mi(y), c.mi(x))) && s == c.mi(c.O(c.si(y), c.si(x)));
                  }));
  v.push_back(Entry("L4.odot_demorgan", "x⊙y=(y⁻⊕x⁻)~=(y~⊕x~)⁻")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .check2([](C c, Elem x, Elem y) {
                    Elem p = c.O(x, y);
                    return p == c.si(c.P(c.mi(y), c.mi(x))) && p == c.mi(c.P(c.si(y), c.si(x)));
                  }));
}

void add_monadic(std::vector<Law>& v) {
  using F = Flag;
  v.push_back(Entry("P3.exists_one", "∃1=1").pair().check0([](C c) { return c.E(c.one()) == c.one(); }));
  v.push_back(Entry("P3.forall_top", "∀1=1").pair().check0([](C c) { return c.F(c.one()) == c.one(); }));
  v.push_back(Entry("P3.forall_exists", "∀∃x=∃x").pair().check1([](C c, Elem x) { return c.F(c.E(x)) == c.E(x); }));
  v.push_back(Entry("P3.fixed_iff", "∀x=x iff ∃x=x").pair().check1([](C c, Elem x) {
    return (c.F(x) == x) == (c.E(x) == x);
  }));
  v.push_back(Entry("P3.exists_idempotent", "∃∃x=∃x").pair().check1([](C c, Elem x) {
    return c.E(c.E(x)) == c.E(x);
  }));
  v.push_back(Entry("P3.forall_idempotent", "∀∀x=∀x").pair().check1([](C c, Elem x) {
    return c.F(c.F(x)) == c.F(x);
  }));
  v.push_back(Entry("P3.forall_exists_arrow", "∀(∃x→∃y)=∃x→∃y, ∀(∃x⇝∃y)=∃x⇝∃y").pair().check2([](C c, Elem x, Elem y) {
    return c.F(c.A(c.E(x), c.E(y))) == c.A(c.E(x), c.E(y)) && c.F(c.S(c.E(x), c.E(y))) == c.S(c.E(x), c.E(y));
  }));
  v.push_back(Entry("P3.order_transfer", "x≤∃y iff ∃x≤∃y; ∀x≤y iff ∀x≤∀y").pair().check2([](C c, Elem x, Elem y) {
    return c.le(x, c.E(y)) == c.le(c.E(x), c.E(y)) && c.le(c.F(x), y) == c.le(c.F(x), c.F(y));
  }));
  v.push_back(Entry("P3.forall_forall_arrow", "∀(∀x→y)=∀x→∀y, ∀(∀x⇝y)=∀x⇝∀y").pair().check2([](C c, Elem x, Elem y) {
    return c.F(c.A(c.F(x), y)) == c.A(c.F(x), c.F(y)) && c.F(c.S(c.F(x), y)) == c.S(c.F(x), c.F(y));
  }));
  v.push_back(Entry("P3.forall_mixed", "∀(∀x→∃y)=∀x→∃y, ∀(∀x⇝∃y)=∀x⇝∃y").pair().check2([](C c, Elem x, Elem y) {
    return c.F(c.A(c.F(x), c.E(y))) == c.A(c.F(x), c.E(y)) && c.F(c.S(c.F(x), c.E(y))) == c.S(c.F(x), c.E(y));
  }));
  v.push_back(Entry("P3.forall_right", "∀(x→∀y)=∃x→∀y, ∀(x⇝∀y)=∃x⇝∀y").pair().check2([](C c, Elem x, Elem y) {
    return c.F(c.A(x, c.F(y))) == c.A(c.E(x), c.F(y)) && c.F(c.S(x, c.F(y))) == c.S(c.E(x), c.F(y));
  }));
  v.push_back(Entry("P3.forall_closed", "∀(∀x→∀y)=∀x→∀y, ∀(∀x⇝∀y)=∀x⇝∀y").pair().check2([](C c, Elem x, Elem y) {
    return c.F(c.A(c.F(x), c.F(y))) == c.A(c.F(x), c.F(y)) && c.F(c.S(c.F(x), c.F(y))) == c.S(c.F(x), c.F(y));
  }));
  v.push_back(Entry("P3.exists_below", "∃(∃x→∃y)≤∃x→∃y, ∃(∃x⇝∃y)≤∃x⇝∃y").pair().check2([](C c, Elem x, Elem y) {
    return c.le(c.E(c.A(c.E(x), c.E(y))), c.A(c.E(x), c.E(y))) &&
           c.le(c.E(c.S(c.E(x), c.E(y))), c.S(c.E(x), c.E(y)));
  }));
  v.push_back(Entry("P3.forall_one", "∀x=1 iff x=1").pair().check1([](C c, Elem x) {
    return (c.F(x) == c.one()) == (x == c.one());
  }));
  v.push_back(Entry("P3.isotone_T", "(T), x≤y ⇒ ∀x≤∀y, ∃x≤∃y")
                  .pair()
                  .hyp({F::condition_T})
                  .check2([](C c, Elem x, Elem y) {
                    return implies(c.le(x, y), c.le(c.F(x), c.F(y)) && c.le(c.E(x), c.E(y)));
                  }));
  v.push_back(Entry("P3.isotone_A", "(A), x≤y ⇒ ∀x≤∀y, ∃x≤∃y")
                  .pair()
                  .hyp({F::condition_A})
                  .check2([](C c, Elem x, Elem y) {
                    return implies(c.le(x, y), c.le(c.F(x), c.F(y)) && c.le(c.E(x), c.E(y)));
                  }));
  v.push_back(Entry("P3.isotone_commutative", "commutative, x≤y ⇒ ∀x≤∀y, ∃x≤∃y")
                  .pair()
                  .hyp({F::commutative})
                  .check2([](C c, Elem x, Elem y) {
                    return implies(c.le(x, y), c.le(c.F(x), c.F(y)) && c.le(c.E(x), c.E(y)));
                  }));
  v.push_back(Entry("P3.residuated_T", "(T), ∃x≤y iff x≤∀y").pair().hyp({F::condition_T}).check2([](C c, Elem x, Elem y) {
    return c.le(c.E(x), y) == c.le(x, c.F(y));
  }));
  v.push_back(Entry("R3.bck_equal_identity", "pseudo BCK, ∀=∃ ⇒ ∀=∃=Id").pair().hyp({F::pseudo_bck}).check0([](C c) {
    return implies(c.p->exists == c.p->forall, c.p->exists.is_identity());
  }));

  // bounded
  auto bounded = [](Entry e) { return e.pair().hyp({Flag::bounded}).needs(kNeedNegations); };
  v.push_back(bounded(Entry("P3.forall_zero", "∀0=0")).check0([](C c) { return c.F(c.zero()) == c.zero(); }));
  v.push_back(bounded(Entry("P3.exists_zero", "∃0=0")).check0([](C c) { return c.E(c.zero()) == c.zero(); }));
  v.push_back(bounded(Entry("P3.neg_exists", "(∃x)⁻=∀x⁻, (∃x)~=∀x~")).check1([](C c, Elem x) {
    return c.mi(c.E(x)) == c.F(c.mi(x)) && c.si(c.E(x)) == c.F(c.si(x));
  }));
  v.push_back(bounded(Entry("P3.forall_neg_exists", "∀(∃x)⁻=(∃x)⁻, ∀(∃x)~=(∃x)~")).check1([](C c, Elem x) {
    return c.F(c.mi(c.E(x))) == c.mi(c.E(x)) && c.F(c.si(c.E(x))) == c.si(c.E(x));
  }));
  v.push_back(bounded(Entry("P3.forall_double_neg", "∀(x⁻~)=(∃x⁻)~, ∀(x~⁻)=(∃x~)⁻")).check1([](C c, Elem x) {
    return c.F(c.si(c.mi(x))) == c.si(c.E(c.mi(x))) && c.F(c.mi(c.si(x))) == c.mi(c.E(c.si(x)));
  }));
  v.push_back(bounded(Entry("P3.forall_neg_forall_neg", "∀((∀x⁻)~)=(∀x⁻)~, ∀((∀x~)⁻)=(∀x~)⁻")).check1([](C c, Elem x) {
    Elem l = c.si(c.F(c.mi(x))), r = c.mi(c.F(c.si(x)));
    return c.F(l) == l && c.F(r) == r;
  }));
  v.push_back(bounded(Entry("P3.forall_neg_forall", "∀(∀x)⁻=(∀x)⁻, ∀(∀x)~=(∀x)~")).check1([](C c, Elem x) {
    return c.F(c.mi(c.F(x))) == c.mi(c.F(x)) && c.F(c.si(c.F(x))) == c.si(c.F(x));
  }));
  v.push_back(bounded(Entry("P3.exists_neg_exists", "∃(∃x)⁻=(∃x)⁻, ∃(∃x)~=(∃x)~")).check1([](C c, Elem x) {
    return c.E(c.mi(c.E(x))) == c.mi(c.E(x)) && c.E(c.si(c.E(x))) == c.si(c.E(x));
  }));
  v.push_back(bounded(Entry("P3.exists_zero_iff", "∃x=0 iff x=0")).check1([](C c, Elem x) {
    return (c.E(x) == c.zero()) == (x == c.zero());
  }));

  // fixed elements
  v.push_back(Entry("P3.fixed_images", "A_∃∀=∀A_∃∀=∃A_∃∀=∀A=∃A").pair().check0([](C c) {
    FixedSets s = fixed_set(c.m, *c.p);
    ElementSet fa, ex;
    for (Elem x : s.fixed().members()) {
      fa.insert(c.F(x));
      ex.insert(c.E(x));
    }
    return s.consistent() && fa == s.fixed() && ex == s.fixed();
  }));
  v.push_back(Entry("P3.fixed_full_iff_identity", "A_∃∀=A iff ∀=∃=Id").pair().check0([](C c) {
    return (fixed_of(c) == c.m.algebra().carrier()) == (c.p->exists.is_identity() && c.p->forall.is_identity());
  }));
  v.push_back(Entry("P3.fixed_subalgebra", "1∈A_∃∀, x,y∈A_∃∀ ⇒ x→y, x⇝y∈A_∃∀").pair().check2([](C c, Elem x, Elem y) {
    ElementSet f = fixed_of(c);
    return f.contains(c.one()) &&
           implies(f.contains(x) && f.contains(y), f.contains(c.A(x, y)) && f.contains(c.S(x, y)));
  }));
  v.push_back(Entry("P3.image_subalgebra", "∀A, ∃A closed under →, ⇝").pair().check2([](C c, Elem x, Elem y) {
    ElementSet fa = c.p->forall.image(), ex = c.p->exists.image();
    return implies(fa.contains(x) && fa.contains(y), fa.contains(c.A(x, y)) && fa.contains(c.S(x, y))) &&
           implies(ex.contains(x) && ex.contains(y), ex.contains(c.A(x, y)) && ex.contains(c.S(x, y)));
  }));
  v.push_back(Entry("P3.bounded_image_T", "(T), ∀A has a least element ⇒ A bounded").pair().hyp({F::condition_T}).check0([](C c) {
    ElementSet img = c.p->forall.image();
    for (Elem z : img.members()) {
      bool least = true;
      for (Elem w : img.members()) least = least && c.le(z, w);
      if (least) return c.m.holds(Flag::bounded) || c.m.algebra().size() == 1 ||
                        forall_pointwise(c, [&](Elem x) { return c.le(z, x); });
    }
    return true;
  }));
  v.push_back(Entry("P3.image_forall", "Im(∀)=A_∃∀").pair().check0([](C c) {
    return c.p->forall.image() == fixed_of(c);
  }));
  v.push_back(Entry("P3.surjective_identity", "∀ surjective ⇒ ∀=Id").pair().check0([](C c) {
    return implies(c.p->forall.image() == c.m.algebra().carrier(), c.p->forall.is_identity());
  }));
  v.push_back(Entry("P3.kernel", "Ker(∀)={1}").pair().check0([](C c) {
    return fixed_set(c.m, *c.p).kernel == ElementSet::singleton(c.one());
  }));
}

void add_bounded_commutative(std::vector<Law>& v) {
  using F = Flag;
  auto bc = [](Entry e) {
    return e.pair().hyp({F::bounded, F::commutative}).mode(Mode::bounded_commutative).needs(kNeedNegations);
  };
  v.push_back(bc(Entry("P4.exists_from_forall", "∃x=(∀x⁻)~=(∀x~)⁻, ∀x=(∃x⁻)~=(∃x~)⁻")).check1([](C c, Elem x) {
    return c.E(x) == c.si(c.F(c.mi(x))) && c.E(x) == c.mi(c.F(c.si(x))) && c.F(x) == c.si(c.E(c.mi(x))) &&
           c.F(x) == c.mi(c.E(c.si(x)));
  }));
  v.push_back(bc(Entry("P4.exists_fixed_dual", "∃((∃x⁻)~)=(∃x⁻)~, ∃((∃x~)⁻)=(∃x~)⁻")).check1([](C c, Elem x) {
    Elem l = c.si(c.E(c.mi(x))), r = c.mi(c.E(c.si(x)));
    return c.E(l) == l && c.E(r) == r;
  }));
  v.push_back(bc(Entry("P4.exists_neg", "∃x⁻=(∀x)⁻, ∃x~=(∀x)~")).check1([](C c, Elem x) {
    return c.E(c.mi(x)) == c.mi(c.F(x)) && c.E(c.si(x)) == c.si(c.F(x));
  }));
  v.push_back(bc(Entry("P4.meet_join_exchange", "∀(x∧y)=∀x∧∀y iff ∃(x∨y)=∃x∨∃y"))
                  .needs(kNeedNegations | kNeedMeet | kNeedJoin)
                  .check0([](C c) {
                    bool l = forall_pointwise2(c, [&](Elem x, Elem y) { return c.F(c.meet(x, y)) == c.meet(c.F(x), c.F(y)); });
                    bool r = forall_pointwise2(c, [&](Elem x, Elem y) { return c.E(c.join(x, y)) == c.join(c.E(x), c.E(y)); });
                    return l == r;
                  }));
  v.push_back(bc(Entry("P4.odot_oplus_exchange", "∀(x⊙y)=∀x⊙∀y iff ∃(x⊕y)=∃x⊕∃y"))
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .check0([](C c) {
                    bool l = forall_pointwise2(c, [&](Elem x, Elem y) { return c.F(c.O(x, y)) == c.O(c.F(x), c.F(y)); });
                    bool r = forall_pointwise2(c, [&](Elem x, Elem y) { return c.E(c.P(x, y)) == c.P(c.E(x), c.E(y)); });
                    return l == r;
                  }));
  v.push_back(bc(Entry("P4.oplus_odot_exchange", "∀(x⊕y)=∀x⊕∀y iff ∃(x⊙y)=∃x⊙∃y"))
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .check0([](C c) {
                    bool l = forall_pointwise2(c, [&](Elem x, Elem y) { return c.F(c.P(x, y)) == c.P(c.F(x), c.F(y)); });
                    bool r = forall_pointwise2(c, [&](Elem x, Elem y) { return c.E(c.O(x, y)) == c.O(c.E(x), c.E(y)); });
                    return l == r;
                  }));

  v.push_back(Entry("T4.tau_construction", "τ with U1-U6 ⇒ (∃,∀) monadic, ∃x=(τx⁻)~")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .over(Domain::maps)
                  .check0([](C c) {
                    auto r = try_tau(c.m, *c.map);
                    return !r || (r->validation.holds() && (!r->twin || r->twin->holds()));
                  }));
  v.push_back(Entry("T4.sigma_construction", "σ with E1-E6 ⇒ (∃,∀) monadic, ∀x=(σx⁻)~")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .over(Domain::maps)
                  .check0([](C c) {
                    auto r = try_sigma(c.m, *c.map);
                    return !r || (r->validation.holds() && (!r->twin || r->twin->holds()));
                  }));
  v.push_back(Entry("T4.dual_bijection", "∀ ↦ (∀x⁻)~ is a bijection from universal onto existential quantifiers")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus)
                  .check0([](C c) {
                    auto mop = enumerate_mop(c.m, {.mode = Mode::bounded_commutative});
                    std::vector<UnaryMap> foralls, exists;
                    for (const auto& p : mop) {
                      foralls.push_back(p.forall);
                      exists.push_back(p.exists);
                      if (dual_quantifier(c.m, Direction::forall_to_exists, p.forall) != p.exists) return false;
                      if (dual_quantifier(c.m, Direction::exists_to_forall, p.exists) != p.forall) return false;
                    }
                    std::sort(foralls.begin(), foralls.end());
                    std::sort(exists.begin(), exists.end());
                    return std::adjacent_find(foralls.begin(), foralls.end()) == foralls.end() &&
                           std::adjacent_find(exists.begin(), exists.end()) == exists.end();
                  }));
}

void add_bck_classes(std::vector<Law>& v) {
  using F = Flag;
  auto bck = [](Entry e) { return e.pair().hyp({F::pseudo_bck}); };
  v.push_back(bck(Entry("P5.forall_arrow_below", "∀(x→y)⇝(∀x→∀y)=1, ∀(x⇝y)→(∀x⇝∀y)=1")).check2([](C c, Elem x, Elem y) {
    return c.S(c.F(c.A(x, y)), c.A(c.F(x), c.F(y))) == c.one() && c.A(c.F(c.S(x, y)), c.S(c.F(x), c.F(y))) == c.one();
  }));
  v.push_back(bck(Entry("P5.forall_exists_arrow", "∀(x→y)⇝(∃x→∃y)=1, ∀(x⇝y)→(∃x⇝∃y)=1")).check2([](C c, Elem x, Elem y) {
    return c.S(c.F(c.A(x, y)), c.A(c.E(x), c.E(y))) == c.one() && c.A(c.F(c.S(x, y)), c.S(c.E(x), c.E(y))) == c.one();
  }));
  v.push_back(bck(Entry("P5.exists_mixed_below", "∃(x→∃y)⇝∀(∀x→∃y)=1, ∃(x⇝∃y)→∀(∀x⇝∃y)=1")).check2([](C c, Elem x, Elem y) {
    return c.S(c.E(c.A(x, c.E(y))), c.F(c.A(c.F(x), c.E(y)))) == c.one() &&
           c.A(c.E(c.S(x, c.E(y))), c.F(c.S(c.F(x), c.E(y)))) == c.one();
  }));
  v.push_back(bck(Entry("P5.exists_arrow_below", "∃(∃x→y)⇝(∃x→∃y)=1, ∃(∃x⇝y)→(∃x⇝∃y)=1")).check2([](C c, Elem x, Elem y) {
    return c.S(c.E(c.A(c.E(x), y)), c.A(c.E(x), c.E(y))) == c.one() &&
           c.A(c.E(c.S(c.E(x), y)), c.S(c.E(x), c.E(y))) == c.one();
  }));
  v.push_back(bck(Entry("P5.exists_stable", "∃(∃x→∃y)=∃x→∃y, ∃(∃x⇝∃y)=∃x⇝∃y")).check2([](C c, Elem x, Elem y) {
    return c.E(c.A(c.E(x), c.E(y))) == c.A(c.E(x), c.E(y)) && c.E(c.S(c.E(x), c.E(y))) == c.S(c.E(x), c.E(y));
  }));
  v.push_back(bck(Entry("P5.exists_forall_stable", "∃(∀x→∀y)=∀x→∀y, ∃(∀x⇝∀y)=∀x⇝∀y")).check2([](C c, Elem x, Elem y) {
    return c.E(c.A(c.F(x), c.F(y))) == c.A(c.F(x), c.F(y)) && c.E(c.S(c.F(x), c.F(y))) == c.S(c.F(x), c.F(y));
  }));
  v.push_back(bck(Entry("P5.isotone", "pseudo BCK, x≤y ⇒ ∀x≤∀y, ∃x≤∃y")).check2([](C c, Elem x, Elem y) {
    return implies(c.le(x, y), c.le(c.F(x), c.F(y)) && c.le(c.E(x), c.E(y)));
  }));

  auto two = [](Entry e) { return e.pairs().hyp({F::pseudo_bck}); };
  v.push_back(two(Entry("T5.forall_order", "∀₁≤∀₂ iff ∀₁∀₂=∀₁")).check0([](C c) {
    bool leq = forall_pointwise(c, [&](Elem x) { return c.le(c.F(x), c.F2(x)); });
    return leq == (c.p->forall.after(c.q->forall) == c.p->forall);
  }));
  v.push_back(two(Entry("T5.exists_order", "∃₁≥∃₂ iff ∃₁∃₂=∃₁")).check0([](C c) {
    bool geq = forall_pointwise(c, [&](Elem x) { return c.le(c.E2(x), c.E(x)); });
    return geq == (c.p->exists.after(c.q->exists) == c.p->exists);
  }));
  v.push_back(two(Entry("T5.fixed_determines", "A_∃₁∀₁=A_∃₂∀₂ ⇒ ∀₁=∀₂")).check0([](C c) {
    return implies(fixed_set(c.m, *c.p).fixed() == fixed_set(c.m, *c.q).fixed(), c.p->forall == c.q->forall);
  }));
  v.push_back(two(Entry("T5.image_determines", "Im(∀₁)=Im(∀₂) ⇒ ∀₁=∀₂")).check0([](C c) {
    return implies(c.p->forall.image() == c.q->forall.image(), c.p->forall == c.q->forall);
  }));
  v.push_back(two(Entry("L5.commute_conditions", "∃₁∃₂=∃₂∃₁, ∀₁∀₂=∀₂∀₁ iff composites satisfy M1/M2 iff composites idempotent"))
                  .check0([](C c) {
                    const UnaryMap e12 = c.p->exists.after(c.q->exists), e21 = c.q->exists.after(c.p->exists);
                    const UnaryMap f12 = c.p->forall.after(c.q->forall), f21 = c.q->forall.after(c.p->forall);
                    bool a = e12 == e21 && f12 == f21;
                    bool b = forall_pointwise(c, [&](Elem x) {
                      return c.le(x, e12(x)) && c.le(x, e21(x)) && c.le(f12(x), x) && c.le(f21(x), x);
                    });
                    bool d = e12.after(e12) == e12 && e21.after(e21) == e21 && f12.after(f12) == f12 &&
                             f21.after(f21) == f21;
                    return a == b && b == d;
                  }));
  v.push_back(two(Entry("T5.composition", "(∃₁∃₂,∀₁∀₂),(∃₂∃₁,∀₂∀₁)∈MOP iff they commute")).check0([](C c) {
    Composition k = compose_pairs(c.m, *c.p, *c.q);
    return (k.forward_valid && k.backward_valid) == k.commute();
  }));

  auto meet = [](Entry e) { return e.pair().hyp({F::pseudo_bck, F::meet_semilattice}).needs(kNeedMeet); };
  v.push_back(meet(Entry("P5.meet_exists_closed", "∃(∃x∧∃y)=∃x∧∃y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.meet(c.E(x), c.E(y));
    return c.E(w) == w;
  }));
  v.push_back(meet(Entry("P5.meet_forall_exists", "∀(∃x∧∃y)=∃x∧∃y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.meet(c.E(x), c.E(y));
    return c.F(w) == w;
  }));
  v.push_back(meet(Entry("P5.meet", "∀(x∧y)=∀x∧∀y")).check2([](C c, Elem x, Elem y) {
    return c.F(c.meet(x, y)) == c.meet(c.F(x), c.F(y));
  }));
  v.push_back(meet(Entry("P5.meet_exists_below", "∃(x∧y)≤∃x∧∃y")).check2([](C c, Elem x, Elem y) {
    return c.le(c.E(c.meet(x, y)), c.meet(c.E(x), c.E(y)));
  }));
  v.push_back(meet(Entry("P5.meet_forall_below", "∀(x∧y)≤∃x∧∃y")).check2([](C c, Elem x, Elem y) {
    return c.le(c.F(c.meet(x, y)), c.meet(c.E(x), c.E(y)));
  }));
  auto join = [](Entry e) { return e.pair().hyp({F::pseudo_bck, F::join_semilattice}).needs(kNeedJoin); };
  v.push_back(join(Entry("P5.join_forall_exists", "∀(∃x∨∃y)=∃x∨∃y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.join(c.E(x), c.E(y));
    return c.F(w) == w;
  }));
  v.push_back(join(Entry("P5.join_exists_closed", "∃(∃x∨∃y)=∃x∨∃y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.join(c.E(x), c.E(y));
    return c.E(w) == w;
  }));
  v.push_back(join(Entry("P5.join", "∃(x∨y)=∃x∨∃y")).check2([](C c, Elem x, Elem y) {
    return c.E(c.join(x, y)) == c.join(c.E(x), c.E(y));
  }));
  v.push_back(join(Entry("P5.join_mixed", "∀x∨∃y≤∀(x∨∃y)")).check2([](C c, Elem x, Elem y) {
    return c.le(c.join(c.F(x), c.E(y)), c.F(c.join(x, c.E(y))));
  }));

  auto pp = [](Entry e) { return e.pair().hyp({F::pseudo_bck, F::has_pP}).needs(kNeedOdot); };
  v.push_back(pp(Entry("P5.pp", "∃(∃x⊙∃y)=∃x⊙∃y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.O(c.E(x), c.E(y));
    return c.E(w) == w;
  }));
  v.push_back(pp(Entry("P5.pp_exists_below", "∃(x⊙y)≤∃x⊙∃y")).check2([](C c, Elem x, Elem y) {
    return c.le(c.E(c.O(x, y)), c.O(c.E(x), c.E(y)));
  }));
  v.push_back(pp(Entry("P5.pp_forall_closed", "∀(∀x⊙∀y)=∀x⊙∀y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.O(c.F(x), c.F(y));
    return c.F(w) == w;
  }));
  v.push_back(pp(Entry("P5.pp_forall_above", "∀x⊙∀y≤∀(x⊙y)")).check2([](C c, Elem x, Elem y) {
    return c.le(c.O(c.F(x), c.F(y)), c.F(c.O(x, y)));
  }));
  v.push_back(pp(Entry("P5.pp_forall_exists", "∀x⊙∀y≤∃(x⊙y)")).check2([](C c, Elem x, Elem y) {
    return c.le(c.O(c.F(x), c.F(y)), c.E(c.O(x, y)));
  }));
  v.push_back(pp(Entry("P5.pp_mixed_below", "∀x⊙∃y→∃(x⊙y)=1, ∃x⊙∀y⇝∃(x⊙y)=1")).check2([](C c, Elem x, Elem y) {
    return c.A(c.O(c.F(x), c.E(y)), c.E(c.O(x, y))) == c.one() &&
           c.S(c.O(c.E(x), c.F(y)), c.E(c.O(x, y))) == c.one();
  }));
  v.push_back(pp(Entry("P5.pp_exists_mixed", "∃x⊙∃y→∃(∃x⊙y)=1, ∃x⊙∃y⇝∃(x⊙∃y)=1")).check2([](C c, Elem x, Elem y) {
    Elem w = c.O(c.E(x), c.E(y));
    return c.A(w, c.E(c.O(c.E(x), y))) == c.one() && c.S(w, c.E(c.O(x, c.E(y)))) == c.one();
  }));
  v.push_back(pp(Entry("P5.pp_transfer", "∃(∃x⊙y)=∃x⊙∃y=∃(x⊙∃y)")).check2([](C c, Elem x, Elem y) {
    Elem w = c.O(c.E(x), c.E(y));
    return c.E(c.O(c.E(x), y)) == w && c.E(c.O(x, c.E(y))) == w;
  }));
  v.push_back(pp(Entry("P5.pp_forall_transfer", "∃(x⊙∀y)=∃x⊙∀y, ∃(∀x⊙y)=∀x⊙∃y")).check2([](C c, Elem x, Elem y) {
    return c.E(c.O(x, c.F(y))) == c.O(c.E(x), c.F(y)) && c.E(c.O(c.F(x), y)) == c.O(c.F(x), c.E(y));
  }));

  auto sum = [](Entry e) {
    return e.pair().hyp({F::pseudo_bck, F::bounded, F::commutative}).mode(Mode::bounded_commutative).needs(kNeedOplus);
  };
  v.push_back(sum(Entry("P5.oplus", "∀(∀x⊕∀y)=∀x⊕∀y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.P(c.F(x), c.F(y));
    return c.F(w) == w;
  }));
  v.push_back(sum(Entry("P5.oplus_above", "∀x⊕∀y≤∀(x⊕y)")).check2([](C c, Elem x, Elem y) {
    return c.le(c.P(c.F(x), c.F(y)), c.F(c.P(x, y)));
  }));

  auto hoop = [](Entry e) {
    return e.pair().hyp({F::pseudo_hoop, F::meet_semilattice}).mode(Mode::pseudo_hoop).needs(kNeedOdot | kNeedMeet);
  };
  v.push_back(hoop(Entry("P5.hoop", "∀(x→y)⊙x≤∃x∧∃y, ∃x⊙∀(x⇝y)≤∃x∧∃y")).check2([](C c, Elem x, Elem y) {
    Elem w = c.meet(c.E(x), c.E(y));
    return c.le(c.O(c.F(c.A(x, y)), x), w) && c.le(c.O(c.E(x), c.F(c.S(x, y))), w);
  }));
  v.push_back(hoop(Entry("P5.hoop_square", "∀((x→y)⊙(x→y))≤(∃x→∃y)⊙(∃x→∃y), likewise for ⇝")).check2([](C c, Elem x, Elem y) {
    Elem a = c.A(x, y), s = c.S(x, y), ea = c.A(c.E(x), c.E(y)), es = c.S(c.E(x), c.E(y));
    return c.le(c.F(c.O(a, a)), c.O(ea, ea)) && c.le(c.F(c.O(s, s)), c.O(es, es));
  }));

  v.push_back(Entry("P5.mv_universal", "τ with U1-U6 ⇒ ∀=τ satisfies MVU1-MVU6 and ∃=(τx⁻)~ satisfies MVE1-MVE6")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus | kNeedMeet | kNeedJoin)
                  .over(Domain::maps)
                  .check0([](C c) {
                    auto r = try_tau(c.m, *c.map);
                    return !r || (check_mv_quantifier(c.m, r->pair.forall, QuantifierKind::universal).holds() &&
                                  check_mv_quantifier(c.m, r->pair.exists, QuantifierKind::existential).holds());
                  }));
  v.push_back(Entry("P5.mv_existential", "σ with E1-E6 ⇒ ∃=σ satisfies MVE1-MVE6")
                  .hyp({F::bounded, F::commutative})
                  .needs(kNeedNegations | kNeedOdot | kNeedOplus | kNeedMeet | kNeedJoin)
                  .over(Domain::maps)
                  .check0([](C c) {
                    auto r = try_sigma(c.m, *c.map);
                    return !r || check_mv_quantifier(c.m, r->pair.exists, QuantifierKind::existential).holds();
                  }));
}

void add_deduction(std::vector<Law>& v) {
  using F = Flag;
  v.push_back(Entry("P6.ds_squig", "x∈D, x⇝y∈D ⇒ y∈D").over(Domain::systems).check0([](C c) {
    return is_deductive_system(c.m.algebra(), c.set, Implication::squig);
  }));
  v.push_back(Entry("P6.ds_upward", "x∈D, x≤y ⇒ y∈D").over(Domain::systems).check2([](C c, Elem x, Elem y) {
    return implies(c.set.contains(x) && c.le(x, y), c.set.contains(y));
  }));
  v.push_back(Entry("P6.trivial_mds", "{1}, A ∈ MDS(A,∃,∀)").pair().check0([](C c) {
    const FiniteAlgebra& a = c.m.algebra();
    ElementSet one = ElementSet::singleton(c.one());
    return is_deductive_system(a, one) && is_deductive_system(a, a.carrier()) && is_monadic_ds(one, c.p->forall) &&
           is_monadic_ds(a.carrier(), c.p->forall);
  }));
  v.push_back(Entry("P6.distributive_normal", "(i) ⇒ DS(A)=DSₙ(A)")
                  .over(Domain::systems)
                  .hyp({F::distributive_i})
                  .check0([](C c) { return is_normal(c.m.algebra(), c.set); }));
  v.push_back(Entry("P6.generated_least", "[X) is the least DS containing X").over(Domain::subsets).check0([](C c) {
    const FiniteAlgebra& a = c.m.algebra();
    ElementSet g = generated_ds(a, c.set);
    if (!is_deductive_system(a, g) || !c.set.subset_of(g)) return false;
    for (const auto& d : c.cache->systems())
      if (c.set.subset_of(d.members) && !g.subset_of(d.members)) return false;
    return true;
  }));
  v.push_back(Entry("P6.generated_chain", "(M) ⇒ [X)={x | a₁→(…(aₙ→x)…)=1}={x | a₁⇝(…(aₙ⇝x)…)=1}")
                  .over(Domain::subsets)
                  .hyp({F::condition_M})
                  .check0([](C c) {
                    if (c.set.empty()) return true;
                    const FiniteAlgebra& a = c.m.algebra();
                    ElementSet g = generated_ds(a, c.set);
                    return g == generated_ds_by_chains(a, c.set, Implication::arrow) &&
                           g == generated_ds_by_chains(a, c.set, Implication::squig);
                  }));
  v.push_back(Entry("P6.monadic_ds_generated", "(M) ⇒ D∈MDS iff D=[D∩A_∃∀)")
                  .pair()
                  .over(Domain::systems)
                  .hyp({F::condition_M})
                  .check0([](C c) {
                    ElementSet g = generated_ds(c.m.algebra(), c.set & fixed_of(c));
                    return is_monadic_ds(c.set, c.p->forall) == (g == c.set);
                  }));

  v.push_back(Entry("L6.class_arrows", "(x,y)∈Θ ⇒ x→y, y→x∈[1]_Θ").over(Domain::congruences).check2([](C c, Elem x, Elem y) {
    ElementSet one = one_class(c);
    return implies(c.theta().related(x, y), one.contains(c.A(x, y)) && one.contains(c.A(y, x)));
  }));
  v.push_back(Entry("L6.class_squigs", "(x,y)∈Θ ⇒ x⇝y, y⇝x∈[1]_Θ").over(Domain::congruences).check2([](C c, Elem x, Elem y) {
    ElementSet one = one_class(c);
    return implies(c.theta().related(x, y), one.contains(c.S(x, y)) && one.contains(c.S(y, x)));
  }));
  v.push_back(Entry("L6.arrow_iff_squig_one_class", "x→y∈[1]_Θ iff x⇝y∈[1]_Θ")
                  .over(Domain::congruences)
                  .check2([](C c, Elem x, Elem y) {
                    ElementSet one = one_class(c);
                    return one.contains(c.A(x, y)) == one.contains(c.S(x, y));
                  }));
  v.push_back(Entry("L6.commutative_converse", "commutative, x→y, y→x∈[1]_Θ ⇒ (x,y)∈Θ, likewise for ⇝")
                  .over(Domain::congruences)
                  .hyp({F::commutative})
                  .check2([](C c, Elem x, Elem y) {
                    ElementSet one = one_class(c);
                    bool ar = one.contains(c.A(x, y)) && one.contains(c.A(y, x));
                    bool sq = one.contains(c.S(x, y)) && one.contains(c.S(y, x));
                    return implies(ar || sq, c.theta().related(x, y));
                  }));
  v.push_back(Entry("T6.mcon_one_class", "Θ∈MCON ⇒ [1]_Θ∈MDS").pair().over(Domain::congruences).check0([](C c) {
    if (!is_monadic_congruence(c.theta(), c.p->forall)) return true;
    ElementSet one = one_class(c);
    return is_deductive_system(c.m.algebra(), one) && is_monadic_ds(one, c.p->forall);
  }));
  v.push_back(Entry("T6.mcon_exists", "commutative, Θ∈MCON, (x,y)∈Θ ⇒ (∃x,∃y)∈Θ")
                  .pair()
                  .over(Domain::congruences)
                  .hyp({F::commutative})
                  .check2([](C c, Elem x, Elem y) {
                    return implies(is_monadic_congruence(c.theta(), c.p->forall) && c.theta().related(x, y),
                                   c.theta().related(c.E(x), c.E(y)));
                  }));
  v.push_back(Entry("P6.meet_converse", "BCK meet-semilattice, x→y, y→x∈[1]_Θ ⇒ (x,y)∈Θ, likewise for ⇝")
                  .over(Domain::congruences)
                  .hyp({F::pseudo_bck, F::meet_semilattice})
                  .needs(kNeedMeet)
                  .check2([](C c, Elem x, Elem y) {
                    if (!c.con->meet_compatible.value_or(false)) return true;
                    ElementSet one = one_class(c);
                    bool ar = one.contains(c.A(x, y)) && one.contains(c.A(y, x));
                    bool sq = one.contains(c.S(x, y)) && one.contains(c.S(y, x));
                    return implies(ar || sq, c.theta().related(x, y));
                  }));
  v.push_back(Entry("P6.meet_mcon_exists", "BCK meet-semilattice, Θ∈MCON, (x,y)∈Θ ⇒ (∃x,∃y)∈Θ")
                  .pair()
                  .over(Domain::congruences)
                  .hyp({F::pseudo_bck, F::meet_semilattice})
                  .needs(kNeedMeet)
                  .check2([](C c, Elem x, Elem y) {
                    if (!c.con->meet_compatible.value_or(false)) return true;
                    return implies(is_monadic_congruence(c.theta(), c.p->forall) && c.theta().related(x, y),
                                   c.theta().related(c.E(x), c.E(y)));
                  }));
  v.push_back(Entry("R6.theta_distributive", "(i) ⇒ Θ_D∈CON, [1]_Θ_D=D")
                  .over(Domain::systems)
                  .hyp({F::distributive_i})
                  .check0([](C c) { return theta_or_none(c.m.algebra(), c.set).has_value(); }));
  v.push_back(Entry("R6.quotient_be", "(i) ⇒ A/D is a BE-algebra").over(Domain::systems).hyp({F::distributive_i}).check0([](C c) {
    auto t = theta_or_none(c.m.algebra(), c.set);
    if (!t) return false;
    QuotientAlgebra q = quotient(c.m.algebra(), *t);
    return q.arrow_equals_squig && check_pseudo_be(q.algebra).holds();
  }));
  v.push_back(Entry("R6.bck_normal_theta", "pseudo BCK, H∈DSₙ iff Θ_H∈CON, then [1]_Θ_H=H")
                  .over(Domain::systems)
                  .hyp({F::pseudo_bck})
                  .check0([](C c) {
                    return is_normal(c.m.algebra(), c.set) == theta_or_none(c.m.algebra(), c.set).has_value();
                  }));
  v.push_back(Entry("R6.relative_normal", "pseudo BCK, CONᵣ(A) ↔ DSₙ(A)").hyp({F::pseudo_bck}).check0([](C c) {
    const FiniteAlgebra& a = c.m.algebra();
    std::vector<Congruence> rel;
    for (const auto& k : c.cache->congruences())
      if (k.relative) rel.push_back(k.partition);
    std::size_t normal = 0;
    for (const auto& d : c.cache->systems()) {
      if (!d.normal) continue;
      ++normal;
      auto t = theta_or_none(a, d.members);
      if (!t || std::find(rel.begin(), rel.end(), *t) == rel.end()) return false;
    }
    for (const auto& k : rel) {
      auto t = theta_or_none(a, k.class_set(a.one()));
      if (!t || *t != k) return false;
    }
    return normal == rel.size();
  }));
  v.push_back(Entry("T6.correspondence_be", "distributive commutative, MCON ↔ MDS")
                  .pair()
                  .hyp({F::distributive_i, F::commutative})
                  .check0([](C c) { return correspondence_report(c.m, *c.p, Variant::be).verdict.holds(); }));
  v.push_back(Entry("T6.correspondence_bck_meet", "BCK meet-semilattice, MCONᵣ ↔ MDSₙ")
                  .pair()
                  .hyp({F::pseudo_bck, F::meet_semilattice})
                  .check0([](C c) { return correspondence_report(c.m, *c.p, Variant::bck_meet).verdict.holds(); }));
  v.push_back(Entry("T6.quotient_monadic", "distributive commutative, D∈MDS ⇒ (A/D,∃_D,∀_D) monadic")
                  .pair()
                  .over(Domain::systems)
                  .hyp({F::distributive_i, F::commutative})
                  .check0([](C c) {
                    if (!is_monadic_ds(c.set, c.p->forall)) return true;
                    auto t = theta_or_none(c.m.algebra(), c.set);
                    if (!t) return false;
                    QuotientAlgebra q = quotient(c.m.algebra(), *t, c.p);
                    return q.arrow_equals_squig && q.pair_report && q.pair_report->holds();
                  }));
  v.push_back(Entry("T6.quotient_bck_meet", "BCK meet-semilattice, D∈MDSₙ ⇒ A/D monadic BCK meet-semilattice")
                  .pair()
                  .over(Domain::systems)
                  .hyp({F::pseudo_bck, F::meet_semilattice})
                  .check0([](C c) {
                    if (!is_monadic_ds(c.set, c.p->forall) || !is_normal(c.m.algebra(), c.set)) return true;
                    auto t = theta_or_none(c.m.algebra(), c.set);
                    if (!t) return false;
                    QuotientAlgebra q = quotient(c.m.algebra(), *t, c.p);
                    Model qm = classify(q.algebra);
                    return qm.holds(Flag::pseudo_bck) && qm.holds(Flag::meet_semilattice) && q.pair_report &&
                           q.pair_report->holds();
                  }));
}

void add_conjectures(std::vector<Law>& v) {
  using F = Flag;
  v.push_back(Entry("C.psBCK6", "x≤y, y≤x ⇒ x=y").conjecture().check2([](C c, Elem x, Elem y) {
    return implies(c.le(x, y) && c.le(y, x), x == y);
  }));
  v.push_back(Entry("C.leq_reflexive", "x≤x").conjecture().check1([](C c, Elem x) { return c.le(x, x); }));
  v.push_back(Entry("C.leq_transitive", "x≤y, y≤z ⇒ x≤z").conjecture().check3([](C c, Elem x, Elem y, Elem z) {
    return implies(c.le(x, y) && c.le(y, z), c.le(x, z));
  }));
  v.push_back(Entry("C.forall_isotone", "x≤y ⇒ ∀x≤∀y").pair().conjecture().check2([](C c, Elem x, Elem y) {
    return implies(c.le(x, y), c.le(c.F(x), c.F(y)));
  }));
  v.push_back(Entry("C.exists_isotone", "x≤y ⇒ ∃x≤∃y").pair().conjecture().check2([](C c, Elem x, Elem y) {
    return implies(c.le(x, y), c.le(c.E(x), c.E(y)));
  }));
  v.push_back(Entry("C.residuated", "∃x≤y iff x≤∀y").pair().conjecture().check2([](C c, Elem x, Elem y) {
    return c.le(c.E(x), y) == c.le(x, c.F(y));
  }));
  v.push_back(Entry("C.pp_m6_hoop", "pseudo BCK(pP) with M6 ⇒ pseudo-hoop")
                  .pair()
                  .hyp({F::pseudo_bck, F::has_pP})
                  .mode(Mode::pseudo_hoop)
                  .needs(kNeedOdot)
                  .conjecture()
                  .check0([](C c) { return c.m.holds(Flag::pseudo_hoop); }));
  v.push_back(Entry("C.tau_involutive", "involutive (A), τ with U1-U6 ⇒ (∃,∀) satisfies M1-M5")
                  .hyp({F::bounded, F::involutive, F::condition_A})
                  .needs(kNeedNegations | kNeedOplus)
                  .conjecture()
                  .over(Domain::maps)
                  .check0([](C c) {
                    auto r = try_tau(c.m, *c.map);
                    return !r || r->validation.holds_plain();
                  }));
}

std::vector<Law> build_catalog() {
  std::vector<Law> v;
  add_core(v);
  add_monadic(v);
  add_bounded_commutative(v);
  add_bck_classes(v);
  add_deduction(v);
  add_conjectures(v);
  std::sort(v.begin(), v.end(), [](const Law& a, const Law& b) { return a.id < b.id; });
  return v;
}

bool has_needs(const Model& m, unsigned needs) {
  if ((needs & kNeedNegations) && !m.has_negations()) return false;
  if ((needs & kNeedOdot) && !m.has_odot()) return false;
  if ((needs & kNeedOplus) && !m.has_oplus()) return false;
  if ((needs & kNeedMeet) && !m.has_meet()) return false;
  if ((needs & kNeedJoin) && !m.has_join()) return false;
  return true;
}

std::optional<std::string> pair_unfit(const Law& law, const Model& m, const MonadicPair& p) {
  try {
    if (!check_monadic(m, p, law.pair_mode).holds())
      return "pair fails " + std::string(mode_name(law.pair_mode)) + " axioms";
  } catch (const ModeUnavailable& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

std::string domain_note(const FiniteAlgebra& a, const LawContext& c, Domain d) {
  switch (d) {
    case Domain::congruences: return "part " + format_partition(a, c.theta());
    case Domain::systems: return "ds " + a.format_set(c.set);
    case Domain::subsets: return "set " + a.format_set(c.set);
    case Domain::maps: return "map " + a.format_tuple(c.map->images());
    case Domain::elements: break;
  }
  return {};
}

}  // namespace

std::string_view scope_name(Scope s) {
  switch (s) {
    case Scope::algebra: return "algebra";
    case Scope::pair: return "pair";
    case Scope::pair_pair: return "pair_pair";
  }
  return "?";
}

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::elements: return "elements";
    case Domain::congruences: return "congruences";
    case Domain::systems: return "systems";
    case Domain::subsets: return "subsets";
    case Domain::maps: return "maps";
  }
  return "?";
}

const std::vector<Law>& catalog() {
  static const std::vector<Law> laws = build_catalog();
  return laws;
}

const Law* find_law(std::string_view id) {
  const auto& laws = catalog();
  auto it = std::lower_bound(laws.begin(), laws.end(), id, [](const Law& l, std::string_view k) { return l.id < k; });
  return it != laws.end() && it->id == id ? &*it : nullptr;
}

const std::vector<DeductiveSystem>& SuiteCache::systems() {
  if (!systems_) systems_ = enumerate_ds(model);
  return *systems_;
}

const std::vector<CongruenceInfo>& SuiteCache::congruences() {
  if (!congruences_) congruences_ = enumerate_congruences(model);
  return *congruences_;
}

std::optional<std::string> inapplicable(const Law& law, const Model& m, const MonadicPair* p, const MonadicPair* q) {
  for (Flag f : law.hypothesis)
    if (!m.holds(f)) return "hypothesis " + std::string(flag_name(f)) + " not met";
  if (!has_needs(m, law.needs)) return std::string("derived operation absent");
  if (law.scope != Scope::algebra && p)
    if (auto r = pair_unfit(law, m, *p)) return r;
  if (law.scope == Scope::pair_pair && q)
    if (auto r = pair_unfit(law, m, *q)) return r;
  return std::nullopt;
}

Verdict evaluate_law(const Law& law, const Model& m, const MonadicPair* p, const MonadicPair* q, SuiteCache& cache) {
  if (auto why = inapplicable(law, m, p, q)) return Verdict::not_applicable(law.id, *why);
  Verdict v{.name = law.id};
  const std::size_t n = m.size();
  std::vector<Elem> tuple(law.arity, 0);
  LawContext ctx{.m = m, .p = p, .q = q, .cache = &cache};

  auto run_tuples = [&] {
    std::fill(tuple.begin(), tuple.end(), Elem{0});
    while (true) {
      ctx.x = tuple;
      bool ok = law.check(ctx);
      bool first = !v.fails() && !ok;
      v.check(ok, tuple);
      if (first && law.domain != Domain::elements) v.note = domain_note(m.algebra(), ctx, law.domain);
      std::size_t k = tuple.size();
      if (k == 0) return;
      while (k > 0) {
        --k;
        if (++tuple[k] < n) break;
        tuple[k] = 0;
        if (k == 0) return;
      }
    }
  };

  switch (law.domain) {
    case Domain::elements:
      run_tuples();
      break;
    case Domain::systems:
      for (const auto& d : cache.systems()) {
        ctx.set = d.members;
        run_tuples();
      }
      break;
    case Domain::subsets:
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ctx.set = ElementSet(mask);
        run_tuples();
      }
      break;
    case Domain::congruences:
      for (const auto& c : cache.congruences()) {
        ctx.con = &c;
        run_tuples();
      }
      break;
    case Domain::maps:
      for_each_map(n, [&](const UnaryMap& t) {
        ctx.map = &t;
        run_tuples();
      });
      break;
  }
  return v;
}

bool LawFilter::selects(const Law& law) const {
  if (ids.empty()) return include_conjectures || !law.conjecture;
  for (const auto& id : ids) {
    if (!id.empty() && id.back() == '*') {
      std::string_view prefix(id.data(), id.size() - 1);
      if (law.id.starts_with(prefix) && (include_conjectures || !law.conjecture)) return true;
    } else if (law.id == id) {
      return true;
    }
  }
  return false;
}

std::vector<LawVerdict> verify_suite(const Model& m, std::span<const MonadicPair> pairs, const LawFilter& filter,
                                     unsigned threads) {
  struct Job {
    const Law* law;
    std::optional<std::size_t> i, j;
  };
  std::vector<Job> jobs;
  bool wants_systems = false, wants_congruences = false;
  for (const Law& law : catalog()) {
    if (!filter.selects(law)) continue;
    wants_systems = wants_systems || law.domain == Domain::systems || law.domain == Domain::subsets ||
                    law.id == "R6.relative_normal";
    wants_congruences = wants_congruences || law.domain == Domain::congruences || law.id == "R6.relative_normal";
    switch (law.scope) {
      case Scope::algebra:
        jobs.push_back({&law, std::nullopt, std::nullopt});
        break;
      case Scope::pair:
        for (std::size_t i = 0; i < pairs.size(); ++i) jobs.push_back({&law, i, std::nullopt});
        break;
      case Scope::pair_pair:
        for (std::size_t i = 0; i < pairs.size(); ++i)
          for (std::size_t j = 0; j < pairs.size(); ++j) jobs.push_back({&law, i, j});
        break;
    }
  }
  SuiteCache cache(m);
  // Fill the cache up front so workers only read it.
  if (wants_systems) cache.systems();
  if (wants_congruences) cache.congruences();

  std::vector<LawVerdict> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      const MonadicPair* p = job.i ? &pairs[*job.i] : nullptr;
      const MonadicPair* q = job.j ? &pairs[*job.j] : nullptr;
      out[k] = {job.law->id, job.i, job.j, evaluate_law(*job.law, m, p, q, cache)};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

SuiteSummary summarize(std::span<const LawVerdict> verdicts) {
  SuiteSummary s;
  std::vector<std::string_view> ids;
  for (const auto& v : verdicts) {
    ids.push_back(v.law);
    s.instances += v.verdict.instances;
    switch (v.verdict.status) {
      case Status::holds: ++s.holds; break;
      case Status::fails: ++s.fails; break;
      case Status::not_applicable: ++s.not_applicable; break;
    }
  }
  std::sort(ids.begin(), ids.end());
  s.laws = static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
  return s;
}

}  // namespace mpbe
