#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mpbe/algebra.hpp"
#include "mpbe/verdict.hpp"

namespace mpbe {

/// psBE1..psBE5, one verdict each.
VerdictSet check_pseudo_be(const FiniteAlgebra& a);
/// psBCK1..psBCK6, one verdict each.
VerdictSet check_pseudo_bck(const FiniteAlgebra& a);

enum class Flag : std::size_t {
  pseudo_be,
  pseudo_bck,
  condition_A,
  condition_M,
  condition_T,
  distributive_i,
  distributive_ii,
  commutative,
  bounded,
  good,
  involutive,
  poset,
  meet_semilattice,
  join_semilattice,
  lattice,
  has_pP,
  pseudo_hoop,
  pseudo_mv,
};
inline constexpr std::size_t kFlagCount = 18;

std::string_view flag_name(Flag f);
std::optional<Flag> flag_from_name(std::string_view name);
const std::array<Flag, kFlagCount>& all_flags();

struct ClassificationReport {
  std::array<Verdict, kFlagCount> flags;

  const Verdict& operator[](Flag f) const { return flags[static_cast<std::size_t>(f)]; }
  Verdict& operator[](Flag f) { return flags[static_cast<std::size_t>(f)]; }
  bool holds(Flag f) const { return (*this)[f].holds(); }
  /// Distributivity in the default sense, condition (i).
  bool distributive() const { return holds(Flag::distributive_i); }
};

struct DerivedOps {
  std::vector<ElementSet> up;  ///< up[x] = {y | x ≤ y}
  std::optional<Elem> zero;    ///< the least element, when unique
  std::optional<UnaryMap> neg_minus;  ///< x⁻ = x→0
  std::optional<UnaryMap> neg_sim;    ///< x~ = x⇝0
  std::optional<Table> odot;
  std::optional<Table> oplus;
  Table cup1;  ///< (x→y)⇝y
  Table cup2;  ///< (x⇝y)→y
  std::optional<Table> meet;
  std::optional<Table> join;

  bool leq(Elem x, Elem y) const { return up[x].contains(y); }
};

/// An algebra together with its classification and derived operations.
class Model {
 public:
  Model(FiniteAlgebra algebra, ClassificationReport report, DerivedOps ops)
      : algebra_(std::move(algebra)), report_(std::move(report)), ops_(std::move(ops)) {}

  const FiniteAlgebra& algebra() const { return algebra_; }
  const ClassificationReport& report() const { return report_; }
  const DerivedOps& ops() const { return ops_; }
  bool holds(Flag f) const { return report_.holds(f); }

  std::size_t size() const { return algebra_.size(); }
  Elem one() const { return algebra_.one(); }
  Elem zero() const { return *ops_.zero; }
  Elem arrow(Elem x, Elem y) const { return algebra_.arrow(x, y); }
  Elem squig(Elem x, Elem y) const { return algebra_.squig(x, y); }
  bool leq(Elem x, Elem y) const { return ops_.leq(x, y); }

  bool has_negations() const { return ops_.neg_minus.has_value(); }
  bool has_odot() const { return ops_.odot.has_value(); }
  bool has_oplus() const { return ops_.oplus.has_value(); }
  bool has_meet() const { return ops_.meet.has_value(); }
  bool has_join() const { return ops_.join.has_value(); }

  // The accessors below require the operation to exist.
  Elem minus(Elem x) const { return (*ops_.neg_minus)(x); }
  Elem sim(Elem x) const { return (*ops_.neg_sim)(x); }
  Elem odot(Elem x, Elem y) const { return (*ops_.odot)(x, y); }
  Elem oplus(Elem x, Elem y) const { return (*ops_.oplus)(x, y); }
  Elem meet(Elem x, Elem y) const { return (*ops_.meet)(x, y); }
  Elem join(Elem x, Elem y) const { return (*ops_.join)(x, y); }

 private:
  FiniteAlgebra algebra_;
  ClassificationReport report_;
  DerivedOps ops_;
};

/// Throws PreconditionUnmet unless psBE1..psBE5 hold, and DeclaredZeroMismatch
/// when a declared zero is not a least element.
Model classify(const FiniteAlgebra& a);

struct ProductResult {
  std::optional<Table> table;
  std::optional<std::pair<Elem, Elem>> failing;
};

/// The pP product x⊙y = min{z | x ≤ y→z} = min{z | y ≤ x⇝z}. Throws NotAPoset.
ProductResult pseudo_product(const FiniteAlgebra& a);

bool leq(const FiniteAlgebra& a, Elem x, Elem y);

}  // namespace mpbe
