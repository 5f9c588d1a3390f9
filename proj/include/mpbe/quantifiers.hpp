#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpbe/classify.hpp"

namespace mpbe {

struct MonadicPair {
  UnaryMap exists;
  UnaryMap forall;

  static MonadicPair identity(std::size_t n) { return {UnaryMap::identity(n), UnaryMap::identity(n)}; }

  bool operator==(const MonadicPair&) const = default;
  /// Ordered by (∀ images, ∃ images).
  bool operator<(const MonadicPair& o) const {
    if (forall != o.forall) return forall < o.forall;
    return exists < o.exists;
  }
};

struct NamedPair {
  std::string name;
  MonadicPair pair;
};

/// Pairs declared as `unary <name>_exists` / `unary <name>_forall`, in file order.
std::vector<NamedPair> document_pairs(const AlgebraDocument& doc);
/// The declared pair whose name starts with `prefix`. Throws InvalidAlgebra if none or ambiguous.
NamedPair find_pair(const AlgebraDocument& doc, std::string_view prefix);

/// plain: M1-M5. bounded_commutative: adds M6 and M7. pseudo_hoop: adds M6.
enum class Mode { plain, bounded_commutative, pseudo_hoop };

std::string_view mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);

struct MonadicCheckReport {
  Mode mode = Mode::plain;
  /// M1, M2, M3.arrow, M3.squig, M4.arrow, M4.squig, M5, then M6/M7 by mode.
  VerdictSet axioms;

  bool holds() const { return axioms.holds(); }
  /// M1-M5 only, whatever the mode.
  bool holds_plain() const;
};

/// Throws ModeUnavailable when the mode needs ⊙ or ⊕ and they are absent.
MonadicCheckReport check_monadic(const Model& m, const MonadicPair& p, Mode mode = Mode::plain);

struct MopOptions {
  Mode mode = Mode::plain;
  /// Scan all n^(2n) map pairs instead of the pruned candidates. Limited to n <= 5.
  bool unpruned = false;
};

struct MopStats {
  std::size_t exists_candidates = 0;
  std::size_t forall_candidates = 0;
  std::size_t pairs_checked = 0;
};

/// All monadic operators, sorted by (∀, ∃).
std::vector<MonadicPair> enumerate_mop(const Model& m, const MopOptions& opts = {}, MopStats* stats = nullptr);

struct FixedSets {
  ElementSet fixed_exists;  ///< {x | ∃x = x}
  ElementSet fixed_forall;  ///< {x | ∀x = x}
  ElementSet image_forall;
  ElementSet image_exists;
  ElementSet kernel;  ///< {x | ∀x = 1}

  ElementSet fixed() const { return fixed_exists; }
  bool consistent() const {
    return fixed_exists == fixed_forall && fixed_exists == image_forall && fixed_exists == image_exists;
  }
};

FixedSets fixed_set(const Model& m, const MonadicPair& p);

/// ∃x ≤ y iff x ≤ ∀y. Throws PreconditionUnmet unless condition (T) holds.
Verdict residuation_check(const Model& m, const MonadicPair& p);

struct Construction {
  MonadicPair pair;
  VerdictSet conditions;  ///< U1..U6 or E1..E6
  MonadicCheckReport validation;
  std::optional<Verdict> twin;  ///< the two formulas for the derived map agree
};

/// ∀ = τ, ∃x = (τx⁻)~. Needs bounded, good and ⊕. On a bounded commutative
/// algebra the first failed U_k throws ConditionFailed; otherwise all
/// conditions are reported and the pair is built and validated.
Construction build_from_tau(const Model& m, const UnaryMap& tau);
/// ∃ = σ, ∀x = (σx⁻)~. Needs bounded, good and ⊙.
Construction build_from_sigma(const Model& m, const UnaryMap& sigma);

enum class Direction { forall_to_exists, exists_to_forall };

/// x ↦ (q x⁻)~. Needs a bounded involutive algebra.
UnaryMap dual_quantifier(const Model& m, Direction d, const UnaryMap& q);

struct Composition {
  bool bck = false;
  bool commute_exists = false;
  bool commute_forall = false;
  MonadicPair forward;   ///< (∃₁∃₂, ∀₁∀₂)
  MonadicPair backward;  ///< (∃₂∃₁, ∀₂∀₁)
  bool forward_valid = false;
  bool backward_valid = false;
  std::optional<MonadicPair> composed;  ///< forward, when both commute and it validates

  bool order_defined = false;  ///< ≤ is a partial order
  bool forall_leq = false;     ///< ∀₁ ≤ ∀₂ pointwise
  bool forall_absorbs = false; ///< ∀₁∀₂ = ∀₁
  bool exists_geq = false;     ///< ∃₁ ≥ ∃₂ pointwise
  bool exists_absorbs = false; ///< ∃₁∃₂ = ∃₁

  bool commute() const { return commute_exists && commute_forall; }
};

Composition compose_pairs(const Model& m, const MonadicPair& p1, const MonadicPair& p2);

enum class QuantifierKind { universal, existential };

/// MVU1..MVU6 or MVE1..MVE6. Throws NotBoundedCommutative.
VerdictSet check_mv_quantifier(const Model& m, const UnaryMap& q, QuantifierKind kind);

}  // namespace mpbe
