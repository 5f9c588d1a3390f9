#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpbe/quantifiers.hpp"

namespace mpbe {

enum class Implication { arrow, squig };

/// 1 ∈ D and modus ponens for the chosen implication.
bool is_deductive_system(const FiniteAlgebra& a, ElementSet d, Implication imp = Implication::arrow);
/// x→y ∈ D iff x⇝y ∈ D.
bool is_normal(const FiniteAlgebra& a, ElementSet d);
/// x ∈ D implies ∀x ∈ D.
bool is_monadic_ds(ElementSet d, const UnaryMap& forall);

struct DeductiveSystem {
  ElementSet members;
  bool normal = false;
  std::vector<bool> monadic;  ///< one entry per supplied pair
};

/// Every deductive system, by size then lexicographically on members. n <= 20.
std::vector<DeductiveSystem> enumerate_ds(const Model& m, std::span<const MonadicPair> pairs = {});
std::vector<DeductiveSystem> monadic_ds(const Model& m, const MonadicPair& p);

/// Least deductive system containing X, by fixpoint over both implications.
ElementSet generated_ds(const FiniteAlgebra& a, ElementSet x);
/// {x | a₁→(a₂→(...(aₖ→x)...)) = 1, aᵢ ∈ X ∪ {1}, k <= n}, with → or ⇝ throughout.
ElementSet generated_ds_by_chains(const FiniteAlgebra& a, ElementSet x, Implication imp);

class Congruence {
 public:
  Congruence() = default;
  /// `labels` is any class labelling; it is normalised to first-occurrence order.
  explicit Congruence(std::vector<Elem> labels);
  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t class_count() const { return count_; }
  Elem class_of(Elem x) const { return labels_[x]; }
  bool related(Elem x, Elem y) const { return labels_[x] == labels_[y]; }
  const std::vector<Elem>& labels() const { return labels_; }
  std::vector<ElementSet> classes() const;
  ElementSet class_set(Elem x) const;

  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& o) const { return labels_ < o.labels_; }

 private:
  std::vector<Elem> labels_;
  std::size_t count_ = 0;
};

/// First violated compatibility 4-tuple (x,y,u,v), if any.
std::optional<std::vector<Elem>> compatibility_witness(const FiniteAlgebra& a, const Congruence& c);
bool is_congruence(const FiniteAlgebra& a, const Congruence& c);
bool is_monadic_congruence(const Congruence& c, const UnaryMap& forall);
/// The quotient satisfies psBCK1-psBCK6.
bool is_relative(const FiniteAlgebra& a, const Congruence& c);
/// Also compatible with ∧. Needs a meet-semilattice.
bool is_meet_compatible(const Model& m, const Congruence& c);

struct CongruenceInfo {
  Congruence partition;
  std::optional<bool> monadic;
  bool relative = false;
  std::optional<bool> meet_compatible;
};

struct CongruenceOptions {
  const MonadicPair* pair = nullptr;
};

/// All congruences in restricted-growth order. n <= 10.
std::vector<CongruenceInfo> enumerate_congruences(const Model& m, const CongruenceOptions& opts = {});

/// (x,y) ∈ Θ_D iff x→y ∈ D and y→x ∈ D. Throws NotACongruence.
Congruence theta_from_ds(const FiniteAlgebra& a, ElementSet d);

struct QuotientAlgebra {
  FiniteAlgebra algebra;
  std::vector<Elem> projection;  ///< element ↦ class index
  bool arrow_equals_squig = false;
  std::optional<MonadicPair> pair;
  std::optional<MonadicCheckReport> pair_report;
};

/// Classes ordered by least member, named by it. Throws IllDefined.
QuotientAlgebra quotient(const FiniteAlgebra& a, const Congruence& theta, const MonadicPair* pair = nullptr);

enum class Variant { be, bck_meet };

struct Correspondence {
  Verdict verdict;
  std::vector<ElementSet> systems;
  std::vector<Congruence> congruences;
};

/// be: MCON ↔ MDS, needs distributive commutative. bck_meet: monadic relative
/// congruences ↔ monadic normal deductive systems, needs pseudo BCK.
Correspondence correspondence_report(const Model& m, const MonadicPair& p, Variant v);

std::string format_partition(const FiniteAlgebra& a, const Congruence& c);

}  // namespace mpbe
