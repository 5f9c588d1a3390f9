#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpbe/deduction.hpp"

namespace mpbe {

/// Derived operations a law mentions.
enum Need : unsigned {
  kNeedNegations = 1U << 0,
  kNeedOdot = 1U << 1,
  kNeedOplus = 1U << 2,
  kNeedMeet = 1U << 3,
  kNeedJoin = 1U << 4,
};

/// What a law quantifies over besides element tuples.
enum class Scope { algebra, pair, pair_pair };
enum class Domain { elements, congruences, systems, subsets, maps };

std::string_view scope_name(Scope s);
std::string_view domain_name(Domain d);

struct SuiteCache;

/// Everything a check may look at for one instance.
struct LawContext {
  const Model& m;
  const MonadicPair* p = nullptr;
  const MonadicPair* q = nullptr;
  const CongruenceInfo* con = nullptr;
  ElementSet set;  ///< the deductive system or subset of the instance
  const UnaryMap* map = nullptr;  ///< the candidate τ or σ, over Domain::maps
  std::span<const Elem> x;
  SuiteCache* cache = nullptr;

  std::size_t n() const { return m.size(); }
  Elem one() const { return m.one(); }
  Elem zero() const { return m.zero(); }
  Elem A(Elem u, Elem v) const { return m.arrow(u, v); }
  Elem S(Elem u, Elem v) const { return m.squig(u, v); }
  bool le(Elem u, Elem v) const { return m.leq(u, v); }
  Elem mi(Elem u) const { return m.minus(u); }
  Elem si(Elem u) const { return m.sim(u); }
  Elem O(Elem u, Elem v) const { return m.odot(u, v); }
  Elem P(Elem u, Elem v) const { return m.oplus(u, v); }
  Elem meet(Elem u, Elem v) const { return m.meet(u, v); }
  Elem join(Elem u, Elem v) const { return m.join(u, v); }
  Elem E(Elem u) const { return p->exists(u); }
  Elem F(Elem u) const { return p->forall(u); }
  Elem E2(Elem u) const { return q->exists(u); }
  Elem F2(Elem u) const { return q->forall(u); }
  const Congruence& theta() const { return con->partition; }
};

struct Law {
  std::string id;
  std::string anchor;  ///< the statement, in symbols
  std::vector<Flag> hypothesis;
  unsigned needs = 0;
  /// The pair (or pairs) must pass check_monadic in this mode.
  Mode pair_mode = Mode::plain;
  Scope scope = Scope::algebra;
  Domain domain = Domain::elements;
  std::size_t arity = 0;
  /// Claimed without the hypotheses that make it provable; kept as a search target.
  bool conjecture = false;
  std::function<bool(const LawContext&)> check;
};

/// Sorted by id.
const std::vector<Law>& catalog();
const Law* find_law(std::string_view id);

/// Lazily computed per-algebra data shared by laws.
struct SuiteCache {
  explicit SuiteCache(const Model& m) : model(m) {}
  const Model& model;
  const std::vector<DeductiveSystem>& systems();
  const std::vector<CongruenceInfo>& congruences();

 private:
  std::optional<std::vector<DeductiveSystem>> systems_;
  std::optional<std::vector<CongruenceInfo>> congruences_;
};

/// Reason the law does not apply, if any.
std::optional<std::string> inapplicable(const Law& law, const Model& m, const MonadicPair* p = nullptr,
                                        const MonadicPair* q = nullptr);

/// One law on one algebra for the given pairs (as its scope needs).
Verdict evaluate_law(const Law& law, const Model& m, const MonadicPair* p, const MonadicPair* q, SuiteCache& cache);

struct LawVerdict {
  std::string law;
  std::optional<std::size_t> pair;
  std::optional<std::size_t> second;
  Verdict verdict;
};

struct LawFilter {
  /// Exact ids or prefixes ending in '*'. Empty selects every non-conjecture law.
  std::vector<std::string> ids;
  bool include_conjectures = false;

  bool selects(const Law& law) const;
};

/// Ordered by catalog id, then pair indices, whatever the thread count.
std::vector<LawVerdict> verify_suite(const Model& m, std::span<const MonadicPair> pairs, const LawFilter& filter = {},
                                     unsigned threads = 1);

struct SuiteSummary {
  std::size_t laws = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t not_applicable = 0;
  std::size_t instances = 0;
};

SuiteSummary summarize(std::span<const LawVerdict> verdicts);

}  // namespace mpbe
