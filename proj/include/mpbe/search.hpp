#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpbe/laws.hpp"

namespace mpbe {

inline constexpr std::size_t kMaxSearchSize = 5;
inline constexpr std::size_t kMaxUnprunedSize = 4;

struct SearchSpec {
  std::size_t min_size = 1;
  std::size_t max_size = 4;
  std::vector<Flag> require;
  std::vector<Flag> forbid;
  /// Catalog id of the target law. Empty: enumerate the class only.
  std::string law;
  bool iso_rejection = true;
  /// Cut branches as soon as psBE4/psBE5 fail; off, they are tested on complete tables.
  bool prune = true;
  /// Node limit, 0 for none.
  std::uint64_t budget = 0;
  unsigned threads = 1;
};

enum class SearchStatus { found, exhausted, budget_exceeded };
std::string_view search_status_name(SearchStatus s);

struct SizeStats {
  std::size_t size = 0;
  std::uint64_t candidates = 0;  ///< complete table pairs reached
  std::uint64_t pseudo_be = 0;   ///< of those, satisfying psBE1-psBE5
  std::uint64_t canonical = 0;   ///< of those, kept after isomorphism rejection
  std::uint64_t in_class = 0;    ///< of those, meeting require/forbid
  std::uint64_t pairs_checked = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::vector<SizeStats> sizes;

  std::uint64_t candidates() const;
  std::uint64_t in_class() const;
};

struct Counterexample {
  FiniteAlgebra algebra;
  std::optional<MonadicPair> pair;
  std::optional<MonadicPair> second;
  Verdict verdict;
  /// Serialized, reparsed, reclassified and failed again at the same witness.
  bool reverified = false;

  /// The algebra file text, with the pair(s) as `cx` / `cx2` unary blocks.
  std::string document() const;
};

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Counterexample> counterexample;
  SearchStats stats;
};

/// n^(2(n-1)(n-2)): table pairs with the cells fixed by psBE1-psBE3 filled in.
std::uint64_t forced_candidate_count(std::size_t n);

/// True if no relabelling fixing `one` (and `zero`, if given) yields a smaller
/// (arrow, squig) cell sequence.
bool is_canonical(const FiniteAlgebra& a);

/// Throws PreconditionUnmet for sizes above the limits or an unknown law.
SearchResult search_counterexample(const SearchSpec& spec);

}  // namespace mpbe
