#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mpbe/algebra.hpp"

namespace mpbe {

enum class Status { holds, fails, not_applicable };

std::string_view status_name(Status s);

inline constexpr std::size_t kWitnessCap = 16;

/// Outcome of one property. `witness` is the first violation in
/// lexicographic scan order; `witnesses` keeps up to kWitnessCap of them.
struct Verdict {
  std::string name;
  Status status = Status::holds;
  std::vector<Elem> witness;
  std::vector<std::vector<Elem>> witnesses;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string note;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }

  static Verdict not_applicable(std::string name, std::string note = {});

  /// Record one checked instance.
  void check(bool ok, std::vector<Elem> tuple = {});
  void fail(std::vector<Elem> tuple) { check(false, std::move(tuple)); }
  bool has_witness(const std::vector<Elem>& tuple) const;
};

/// A named list of verdicts with a combined status: fails if any fails.
struct VerdictSet {
  std::vector<Verdict> items;

  bool holds() const;
  const Verdict* find(std::string_view name) const;
  const Verdict* first_failure() const;
};

}  // namespace mpbe
