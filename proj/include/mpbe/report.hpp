#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mpbe/search.hpp"

namespace mpbe::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kTool = "mpbe";
inline constexpr std::string_view kVersion = "1.0.0";

/// FNV-1a 64, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

Json tuple(const FiniteAlgebra& a, std::span<const Elem> t);
Json set(const FiniteAlgebra& a, ElementSet s);
Json map(const FiniteAlgebra& a, const UnaryMap& m);
Json table(const FiniteAlgebra& a, const Table& t);
Json verdict(const FiniteAlgebra& a, const Verdict& v);
Json verdicts(const FiniteAlgebra& a, const VerdictSet& vs);
Json algebra(const FiniteAlgebra& a);

Json classification(const Model& m);
Json monadic_check(const FiniteAlgebra& a, const MonadicCheckReport& r);
Json pair(const FiniteAlgebra& a, const MonadicPair& p, std::string_view name);
Json mop(const Model& m, std::span<const MonadicPair> pairs, Mode mode, const MopStats& stats);
Json systems(const Model& m, std::span<const DeductiveSystem> ds, std::span<const NamedPair> pairs);
Json correspondence(const Model& m, const Correspondence& c, Variant v);
Json generated(const FiniteAlgebra& a, ElementSet x, ElementSet g);
Json quotient(const FiniteAlgebra& a, ElementSet d, const QuotientAlgebra& q);
Json suite(const Model& m, std::span<const LawVerdict> vs, std::span<const NamedPair> pairs);
Json search(const SearchSpec& spec, const SearchResult& r);
Json law(const Law& l);
Json catalog();

struct RunReport {
  std::string subcommand;
  std::string input_digest;  ///< empty when there is no input file
  Json payload;
  int exit_status = 0;
};

Json to_json(const RunReport& r);

}  // namespace mpbe::report
