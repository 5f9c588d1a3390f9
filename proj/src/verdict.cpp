#include "mpbe/verdict.hpp"

#include <algorithm>

namespace mpbe {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

Verdict Verdict::not_applicable(std::string name, std::string note) {
  Verdict v;
  v.name = std::move(name);
  v.status = Status::not_applicable;
  v.note = std::move(note);
  return v;
}

void Verdict::check(bool ok, std::vector<Elem> tuple) {
  ++instances;
  if (ok) return;
  ++violations;
  if (status != Status::fails) {
    status = Status::fails;
    witness = tuple;
  }
  if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(tuple));
}

bool Verdict::has_witness(const std::vector<Elem>& tuple) const {
  return std::find(witnesses.begin(), witnesses.end(), tuple) != witnesses.end();
}

bool VerdictSet::holds() const {
  return std::none_of(items.begin(), items.end(), [](const Verdict& v) { return v.fails(); });
}

const Verdict* VerdictSet::find(std::string_view name) const {
  for (const auto& v : items)
    if (v.name == name) return &v;
  return nullptr;
}

const Verdict* VerdictSet::first_failure() const {
  for (const auto& v : items)
    if (v.fails()) return &v;
  return nullptr;
}

}  // namespace mpbe
