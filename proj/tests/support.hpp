#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mpbe/search.hpp"

#ifndef MPBE_FIXTURE_DIR
#define MPBE_FIXTURE_DIR "fixtures"
#endif

namespace testing {

using mpbe::Elem;
using mpbe::ElementSet;
using mpbe::FiniteAlgebra;
using mpbe::UnaryMap;

inline const std::vector<std::string> kFixtures = {"psbe4", "psbe5", "bc4", "inv6"};

inline std::string fixture_path(const std::string& name) { return std::string(MPBE_FIXTURE_DIR) + "/" + name + ".alg"; }

inline mpbe::AlgebraDocument load(const std::string& name) { return mpbe::load_algebra(fixture_path(name)); }

struct Loaded {
  mpbe::AlgebraDocument doc;
  mpbe::Model model;
  std::vector<mpbe::NamedPair> pairs;

  const mpbe::FiniteAlgebra& a() const { return doc.algebra; }
  Elem el(const std::string& s) const { return *doc.algebra.find(s); }
  ElementSet set(std::initializer_list<const char*> xs) const {
    ElementSet s;
    for (const char* x : xs) s.insert(el(x));
    return s;
  }
  std::vector<mpbe::MonadicPair> bare() const {
    std::vector<mpbe::MonadicPair> v;
    for (const auto& p : pairs) v.push_back(p.pair);
    return v;
  }
};

inline Loaded open(const std::string& name) {
  auto doc = load(name);
  auto model = mpbe::classify(doc.algebra);
  auto pairs = mpbe::document_pairs(doc);
  return {std::move(doc), std::move(model), std::move(pairs)};
}

inline UnaryMap map_of(const FiniteAlgebra& a, std::initializer_list<const char*> images) {
  std::vector<Elem> v;
  for (const char* s : images) v.push_back(*a.find(s));
  return UnaryMap(v);
}

inline std::vector<Elem> elems(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Elem>(i);
  return v;
}

// Oracles below read the tables directly and share no code with the library.

inline bool naive_pseudo_be(const FiniteAlgebra& a) {
  const Elem one = a.one();
  auto R = [&](Elem x, Elem y) { return a.arrow_table()(x, y); };
  auto S = [&](Elem x, Elem y) { return a.squig_table()(x, y); };
  for (Elem x : elems(a.size())) {
    if (R(x, x) != one || S(x, x) != one) return false;
    if (R(x, one) != one || S(x, one) != one) return false;
    if (R(one, x) != x || S(one, x) != x) return false;
    for (Elem y : elems(a.size())) {
      if ((R(x, y) == one) != (S(x, y) == one)) return false;
      for (Elem z : elems(a.size()))
        if (R(x, S(y, z)) != S(y, R(x, z))) return false;
    }
  }
  return true;
}

inline bool naive_monadic(const FiniteAlgebra& a, const UnaryMap& E, const UnaryMap& F) {
  const Elem one = a.one();
  auto R = [&](Elem x, Elem y) { return a.arrow_table()(x, y); };
  auto S = [&](Elem x, Elem y) { return a.squig_table()(x, y); };
  for (Elem x : elems(a.size())) {
    if (R(x, E(x)) != one || S(x, E(x)) != one) return false;
    if (R(F(x), x) != one || S(F(x), x) != one) return false;
    if (E(F(x)) != F(x)) return false;
    for (Elem y : elems(a.size())) {
      if (F(R(x, E(y))) != R(E(x), E(y)) || F(S(x, E(y))) != S(E(x), E(y))) return false;
      if (F(R(E(x), y)) != R(E(x), F(y)) || F(S(E(x), y)) != S(E(x), F(y))) return false;
    }
  }
  return true;
}

inline bool naive_ds(const FiniteAlgebra& a, ElementSet d) {
  if (!d.contains(a.one())) return false;
  for (Elem x : elems(a.size()))
    for (Elem y : elems(a.size()))
      if (d.contains(x) && d.contains(a.arrow_table()(x, y)) && !d.contains(y)) return false;
  return true;
}

inline bool naive_normal(const FiniteAlgebra& a, ElementSet d) {
  for (Elem x : elems(a.size()))
    for (Elem y : elems(a.size()))
      if (d.contains(a.arrow_table()(x, y)) != d.contains(a.squig_table()(x, y))) return false;
  return true;
}

/// Every set partition of {0..n-1}, as class labels.
inline std::vector<std::vector<Elem>> all_partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  std::function<void(Elem)> rec = [&](Elem used) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (Elem c = 0; c <= used; ++c) {
      cur.push_back(c);
      rec(c == used ? static_cast<Elem>(used + 1) : used);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool naive_compatible(const FiniteAlgebra& a, const std::vector<Elem>& cls) {
  const auto xs = elems(a.size());
  for (Elem x : xs)
    for (Elem y : xs) {
      if (cls[x] != cls[y]) continue;
      for (Elem u : xs)
        for (Elem v : xs) {
          if (cls[u] != cls[v]) continue;
          if (cls[a.arrow(x, u)] != cls[a.arrow(y, v)] || cls[a.squig(x, u)] != cls[a.squig(y, v)]) return false;
        }
    }
  return true;
}

inline std::set<std::uint64_t> bits_of(const std::vector<ElementSet>& v) {
  std::set<std::uint64_t> s;
  for (auto e : v) s.insert(e.bits());
  return s;
}

}  // namespace testing
