#include "mpbe/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "mpbe/errors.hpp"

namespace mpbe {

namespace {

constexpr Elem kUnset = 0xFF;

std::vector<std::string> element_names(std::size_t n, bool zero_last) {
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  if (zero_last && n > 1) names.back() = "0";
  return names;
}

std::vector<std::vector<Elem>> perms_fixing(std::size_t n, std::optional<Elem> one, std::optional<Elem> zero) {
  std::vector<Elem> moving;
  for (std::size_t i = 0; i < n; ++i)
    if (Elem e = static_cast<Elem>(i); e != one && e != zero) moving.push_back(e);
  std::vector<Elem> images = moving;
  std::vector<std::vector<Elem>> out;
  do {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), Elem{0});
    for (std::size_t i = 0; i < moving.size(); ++i) p[moving[i]] = images[i];
    out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// -1, 0, 1 as the relabelled pair compares with the original.
int compare_permuted(const std::vector<Elem>& ar, const std::vector<Elem>& sq, std::size_t n,
                     const std::vector<Elem>& p, const std::vector<Elem>& inv) {
  for (const auto* t : {&ar, &sq}) {
    for (std::size_t i = 0; i < n * n; ++i) {
      std::size_t x = i / n, y = i % n;
      Elem permuted = p[(*t)[inv[x] * n + inv[y]]];
      if (permuted != (*t)[i]) return permuted < (*t)[i] ? -1 : 1;
    }
  }
  return 0;
}

bool canonical_tables(const std::vector<Elem>& ar, const std::vector<Elem>& sq, std::size_t n,
                      const std::vector<std::vector<Elem>>& perms) {
  std::vector<Elem> inv(n);
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < n; ++i) inv[p[i]] = static_cast<Elem>(i);
    if (compare_permuted(ar, sq, n, p, inv) < 0) return false;
  }
  return true;
}

struct Cell {
  Elem x, y;
};

/// Shared, read-only description of one size.
struct Level {
  std::size_t n = 0;
  bool zero_pinned = false;
  std::vector<Cell> free;
  std::vector<Elem> ar0, sq0;
  std::vector<std::vector<Elem>> perms;
};

Level make_level(std::size_t n, bool pin_zero, bool iso) {
  Level l;
  l.n = n;
  l.zero_pinned = pin_zero && n > 1;
  const Elem one = 0, zero = static_cast<Elem>(n - 1);
  l.ar0.assign(n * n, kUnset);
  l.sq0.assign(n * n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    Elem x = static_cast<Elem>(i);
    for (auto* t : {&l.ar0, &l.sq0}) {
      (*t)[x * n + x] = one;
      (*t)[x * n + one] = one;
      (*t)[one * n + x] = x;
      if (l.zero_pinned) (*t)[zero * n + x] = one;
    }
  }
  for (std::size_t i = 0; i < n * n; ++i)
    if (l.ar0[i] == kUnset) l.free.push_back({static_cast<Elem>(i / n), static_cast<Elem>(i % n)});
  if (iso) l.perms = perms_fixing(n, one, l.zero_pinned ? std::optional<Elem>(zero) : std::nullopt);
  return l;
}

bool be4_ok(const std::vector<Elem>& ar, const std::vector<Elem>& sq, std::size_t i) {
  return (ar[i] == 0) == (sq[i] == 0);
}

/// psBE5 over every triple whose cells are all known.
bool be5_ok(const std::vector<Elem>& ar, const std::vector<Elem>& sq, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Elem a = sq[y * n + z], b = ar[x * n + z];
        if (a == kUnset || b == kUnset) continue;
        Elem l = ar[x * n + a], r = sq[y * n + b];
        if (l != kUnset && r != kUnset && l != r) return false;
      }
  return true;
}

struct Found {
  Counterexample cx;
};

class Searcher {
 public:
  Searcher(const SearchSpec& spec, const Law* law, const Level& level, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& over_budget)
      : spec_(spec), law_(law), level_(level), nodes_(nodes), over_budget_(over_budget) {}

  /// Explores the subtree with the first free cell set to (v, w).
  std::optional<Found> run_branch(std::optional<std::pair<Elem, Elem>> first, const std::atomic<std::size_t>& best,
                                  std::size_t branch) {
    ar_ = level_.ar0;
    sq_ = level_.sq0;
    best_ = &best;
    branch_ = branch;
    found_.reset();
    if (first) {
      const Cell c = level_.free[0];
      const std::size_t i = c.x * level_.n + c.y;
      ar_[i] = first->first;
      sq_[i] = first->second;
      if (!count_node()) return std::nullopt;
      if (spec_.prune && (!be4_ok(ar_, sq_, i) || !be5_ok(ar_, sq_, level_.n))) return std::nullopt;
      dfs(1);
    } else {
      dfs(0);
    }
    return std::move(found_);
  }

  SizeStats stats;

 private:
  bool count_node() {
    std::uint64_t k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (spec_.budget && k > spec_.budget) {
      over_budget_ = true;
      return false;
    }
    return true;
  }

  bool stop() const { return found_ || over_budget_ || best_->load() < branch_; }

  void dfs(std::size_t k) {
    if (stop()) return;
    if (k == level_.free.size()) {
      leaf();
      return;
    }
    const std::size_t n = level_.n;
    const Cell c = level_.free[k];
    const std::size_t i = c.x * n + c.y;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        ar_[i] = static_cast<Elem>(v);
        sq_[i] = static_cast<Elem>(w);
        if (!count_node()) break;
        if (spec_.prune && (!be4_ok(ar_, sq_, i) || !be5_ok(ar_, sq_, n))) continue;
        dfs(k + 1);
        if (stop()) break;
      }
      if (stop()) break;
    }
    ar_[i] = kUnset;
    sq_[i] = kUnset;
  }

  void leaf() {
    const std::size_t n = level_.n;
    ++stats.candidates;
    if (!spec_.prune) {
      for (std::size_t i = 0; i < n * n; ++i)
        if (!be4_ok(ar_, sq_, i)) return;
      if (!be5_ok(ar_, sq_, n)) return;
    }
    ++stats.pseudo_be;
    if (spec_.iso_rejection && !canonical_tables(ar_, sq_, n, level_.perms)) return;
    ++stats.canonical;

    Table at(n), st(n);
    for (std::size_t i = 0; i < n * n; ++i) {
      at.at(static_cast<Elem>(i / n), static_cast<Elem>(i % n)) = ar_[i];
      st.at(static_cast<Elem>(i / n), static_cast<Elem>(i % n)) = sq_[i];
    }
    std::optional<Elem> zero;
    if (level_.zero_pinned) zero = static_cast<Elem>(n - 1);
    FiniteAlgebra a("search" + std::to_string(n), element_names(n, level_.zero_pinned), 0, zero, std::move(at),
                    std::move(st));
    Model m = classify(a);
    for (Flag f : spec_.require)
      if (!m.holds(f)) return;
    for (Flag f : spec_.forbid)
      if (m.holds(f)) return;
    ++stats.in_class;
    if (!law_) return;
    if (auto v = try_law(m)) found_ = Found{std::move(*v)};
  }

  std::optional<Counterexample> try_law(const Model& m) {
    SuiteCache cache(m);
    if (law_->scope == Scope::algebra) {
      Verdict v = evaluate_law(*law_, m, nullptr, nullptr, cache);
      if (v.fails()) return Counterexample{m.algebra(), std::nullopt, std::nullopt, std::move(v)};
      return std::nullopt;
    }
    for (Flag f : law_->hypothesis)
      if (!m.holds(f)) return std::nullopt;
    std::vector<MonadicPair> mop;
    try {
      mop = enumerate_mop(m, {.mode = law_->pair_mode});
    } catch (const ModeUnavailable&) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < mop.size(); ++i) {
      if (law_->scope == Scope::pair) {
        ++stats.pairs_checked;
        Verdict v = evaluate_law(*law_, m, &mop[i], nullptr, cache);
        if (v.fails()) return Counterexample{m.algebra(), mop[i], std::nullopt, std::move(v)};
        continue;
      }
      for (std::size_t j = 0; j < mop.size(); ++j) {
        ++stats.pairs_checked;
        Verdict v = evaluate_law(*law_, m, &mop[i], &mop[j], cache);
        if (v.fails()) return Counterexample{m.algebra(), mop[i], mop[j], std::move(v)};
      }
    }
    return std::nullopt;
  }

  const SearchSpec& spec_;
  const Law* law_;
  const Level& level_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& over_budget_;
  const std::atomic<std::size_t>* best_ = nullptr;
  std::size_t branch_ = 0;
  std::vector<Elem> ar_, sq_;
  std::optional<Found> found_;
};

bool reverify(const Law& law, const Counterexample& cx) {
  AlgebraDocument doc = parse_algebra(cx.document());
  Model m = classify(doc.algebra);
  SuiteCache cache(m);
  const UnaryMap *e1 = doc.find_map("cx_exists"), *f1 = doc.find_map("cx_forall");
  const UnaryMap *e2 = doc.find_map("cx2_exists"), *f2 = doc.find_map("cx2_forall");
  std::optional<MonadicPair> p, q;
  if (e1 && f1) p = MonadicPair{*e1, *f1};
  if (e2 && f2) q = MonadicPair{*e2, *f2};
  if (law.scope != Scope::algebra && !p) return false;
  if (law.scope == Scope::pair_pair && !q) return false;
  Verdict v = evaluate_law(law, m, p ? &*p : nullptr, q ? &*q : nullptr, cache);
  return v.fails() && v.witness == cx.verdict.witness && v.note == cx.verdict.note;
}

}  // namespace

std::string_view search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

std::uint64_t SearchStats::candidates() const {
  std::uint64_t t = 0;
  for (const auto& s : sizes) t += s.candidates;
  return t;
}

std::uint64_t SearchStats::in_class() const {
  std::uint64_t t = 0;
  for (const auto& s : sizes) t += s.in_class;
  return t;
}

std::string Counterexample::document() const {
  std::vector<NamedMap> maps;
  if (pair) {
    maps.push_back({"cx_exists", pair->exists});
    maps.push_back({"cx_forall", pair->forall});
  }
  if (second) {
    maps.push_back({"cx2_exists", second->exists});
    maps.push_back({"cx2_forall", second->forall});
  }
  return serialize(algebra, maps);
}

std::uint64_t forced_candidate_count(std::size_t n) {
  if (n < 2) return 1;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < 2 * (n - 1) * (n - 2); ++i) r *= n;
  return r;
}

bool is_canonical(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  auto perms = perms_fixing(n, a.one(), a.zero());
  std::vector<Elem> ar(a.arrow_table().cells().begin(), a.arrow_table().cells().end());
  std::vector<Elem> sq(a.squig_table().cells().begin(), a.squig_table().cells().end());
  return canonical_tables(ar, sq, n, perms);
}

SearchResult search_counterexample(const SearchSpec& spec) {
  if (spec.max_size > kMaxSearchSize)
    throw PreconditionUnmet("search size above " + std::to_string(kMaxSearchSize));
  if (!spec.prune && spec.max_size > kMaxUnprunedSize)
    throw PreconditionUnmet("unpruned search size above " + std::to_string(kMaxUnprunedSize));
  const Law* law = nullptr;
  if (!spec.law.empty()) {
    law = find_law(spec.law);
    if (!law) throw PreconditionUnmet("unknown law '" + spec.law + "'");
  }
  const bool pin_zero = std::find(spec.require.begin(), spec.require.end(), Flag::bounded) != spec.require.end();
  const unsigned threads = std::max(1U, spec.threads);

  SearchResult result;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over_budget{false};

  for (std::size_t n = std::max<std::size_t>(1, spec.min_size); n <= spec.max_size; ++n) {
    const Level level = make_level(n, pin_zero, spec.iso_rejection);
    std::vector<std::optional<std::pair<Elem, Elem>>> branches;
    if (level.free.empty()) {
      branches.emplace_back();
    } else {
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) branches.emplace_back(std::pair{static_cast<Elem>(v), static_cast<Elem>(w)});
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{branches.size()};
    std::vector<SizeStats> branch_stats(branches.size());
    std::vector<std::optional<Found>> branch_found(branches.size());
    std::mutex mu;

    auto worker = [&] {
      Searcher s(spec, law, level, nodes, over_budget);
      while (true) {
        std::size_t b = next.fetch_add(1);
        if (b >= branches.size() || over_budget || b > best.load()) return;
        s.stats = {};
        auto f = s.run_branch(branches[b], best, b);
        std::lock_guard lock(mu);
        branch_stats[b] = s.stats;
        if (f) {
          branch_found[b] = std::move(f);
          std::size_t cur = best.load();
          while (b < cur && !best.compare_exchange_weak(cur, b)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SizeStats total{.size = n};
    const std::size_t last = std::min(best.load(), branches.size() - 1);
    for (std::size_t b = 0; b <= last; ++b) {
      total.candidates += branch_stats[b].candidates;
      total.pseudo_be += branch_stats[b].pseudo_be;
      total.canonical += branch_stats[b].canonical;
      total.in_class += branch_stats[b].in_class;
      total.pairs_checked += branch_stats[b].pairs_checked;
    }
    result.stats.sizes.push_back(total);

    if (best.load() < branches.size()) {
      Counterexample cx = std::move(branch_found[best.load()]->cx);
      cx.reverified = reverify(*law, cx);
      result.counterexample = std::move(cx);
      result.status = SearchStatus::found;
      break;
    }
    if (over_budget) {
      result.status = SearchStatus::budget_exceeded;
      break;
    }
  }
  result.stats.nodes = std::min<std::uint64_t>(nodes.load(), spec.budget ? spec.budget : nodes.load());
  return result;
}

}  // namespace mpbe
