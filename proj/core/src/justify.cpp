#include "twohook/justify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "twohook/errors.hpp"

namespace twohook {

PairSet break_arc(const PairSet& pairs, Pair arc, int b) {
  auto fail = [&](const char* why) {
    std::ostringstream msg;
    msg << "cannot break " << arc << " over " << b << " in " << pairs << ": "
        << why;
    throw ArcBreakError(msg.str());
  };
  if (!pairs.contains(arc)) fail("arc not present");
  if (!(arc.a < b && b < arc.b)) fail("middle index not strictly inside arc");
  if (pairs.contains({arc.a, b})) fail("left half already present");
  if (pairs.contains({b, arc.b})) fail("right half already present");
  PairSet out = pairs;
  out.erase(arc);
  out.insert({arc.a, b});
  out.insert({b, arc.b});
  return out;
}

PairSetFamily closure_justifying(const ConstructionResult& result) {
  std::set<PairSet> seen{result.solution};
  std::deque<PairSet> frontier{result.solution};
  while (!frontier.empty()) {
    const PairSet current = std::move(frontier.front());
    frontier.pop_front();
    for (Pair arc : current) {
      for (int b : result.marks) {
        if (b <= arc.a || b >= arc.b) continue;
        if (current.contains({arc.a, b}) || current.contains({b, arc.b})) continue;
        PairSet next = break_arc(current, arc, b);
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return PairSetFamily(seen.begin(), seen.end());
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const ExponentVector& target, const PairSet& pool)
      : n_(target.size()), pairs_(pool.pairs()), need_(target) {
    const size_t m = pairs_.size();
    const size_t n = static_cast<size_t>(n_);
    ends_.assign((m + 1) * n, 0);
    starts_.assign((m + 1) * n, 0);
    for (size_t r = m; r-- > 0;) {
      for (size_t i = 0; i < n; ++i) {
        ends_[r * n + i] = ends_[(r + 1) * n + i];
        starts_[r * n + i] = starts_[(r + 1) * n + i];
      }
      ++ends_[r * n + static_cast<size_t>(pairs_[r].b - 1)];
      ++starts_[r * n + static_cast<size_t>(pairs_[r].a - 1)];
    }
    current_ = ExponentVector::zeros(n_);
  }

  PairSetFamily run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Every entry can still reach its target with pairs r, r+1, ...
  bool reachable(size_t r) const {
    const size_t n = static_cast<size_t>(n_);
    for (size_t i = 0; i < n; ++i) {
      const int gap = need_[static_cast<int>(i)] - current_[static_cast<int>(i)];
      if (gap > ends_[r * n + i] || -gap > starts_[r * n + i]) return false;
    }
    return true;
  }

  void search(size_t r) {
    if (!reachable(r)) return;
    if (r == pairs_.size()) {
      found_.push_back(PairSet(chosen_));
      return;
    }
    const Pair e = pairs_[r];
    search(r + 1);
    --current_[e.a - 1];
    ++current_[e.b - 1];
    chosen_.push_back(e);
    search(r + 1);
    chosen_.pop_back();
    ++current_[e.a - 1];
    --current_[e.b - 1];
  }

  int n_;
  std::vector<Pair> pairs_;
  ExponentVector need_;
  ExponentVector current_;
  std::vector<int> ends_;    // [r][i]: pairs at positions >= r ending at i
  std::vector<int> starts_;  // [r][i]: pairs at positions >= r starting at i
  std::vector<Pair> chosen_;
  PairSetFamily found_;
};

}  // namespace

PairSetFamily justifying_subsets(const ExponentVector& t, const PairSet& pool,
                                 int max_n) {
  const int n = t.size();
  if (n > max_n) {
    throw ResourceBoundError("exhaustive justification search limited to n <= " +
                             std::to_string(max_n) + ", got n=" +
                             std::to_string(n));
  }
  if (n < 3) throw DomainError("justification search needs n >= 3");
  if (pool.max_index() > n) throw DomainError("pair pool exceeds [n]");
  return SubsetSearch(t - two_hook_base(n), pool).run();
}

PairSetFamily brute_force_justifying(const ExponentVector& t, int n,
                                     int max_n) {
  if (t.size() != n) {
    throw DomainError("t has length " + std::to_string(t.size()) +
                      ", expected " + std::to_string(n));
  }
  if (n > max_n) {
    throw ResourceBoundError("exhaustive justification search limited to n <= " +
                             std::to_string(max_n) + ", got n=" +
                             std::to_string(n));
  }
  return justifying_subsets(t, all_pairs(n), max_n);
}

PairSetFamily filter_by_graph(const PairSetFamily& sets, const GraphSpec& g) {
  const PairSet edges = g.edges();
  PairSetFamily out;
  for (const PairSet& s : sets) {
    if (!s.intersects(edges)) out.push_back(s);
  }
  return out;
}

JustifyComparison compare_justifying(const ConstructionResult& result,
                                     const GraphSpec& g) {
  JustifyComparison c;
  c.closure = closure_justifying(result);
  c.brute = brute_force_justifying(result.t, result.t.size());
  std::set_difference(c.closure.begin(), c.closure.end(), c.brute.begin(),
                      c.brute.end(), std::back_inserter(c.closure_only));
  std::set_difference(c.brute.begin(), c.brute.end(), c.closure.begin(),
                      c.closure.end(), std::back_inserter(c.brute_only));
  c.agree_raw = c.closure == c.brute;
  c.agree_after_filter = filter_by_graph(c.closure, g) == filter_by_graph(c.brute, g);
  return c;
}

}  // namespace twohook
