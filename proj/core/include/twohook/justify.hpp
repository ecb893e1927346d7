#ifndef TWOHOOK_JUSTIFY_HPP_
#define TWOHOOK_JUSTIFY_HPP_

// Enumeration of the justifying pair sets of a 2-hook permutation t: the
// arc-break closure of the placement solution, and an exhaustive search over
// subsets of E_n used as ground truth.
//
// Collections of pair sets are returned sorted (each PairSet is itself
// canonical), so two methods can be compared with ==.

#include <vector>

#include "twohook/construction.hpp"
#include "twohook/hookcore.hpp"

namespace twohook {

using PairSetFamily = std::vector<PairSet>;

inline constexpr int kDefaultBruteForceBound = 7;

// Replaces arc (a,c) by (a,b),(b,c). Requires arc in pairs, a < b < c and
// neither new pair present; throws ArcBreakError naming the failed condition.
PairSet break_arc(const PairSet& pairs, Pair arc, int b);

// Closure of result.solution under arc breaks over marked indices.
PairSetFamily closure_justifying(const ConstructionResult& result);

// Every E in E_n with two_hook + staircase + v(E) == t. Throws
// ResourceBoundError when n > max_n.
PairSetFamily brute_force_justifying(const ExponentVector& t, int n,
                                     int max_n = kDefaultBruteForceBound);

// Same search restricted to subsets of `pool`. Equal to filtering the full
// search to members contained in pool.
PairSetFamily justifying_subsets(const ExponentVector& t, const PairSet& pool,
                                 int max_n = kDefaultBruteForceBound);

// Members disjoint from the edge set of g.
PairSetFamily filter_by_graph(const PairSetFamily& sets, const GraphSpec& g);

// Side-by-side output of both enumerations for one permutation.
struct JustifyComparison {
  PairSetFamily closure;
  PairSetFamily brute;
  PairSetFamily closure_only;  // soundness violations; expected empty
  PairSetFamily brute_only;    // sets the closure does not reach
  bool agree_raw = false;
  bool agree_after_filter = false;
};

JustifyComparison compare_justifying(const ConstructionResult& result,
                                     const GraphSpec& g);

}  // namespace twohook

#endif  // TWOHOOK_JUSTIFY_HPP_
