#ifndef TWOHOOK_CONSTRUCTION_HPP_
#define TWOHOOK_CONSTRUCTION_HPP_

// The weak and strong 2-hook constructions.
//
// A partial construction p starts as (n,0,...,0) and receives the values
// n-1, n-2, ..., 1 one at a time. Its support I(p) is either one run
// {1,...,x_i-1} (unbroken) or two runs {1,...,x_i-1} u {x_o+1,...,y_i-1}
// (broken). The strong construction carries a pair set E alongside p and
// keeps p <= s = two_hook + staircase + v(E) entrywise; when the last value
// lands, p == s and E justifies p.

#include <functional>
#include <string>
#include <vector>

#include "twohook/errors.hpp"
#include "twohook/hookcore.hpp"

namespace twohook {

struct Boundary {
  int x_in = 0;   // first free index after the run containing 1
  int x_out = 0;  // last free index before the second run; 0 when unbroken
  int y_in = 0;   // first free index after the second run; 0 when unbroken
  bool broken() const { return x_out != 0; }
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

// Throws DomainError when p is not a partial construction.
Boundary boundary_indices(const ExponentVector& p);

// Indices on which the next value may be placed under the weak rules, in
// increasing order. Empty once p is complete.
std::vector<int> weak_legal_placements(const ExponentVector& p);

class ConstructionState {
 public:
  // Throws DomainError for n < 3.
  static ConstructionState initial(int n);

  int n() const { return p_.size(); }
  const ExponentVector& p() const { return p_; }
  const PairSet& pairs() const { return pairs_; }
  // Sorted.
  const std::vector<int>& marks() const { return marks_; }
  // two_hook + staircase + v(pairs()).
  const ExponentVector& s() const { return s_; }

  // Value placed next: n - |I(p)|. Zero once complete.
  int next_value() const { return n() - placed_; }
  bool complete() const { return next_value() == 0; }
  Boundary boundary() const { return boundary_indices(p_); }

 private:
  friend ConstructionState place(const ConstructionState& state, int k);
  ConstructionState() = default;

  ExponentVector p_;
  PairSet pairs_;
  std::vector<int> marks_;
  ExponentVector s_;
  int placed_ = 0;  // |I(p)|
};

// {(i,k) : 1 <= i <= k-2, (s - p)_i != 0}.
PairSet aux_pairs(const ConstructionState& state, int k);

// two_hook_k + staircase_k + v_k(E u aux_pairs(state, k)).
int m_value(const ConstructionState& state, int k);

// Whether a placement on k would mark the index. Requires k to be weak-legal.
bool placement_marks(const ConstructionState& state, int k);

// Places the next value on k. Throws PlacementError if k is not weak-legal and
// StrongLegalityError if the mark/unmark bound fails.
ConstructionState place(const ConstructionState& state, int k);

struct ConstructionResult {
  ExponentVector t;
  PairSet solution;
  std::vector<int> marks;
  friend bool operator==(const ConstructionResult&,
                         const ConstructionResult&) = default;
};

// One placement of a replayed construction.
struct PlacementStep {
  int value = 0;
  int index = 0;
  bool marked = false;
  int bound = 0;  // s_k when marking, M_k when unmarking
  PairSet added;
  ExponentVector p_after;
  PairSet pairs_after;
};

struct ConstructionTrace {
  ExponentVector initial;
  std::vector<PlacementStep> steps;
  ConstructionResult result;
};

// Receives a theorem-violation diagnostic instead of aborting the traversal.
using ViolationHandler = std::function<void(const StrongLegalityError&)>;

// Depth-first traversal over all weak-legal placement sequences, choosing
// indices in increasing order. Each completed run is checked to justify its t
// before being passed to on_result. A StrongLegalityError aborts the
// traversal unless on_violation is set, in which case the branch is skipped.
void for_each_construction(
    int n, const std::function<void(const ConstructionResult&)>& on_result,
    const ViolationHandler& on_violation = nullptr);

std::vector<ConstructionResult> enumerate_constructions(int n);

// Places n-1, ..., 1 at the indices where t holds them. Throws DomainError
// if t is not a 2-hook permutation and PlacementError if the construction
// cannot reach it.
ConstructionResult replay_for(const ExponentVector& t);
ConstructionTrace replay_trace(const ExponentVector& t);

// Line-oriented dump of a trace: one line per state plus per-step details.
std::string format_trace(const ConstructionTrace& trace);

}  // namespace twohook

#endif  // TWOHOOK_CONSTRUCTION_HPP_
