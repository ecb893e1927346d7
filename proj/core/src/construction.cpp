#include "twohook/construction.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "twohook/errors.hpp"

namespace twohook {

namespace {

struct Support {
  std::vector<bool> in;  // 1-based membership in I(p)
  int count = 0;
};

// Checks p is a partial construction and returns its support.
Support checked_support(const ExponentVector& p) {
  const int n = p.size();
  if (n < 2) throw DomainError("partial construction needs n >= 2");
  if (p[0] != n) {
    throw DomainError("partial construction must start with n: " + to_string(p));
  }
  Support sup;
  sup.in.assign(static_cast<size_t>(n) + 2, false);
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = p[i];
    if (v == 0) continue;
    if (v < 0 || v > n || seen[static_cast<size_t>(v)]) {
      throw DomainError("bad value in partial construction " + to_string(p));
    }
    seen[static_cast<size_t>(v)] = true;
    sup.in[static_cast<size_t>(i) + 1] = true;
    ++sup.count;
  }
  // Placed values are exactly n, n-1, ..., n-count+1.
  for (int v = n - sup.count + 1; v <= n; ++v) {
    if (!seen[static_cast<size_t>(v)]) {
      throw DomainError("values of " + to_string(p) +
                        " are not a prefix of n, n-1, ...");
    }
  }
  if (p[n - 1] != 0 && sup.count != n) {
    throw DomainError("index n filled before the rest in " + to_string(p));
  }
  return sup;
}

void fail_placement(const ConstructionState& state, int k, const char* why) {
  std::ostringstream msg;
  msg << "cannot place " << state.next_value() << " on index " << k << " of "
      << state.p() << ": " << why;
  throw PlacementError(msg.str());
}

}  // namespace

Boundary boundary_indices(const ExponentVector& p) {
  const Support sup = checked_support(p);
  const int n = p.size();
  auto in = [&](int i) { return i >= 1 && i <= n && sup.in[static_cast<size_t>(i)]; };

  Boundary b;
  int i = 1;
  while (in(i)) ++i;
  b.x_in = i;
  while (i <= n && !in(i)) ++i;
  if (i > n) return b;  // unbroken
  b.x_out = i - 1;
  while (in(i)) ++i;
  b.y_in = i;
  for (; i <= n; ++i) {
    if (in(i)) throw DomainError("support of " + to_string(p) + " has three runs");
  }
  return b;
}

std::vector<int> weak_legal_placements(const ExponentVector& p) {
  const Support sup = checked_support(p);
  const int n = p.size();
  if (sup.count == n) return {};
  auto in = [&](int i) { return i >= 1 && i <= n && sup.in[static_cast<size_t>(i)]; };

  if (sup.count == n - 1 && !in(n)) return {n};  // I(p) = [n-1]
  const bool broken = boundary_indices(p).broken();
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i) {
    if (in(i)) continue;
    if (!broken || in(i - 1) || in(i + 1)) out.push_back(i);
  }
  return out;
}

ConstructionState ConstructionState::initial(int n) {
  if (n < 3) throw DomainError("construction needs n >= 3");
  ConstructionState s;
  s.p_ = ExponentVector::zeros(n);
  s.p_[0] = n;
  s.s_ = two_hook_base(n);
  s.placed_ = 1;
  return s;
}

PairSet aux_pairs(const ConstructionState& state, int k) {
  if (k < 1 || k > state.n()) {
    throw DomainError("index " + std::to_string(k) + " outside [n]");
  }
  std::vector<Pair> out;
  for (int i = 1; i <= k - 2; ++i) {
    if (state.s()[i - 1] != state.p()[i - 1]) out.push_back({i, k});
  }
  return PairSet(std::move(out));
}

int m_value(const ConstructionState& state, int k) {
  int value = state.s()[k - 1];
  for (Pair e : aux_pairs(state, k)) {
    if (!state.pairs().contains(e)) ++value;
  }
  return value;
}

bool placement_marks(const ConstructionState& state, int k) {
  if (state.next_value() == 1) return false;
  const Boundary b = state.boundary();
  if (!b.broken()) {
    if (k == b.x_in) return true;
    if (k > b.x_in && k < state.n()) return false;
  } else {
    if (k == b.x_in) return true;  // covers x_in == x_out as well
    if (k == b.x_out || k == b.y_in) return false;
  }
  fail_placement(state, k, "index is not at a placement boundary");
  return false;
}

ConstructionState place(const ConstructionState& state, int k) {
  if (state.complete()) fail_placement(state, k, "construction is complete");
  const std::vector<int> legal = weak_legal_placements(state.p());
  if (!std::binary_search(legal.begin(), legal.end(), k)) {
    fail_placement(state, k, "not legal under the weak rules");
  }
  const int h = state.next_value();
  ConstructionState next = state;
  if (placement_marks(state, k)) {
    if (h > state.s()[k - 1]) {
      std::ostringstream msg;
      msg << "marking placement of " << h << " on " << k << " of " << state.p()
          << " with E=" << state.pairs() << " exceeds s_k=" << state.s()[k - 1];
      throw StrongLegalityError(msg.str());
    }
    next.marks_.insert(
        std::lower_bound(next.marks_.begin(), next.marks_.end(), k), k);
  } else {
    const int bound = m_value(state, k);
    if (h > bound) {
      std::ostringstream msg;
      msg << "unmarking placement of " << h << " on " << k << " of "
          << state.p() << " with E=" << state.pairs() << " exceeds M_k=" << bound;
      throw StrongLegalityError(msg.str());
    }
    const PairSet added = aux_pairs(state, k);
    next.pairs_.insert_all(added);
    next.s_ = two_hook_base(state.n()) + pairset_vector(next.pairs_, state.n());
  }
  next.p_[k - 1] = h;
  ++next.placed_;
  return next;
}

namespace {

ConstructionResult finish(const ConstructionState& state) {
  ConstructionResult r{state.p(), state.pairs(), state.marks()};
  if (!is_two_hook_permutation(r.t) ||
      !justifies(r.solution, r.t, two_hook(state.n()), state.n())) {
    std::ostringstream msg;
    msg << "construction ended on " << r.t << " with E=" << r.solution
        << " which does not justify it";
    throw StrongLegalityError(msg.str());
  }
  return r;
}

void traverse(const ConstructionState& state,
              const std::function<void(const ConstructionResult&)>& on_result,
              const ViolationHandler& on_violation) {
  if (state.complete()) {
    try {
      on_result(finish(state));
    } catch (const StrongLegalityError& e) {
      if (!on_violation) throw;
      on_violation(e);
    }
    return;
  }
  for (int k : weak_legal_placements(state.p())) {
    std::optional<ConstructionState> next;
    try {
      next = place(state, k);
    } catch (const StrongLegalityError& e) {
      if (!on_violation) throw;
      on_violation(e);
      continue;
    }
    traverse(*next, on_result, on_violation);
  }
}

}  // namespace

void for_each_construction(
    int n, const std::function<void(const ConstructionResult&)>& on_result,
    const ViolationHandler& on_violation) {
  traverse(ConstructionState::initial(n), on_result, on_violation);
}

std::vector<ConstructionResult> enumerate_constructions(int n) {
  std::vector<ConstructionResult> out;
  for_each_construction(
      n, [&](const ConstructionResult& r) { out.push_back(r); });
  return out;
}

ConstructionTrace replay_trace(const ExponentVector& t) {
  if (!is_two_hook_permutation(t)) {
    throw DomainError(to_string(t) + " is not a 2-hook permutation");
  }
  const int n = t.size();
  std::vector<int> position(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) position[static_cast<size_t>(t[i])] = i + 1;

  ConstructionTrace trace;
  ConstructionState state = ConstructionState::initial(n);
  trace.initial = state.p();
  for (int value = n - 1; value >= 1; --value) {
    const int k = position[static_cast<size_t>(value)];
    PlacementStep step;
    step.value = value;
    step.index = k;
    const std::vector<int> legal = weak_legal_placements(state.p());
    if (!std::binary_search(legal.begin(), legal.end(), k)) {
      fail_placement(state, k, "not legal under the weak rules");
    }
    step.marked = placement_marks(state, k);
    step.bound = step.marked ? state.s()[k - 1] : m_value(state, k);
    if (!step.marked) step.added = aux_pairs(state, k);
    state = place(state, k);
    step.p_after = state.p();
    step.pairs_after = state.pairs();
    trace.steps.push_back(std::move(step));
  }
  trace.result = finish(state);
  return trace;
}

ConstructionResult replay_for(const ExponentVector& t) {
  return replay_trace(t).result;
}

std::string format_trace(const ConstructionTrace& trace) {
  std::ostringstream os;
  os << "n=" << trace.initial.size() << " t=" << trace.result.t << '\n';
  os << "p(0)=" << trace.initial << " E={}\n";
  int i = 0;
  for (const PlacementStep& step : trace.steps) {
    os << "place " << step.value << " on " << step.index << ' '
       << (step.marked ? "mark s=" : "unmark M=") << step.bound;
    if (!step.marked) os << " add " << step.added;
    os << '\n';
    os << "p(" << ++i << ")=" << step.p_after << " E=" << step.pairs_after
       << '\n';
  }
  os << "solution=" << trace.result.solution << '\n';
  os << "marks=";
  for (size_t j = 0; j < trace.result.marks.size(); ++j) {
    os << (j ? "," : "") << trace.result.marks[j];
  }
  os << '\n';
  return os.str();
}

}  // namespace twohook
