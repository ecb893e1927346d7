#include "twohook/expansion.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "twohook/construction.hpp"
#include "twohook/errors.hpp"
#include "twohook/justify.hpp"
#include "twohook/polynomial.hpp"

namespace twohook {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("int64 overflow in expansion");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("int64 overflow in expansion");
  return out;
}

std::int64_t signed_count(const PairSetFamily& sets) {
  std::int64_t c = 0;
  for (const PairSet& s : sets) c += s.size() % 2 == 0 ? 1 : -1;
  return c;
}

}  // namespace

SchurExpansion::SchurExpansion(int n, TermMap terms) : n_(n) {
  for (const auto& [shape, c] : terms) add(shape, c);
}

std::int64_t SchurExpansion::coefficient(const Partition& shape) const {
  auto it = terms_.find(shape);
  return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& shape, std::int64_t coeff) {
  if (shape.size() != n_) throw DomainError("partition length differs from n");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(shape, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t coefficient(const ExponentVector& t, const GraphSpec& g,
                         JustifyMethod method, int brute_max_n) {
  const int n = t.size();
  if (g.n() != n) throw DomainError("graph and t disagree on n");
  const bool base = t == two_hook_base(n);
  if (!base && !is_two_hook_permutation(t)) {
    throw DomainError(to_string(t) + " is neither a 2-hook permutation nor the base exponent");
  }

  // Searching only E_n - E(g) equals filtering the full search.
  auto by_brute = [&] {
    return signed_count(justifying_subsets(t, g.non_edges(), brute_max_n));
  };
  auto by_closure = [&]() -> std::int64_t {
    if (base) return 1;  // only the empty set justifies the base exponent
    return signed_count(filter_by_graph(closure_justifying(replay_for(t)), g));
  };

  switch (method) {
    case JustifyMethod::kBrute:
      return by_brute();
    case JustifyMethod::kClosure:
      return by_closure();
    case JustifyMethod::kBoth: {
      const std::int64_t b = by_brute();
      const std::int64_t c = by_closure();
      if (b != c) {
        std::ostringstream msg;
        msg << "closure coefficient " << c << " differs from exhaustive " << b
            << " at t=" << t;
        throw VerificationFailure(msg.str());
      }
      return b;
    }
  }
  return 0;
}

SchurExpansion schur_expansion(int n, const GraphSpec& g, JustifyMethod method,
                               int brute_max_n) {
  if (g.n() != n) throw DomainError("graph and expansion disagree on n");
  std::vector<ExponentVector> ts{two_hook_base(n)};
  for_each_construction(n, [&](const ConstructionResult& r) { ts.push_back(r.t); });

  SchurExpansion out(n);
  for (const ExponentVector& t : ts) {
    const SortedShape shape = l_of(t);
    out.add(shape.partition, checked_mul(shape.sign, coefficient(t, g, method, brute_max_n)));
  }
  return out;
}

SchurExpansion direct_expansion_oracle(const GraphSpec& g, int max_factors) {
  const int n = g.n();
  const PairSet factors = g.non_edges();
  if (factors.size() > max_factors) {
    throw ResourceBoundError("polynomial oracle limited to " +
                             std::to_string(max_factors) + " factors, graph has " +
                             std::to_string(factors.size()));
  }
  SparsePolynomial poly = SparsePolynomial::monomial(
      two_hook(n).as_vector() + o_vector(g.edges(), n));
  for (Pair e : factors) poly = poly * SparsePolynomial::difference(e.a, e.b, n);

  SchurExpansion out(n);
  for (const auto& [exponent, coeff] : poly.terms()) {
    SortedShape shape;
    try {
      shape = l_of(exponent);
    } catch (const RepeatedExponent&) {
      continue;  // alternant vanishes
    }
    if (coeff > std::numeric_limits<std::int64_t>::max() ||
        coeff < std::numeric_limits<std::int64_t>::min()) {
      throw Error("oracle coefficient exceeds int64");
    }
    out.add(shape.partition, shape.sign * static_cast<std::int64_t>(coeff));
  }
  return out;
}

namespace {

// Counts fillings that add horizontal strips of sizes content[v], content[v+1],
// ... to `inner` until it reaches `outer`.
class TableauCounter {
 public:
  TableauCounter(const Partition& outer, const Partition& content)
      : outer_(outer.parts()), content_(content.parts()) {}

  std::int64_t count() {
    std::vector<int> inner(outer_.size(), 0);
    return fill_value(0, inner);
  }

 private:
  std::int64_t fill_value(size_t v, std::vector<int>& inner) {
    if (v == content_.size()) return inner == outer_ ? 1 : 0;
    std::vector<int> next = inner;
    return extend_row(v, 0, content_[v], inner, next);
  }

  // Chooses next[row..] so that next/inner is a horizontal strip of size
  // `remaining` inside outer.
  std::int64_t extend_row(size_t v, size_t row, int remaining,
                          const std::vector<int>& inner, std::vector<int>& next) {
    if (row == outer_.size()) {
      if (remaining != 0) return 0;
      std::vector<int> copy = next;
      return fill_value(v + 1, copy);
    }
    int cap = outer_[row];
    if (row > 0) cap = std::min(cap, inner[row - 1]);
    std::int64_t total = 0;
    for (int add = 0; inner[row] + add <= cap && add <= remaining; ++add) {
      next[row] = inner[row] + add;
      total += extend_row(v, row + 1, remaining - add, inner, next);
    }
    next[row] = inner[row];
    return total;
  }

  std::vector<int> outer_;
  std::vector<int> content_;
};

void partitions_rec(int remaining, int max_part, int length,
                    std::vector<int>& parts, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> padded = parts;
    padded.resize(static_cast<size_t>(length), 0);
    out.emplace_back(std::move(padded));
    return;
  }
  if (static_cast<int>(parts.size()) == length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, length, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum()) {
    throw DomainError("kostka: " + to_string(lambda) + " and " + to_string(mu) +
                      " have different totals");
  }
  std::vector<int> shape = lambda.parts();
  const size_t rows = std::max(lambda.parts().size(), mu.parts().size());
  shape.resize(rows, 0);
  return TableauCounter(Partition(shape), mu).count();
}

std::vector<Partition> partitions_of(int total, int length) {
  std::vector<Partition> out;
  std::vector<int> parts;
  partitions_rec(total, total, length, parts, out);
  return out;
}

MonomialExpansion to_monomial_basis(const SchurExpansion& expansion) {
  MonomialExpansion out;
  if (expansion.terms().empty()) return out;
  const int total = expansion.terms().begin()->first.sum();
  for (const Partition& mu : partitions_of(total, expansion.n())) {
    std::int64_t c = 0;
    for (const auto& [lambda, coeff] : expansion.terms()) {
      c = checked_add(c, checked_mul(coeff, kostka(lambda, mu)));
    }
    if (c != 0) out.emplace(mu, c);
  }
  return out;
}

}  // namespace twohook
