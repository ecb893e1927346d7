#ifndef TWOHOOK_HOOKCORE_HPP_
#define TWOHOOK_HOOKCORE_HPP_

// Core value types shared by every module: exponent vectors, partitions,
// index-pair sets and graphs containing the path, plus the vector algebra
// that relates a pair set to the monomial it selects.
//
// Index conventions: pair endpoints and "index" arguments are 1-based, as in
// the combinatorics; operator[] on the vector types is 0-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace twohook {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries)
      : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}

  static ExponentVector zeros(int n) {
    return ExponentVector(std::vector<int>(static_cast<size_t>(n), 0));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int sum() const;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) {
    return lhs += rhs;
  }
  friend ExponentVector operator-(ExponentVector lhs, const ExponentVector& rhs) {
    return lhs -= rhs;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> entries_;
};

// Weakly decreasing sequence of nonnegative integers, padded with zeros to the
// ambient length n.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts is weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }
  int sum() const;
  // Number of nonzero parts.
  int length() const;
  ExponentVector as_vector() const { return ExponentVector(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct Pair {
  int a = 0;
  int b = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Set of pairs (a,b) with 1 <= a < b, kept sorted lexicographically and
// duplicate-free so that equality and ordering are canonical.
class PairSet {
 public:
  PairSet() = default;
  // Sorts and deduplicates; throws DomainError on a pair with a >= b or a < 1.
  explicit PairSet(std::vector<Pair> pairs);
  PairSet(std::initializer_list<Pair> pairs)
      : PairSet(std::vector<Pair>(pairs)) {}

  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  bool contains(Pair p) const;
  // Returns false if already present.
  bool insert(Pair p);
  // Returns false if absent.
  bool erase(Pair p);
  void insert_all(const PairSet& other);

  const std::vector<Pair>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // Largest endpoint, 0 when empty.
  int max_index() const;
  bool intersects(const PairSet& other) const;

  friend bool operator==(const PairSet&, const PairSet&) = default;
  friend auto operator<=>(const PairSet&, const PairSet&) = default;

 private:
  std::vector<Pair> pairs_;
};

// A graph on [n] whose edge set contains the path 1-2-...-n. Only the
// non-path edges are stored.
class GraphSpec {
 public:
  GraphSpec() = default;

  int n() const { return n_; }
  const PairSet& extra_edges() const { return extra_; }
  bool has_edge(Pair p) const;
  // Path edges together with the extra edges.
  PairSet edges() const;
  // E_n minus the edge set.
  PairSet non_edges() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  friend GraphSpec make_graph(int n, const std::vector<Pair>& extra);
  int n_ = 0;
  PairSet extra_;
};

// (n-1, n-2, ..., 0). Throws DomainError for n < 1.
ExponentVector staircase(int n);

// (2, 1, ..., 1, 0) of length n. Throws DomainError for n < 3.
Partition two_hook(int n);

// two_hook(n) + staircase(n), the exponent of the leading monomial.
ExponentVector two_hook_base(int n);

// All pairs (i,j), 1 <= i < j <= n.
PairSet all_pairs(int n);

// -1 at e.a, +1 at e.b.
ExponentVector pair_vector(Pair e, int n);
ExponentVector pairset_vector(const PairSet& pairs, int n);

// Entry i counts the pairs of `pairs` that start at i.
ExponentVector o_vector(const PairSet& pairs, int n);

struct SortedShape {
  Partition partition;
  int sign = 1;  // parity of the permutation sorting t decreasingly
  friend bool operator==(const SortedShape&, const SortedShape&) = default;
};

// Sorts t strictly decreasingly and subtracts the staircase. Throws
// RepeatedExponent when t has a repeated entry and DomainError on a negative
// entry.
SortedShape l_of(const ExponentVector& t);

// lambda + staircase(n) + v(pairs) == t.
bool justifies(const PairSet& pairs, const ExponentVector& t,
               const Partition& lambda, int n);

// t is a permutation of [n] with t_1 = n and t_n = 1.
bool is_two_hook_permutation(const ExponentVector& t);

// Validates and deduplicates the extra edges. Listing a path edge, a pair with
// a >= b, or an endpoint outside [n] throws DomainError.
GraphSpec make_graph(int n, const std::vector<Pair>& extra = {});
GraphSpec path_graph(int n);
GraphSpec complete_graph(int n);
// Each non-path pair is kept independently with probability 1/2.
GraphSpec random_supergraph(int n, std::mt19937_64& rng);

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, Pair p);
std::ostream& operator<<(std::ostream& os, const PairSet& s);

std::string to_string(const ExponentVector& v);
std::string to_string(const Partition& p);
std::string to_string(const PairSet& s);

}  // namespace twohook

#endif  // TWOHOOK_HOOKCORE_HPP_
