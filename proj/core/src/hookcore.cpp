#include "twohook/hookcore.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "twohook/errors.hpp"

namespace twohook {

namespace {

void check_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DomainError("exponent vectors of different lengths " +
                      std::to_string(a.size()) + " and " +
                      std::to_string(b.size()));
  }
}

void check_pair_in_range(Pair e, int n) {
  if (e.a < 1 || e.a >= e.b || e.b > n) {
    std::ostringstream msg;
    msg << "pair " << e << " is not in E_" << n;
    throw DomainError(msg.str());
  }
}

}  // namespace

int ExponentVector::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  check_same_size(*this, other);
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  check_same_size(*this, other);
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition with a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::length() const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

PairSet::PairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  for (Pair p : pairs_) {
    if (p.a < 1 || p.a >= p.b) {
      std::ostringstream msg;
      msg << "invalid pair " << p << ": need 1 <= a < b";
      throw DomainError(msg.str());
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool PairSet::contains(Pair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool PairSet::insert(Pair p) {
  if (p.a < 1 || p.a >= p.b) {
    std::ostringstream msg;
    msg << "invalid pair " << p << ": need 1 <= a < b";
    throw DomainError(msg.str());
  }
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it != pairs_.end() && *it == p) return false;
  pairs_.insert(it, p);
  return true;
}

bool PairSet::erase(Pair p) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return false;
  pairs_.erase(it);
  return true;
}

void PairSet::insert_all(const PairSet& other) {
  std::vector<Pair> merged;
  merged.reserve(pairs_.size() + other.pairs_.size());
  std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(),
                 other.pairs_.end(), std::back_inserter(merged));
  pairs_ = std::move(merged);
}

int PairSet::max_index() const {
  int m = 0;
  for (Pair p : pairs_) m = std::max(m, p.b);
  return m;
}

bool PairSet::intersects(const PairSet& other) const {
  auto i = pairs_.begin();
  auto j = other.pairs_.begin();
  while (i != pairs_.end() && j != other.pairs_.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool GraphSpec::has_edge(Pair p) const {
  return (p.b == p.a + 1 && p.a >= 1 && p.b <= n_) || extra_.contains(p);
}

PairSet GraphSpec::edges() const {
  PairSet out = extra_;
  for (int i = 1; i < n_; ++i) out.insert({i, i + 1});
  return out;
}

PairSet GraphSpec::non_edges() const {
  std::vector<Pair> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = a + 2; b <= n_; ++b) {
      if (!extra_.contains({a, b})) out.push_back({a, b});
    }
  }
  return PairSet(std::move(out));
}

ExponentVector staircase(int n) {
  if (n < 1) throw DomainError("staircase needs n >= 1");
  std::vector<int> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n - 1 - i;
  return ExponentVector(std::move(out));
}

Partition two_hook(int n) {
  if (n < 3) throw DomainError("two_hook needs n >= 3");
  std::vector<int> parts(static_cast<size_t>(n), 1);
  parts.front() = 2;
  parts.back() = 0;
  return Partition(std::move(parts));
}

ExponentVector two_hook_base(int n) {
  return two_hook(n).as_vector() + staircase(n);
}

PairSet all_pairs(int n) {
  std::vector<Pair> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  }
  return PairSet(std::move(out));
}

ExponentVector pair_vector(Pair e, int n) {
  check_pair_in_range(e, n);
  ExponentVector w = ExponentVector::zeros(n);
  w[e.a - 1] = -1;
  w[e.b - 1] = 1;
  return w;
}

ExponentVector pairset_vector(const PairSet& pairs, int n) {
  ExponentVector w = ExponentVector::zeros(n);
  for (Pair e : pairs) {
    check_pair_in_range(e, n);
    --w[e.a - 1];
    ++w[e.b - 1];
  }
  return w;
}

ExponentVector o_vector(const PairSet& pairs, int n) {
  ExponentVector o = ExponentVector::zeros(n);
  for (Pair e : pairs) {
    check_pair_in_range(e, n);
    ++o[e.a - 1];
  }
  return o;
}

SortedShape l_of(const ExponentVector& t) {
  const int n = t.size();
  std::vector<int> sorted = t.entries();
  for (int x : sorted) {
    if (x < 0) throw DomainError("l_of needs nonnegative entries, got " + to_string(t));
  }
  // Inversion count of the decreasing sort gives the parity.
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (t[i] == t[j]) throw RepeatedExponent("repeated exponent in " + to_string(t));
      if (t[i] < t[j]) ++inversions;
    }
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] -= n - 1 - i;
  return {Partition(std::move(sorted)), inversions % 2 == 0 ? 1 : -1};
}

bool justifies(const PairSet& pairs, const ExponentVector& t,
               const Partition& lambda, int n) {
  if (t.size() != n || lambda.size() != n) {
    throw DomainError("justifies: length mismatch with n=" + std::to_string(n));
  }
  return lambda.as_vector() + staircase(n) + pairset_vector(pairs, n) == t;
}

bool is_two_hook_permutation(const ExponentVector& t) {
  const int n = t.size();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : t) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return t[0] == n && t[n - 1] == 1;
}

GraphSpec make_graph(int n, const std::vector<Pair>& extra) {
  if (n < 1) throw DomainError("graph needs n >= 1");
  for (Pair e : extra) {
    check_pair_in_range(e, n);
    if (e.b == e.a + 1) {
      std::ostringstream msg;
      msg << "edge " << e << " is a path edge; path edges are implicit";
      throw DomainError(msg.str());
    }
  }
  GraphSpec g;
  g.n_ = n;
  g.extra_ = PairSet(extra);
  return g;
}

GraphSpec path_graph(int n) { return make_graph(n); }

GraphSpec complete_graph(int n) {
  std::vector<Pair> extra;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 2; b <= n; ++b) extra.push_back({a, b});
  }
  return make_graph(n, extra);
}

GraphSpec random_supergraph(int n, std::mt19937_64& rng) {
  std::vector<Pair> extra;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 2; b <= n; ++b) {
      if (rng() & 1u) extra.push_back({a, b});
    }
  }
  return make_graph(n, extra);
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (int i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, Pair p) {
  return os << '(' << p.a << ',' << p.b << ')';
}

std::ostream& operator<<(std::ostream& os, const PairSet& s) {
  os << '{';
  bool first = true;
  for (Pair p : s) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  return os << '}';
}

std::string to_string(const ExponentVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string to_string(const PairSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace twohook
