#include "cli.hpp"

#include <charconv>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twohook/construction.hpp"
#include "twohook/counting.hpp"
#include "twohook/evalcheck.hpp"
#include "twohook/expansion.hpp"
#include "twohook/justify.hpp"

namespace twohook::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kMaxEnumerateN = 12;
constexpr int kMaxOracleN = 7;
constexpr int kMaxPointEvalN = 6;
constexpr int kHardMaxN = 16;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Json to_json(const ExponentVector& v) { return Json(v.entries()); }
Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const PairSet& s) {
  Json out = Json::array();
  for (Pair p : s) out.push_back({p.a, p.b});
  return out;
}

Json to_json(const PairSetFamily& family) {
  Json out = Json::array();
  for (const PairSet& s : family) out.push_back(to_json(s));
  return out;
}

std::string spaced(const std::vector<int>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string graph_label(const GraphSpec& g) {
  return g.extra_edges().empty() ? "path" : "path+" + to_string(g.extra_edges());
}

void check_n(int n, int limit, bool allow_large, const char* what) {
  if (n < 3) throw UsageError(std::string(what) + " needs --n >= 3");
  if (n > kHardMaxN) {
    throw UsageError(std::string(what) + " supports n <= " + std::to_string(kHardMaxN));
  }
  if (n > limit && !allow_large) {
    throw UsageError(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                     "; pass --allow-large to override");
  }
}

// Terms sorted by partition, lexicographically descending.
Json terms_json(const std::map<Partition, std::int64_t>& terms) {
  Json out = Json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out.push_back({{"partition", to_json(it->first)}, {"coeff", it->second}});
  }
  return out;
}

void print_terms_text(std::ostream& out,
                      const std::map<Partition, std::int64_t>& terms) {
  size_t width = std::string("partition").size();
  for (const auto& [p, c] : terms) width = std::max(width, spaced(p.parts()).size());
  out << std::left << std::setw(static_cast<int>(width)) << "partition" << "  "
      << std::right << std::setw(8) << "coeff" << '\n';
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out << std::left << std::setw(static_cast<int>(width)) << spaced(it->first.parts())
        << "  " << std::right << std::setw(8) << it->second << '\n';
  }
}

// ---------------------------------------------------------------- expand

struct ExpandOptions {
  int n = 0;
  std::string edges;
  std::string method = "construction";
  std::string justify = "brute";
  std::string basis = "schur";
  std::string format = "json";
  bool include_zeros = false;
  bool allow_large = false;
};

int run_expand(const ExpandOptions& o, std::ostream& out, std::ostream& err) {
  check_n(o.n, kMaxEnumerateN, o.allow_large, "expand");
  const GraphSpec g = parse_graph_spec(o.edges, o.n);
  const bool want_construction = o.method != "oracle";
  const bool want_oracle = o.method != "construction";
  const JustifyMethod justify =
      o.justify == "closure" ? JustifyMethod::kClosure : JustifyMethod::kBrute;
  if ((want_oracle || justify == JustifyMethod::kBrute) && o.n > kMaxOracleN &&
      !o.allow_large) {
    throw UsageError("exhaustive methods are limited to n <= 7; use --justify closure "
                     "or pass --allow-large");
  }
  const int brute_max = std::max(kDefaultBruteForceBound, o.n);

  std::optional<SchurExpansion> built, oracle;
  if (want_construction) built = schur_expansion(o.n, g, justify, brute_max);
  if (want_oracle) oracle = direct_expansion_oracle(g, o.n * (o.n - 1) / 2);
  const SchurExpansion& shown = built ? *built : *oracle;
  const bool agree = !(built && oracle) || *built == *oracle;

  std::map<Partition, std::int64_t> terms;
  if (o.basis == "monomial") {
    terms = to_monomial_basis(shown);
    if (o.include_zeros) {
      for (const Partition& mu : partitions_of(o.n, o.n)) terms.emplace(mu, 0);
    }
  } else {
    terms = shown.terms();
    if (o.include_zeros) {
      terms.emplace(two_hook(o.n), 0);
      terms.emplace(Partition(std::vector<int>(static_cast<size_t>(o.n), 1)), 0);
    }
  }

  if (o.format == "text") {
    out << "n=" << o.n << " graph=" << graph_label(g) << " method=" << o.method
        << " basis=" << o.basis << '\n';
    print_terms_text(out, terms);
    if (built && oracle) out << "construction vs oracle: " << (agree ? "agree" : "DISAGREE") << '\n';
  } else {
    Json j;
    j["n"] = o.n;
    if (!g.extra_edges().empty()) j["graph"] = {{"extra_edges", to_json(g.extra_edges())}};
    if (o.method != "construction") j["method"] = o.method;
    if (o.basis != "schur") j["basis"] = o.basis;
    j["terms"] = terms_json(terms);
    if (built && oracle) j["agree"] = agree;
    out << j.dump() << '\n';
  }
  if (!agree) {
    err << "construction and oracle expansions differ\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ------------------------------------------------------------- enumerate

struct EnumerateOptions {
  int n = 0;
  bool with_solutions = false;
  bool allow_large = false;
  std::string format = "json";
};

int run_enumerate(const EnumerateOptions& o, std::ostream& out) {
  check_n(o.n, kMaxEnumerateN, o.allow_large, "enumerate");
  const std::vector<ConstructionResult> results = enumerate_constructions(o.n);
  if (o.format == "text") {
    out << "n=" << o.n << " count=" << results.size() << '\n';
    for (const ConstructionResult& r : results) {
      out << spaced(r.t.entries());
      if (o.with_solutions) {
        out << "  solution=" << r.solution << " marks=" << spaced(r.marks);
      }
      out << '\n';
    }
    return kExitOk;
  }
  Json perms = Json::array();
  for (const ConstructionResult& r : results) {
    Json entry{{"t", to_json(r.t)}};
    if (o.with_solutions) {
      entry["solution"] = to_json(r.solution);
      entry["marks"] = r.marks;
    }
    perms.push_back(std::move(entry));
  }
  Json j;
  j["n"] = o.n;
  j["count"] = results.size();
  j["permutations"] = std::move(perms);
  out << j.dump() << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- justify

struct JustifyOptions {
  int n = 0;
  std::string t;
  std::string method = "both";
  std::string edges;
  bool allow_large = false;
  std::string format = "json";
};

int run_justify(const JustifyOptions& o, std::ostream& out) {
  const ExponentVector t = parse_vector(o.t);
  if (t.size() != o.n) {
    throw UsageError("--t has " + std::to_string(t.size()) + " entries but --n is " +
                     std::to_string(o.n));
  }
  const bool want_brute = o.method != "closure";
  check_n(o.n, want_brute ? kMaxOracleN : kMaxEnumerateN, o.allow_large, "justify");
  const GraphSpec g = parse_graph_spec(o.edges, o.n);
  const ConstructionResult result = replay_for(t);

  std::optional<PairSetFamily> closure, brute;
  if (o.method != "brute") closure = closure_justifying(result);
  if (want_brute) brute = brute_force_justifying(t, o.n, std::max(o.n, kDefaultBruteForceBound));

  bool agree_after_filter = true;
  bool agree_raw = true;
  PairSetFamily missed;
  if (closure && brute) {
    agree_raw = *closure == *brute;
    agree_after_filter = filter_by_graph(*closure, g) == filter_by_graph(*brute, g);
    std::set_difference(brute->begin(), brute->end(), closure->begin(), closure->end(),
                        std::back_inserter(missed));
  }

  if (o.format == "text") {
    out << "n=" << o.n << " t=" << t << '\n';
    out << "solution=" << result.solution << " marks=" << spaced(result.marks) << '\n';
    if (closure) {
      out << "closure (" << closure->size() << "):\n";
      for (const PairSet& s : *closure) out << "  " << s << '\n';
    }
    if (brute) {
      out << "brute (" << brute->size() << "):\n";
      for (const PairSet& s : *brute) out << "  " << s << '\n';
    }
    if (closure && brute) {
      out << "agree_raw=" << (agree_raw ? "true" : "false")
          << " agree_after_filter(" << graph_label(g)
          << ")=" << (agree_after_filter ? "true" : "false") << '\n';
      for (const PairSet& s : missed) out << "closure missed " << s << '\n';
    }
  } else {
    Json sets = Json::object();
    if (closure) sets["closure"] = to_json(*closure);
    if (brute) sets["brute"] = to_json(*brute);
    if (closure && brute) {
      sets["agree_after_filter"] = agree_after_filter;
      sets["agree_raw"] = agree_raw;
      sets["closure_missed"] = to_json(missed);
    }
    Json j;
    j["n"] = o.n;
    j["t"] = to_json(t);
    if (!g.extra_edges().empty()) j["graph"] = {{"extra_edges", to_json(g.extra_edges())}};
    j["solution"] = to_json(result.solution);
    j["marks"] = result.marks;
    j["sets"] = std::move(sets);
    out << j.dump() << '\n';
  }
  return agree_after_filter ? kExitOk : kExitMismatch;
}

// ----------------------------------------------------------------- count

struct CountOptions {
  int n_max = 10;
  bool check_recurrence = false;
  bool allow_large = false;
  std::string format = "text";
};

int run_count(const CountOptions& o, std::ostream& out) {
  check_n(o.n_max, kMaxEnumerateN, o.allow_large, "count");
  const CountReport report = recurrence_check(o.n_max);
  bool ok = true;
  for (const CountRow& row : report.rows) {
    ok = ok && (o.check_recurrence ? row.agree() : row.direct == row.oeis);
  }
  if (o.format == "json") {
    Json rows = Json::array();
    for (const CountRow& row : report.rows) {
      Json r{{"n", row.n}, {"direct", row.direct}, {"a006012", row.oeis}};
      if (o.check_recurrence) {
        r["recurrence"] = row.recurrence;
        r["agree"] = row.agree();
      }
      rows.push_back(std::move(r));
    }
    Json j{{"rows", std::move(rows)}, {"pass", ok}};
    out << j.dump() << '\n';
  } else {
    out << std::setw(3) << "n" << std::setw(10) << "N_n" << std::setw(10) << "a(n-3)";
    if (o.check_recurrence) out << std::setw(12) << "recurrence" << "  status";
    out << '\n';
    for (const CountRow& row : report.rows) {
      out << std::setw(3) << row.n << std::setw(10) << row.direct << std::setw(10)
          << row.oeis;
      if (o.check_recurrence) {
        out << std::setw(12) << row.recurrence << "  " << (row.agree() ? "ok" : "MISMATCH");
      }
      out << '\n';
    }
    if (o.check_recurrence && report.first_failure) {
      out << "first failing n: " << *report.first_failure << '\n';
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  int n_max = 6;
  int points = 5;
  std::uint64_t seed = kDefaultSeed;
  std::string graphs = "path";
  bool allow_large = false;
  std::string format = "text";
};

struct CheckLine {
  std::string name;
  int n = 0;
  std::string graph;
  bool pass = false;
  std::string detail;
};

int parse_random_graph_count(const std::string& spec) {
  if (spec == "path") return 0;
  constexpr std::string_view kPrefix = "random:";
  if (spec.rfind(kPrefix, 0) == 0) {
    if (auto k = parse_int(std::string_view(spec).substr(kPrefix.size())); k && *k >= 0) {
      return *k;
    }
  }
  throw UsageError("--graphs expects 'path' or 'random:k', got '" + spec + "'");
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.n_max < 3) throw UsageError("verify needs --n-max >= 3");
  if (o.n_max > kMaxPointEvalN && !o.allow_large) {
    throw UsageError("point evaluation is limited to n <= 6; pass --allow-large");
  }
  if (o.n_max > kDefaultEvalBound) {
    throw UsageError("verify supports --n-max <= " + std::to_string(kDefaultEvalBound));
  }
  if (o.points < 0) throw UsageError("--points must be nonnegative");
  const int random_graphs = parse_random_graph_count(o.graphs);
  std::mt19937_64 rng(o.seed);

  std::vector<CheckLine> lines;
  auto record = [&](std::string name, int n, const GraphSpec* g, auto&& body) {
    CheckLine line{std::move(name), n, g ? graph_label(*g) : "-", false, ""};
    try {
      line.pass = body(line.detail);
    } catch (const Error& e) {
      line.pass = false;
      line.detail = e.what();
    }
    lines.push_back(std::move(line));
  };

  for (int n = 3; n <= o.n_max; ++n) {
    std::vector<GraphSpec> graphs{path_graph(n)};
    for (int k = 0; k < random_graphs; ++k) graphs.push_back(random_supergraph(n, rng));

    const std::vector<ConstructionResult> results = enumerate_constructions(n);
    std::vector<PairSetFamily> closures, brutes;
    for (const ConstructionResult& r : results) {
      closures.push_back(closure_justifying(r));
      brutes.push_back(brute_force_justifying(r.t, n, kDefaultEvalBound));
    }

    for (const GraphSpec& g : graphs) {
      SchurExpansion expansion;
      record("expansion-vs-oracle", n, &g, [&](std::string& detail) {
        expansion = schur_expansion(n, g, JustifyMethod::kBrute, kDefaultEvalBound);
        const SchurExpansion oracle = direct_expansion_oracle(g, n * (n - 1) / 2);
        if (expansion != oracle) detail = "construction and polynomial oracle differ";
        return expansion == oracle;
      });
      if (g.extra_edges().empty()) {
        record("monomial-cross-check", n, &g, [&](std::string& detail) {
          const MonomialExpansion expected{
              {two_hook(n), 1}, {Partition(std::vector<int>(static_cast<size_t>(n), 1)), 1}};
          const bool pass = to_monomial_basis(expansion) == expected;
          if (!pass) detail = "monomial coefficients are not all 1 on the two hook shapes";
          return pass;
        });
      }
      record("closure-vs-brute-filtered", n, &g, [&](std::string& detail) {
        int disagreements = 0;
        for (size_t i = 0; i < results.size(); ++i) {
          if (filter_by_graph(closures[i], g) != filter_by_graph(brutes[i], g)) {
            if (disagreements++ == 0) detail = "first at t=" + to_string(results[i].t);
          }
        }
        if (disagreements) detail += " (" + std::to_string(disagreements) + " total)";
        return disagreements == 0;
      });
      record("point-evaluation", n, &g, [&](std::string& detail) {
        const PointReport report =
            verify_at_points(n, g, o.points, o.seed, kDefaultEvalBound);
        detail = std::to_string(report.checks.size()) + " points";
        return report.all_match();
      });
    }
  }
  record("recurrence", o.n_max, nullptr, [&](std::string& detail) {
    const CountReport report = recurrence_check(o.n_max);
    if (report.first_failure) detail = "first failing n=" + std::to_string(*report.first_failure);
    return report.ok();
  });

  bool all_pass = true;
  for (const CheckLine& l : lines) all_pass = all_pass && l.pass;

  if (o.format == "json") {
    Json checks = Json::array();
    for (const CheckLine& l : lines) {
      checks.push_back({{"name", l.name}, {"n", l.n}, {"graph", l.graph},
                        {"pass", l.pass}, {"detail", l.detail}});
    }
    Json j{{"checks", std::move(checks)}, {"pass", all_pass}};
    out << j.dump() << '\n';
  } else {
    for (const CheckLine& l : lines) {
      out << (l.pass ? "PASS " : "FAIL ") << std::left << std::setw(27) << l.name
          << " n=" << std::setw(2) << l.n << " graph=" << l.graph;
      if (!l.detail.empty()) out << "  " << l.detail;
      out << std::right << '\n';
    }
    int passed = 0;
    for (const CheckLine& l : lines) passed += l.pass;
    out << passed << "/" << lines.size() << " checks passed\n";
  }
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text, int n) {
  std::vector<Pair> extra;
  if (!trim(text).empty()) {
    for (std::string_view token : split(text, ',')) {
      const std::vector<std::string_view> ends = split(token, '-');
      std::optional<int> a, b;
      if (ends.size() == 2) {
        a = parse_int(ends[0]);
        b = parse_int(ends[1]);
      }
      if (!a || !b) {
        throw UsageError("malformed edge token '" + std::string(trim(token)) +
                         "'; expected a-b");
      }
      if (*a >= *b || *a < 1 || *b > n || *b == *a + 1) {
        std::string why = *a >= *b    ? "needs a < b"
                          : *b == *a + 1 ? "is a path edge (path edges are implicit)"
                                         : "is outside [n]";
        throw UsageError("edge token '" + std::string(trim(token)) + "' " + why);
      }
      extra.push_back({*a, *b});
    }
  }
  return make_graph(n, extra);
}

ExponentVector parse_vector(std::string_view text) {
  std::vector<int> entries;
  for (std::string_view token : split(text, ',')) {
    const std::optional<int> v = parse_int(token);
    if (!v) throw UsageError("malformed vector entry '" + std::string(trim(token)) + "'");
    entries.push_back(*v);
  }
  return ExponentVector(std::move(entries));
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Schur expansion of divided symmetrizations for 2-hook partitions",
               "twohook"};
  app.require_subcommand(1);

  ExpandOptions expand;
  auto* expand_cmd = app.add_subcommand("expand", "Schur (or monomial) expansion");
  expand_cmd->add_option("--n", expand.n, "number of variables")->required();
  expand_cmd->add_option("--edges", expand.edges, "extra edges, e.g. 2-5,1-3");
  expand_cmd->add_option("--method", expand.method)
      ->check(CLI::IsMember({"construction", "oracle", "both"}));
  expand_cmd->add_option("--justify", expand.justify, "justifying-set enumeration")
      ->check(CLI::IsMember({"brute", "closure"}));
  expand_cmd->add_option("--basis", expand.basis)->check(CLI::IsMember({"schur", "monomial"}));
  expand_cmd->add_option("--format", expand.format)->check(CLI::IsMember({"json", "text"}));
  expand_cmd->add_flag("--include-zeros", expand.include_zeros);
  expand_cmd->add_flag("--allow-large", expand.allow_large);

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list 2-hook permutations");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  enumerate_cmd->add_flag("--with-solutions", enumerate.with_solutions);
  enumerate_cmd->add_flag("--allow-large", enumerate.allow_large);
  enumerate_cmd->add_option("--format", enumerate.format)->check(CLI::IsMember({"json", "text"}));

  JustifyOptions justify;
  auto* justify_cmd = app.add_subcommand("justify", "justifying pair sets of one t");
  justify_cmd->add_option("--n", justify.n)->required();
  justify_cmd->add_option("--t", justify.t, "comma-separated permutation")->required();
  justify_cmd->add_option("--method", justify.method)
      ->check(CLI::IsMember({"closure", "brute", "both"}));
  justify_cmd->add_option("--edges", justify.edges, "graph used for filtering");
  justify_cmd->add_flag("--allow-large", justify.allow_large);
  justify_cmd->add_option("--format", justify.format)->check(CLI::IsMember({"json", "text"}));

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "count 2-hook permutations");
  count_cmd->add_option("--n-max", count.n_max);
  count_cmd->add_flag("--check-recurrence", count.check_recurrence);
  count_cmd->add_flag("--allow-large", count.allow_large);
  count_cmd->add_option("--format", count.format)->check(CLI::IsMember({"json", "text"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run every consistency check");
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--points", verify.points);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--graphs", verify.graphs, "path or random:k");
  verify_cmd->add_flag("--allow-large", verify.allow_large);
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (expand_cmd->parsed()) return run_expand(expand, out, err);
    if (enumerate_cmd->parsed()) return run_enumerate(enumerate, out);
    if (justify_cmd->parsed()) return run_justify(justify, out);
    if (count_cmd->parsed()) return run_count(count, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const StrongLegalityError& e) {
    err << "construction invariant violated: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace twohook::cli
