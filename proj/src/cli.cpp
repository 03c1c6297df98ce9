#include "ulrich/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ulrich/analysis.hpp"
#include "ulrich/core.hpp"
#include "ulrich/diagram.hpp"
#include "ulrich/families.hpp"
#include "ulrich/geometry.hpp"
#include "ulrich/search.hpp"

#ifndef ULRICH_GIT_DESCRIBE
#define ULRICH_GIT_DESCRIBE "unknown"
#endif

namespace ulrich::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  double budget_seconds = 0;  // 0 = unlimited
  int threads = 1;

  search::SearchLimits limits() const {
    search::SearchLimits l;
    if (budget_seconds > 0) l.seconds = budget_seconds;
    l.threads = threads;
    return l;
  }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Entry> parse_list(const std::string& text, const char* what) {
  std::vector<Entry> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      while (used < tok.size() && tok[used] == ' ') ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(std::string("malformed ") + what + " '" + text + "'");
    }
  }
  return out;
}

Json type_json(const FlagType& t) { return Json(std::vector<int>(t.lengths().begin(), t.lengths().end())); }

Json record(const BlockedPartition& p) {
  return Json{{"schema", 1}, {"type", type_json(p.type())}, {"partition", to_string(p)}, {"canonical", canonicalize(p) == p},
              {"n_dim", p.dimension()}};
}

std::string entry_name(const BlockedPartition& p, EntryRef ref) {
  (void)p;
  return std::string(1, static_cast<char>('a' + ref.block)) + std::to_string(ref.index + 1);
}

std::string witness_kind(UlrichWitness::Kind k) {
  switch (k) {
    case UlrichWitness::Kind::NonIntegralTime:
      return "non-integral-time";
    case UlrichWitness::Kind::DuplicateTime:
      return "duplicate-time";
    case UlrichWitness::Kind::MissingTime:
      return "missing-time";
  }
  return "unknown";
}

std::string join(const std::vector<Entry>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// --- check -----------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& text, std::ostream& out) {
  const auto p = parse_partition(text);
  const auto v = is_ulrich(p);
  if (g.json) {
    Json j = record(p);
    j["ulrich"] = v.is_ulrich;
    j["witness"] = v.witness ? Json{{"kind", witness_kind(v.witness->kind)}, {"time", v.witness->time.to_string()}} : Json();
    Json sched = Json::array();
    for (const auto& e : v.schedule.events) {
      sched.push_back({{"time", e.time.to_string()}, {"left", entry_name(p, e.left)}, {"right", entry_name(p, e.right)}});
    }
    j["schedule"] = sched;
    out << j.dump() << '\n';
  } else {
    out << (v.is_ulrich ? "ULRICH" : "NOT-ULRICH");
    if (v.witness) out << ": " << v.witness->describe();
    out << '\n' << "type " << p.type().to_string() << ", N = " << p.dimension() << '\n';
    for (const auto& e : v.schedule.events) {
      out << "  t=" << e.time << "  " << entry_name(p, e.left) << " meets " << entry_name(p, e.right) << '\n';
    }
  }
  return v.is_ulrich ? kOk : kNegative;
}

// --- diagram ---------------------------------------------------------------

int cmd_diagram(const std::string& text, bool svg, const std::string& velocities, std::ostream& out) {
  const auto p = parse_partition(text);
  auto vel = velocities.empty() ? diagram::default_velocities(p.type()) : parse_list(velocities, "velocity list");
  try {
    diagram::validate_velocities(p.type(), vel);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << (svg ? diagram::render_svg(p, vel) : diagram::render_ascii(p, vel));
  return kOk;
}

// --- enumerate -------------------------------------------------------------

int cmd_enumerate(const Globals& g, const std::string& type_text, const std::string& mode, std::ostream& out,
                  std::ostream& err) {
  const auto type = parse_flag_type(type_text);
  search::SearchSpec spec{type, search::SearchMode::TimeBranching, g.limits()};
  if (mode == "oracle") {
    spec.mode = search::SearchMode::BaselineOracle;
  } else if (mode != "search") {
    throw UsageError("unknown mode '" + mode + "' (expected search or oracle)");
  }
  const auto rep = [&] {
    try {
      return search::enumerate_ulrich(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (g.json) {
    for (const auto& p : rep.partitions) out << record(p).dump() << '\n';
  } else {
    out << "type " << type.to_string() << ", N = " << type.dimension() << ": " << rep.count() << " class"
        << (rep.count() == 1 ? "" : "es") << (rep.exhausted ? "" : " (incomplete)") << '\n';
    for (std::size_t i = 0; i < rep.partitions.size(); ++i) {
      out << "  #" << i + 1 << "  " << rep.partitions[i];
      if (!rep.symmetric_partner.empty()) {
        const auto s = rep.symmetric_partner[i];
        if (s == i) out << "  (self-symmetric)";
        else if (s < rep.partitions.size()) out << "  (symmetric to #" << s + 1 << ")";
      }
      out << '\n';
    }
    out << "nodes " << rep.nodes << ", " << rep.elapsed_seconds << " s\n";
  }
  if (!rep.exhausted) {
    err << "budget exhausted; the list may be incomplete\n";
    return kBudget;
  }
  return kOk;
}

// --- family ----------------------------------------------------------------

BlockedPartition build_family(const std::string& name, const std::vector<Entry>& params, const std::string& subset,
                              const std::string& label) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw UsageError("family " + name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
    }
  };
  auto arg = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (name == "one-n-one") {
    need(1);
    std::set<int> s;
    for (Entry x : parse_list(subset, "subset")) s.insert(static_cast<int>(x));
    return families::one_n_one(arg(0), s);
  }
  if (name == "two-one-k") return need(1), families::two_one_k(arg(0));
  if (name == "one-two-k") return need(1), families::one_two_k(arg(0));
  if (name == "two-param") return need(2), families::two_param(arg(0), arg(1));
  if (name == "fundamental-1n2") return need(1), families::fundamental_F(arg(0));
  if (name == "elongated") return need(2), families::elongated_family(arg(0), arg(1));
  if (name == "p-u") return need(1), families::p_u(arg(0));
  if (name == "sporadic") {
    if (label.empty()) throw UsageError("family sporadic needs --label");
    return families::sporadic(label);
  }
  throw UsageError("unknown family '" + name + "'");
}

int cmd_family(const Globals& g, const std::string& name, const std::string& params, const std::string& subset,
               const std::string& label, bool mirror, std::ostream& out) {
  const auto ps = parse_list(params, "parameter list");
  BlockedPartition p = [&] {
    try {
      return build_family(name, ps, subset, label);
    } catch (const UsageError&) {
      throw;
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (mirror) p = symmetric(p);
  if (g.json) {
    Json j{{"schema", 1}, {"family", name}, {"params", ps}};
    if (!label.empty()) j["label"] = label;
    j["mirror"] = mirror;
    j["partition"] = to_string(p);
    j["type"] = type_json(p.type());
    j["n_dim"] = p.dimension();
    out << j.dump() << '\n';
  } else {
    out << p << '\n';
  }
  return kOk;
}

// --- analyze ---------------------------------------------------------------

std::string set_text(const std::vector<Entry>& v) { return "{" + join(v) + "}"; }

int cmd_analyze(const Globals& g, const std::string& text, std::ostream& out) {
  const auto p = parse_partition(text);
  const auto verdict = is_ulrich(p);
  Json j = record(p);
  j["ulrich"] = verdict.is_ulrich;
  if (p.blocks() == 3) {
    if (verdict.is_ulrich) j["greedy_word"] = analysis::greedy_word(p);
    if (p.type().length(1) == 1) {
      const auto d = analysis::sumset_decompose(p);
      j["sumset"] = d ? Json{{"a_prime", d->a_prime}, {"c_prime", d->c_prime}, {"n_prime", d->n_prime}} : Json();
    }
    const auto cd = analysis::centered_dual(p);
    j["centered_dual"] = cd.to_string();
    Json tw = Json::array();
    for (const auto& w : analysis::trapezoid_witnesses(p)) {
      tw.push_back({{"a", w.a}, {"a_star", w.a_star}, {"c", w.c}, {"c_star", w.c_star}, {"holds", w.holds}});
    }
    j["trapezoid"] = tw;
    j["rectangle"] = analysis::rectangle_check(p);
    if (auto gap = analysis::middle_gap(p)) j["middle_gap"] = *gap;
  }
  if (g.json) {
    out << j.dump() << '\n';
    return verdict.is_ulrich ? kOk : kNegative;
  }

  out << p << "  type " << p.type().to_string() << ", N = " << p.dimension() << '\n';
  out << (verdict.is_ulrich ? "ULRICH" : "NOT-ULRICH");
  if (verdict.witness) out << ": " << verdict.witness->describe();
  out << '\n';
  if (p.blocks() != 3) {
    out << "structure rules apply to three-block partitions only\n";
    return verdict.is_ulrich ? kOk : kNegative;
  }
  if (j.contains("greedy_word")) out << "greedy word: " << j["greedy_word"].get<std::string>() << '\n';
  if (j.contains("sumset")) {
    if (j["sumset"].is_null()) {
      out << "sumset: no decomposition\n";
    } else {
      const auto& s = j["sumset"];
      out << "sumset: A' = " << set_text(s["a_prime"].get<std::vector<Entry>>())
          << ", C' = " << set_text(s["c_prime"].get<std::vector<Entry>>()) << ", N' = " << s["n_prime"].get<Entry>()
          << '\n';
    }
  }
  out << "centered dual: " << j["centered_dual"].get<std::string>() << '\n';
  const auto& tw = j["trapezoid"];
  out << "trapezoid witnesses: " << tw.size() << '\n';
  for (const auto& w : tw) {
    out << "  a=" << w["a"].get<Entry>() << " a*=" << w["a_star"].get<Entry>() << " c=" << w["c"].get<Entry>()
        << " c*=" << w["c_star"].get<Entry>() << (w["holds"].get<bool>() ? "  N+1 = a*-c = a-c*" : "  fails") << '\n';
  }
  out << "rectangle rule: " << (j["rectangle"].get<bool>() ? "holds" : "fails") << '\n';
  if (j.contains("middle_gap")) out << "middle gap b1-b2: " << j["middle_gap"].get<Entry>() << '\n';
  return verdict.is_ulrich ? kOk : kNegative;
}

// --- verify ----------------------------------------------------------------

Json report_json(const search::SearchReport& r) {
  Json parts = Json::array();
  for (const auto& p : r.partitions) parts.push_back(to_string(p));
  return Json{{"schema", 1},       {"type", type_json(r.type)},      {"n_dim", r.type.dimension()},
              {"count", r.count()}, {"exhausted", r.exhausted},       {"nodes", r.nodes},
              {"elapsed", r.elapsed_seconds}, {"partitions", parts}};
}

search::SearchReport report_from_json(const Json& j) {
  search::SearchReport r{FlagType(j.at("type").get<std::vector<int>>()), {}, 0, 0, true, {}};
  for (const auto& s : j.at("partitions")) r.partitions.push_back(parse_partition(s.get<std::string>()));
  r.exhausted = j.at("exhausted").get<bool>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed_seconds = j.at("elapsed").get<double>();
  return r;
}

struct Check {
  std::string what;
  bool ok;
};

std::set<BlockedPartition> canonical_set(const std::vector<BlockedPartition>& v) {
  std::set<BlockedPartition> s;
  for (const auto& p : v) s.insert(canonicalize(p));
  return s;
}

std::vector<Check> family_checks(const search::SearchLimits& limits, bool& complete) {
  std::vector<Check> out;
  auto found = [&](const FlagType& t) {
    auto r = search::time_branching_search(t, limits);
    if (!r.exhausted) complete = false;
    return canonical_set(r.partitions);
  };
  for (int n = 1; n <= 5; ++n) {
    std::vector<BlockedPartition> expected;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::set<int> s;
      for (int p = 1; p <= n; ++p) {
        if (mask & (1 << (p - 1))) s.insert(p);
      }
      expected.push_back(families::one_n_one(n, s));
    }
    out.push_back({"type (1," + std::to_string(n) + ",1) equals the one-n-one family",
                   found(FlagType({1, n, 1})) == canonical_set(expected)});
  }
  for (int m = 0; m <= 1; ++m) {
    const auto p = families::two_one_k(m);
    out.push_back({"type " + p.type().to_string() + " equals {two-one-k(" + std::to_string(m) + ")}",
                   found(p.type()) == canonical_set({p})});
  }
  out.push_back({"two-one-k(2) is Ulrich", is_ulrich(families::two_one_k(2)).is_ulrich});
  for (int m = 0; m <= 1; ++m) {
    const auto p = families::one_two_k(m);
    out.push_back({"one-two-k(" + std::to_string(m) + ") is found by search", found(p.type()).count(canonicalize(p)) == 1});
  }
  for (int n = 1; n <= 8; ++n) {
    std::vector<BlockedPartition> expected;
    for (int m = 1; m <= n + 1; ++m) {
      for (int k = 0; 2 * k * m + m - 1 <= n; ++k) {
        if (2 * k * m + m - 1 == n && !(k == 0 && m == 1)) expected.push_back(families::elongated_family(k, m));
      }
    }
    out.push_back({"type (2," + std::to_string(n) + ",1) equals the elongated family",
                   found(FlagType({2, n, 1})) == canonical_set(expected)});
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<BlockedPartition> expected;
    if (n % 2 == 0) {
      expected.push_back(families::p_u(n / 2));
      expected.push_back(symmetric(families::p_u(n / 2)));
    }
    out.push_back({"type (2," + std::to_string(n) + ",2) equals {p-u, symmetric}",
                   found(FlagType({2, n, 2})) == canonical_set(expected)});
  }
  for (auto [m1, m2] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}}) {
    const auto p = families::two_param(m1, m2);
    out.push_back({"two-param(" + std::to_string(m1) + "," + std::to_string(m2) + ") is found by search",
                   found(p.type()).count(canonicalize(p)) == 1});
  }
  for (const auto& name : families::sporadic_names()) {
    const auto p = families::sporadic(name);
    out.push_back({"sporadic " + name + " is found by search", found(p.type()).count(canonicalize(p)) == 1});
  }
  return out;
}

int cmd_verify(const Globals& g, const std::string& suite, int max_length, int max_sum, bool long_run,
               const std::string& checkpoint, const std::string& manifest_path, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto limits = g.limits();

  if (suite == "families") {
    bool complete = true;
    const auto checks = family_checks(limits, complete);
    bool ok = true;
    Json results = Json::array();
    for (const auto& c : checks) {
      ok = ok && c.ok;
      results.push_back({{"check", c.what}, {"ok", c.ok}});
      if (!g.json) out << (c.ok ? "PASS " : "FAIL ") << c.what << '\n';
    }
    if (g.json) {
      out << Json{{"schema", 1}, {"suite", suite}, {"binary_version", version()}, {"results", results}}.dump() << '\n';
    } else {
      out << (ok ? "PASS" : "FAIL") << '\n';
    }
    if (!ok) return kNegative;
    return complete ? kOk : kBudget;
  }

  std::vector<FlagType> types;
  Json bounds;
  if (suite == "no-multistep") {
    if (max_length < 4) throw UsageError("--max-length must be at least 4");
    types = search::multistep_types(max_length);
    bounds = {{"max_length", max_length}};
  } else if (suite == "conjecture") {
    if (max_sum < 9) throw UsageError("--max-sum must be at least 9");
    if (max_sum > 10 && !long_run) throw UsageError("--max-sum above 10 requires --long-run");
    types = search::conjecture_types(max_sum);
    bounds = {{"max_sum", max_sum}};
  } else {
    throw UsageError("unknown suite '" + suite + "' (expected no-multistep, conjecture or families)");
  }

  std::map<FlagType, search::SearchReport> done;
  if (!checkpoint.empty()) {
    std::ifstream in(checkpoint);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        auto r = report_from_json(Json::parse(line));
        if (r.exhausted) done.insert_or_assign(r.type, std::move(r));
      } catch (const std::exception& e) {
        throw UsageError("unreadable checkpoint line in " + checkpoint + ": " + e.what());
      }
    }
  }
  std::ofstream ck;
  if (!checkpoint.empty()) {
    ck.open(checkpoint, std::ios::app);
    if (!ck) throw UsageError("cannot write checkpoint " + checkpoint);
  }

  std::set<FlagType> skip;
  for (const auto& [t, r] : done) skip.insert(t);
  search::sweep(types, limits, skip, [&](const search::SearchReport& r) {
    if (ck.is_open() && r.exhausted) ck << report_json(r).dump() << std::endl;
    done.insert_or_assign(r.type, r);
  });

  std::size_t found = 0;
  bool complete = true;
  Json results = Json::array();
  Json type_list = Json::array();
  for (const auto& t : types) {
    const auto& r = done.at(t);
    found += r.count();
    complete = complete && r.exhausted;
    results.push_back(report_json(r));
    type_list.push_back(type_json(t));
    if (!g.json) {
      out << "(" << t.to_string() << ")  N=" << t.dimension() << "  " << r.count() << " found"
          << (r.exhausted ? "" : "  [incomplete]") << '\n';
      for (const auto& p : r.partitions) out << "    " << p << '\n';
    }
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json manifest{{"schema", 1},          {"suite", suite},     {"types", type_list}, {"bounds", bounds},
                {"binary_version", version()}, {"elapsed", elapsed}, {"results", results}};
  if (!manifest_path.empty()) {
    std::ofstream mf(manifest_path);
    if (!mf) throw UsageError("cannot write manifest " + manifest_path);
    mf << manifest.dump(2) << '\n';
  }
  if (g.json) {
    out << manifest.dump() << '\n';
  } else if (found > 0) {
    out << "FAIL (" << found << " found)\n";
  } else if (!complete) {
    out << "INCOMPLETE (0 found so far)\n";
  } else {
    out << "PASS (0 found)\n";
  }
  if (found > 0) return kNegative;
  if (!complete) {
    err << "budget exhausted before every type was searched\n";
    return kBudget;
  }
  return kOk;
}

// --- geometry --------------------------------------------------------------

FlagType parse_flag(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("flag must look like k1,k2:n, got '" + text + "'");
  const auto dims = parse_list(text.substr(0, colon), "flag");
  const auto n = parse_list(text.substr(colon + 1), "flag");
  if (dims.empty() || n.size() != 1) throw ParseError("flag must look like k1,k2:n, got '" + text + "'");
  std::vector<int> k;
  Entry prev = 0;
  for (Entry d : dims) {
    if (d <= prev || d >= n[0]) throw ParseError("flag dimensions must increase strictly inside (0,n): '" + text + "'");
    k.push_back(static_cast<int>(d));
    prev = d;
  }
  return FlagType::from_flag(k, static_cast<int>(n[0]));
}

int cmd_geometry(const Globals& g, const std::string& op, const std::string& flag, const std::string& weights,
                 const std::string& lambda, std::int64_t twist, std::ostream& out) {
  std::optional<FlagType> type;
  std::optional<geometry::SchurWeight> w;
  if (!lambda.empty()) {
    w = geometry::parse_weight(lambda);
    type = w->type;
  }
  if (!flag.empty()) {
    const auto f = parse_flag(flag);
    if (type && *type != f) throw UsageError("--flag and --lambda describe different types");
    type = f;
  }
  auto need_weight = [&]() -> const geometry::SchurWeight& {
    if (!w) throw UsageError("operation " + op + " needs --lambda");
    return *w;
  };
  auto need_type = [&]() -> const FlagType& {
    if (!type) throw UsageError("operation " + op + " needs --flag or --lambda");
    return *type;
  };

  Json j{{"schema", 1}, {"op", op}};
  int code = kOk;
  std::string text;
  if (op == "degree") {
    geometry::PolarizationWeights pw = geometry::PolarizationWeights::ones(need_type().steps());
    if (!weights.empty()) pw.a = parse_list(weights, "weights");
    try {
      const auto d = geometry::flag_degree(*type, pw);
      j["degree"] = d.str();
      text = d.str();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (op == "dimension") {
    const auto n = geometry::flag_dimension(need_type());
    j["dimension"] = n;
    text = std::to_string(n);
  } else if (op == "rank") {
    const auto r = geometry::bundle_rank(need_weight());
    j["rank"] = r.str();
    text = r.str();
  } else if (op == "h0") {
    const auto c = geometry::bwb_cohomology(need_weight(), 0);
    const geometry::BigInt h0 = (!c.vanishes && c.degree == 0) ? c.dimension : geometry::BigInt(0);
    j["h0"] = h0.str();
    text = h0.str();
  } else if (op == "cohomology") {
    const auto c = geometry::bwb_cohomology(need_weight(), twist);
    j["twist"] = twist;
    j["vanishes"] = c.vanishes;
    if (c.vanishes) {
      text = "all cohomology vanishes";
    } else {
      j["degree"] = c.degree;
      j["mu"] = c.mu;
      j["dimension"] = c.dimension.str();
      text = "H^" + std::to_string(c.degree) + " has dimension " + c.dimension.str() + " (mu = " + join(c.mu) + ")";
    }
  } else if (op == "ulrich-check") {
    const auto& wt = need_weight();
    const bool ulrich = geometry::is_ulrich_via_bwb(wt);
    j["ulrich"] = ulrich;
    std::ostringstream os;
    try {
      const auto id = geometry::ulrich_identity_check(wt);
      j["h0"] = id.h0.str();
      j["rank"] = id.rank.str();
      j["degree"] = id.degree.str();
      j["identity"] = id.ok;
      os << "h0 = " << id.h0 << ", rank = " << id.rank << ", degree = " << id.degree << ", h0 "
         << (id.ok ? "=" : "!=") << " rank * degree\n";
    } catch (const std::invalid_argument& e) {
      os << e.what() << '\n';
    }
    os << (ulrich ? "ULRICH" : "NOT-ULRICH");
    text = os.str();
    code = ulrich ? kOk : kNegative;
  } else {
    throw UsageError("unknown geometry operation '" + op + "'");
  }
  if (g.json) {
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return code;
}

}  // namespace

const char* version() { return ULRICH_GIT_DESCRIBE; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ulrich partitions of partial flag varieties", "ulrich"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--budget-seconds", g.budget_seconds, "Wall-clock budget for searches")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", g.threads, "Search worker threads")->check(CLI::PositiveNumber);

  std::string partition;
  auto* check = app.add_subcommand("check", "Ulrich test with the full collision schedule");
  check->add_option("partition", partition, "Partition such as 5|3,-1,-2,-4|-5")->required();

  bool svg = false;
  std::string velocities;
  auto* diag = app.add_subcommand("diagram", "Time evolution diagram");
  diag->add_option("partition", partition)->required();
  diag->add_flag("--svg", svg, "Render SVG instead of ASCII");
  diag->add_option("--velocities", velocities, "Display velocity per block, e.g. 1,0,-1");

  std::string type_text;
  std::string mode = "search";
  auto* en = app.add_subcommand("enumerate", "All Ulrich partitions of a type, up to translation");
  en->add_option("--type", type_text, "Block lengths, e.g. 1,3,1")->required();
  en->add_option("--mode", mode, "search or oracle");

  std::string name;
  std::string params;
  std::string subset;
  std::string label;
  bool mirror = false;
  auto* fam = app.add_subcommand("family", "Member of a known family");
  fam->add_option("--name", name,
                  "one-n-one, two-one-k, one-two-k, two-param, fundamental-1n2, elongated, p-u or sporadic")
      ->required();
  fam->add_option("--params", params, "Comma-separated integer parameters");
  fam->add_option("--subset", subset, "Subset of [n] for one-n-one");
  fam->add_option("--label", label, "Sporadic label: 221, 121, 222, 322 or 223");
  fam->add_flag("--mirror", mirror, "Apply the symmetric operation");

  auto* an = app.add_subcommand("analyze", "Greedy word, sumset decomposition and trapezoid witnesses");
  an->add_option("partition", partition)->required();

  std::string suite;
  int max_length = 7;
  int max_sum = 10;
  bool long_run = false;
  std::string checkpoint;
  std::string manifest;
  auto* ver = app.add_subcommand("verify", "Verification suites");
  ver->add_option("--suite", suite, "no-multistep, conjecture or families")->required();
  ver->add_option("--max-length", max_length, "Largest total length for no-multistep");
  ver->add_option("--max-sum", max_sum, "Largest α+β+γ for conjecture");
  ver->add_flag("--long-run", long_run, "Allow conjecture sweeps beyond 10");
  ver->add_option("--checkpoint", checkpoint, "JSONL file of completed types, read and appended");
  ver->add_option("--manifest", manifest, "Write the sweep manifest here");

  std::string op;
  std::string flag;
  std::string weights;
  std::string lambda;
  std::int64_t twist = 0;
  auto* geo = app.add_subcommand("geometry", "Degrees, ranks and cohomology");
  geo->add_option("op", op, "degree, dimension, rank, h0, cohomology or ulrich-check")->required();
  geo->add_option("--flag", flag, "Flag as k1,k2:n");
  geo->add_option("--weights", weights, "Polarization weights a1,...,ar");
  geo->add_option("--lambda", lambda, "Weight such as 6|5,2,2,1|1");
  geo->add_option("--twist", twist, "Twist t in E(-t)");

  std::vector<std::string> argv_store{"ulrich"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*check) return cmd_check(g, partition, out);
    if (*diag) return cmd_diagram(partition, svg, velocities, out);
    if (*en) return cmd_enumerate(g, type_text, mode, out, err);
    if (*fam) return cmd_family(g, name, params, subset, label, mirror, out);
    if (*an) return cmd_analyze(g, partition, out);
    if (*ver) return cmd_verify(g, suite, max_length, max_sum, long_run, checkpoint, manifest, out, err);
    if (*geo) return cmd_geometry(g, op, flag, weights, lambda, twist, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ulrich::cli
