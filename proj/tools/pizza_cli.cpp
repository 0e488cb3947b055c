// pizza: solve, analyze, generate, verify, benchmark, replay and serve.
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include "pizza/pizza.hpp"
#include "pizza/service.hpp"
#include "pizza/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace pizza;

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An inline cutting, or a file holding one cutting per line.
std::vector<Cutting> load_cuttings(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    auto all = read_cuttings(in);
    if (all.empty()) throw DomainError(arg + ": no cuttings");
    return all;
  }
  return {parse_cutting(arg)};
}

/// "8/18" for integral values, "(3/2)/4" otherwise.
std::string share(const Rational& v, const Rational& total) {
  auto wrap = [](const Rational& r) { return denominator(r) == 1 ? to_string(r) : "(" + to_string(r) + ")"; };
  return wrap(v) + "/" + wrap(total);
}

std::string of_total(const Rational& v, const Rational& total) {
  Rational f = total == 0 ? Rational(0) : v / total;
  return to_string(f) + " of " + to_string(total);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string cutting;
  std::optional<int> jumps;
  bool json = false;
  bool table = false;
};

int cmd_solve(const SolveOptions& o) {
  Json reports = Json::array();
  for (const Cutting& P : load_cuttings(o.cutting)) {
    auto table = std::make_shared<const ValueTable>(P);
    auto game = play_game(P, optimal_strategy(table, Player::Alice), optimal_strategy(table, Player::Bob));
    Rational alice = table->alice_value(), bob = table->bob_value(), total = P.total();
    std::optional<Rational> limited;
    if (o.jumps) limited = solve_alice_jump_limited(P, *o.jumps);
    if (o.json) {
      Json r{{"cutting", to_json(P)},
             {"values", {{"alice", to_json(alice)}, {"bob", to_json(bob)}, {"total", to_json(total)}}},
             {"first_moves", table->best_first_moves()},
             {"jumps", {{"alice", game.jumps(Player::Alice)}, {"bob", game.jumps(Player::Bob)}}},
             {"optimal_line", turns_json(game.turns)}};
      if (limited)
        r["restricted"] = {{"jump_budget", *o.jumps}, {"alice", to_json(*limited)}, {"bob", to_json(total - *limited)}};
      if (o.table) r["policy"] = to_json(*table)["policy"];
      reports.push_back(r);
      continue;
    }
    if (limited)
      std::cout << "Alice " << share(*limited, total) << " with at most " << *o.jumps << " jump"
                << (*o.jumps == 1 ? "" : "s") << " (" << of_total(*limited, total) << ")\n";
    std::cout << "Alice " << share(alice, total) << ", Bob " << share(bob, total) << "\n";
    std::cout << "Alice " << of_total(alice, total) << ", Bob " << of_total(bob, total) << "\n";
    std::cout << "optimal first moves: " << join(table->best_first_moves()) << "\n";
    std::cout << "jumps in optimal play: Alice " << game.jumps(Player::Alice) << ", Bob " << game.jumps(Player::Bob)
              << "\n";
  }
  if (o.json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

Json analysis_json(const Cutting& P) {
  Json r{{"cutting", to_json(P)}};
  std::size_t n = P.size();
  if (n % 2 == 0) {
    auto pm = alice_parity(P);
    r["parity"] = {{"gain", to_json(pm.declared_gain)}};
    return r;
  }
  auto V = characteristic_cycle(P);
  std::span<const Rational> v(V.elements);
  auto hc = half_circle_sizes(v);
  auto pot = potential_table(v);
  auto strings = [](const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(fraction_string(x));
    return a;
  };
  r["cycle"] = {{"elements", strings(V.elements)}, {"origin", V.origin}};
  r["half_circles"] = {{"sizes", strings(hc.sizes)}, {"min_index", hc.min_index}};
  r["potentials"] = {{"elements", strings(pot.element)}, {"potential", to_json(pot.cycle)}, {"argmax", pot.argmax}};
  ScaledSizes<Rational> exact;
  exact.values = P.slices();
  auto choice = plan_dispatch_49(exact);
  if (choice.partition) {
    const auto& q = *choice.partition;
    Json arcs = Json::array();
    const char* names = "ABCDEF";
    for (int i = 0; i < 6; ++i)
      arcs.push_back({{"arc", std::string(1, names[i])},
                      {"start", q.arcs[i].start},
                      {"length", q.arcs[i].length},
                      {"size", to_json(q.sizes[i])}});
    r["partition"] = arcs;
    Json gains = Json::array();
    for (const auto& g : choice.gains) gains.push_back(to_json(g));
    r["dispatch"] = {{"gains", gains}, {"chosen", choice.chosen}};
  }
  r["strategy"] = {{"name", choice.move.name},
                   {"first_move", choice.move.plan.first},
                   {"gain", to_json(choice.move.bound)},
                   {"jumps", choice.move.max_jumps}};
  return r;
}

int cmd_analyze(const std::string& arg, bool json) {
  Json all = Json::array();
  for (const Cutting& P : load_cuttings(arg)) {
    Json r = analysis_json(P);
    if (json) {
      all.push_back(r);
      continue;
    }
    auto plain = [](const Json& x) {
      std::string s = x.get<std::string>();
      return s.size() > 2 && s.ends_with("/1") ? s.substr(0, s.size() - 2) : s;
    };
    std::cout << "cutting: " << format_cutting(P) << " (n = " << P.size() << ", |P| = " << to_string(P.total())
              << ")\n";
    if (!r.contains("cycle")) {
      std::cout << "even n: parity strategy gains " << plain(r["parity"]["gain"]["exact"]) << "\n";
      continue;
    }
    auto list = [&](const Json& a) {
      std::string s;
      for (const auto& x : a) s += (s.empty() ? "" : " ") + plain(x);
      return s;
    };
    std::cout << "characteristic cycle: " << list(r["cycle"]["elements"]) << "\n";
    std::cout << "half-circle sizes: " << list(r["half_circles"]["sizes"]) << " (minimum at "
              << r["half_circles"]["min_index"] << ")\n";
    std::cout << "potentials: " << list(r["potentials"]["elements"]) << "\n";
    std::cout << "p(V) = " << plain(r["potentials"]["potential"]["exact"]) << "\n";
    if (r.contains("partition")) {
      std::cout << "partition:";
      for (const auto& a : r["partition"])
        std::cout << " " << a["arc"].get<std::string>() << "=" << plain(a["size"]["exact"]) << "(l "
                  << a["length"] << ")";
      std::cout << "\n";
    }
    std::cout << "strategy: " << r["strategy"]["name"].get<std::string>() << ", first slice "
              << r["strategy"]["first_move"] << ", guaranteed " << plain(r["strategy"]["gain"]["exact"])
              << "\n";
  }
  if (json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::vector<std::string>& words, bool battery) {
  if (battery) {
    std::cout << "# standard property-test battery\n";
    for (const auto& spec : standard_battery()) std::cout << manifest_line(spec) << "\n";
    return 0;
  }
  if (words.empty()) throw CLI::ValidationError("gen", "expected a family name or --battery");
  std::string line;
  for (const auto& w : words) line += (line.empty() ? "" : " ") + w;
  if (std::filesystem::is_regular_file(words.front())) {
    std::ifstream in(words.front());
    for (const auto& spec : read_manifest(in)) std::cout << format_cutting(generate(spec)) << "\n";
    return 0;
  }
  std::cout << format_cutting(generate(parse_manifest_line(line))) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, bool json) {
  auto ids = suite_criteria(suite);
  Json out{{"suite", suite}, {"criteria", Json::array()}};
  bool all = true;
  for (const auto& def : acceptance_criteria()) {
    if (std::find(ids.begin(), ids.end(), def.id) == ids.end()) continue;
    auto r = run_criterion(def);
    all = all && r.pass;
    out["criteria"].push_back(
        {{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    if (!json)
      std::cout << "criterion " << std::setw(2) << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.title
                << ": " << r.detail << std::endl;
  }
  out["pass"] = all;
  if (json) std::cout << out.dump(2) << "\n";
  else std::cout << (all ? "all passed" : "FAILED") << "\n";
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_bench(std::size_t max_n, int repeat, bool json) {
  if (max_n < 15) throw CLI::ValidationError("--max-n", "must be at least 15");
  int hi = std::min(20, static_cast<int>(std::floor(std::log2(static_cast<double>(max_n - 1)))));
  int lo = std::max(3, std::min(10, hi - 4));
  auto pre = bench_precompute(lo, hi, repeat);
  auto ns = solver_bench_sizes(std::min<std::size_t>(max_n, 2000));
  if (ns.size() < 2) ns = {max_n / 2, max_n};
  auto dp = bench_solver(ns, repeat);
  bool ok = pre.exponent < 1.3;
  if (json) {
    auto pts = [](const ScalingFit& f) {
      Json a = Json::array();
      for (const auto& p : f.points) a.push_back({{"n", p.n}, {"median_seconds", p.median_seconds}});
      return a;
    };
    std::cout << Json{{"precompute", {{"points", pts(pre)}, {"exponent", pre.exponent}}},
                      {"solver", {{"points", pts(dp)}, {"exponent", dp.exponent}}},
                      {"repeat", repeat},
                      {"pass", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "strategy precomputation (median of " << repeat << ")\n";
    for (const auto& p : pre.points) std::cout << std::setw(10) << p.n << std::setw(14) << p.median_seconds << " s\n";
    std::cout << "fitted exponent " << std::setprecision(3) << pre.exponent << (ok ? " (< 1.3)\n" : " (NOT < 1.3)\n");
    std::cout << std::setprecision(6) << "optimal value table (median of " << repeat << ")\n";
    for (const auto& p : dp.points) std::cout << std::setw(10) << p.n << std::setw(14) << p.median_seconds << " s\n";
    std::cout << "fitted exponent " << std::setprecision(3) << dp.exponent << "\n";
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct PlayOptions {
  std::string cutting;
  std::string engine = "optimal";
  std::string side = "alice";
  std::string moves;
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_play(const PlayOptions& o) {
  Player human = parse_side(o.side);
  const EngineInfo& info = engine_info(o.engine);
  if (!(human == Player::Alice ? info.plays_bob : info.plays_alice))
    throw CLI::ValidationError("--engine", "engine '" + o.engine + "' cannot play " + name(other(human)));
  Cutting P = load_cuttings(o.cutting).front();
  Strategy engine = make_engine(o.engine, P, other(human), o.seed);
  std::vector<std::size_t> script;
  {
    std::string text = o.moves;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::stringstream in(text);
    std::string tok;
    while (in >> tok) script.push_back(static_cast<std::size_t>(detail::parse_unsigned(tok, "move")));
  }
  std::size_t next = 0;
  Strategy scripted;
  scripted.name = "human";
  scripted.next_move = [&](std::span<const Turn>, const Position& pos) -> std::size_t {
    if (next >= script.size())
      throw DomainError("no human move for turn " + std::to_string(pos.turn()) +
                        " (interactive prompts are not available; pass every move with --moves)");
    std::size_t idx = script[next++];
    if (!is_legal(pos, idx)) {
      std::string legal = pos.full_circle() ? "any slice" : join(legal_moves(pos));
      throw DomainError("turn " + std::to_string(pos.turn()) + ": slice " + std::to_string(idx) +
                        " is not takeable (legal: " + legal + ")");
    }
    return idx;
  };
  GameRecord g = human == Player::Alice ? play_game(P, scripted, engine) : play_game(P, engine, scripted);
  if (next < script.size()) throw DomainError("more moves given than the game has human turns");
  if (o.json) {
    Json r = to_json(g);
    r["engine"] = o.engine;
    r["human_side"] = o.side;
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  for (const auto& t : g.turns)
    std::cout << "turn " << std::setw(2) << t.number << "  " << std::setw(5) << name(t.player) << "  slice "
              << std::setw(3) << t.index << "  " << std::setw(5) << name(t.kind) << "  size "
              << to_string(P.slices()[t.index]) << (t.player == human ? "" : "  (engine)") << "\n";
  std::cout << "Alice " << share(g.alice_gain, P.total()) << ", Bob " << share(g.bob_gain, P.total()) << "\n";
  std::cout << "jumps: Alice " << g.jumps(Player::Alice) << ", Bob " << g.jumps(Player::Bob) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_serve(const std::string& host, int port, const std::string& log) {
  GameService service(log);
  httplib::Server server;
  register_routes(server, service);
  std::cout << "listening on " << host << ":" << port << std::endl;
  if (!server.listen(host, port)) throw DomainError("cannot listen on " + host + ":" + std::to_string(port));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and strategies for the pizza-sharing game"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "optimal values, first moves and jumps");
  s->add_option("cutting", solve.cutting, "cutting (\"1,2,3\" or \"002020030300404\") or a file")->required();
  s->add_option("--jumps", solve.jumps, "also solve with Alice limited to J jumps")->check(CLI::NonNegativeNumber);
  s->add_flag("--json", solve.json, "JSON report");
  s->add_flag("--table", solve.table, "include the full value table (with --json)");

  std::string analyze_arg;
  bool analyze_json = false;
  auto* a = app.add_subcommand("analyze", "characteristic cycle, potentials, partition and strategy choice");
  a->add_option("cutting", analyze_arg, "cutting or file")->required();
  a->add_flag("--json", analyze_json, "JSON report");

  std::vector<std::string> gen_words;
  bool gen_battery = false;
  auto* g = app.add_subcommand("gen", "print a cutting: FAMILY key=value ..., or a manifest file");
  g->add_option("spec", gen_words, "family and parameters, or a manifest file");
  g->add_flag("--battery", gen_battery, "print the property-test battery manifest");

  std::string suite = "all";
  bool verify_json = false;
  auto* v = app.add_subcommand("verify", "run the acceptance checks");
  v->add_option("--suite", suite, "core, bounds, strategies, scaling or all")
      ->check(CLI::IsMember({"core", "bounds", "strategies", "scaling", "all"}));
  v->add_flag("--json", verify_json, "JSON report");

  std::size_t max_n = (std::size_t{1} << 20) + 1;
  int repeat = 3;
  bool bench_json = false;
  auto* b = app.add_subcommand("bench", "time the linear precomputation and the quadratic solver");
  b->add_option("--max-n", max_n, "largest n (the solver series stops at 2000)");
  b->add_option("--repeat", repeat, "repetitions per size; medians are reported")->check(CLI::PositiveNumber);
  b->add_flag("--json", bench_json, "JSON report");

  PlayOptions play;
  auto* p = app.add_subcommand("play", "replay scripted moves against an engine");
  p->add_option("cutting", play.cutting, "cutting or file")->required();
  std::vector<std::string> engine_names;
  for (const auto& e : engines()) engine_names.push_back(e.name);
  p->add_option("--engine", play.engine, "engine name (see GET /engines)")->check(CLI::IsMember(engine_names));
  p->add_option("--side", play.side, "the human's side")->check(CLI::IsMember({"alice", "bob"}));
  p->add_option("--moves", play.moves, "the human's moves, e.g. \"3,4,6\"");
  p->add_option("--seed", play.seed, "seed for the random engine");
  p->add_flag("--json", play.json, "JSON transcript");

  std::string host = "127.0.0.1", log;
  int port = 8080;
  auto* sv = app.add_subcommand("serve", "run the game service");
  sv->add_option("--host", host, "address to bind");
  sv->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  sv->add_option("--log", log, "append completed games to this JSON-lines file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*a) return cmd_analyze(analyze_arg, analyze_json);
    if (*g) return cmd_gen(gen_words, gen_battery);
    if (*v) return cmd_verify(suite, verify_json);
    if (*b) return cmd_bench(max_n, repeat, bench_json);
    if (*p) return cmd_play(play);
    if (*sv) return cmd_serve(host, port, log);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
