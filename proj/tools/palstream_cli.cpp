#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "palstream/genlib.hpp"
#include "palstream/oracle.hpp"
#include "palstream/stream.hpp"
#include "palstream/verify.hpp"

using namespace palstream;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;
constexpr u64 kDefaultN = u64{1} << 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand that drives an engine.
struct EngineFlags {
  std::string mode = "additive";
  u64 error = 1;
  double eps = 0.5;
  std::string engine = "compressed";
  std::string scheme = "auto";
  std::string odd = "double";
  u64 seed = 1;
  int skip_level = -1;

  void add(CLI::App* app, const std::string& engine_flag) {
    app->add_option("--mode", mode, "additive | multiplicative")
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    app->add_option("--error", error, "additive error E on original palindrome lengths");
    app->add_option("--eps", eps, "multiplicative slack; answer >= OPT / (1 + eps)");
    app->add_option(engine_flag, engine, "basic | compressed | both")
        ->check(CLI::IsMember({"basic", "compressed", "both"}));
    app->add_option("--scheme", scheme, "auto | sparse (sparse: multiplicative, basic engine only)")
        ->check(CLI::IsMember({"auto", "sparse"}));
    app->add_option("--odd", odd,
                    "double: duplicate every symbol so odd palindromes count; even-only: raw text, "
                    "reports 2 * radius")
        ->check(CLI::IsMember({"double", "even-only"}));
    app->add_option("--seed", seed, "fingerprint and generator seed");
    app->add_option("--fault-skip-level", skip_level, "testing: basic engine ignores this landmark level")
        ->group("");
  }

  std::vector<EngineKind> engines() const {
    if (engine == "both") return {EngineKind::basic, EngineKind::compressed};
    return {engine_kind_from(engine)};
  }

  StreamConfig config(u64 n) const {
    StreamConfig c;
    c.n = std::max<u64>(1, n);
    c.error = error;
    c.eps = eps;
    c.seed = seed;
    c.doubling = odd == "double";
    c.basic.skip_level = skip_level;
    if (scheme == "sparse") {
      if (mode != "multiplicative") throw UsageError("--scheme sparse needs --mode multiplicative");
      if (engine != "basic") throw UsageError("--scheme sparse runs on the basic engine only");
      c.kind = ApproxKind::multiplicative_sparse;
    } else {
      c.kind = mode == "additive" ? ApproxKind::additive : ApproxKind::multiplicative;
    }
    return c;
  }

  std::string mode_label() const { return scheme == "sparse" ? "sparse" : mode; }
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input: " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// One code per line; distinct lines get distinct codes in order of appearance.
std::vector<u64> line_codes(const std::string& data) {
  std::unordered_map<std::string, u64> ids;
  std::vector<u64> out;
  std::istringstream in(data);
  for (std::string line; std::getline(in, line);) {
    auto [it, fresh] = ids.emplace(line, ids.size() + 1);
    out.push_back(it->second);
  }
  return out;
}

json telemetry(const PalindromeStream& st) {
  json t{{"checks", st.checks()},
         {"landmark_words", st.landmark_words()},
         {"peak_landmark_words", st.peak_landmark_words()},
         {"peak_aux_words", st.peak_aux_words()},
         {"levels", st.scheme().levels.size()},
         {"top_level", st.scheme().L}};
  if (auto* c = st.compressed()) {
    const auto& s = c->stats();
    t["segments"] = c->partition().segment_count();
    t["fallback_families"] = s.fallback_families;
    t["extent_builds"] = s.extent_builds;
    t["merges"] = s.merge.merges;
    t["densified"] = s.merge.densified;
    t["premise_violations"] = s.merge.premise_violations;
    t["wide_periods"] = s.merge.wide_periods;
  }
  return t;
}

int cmd_run(const EngineFlags& ef, const std::string& input, u64 n_flag, const std::string& emit,
            bool want_telemetry, bool tokens_lines, bool with_opt) {
  if (ef.engine == "both") throw UsageError("run takes a single engine");
  const std::string data = read_all(input);
  const std::vector<u64> codes = tokens_lines ? line_codes(data) : byte_codes(data);
  const u64 n = n_flag ? n_flag : std::max<u64>(kDefaultN, codes.size());
  if (codes.size() > n) throw UsageError("input has " + std::to_string(codes.size()) + " symbols, more than --n");

  StreamConfig cfg = ef.config(n);
  cfg.engine = engine_kind_from(ef.engine);
  PalindromeStream st(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t j = 0; j < codes.size(); ++j) {
    const u64 a = st.push(codes[j]);
    if (emit == "per-char") std::cout << json{{"h", j + 1}, {"answer", a}}.dump() << '\n';
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (emit == "final") {
    json rep{{"n", n},
             {"length", codes.size()},
             {"mode", ef.mode_label()},
             {"engine", ef.engine},
             {"answer", st.answer()},
             {"peak_aux_words", st.peak_aux_words()},
             {"peak_landmark_entries", st.peak_landmark_words() / kWordsPerEntry},
             {"seconds", secs}};
    if (with_opt) {
      Text t(codes.begin(), codes.end());
      auto opt = prefix_longest(t, !cfg.doubling);
      rep["opt"] = opt.empty() ? 0 : opt.back();
    }
    if (want_telemetry) rep["telemetry"] = telemetry(st);
    std::cout << rep.dump() << '\n';
  } else if (want_telemetry) {
    std::cerr << telemetry(st).dump() << '\n';
  }
  return 0;
}

struct GenFlags {
  std::string kind = "random";
  unsigned alphabet = 2;
  std::string period = "ab";
  unsigned sigma = 2;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "random | periodic | nu | planted | morphism")
        ->check(CLI::IsMember({"random", "periodic", "nu", "planted", "morphism"}));
    app->add_option("--alphabet", alphabet, "alphabet size for random filler")->check(CLI::Range(2u, 256u));
    app->add_option("--period", period, "word repeated by --kind periodic");
    app->add_option("--sigma", sigma, "source alphabet for --kind morphism")->check(CLI::Range(1u, 64u));
  }

  GenSpec spec(std::size_t len, u64 seed, std::mt19937_64& rng) const {
    GenSpec g;
    g.kind = gen_kind_from(kind);
    g.length = len;
    g.alphabet = alphabet;
    g.seed = seed;
    g.period = period;
    g.sigma = sigma;
    if (g.kind == GenKind::planted) {
      g.planted_len = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, len))(rng);
      g.planted_pos = std::uniform_int_distribution<std::size_t>(0, len - std::min(len, g.planted_len))(rng);
    }
    if (g.kind == GenKind::morphism) g.length = std::max<std::size_t>(1, len / (2 * sigma + 6));
    return g;
  }
};

int cmd_verify(const EngineFlags& ef, const GenFlags& gf, u64 trials, u64 max_len, bool want_telemetry) {
  if (max_len > kPerPrefixGuard)
    throw UsageError("--max-len above " + std::to_string(kPerPrefixGuard) + " exceeds the per-prefix oracle guard");
  if (max_len == 0) throw UsageError("--max-len must be positive");
  std::mt19937_64 rng(ef.seed);
  VerifyReport rep;
  const auto engines = ef.engines();
  std::size_t longest = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (u64 t = 0; t < trials; ++t) {
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    GenSpec g = gf.spec(len, ef.seed * 1000003 + t, rng);
    std::string text = generate(g);
    longest = std::max(longest, text.size());
    StreamConfig cfg = ef.config(std::max<u64>(max_len, text.size()));
    verify_text(cfg, engines, text, json(g).dump(), rep);
  }
  json out = rep.to_json();
  out["mode"] = ef.mode_label();
  out["engines"] = ef.engine;
  out["kind"] = gf.kind;
  out["longest_case"] = longest;
  if (want_telemetry)
    out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << out.dump() << '\n';
  return rep.violations ? kExitViolation : 0;
}

int cmd_gen(const GenFlags& gf, std::size_t len, u64 seed, const std::string& spec_json) {
  GenSpec g;
  if (!spec_json.empty()) {
    try {
      g = json::parse(spec_json).get<GenSpec>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad --spec: ") + e.what());
    }
  } else {
    std::mt19937_64 rng(seed);
    g = gf.spec(len, seed, rng);
  }
  std::cout << generate(g);
  return 0;
}

int cmd_bench(const EngineFlags& ef, const GenFlags& gf, u64 n, unsigned sweep) {
  json rows = json::array();
  double prev = 0;
  for (unsigned i = 0; i < sweep; ++i, n *= 2) {
    std::mt19937_64 rng(ef.seed);
    std::string text = generate(gf.spec(n, ef.seed, rng));
    for (EngineKind e : ef.engines()) {
      StreamConfig cfg = ef.config(n);
      cfg.engine = e;
      PalindromeStream st(cfg);
      const auto t0 = std::chrono::steady_clock::now();
      for (unsigned char c : text) st.push(symbol_code(c));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      json row{{"n", n},
               {"engine", to_string(e)},
               {"answer", st.answer()},
               {"seconds", secs},
               {"peak_words", st.peak_landmark_words() + st.peak_aux_words()}};
      if (ef.engines().size() == 1 && prev > 0) row["time_ratio"] = secs / prev;
      prev = secs;
      rows.push_back(row);
    }
  }
  std::cout << json{{"mode", ef.mode_label()}, {"kind", gf.kind}, {"runs", rows}}.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Streaming longest-palindrome approximation.\n"
      "--error and --eps refer to palindrome lengths in the original text; with doubling the engine\n"
      "runs on the text with every symbol repeated and reports radii, which are those lengths."};
  app.require_subcommand(1);

  EngineFlags run_ef, ver_ef, bench_ef;
  GenFlags ver_gf, gen_gf, bench_gf;

  std::string input = "-", emit = "final";
  u64 n_flag = 0;
  bool run_tel = false, tokens_lines = false, with_opt = false;
  auto* run = app.add_subcommand("run", "stream input through an engine");
  run_ef.add(run, "--engine");
  run->add_option("--input", input, "file path or - for standard input");
  run->add_option("--n", n_flag, "declared maximum stream length (default: 2^20, or the input length if longer)");
  run->add_option("--emit", emit, "final | per-char")->check(CLI::IsMember({"final", "per-char"}));
  run->add_flag("--telemetry", run_tel, "report memory and work counters");
  run->add_option_function<std::string>(
         "--tokens", [&](const std::string& v) { tokens_lines = v == "lines"; }, "lines: one symbol per line")
      ->check(CLI::IsMember({"lines"}));
  run->add_flag("--oracle", with_opt, "also report the exact answer");

  u64 trials = 100, max_len = 2048;
  bool ver_tel = false;
  auto* ver = app.add_subcommand("verify", "check engines against the exact oracle at every prefix");
  ver_ef.add(ver, "--engines,--engine");
  ver_gf.add(ver);
  ver->add_option("--trials", trials, "number of generated cases");
  ver->add_option("--max-len", max_len, "case lengths are uniform in [1, max-len]");
  ver->add_flag("--telemetry", ver_tel, "report timing");

  std::size_t gen_len = 64;
  u64 gen_seed = 1;
  std::string spec_json;
  auto* gen = app.add_subcommand("gen", "print a generated text");
  gen_gf.add(gen);
  gen->add_option("--length", gen_len, "text length");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--spec", spec_json, "full generator spec as JSON");

  u64 bench_n = 1 << 16;
  unsigned sweep = 1;
  auto* bench = app.add_subcommand("bench", "time engines on generated input");
  bench_ef.add(bench, "--engine");
  bench_gf.add(bench);
  bench->add_option("--n", bench_n, "stream length");
  bench->add_option("--sweep", sweep, "number of doublings of n")->check(CLI::Range(1u, 12u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_ef, input, n_flag, emit, run_tel, tokens_lines, with_opt);
    if (*ver) return cmd_verify(ver_ef, ver_gf, trials, max_len, ver_tel);
    if (*gen) return cmd_gen(gen_gf, gen_len, gen_seed, spec_json);
    if (*bench) return cmd_bench(bench_ef, bench_gf, bench_n, sweep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
