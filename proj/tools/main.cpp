// logizono: reachability, LFSR key search and zonotope inspection.
//
// Exit codes: 0 ok, 1 selftest failure, 2 usage/parse/validation error,
// 3 enumeration cap exceeded, 4 key search failed.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logizono/logizono.hpp"
#include "selftest.hpp"

namespace lz = logizono;

namespace {

enum Exit { kOk = 0, kSelftestFailed = 1, kUsage = 2, kCapacity = 3, kSearch = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

lz::Limits limits_with(std::optional<std::size_t> cap) {
  auto limits = lz::Limits::from_env();
  if (cap) limits.max_factors = *cap;
  return limits;
}

// "builtin:intersection" and "builtin:boolean10" avoid needing a file.
lz::Model resolve_model(const std::string& ref, std::uint64_t seed) {
  if (ref == "builtin:intersection") return lz::intersection_model();
  if (ref == "builtin:boolean10") return lz::boolean10_model(seed);
  if (ref.starts_with("builtin:")) throw UsageError("unknown builtin model '" + ref + "'");
  return lz::load_model(ref);
}

struct ReachArgs {
  std::string model;
  std::string steps = "1";
  std::string algebra = "poly";
  std::optional<std::string> mode;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  std::string output;
  bool dump_sets = false;
  bool break_deps = false;
  std::size_t reencode_above = 12;
};

int cmd_reach(const ReachArgs& a) {
  lz::ReachOptions opts;
  const auto algebra = lz::algebra_from_name(a.algebra);
  if (!algebra) throw UsageError("unknown algebra '" + a.algebra + "'");
  opts.algebra = *algebra;
  if (a.mode) {
    const auto mode = lz::mode_from_name(*a.mode);
    if (!mode) throw UsageError("unknown mode '" + *a.mode + "'");
    opts.mode = *mode;
  } else {
    opts.mode = opts.algebra == lz::Algebra::Poly ? lz::Mode::Exact : lz::Mode::Minkowski;
  }
  if (opts.mode == lz::Mode::Exact && opts.algebra != lz::Algebra::Poly) {
    throw UsageError("--mode exact requires --algebra poly");
  }
  if (a.dump_sets && a.format != "json") throw UsageError("--dump-sets needs --format json");
  opts.limits = limits_with(a.cap);
  opts.break_next_state_deps = a.break_deps;
  opts.reencode_above = a.reencode_above;
  opts.keep_sets = a.dump_sets;

  const auto model = resolve_model(a.model, a.seed.value_or(1));
  auto steps = parse_list(a.steps, "steps");
  std::sort(steps.begin(), steps.end());
  const auto result = lz::reach(model, steps, opts);

  const lz::ReportMeta meta{a.model, a.seed};
  write_output(a.output, a.format == "json" ? lz::report_json(result, meta, a.dump_sets)
                                            : lz::report_csv(result, meta));
  return kOk;
}

struct LfsrArgs {
  std::size_t lk = 60;
  std::string taps;
  std::string out_taps;
  std::optional<std::size_t> lm;
  std::string key_hex;
  std::uint64_t seed = 1;
};

int cmd_lfsr(const LfsrArgs& a) {
  auto spec = lz::LfsrSpec::scaled(a.lk);
  if (a.lk < 3) spec.feedback = {a.lk};
  if (!a.taps.empty()) spec.feedback = parse_list(a.taps, "tap");
  if (!a.out_taps.empty()) spec.output = parse_list(a.out_taps, "output tap");
  spec.message_length = a.lm.value_or(0);
  spec.validate();
  const std::size_t lm = spec.effective_message_length();

  std::mt19937_64 rng(a.seed);
  lz::BinaryVector key(a.lk);
  if (a.key_hex.empty()) {
    for (std::size_t i = 0; i < a.lk; ++i) key.set(i, rng() & 1);
  } else {
    key = lz::key_from_hex(a.key_hex, a.lk);
  }
  lz::BinaryVector message(lm);
  for (std::size_t i = 0; i < lm; ++i) message.set(i, rng() & 1);
  const auto cipher = lz::lfsr_encrypt(spec, key, message);

  std::cout << "# seed=" << a.seed << "\n"
            << "lk=" << a.lk << " lm=" << lm << " taps=" << join(spec.feedback)
            << " out_taps=" << join(spec.output) << "\n"
            << "key=" << lz::key_to_hex(key) << "\n";
  if (lm < a.lk) {
    std::cerr << "warning: message shorter than the key; the key may not be unique\n";
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto found = lz::lfsr_recover_key(spec, message, cipher);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const bool exact = found == key;
  std::cout << "recovered_key=" << lz::key_to_hex(found) << "\n"
            << "recovered=" << (exact ? "true" : "false") << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", elapsed);
  std::cout << "time_seconds=" << buf << "\n";
  if (!exact) {
    std::cerr << "warning: ambiguous keystream; a different key reproduces the ciphertext\n";
  }
  return kOk;
}

int cmd_eval(const std::string& input, std::optional<std::size_t> cap) {
  const auto value = lz::set_from_json(read_file(input));
  const auto points = lz::evaluate(value, limits_with(cap));
  std::cout << "# " << lz::algebra_name(lz::algebra_of(value)) << " dim=" << points.dim()
            << " size=" << points.size() << "\n";
  for (const auto& p : points.points()) std::cout << p.to_string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-based reachability with logical zonotopes"};
  app.set_version_flag("--version", "logizono 0.1.0");
  app.require_subcommand(1);

  ReachArgs reach;
  auto* r = app.add_subcommand("reach", "Reachable-set sizes of a model over N steps");
  r->add_option("--model", reach.model, "Model file, or builtin:intersection / builtin:boolean10")
      ->required();
  r->add_option("--steps", reach.steps, "Comma-separated horizons");
  r->add_option("--algebra,--rep", reach.algebra, "explicit, logical or poly");
  r->add_option("--mode", reach.mode, "minkowski or exact (exact only with poly)");
  r->add_option("--cap", reach.cap, "Max enumerated factors (default 24 or LOGIZONO_CAP)");
  r->add_option("--seed", reach.seed, "Seed for generated models; recorded in the header");
  r->add_option("--format", reach.format)->check(CLI::IsMember({"csv", "json"}));
  r->add_option("--output,-o", reach.output, "Write here instead of stdout");
  r->add_flag("--dump-sets", reach.dump_sets, "Include per-variable sets (json)");
  r->add_flag("--break-next-state-deps", reach.break_deps,
              "Treat primed references as independent of the update that produced them");
  r->add_option("--reencode-above", reach.reencode_above,
                "Re-encode state groups with more factors than this (0 disables)");

  LfsrArgs lfsr;
  auto* l = app.add_subcommand("lfsr", "Recover an LFSR key from a known message");
  l->add_option("--lk", lfsr.lk, "Key / register length")->check(CLI::Range(2, 4096));
  l->add_option("--taps", lfsr.taps, "Feedback taps, 1-based, comma-separated");
  l->add_option("--out-taps", lfsr.out_taps, "Output taps");
  l->add_option("--lm", lfsr.lm, "Message length (default 2*lk)")->check(CLI::PositiveNumber);
  l->add_option("--key-hex", lfsr.key_hex, "Key to use instead of a random one");
  l->add_option("--seed", lfsr.seed, "Seed for the key and message");

  std::string input;
  std::optional<std::size_t> eval_cap;
  auto* e = app.add_subcommand("eval", "Enumerate the points of a serialized set");
  e->add_option("--input", input, "Zonotope or point-set JSON")->required();
  e->add_option("--cap", eval_cap, "Max enumerated factors");

  logizono::cli::SelftestOptions self;
  auto* s = app.add_subcommand("selftest", "Random operation checks against explicit sets");
  s->add_option("--trials", self.trials);
  s->add_option("--seed", self.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*r) return cmd_reach(reach);
    if (*l) return cmd_lfsr(lfsr);
    if (*e) return cmd_eval(input, eval_cap);
    return logizono::cli::run_selftest(self, std::cout) == 0 ? kOk : kSelftestFailed;
  } catch (const lz::CapacityError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kCapacity;
  } catch (const lz::SearchFailure& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kSearch;
  } catch (const lz::ParseError& err) {
    std::cerr << "error: " << err.what() << " (column " << err.column() << ")\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
}
