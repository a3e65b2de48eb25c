/* Command-line front end: construction, verification, stream access, the
 * canonical backtracking search, the deletion-channel codec demo, and block
 * code utilities. Exit codes: 0 pass/success, 1 verified violation or decode
 * failure, 2 usage error, 3 budget exhaustion. */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syncstr/codec.hpp"
#include "syncstr/construct.hpp"
#include "syncstr/ecc.hpp"
#include "syncstr/errors.hpp"
#include "syncstr/extremal.hpp"
#include "syncstr/fraction.hpp"
#include "syncstr/io.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/sampler.hpp"
#include "syncstr/small_alphabet.hpp"
#include "syncstr/stream.hpp"
#include "syncstr/sync_string.hpp"
#include "syncstr/verify.hpp"

using json = nlohmann::json;
using namespace syncstr;

namespace {

constexpr int kSchema = 1;

/* ---------- small helpers ---------- */

Fraction flag_fraction(const std::string& text, const char* flag) {
  try {
    return Fraction::parse(text);
  } catch (const std::exception& e) {
    throw param_error(std::string(flag) + ": " + e.what());
  }
}

/* Fractions gating verdicts must sit strictly inside (0, 1). */
Fraction unit_fraction(const std::string& text, const char* flag) {
  const Fraction f = flag_fraction(text, flag);
  if (!(Fraction(0) < f && f < Fraction(1)))
    throw param_error(std::string(flag) + ": " + f.str() +
                      " is outside (0, 1)");
  return f;
}

json violation_json(const Violation& v) {
  return json{{"kind", v.kind},
              {"indices", v.indices},
              {"rotation", v.rotation},
              {"achieved", v.achieved.str()},
              {"required", v.required.str()}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw param_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw param_error("write failed for '" + path + "'");
}

/* ---------- output plumbing shared by construct / stream / ecc ---------- */

struct Emit {
  std::string out;              // --out: file for the payload
  std::string report_path;      // --report: file for the JSON report
  std::string format = "lines"; // --format for string payloads
};

void add_emit_flags(CLI::App* cmd, Emit& e, bool with_format) {
  cmd->add_option("-o,--out", e.out,
                  "write the payload here instead of stdout");
  cmd->add_option("--report", e.report_path, "also write the JSON report here");
  if (with_format)
    cmd->add_option("--format", e.format, "string payload form")
        ->check(CLI::IsMember({"lines", "compact"}))
        ->capture_default_str();
}

StringFormat parse_format(const Emit& e, const SyncString& s) {
  if (e.format == "compact") {
    if (s.alphabet_size > 36)
      throw param_error("--format: compact form requires alphabet <= 36");
    return StringFormat::compact;
  }
  return StringFormat::lines;
}

/* Payload to --out (report JSON on stdout) or to stdout with the metadata
 * and the compact report riding along as '#' comments. */
void emit_payload(const Emit& e, const std::string& payload,
                  const std::vector<std::string>& meta, const json& report) {
  if (!e.report_path.empty()) write_text(e.report_path, report.dump(2) + "\n");
  std::string commented;
  for (const std::string& line : meta) commented += "# " + line + "\n";
  commented += "# report=" + report.dump() + "\n";
  if (e.out.empty()) {
    std::cout << commented << payload;
  } else {
    write_text(e.out, commented + payload);
    print_json(report);
  }
}

void emit_string(const Emit& e, const SyncString& s,
                 const std::vector<std::string>& meta, const json& report) {
  emit_payload(e, format_string_file(s, parse_format(e, s)), meta, report);
}

/* ---------- verify ---------- */

int emit_verdict(json report, const VerifyResult& vr) {
  report["checks"] = vr.checks;
  if (vr.pass()) {
    report["verdict"] = "pass";
    print_json(report);
    return 0;
  }
  report["verdict"] = "violation";
  report["violation"] = violation_json(*vr.violation);
  print_json(report);
  return 1;
}

struct VerifyArgs {
  std::string eps_text;
  std::string c_text;  // long-distance only
  std::string file;
  bool exhaustive = false;
};

int run_verify(const std::string& kind, const VerifyArgs& a) {
  const SyncString s = read_string_file(a.file);
  json report{{"schema", kSchema},
              {"command", "verify " + kind},
              {"params",
               json{{"file", a.file},
                    {"n", s.symbols.size()},
                    {"alphabet", s.alphabet_size}}}};
  if (kind == "square-free") return emit_verdict(report, verify_square_free(s));

  const Fraction eps = unit_fraction(a.eps_text, "--eps");
  report["params"]["eps"] = eps.str();
  if (kind == "sync") return emit_verdict(report, verify_sync(s, eps));
  if (kind == "circle") return emit_verdict(report, verify_circle(s, eps));
  if (kind == "weak") return emit_verdict(report, verify_weak(s, eps));

  /* long-distance: default length-scale constant c = ceil(eps^-2) */
  Fraction c = a.c_text.empty()
                   ? Fraction((Fraction(1) / (eps * eps)).ceil(), 1)
                   : flag_fraction(a.c_text, "--c");
  if (c.is_negative() || c.is_zero())
    throw param_error("--c: must be positive");
  report["params"]["c"] = c.str();
  report["params"]["exhaustive"] = a.exhaustive;
  return emit_verdict(report, verify_long_distance(s, eps, c, a.exhaustive));
}

/* ---------- construct ---------- */

struct ConstructArgs {
  int64_t n = 0;
  std::string eps_text;
  std::string eps_prime_text;
  std::string delta_text;
  int64_t c1 = 32, c2 = 16;
  int64_t m = 0, c = 0;
  int64_t max_rounds = 0;
  uint64_t seed = 0;
  Emit emit;
};

int run_construct_random(const ConstructArgs& a) {
  SamplerParams p{unit_fraction(a.eps_text, "--eps")};
  p.c1 = a.c1;
  p.c2 = a.c2;
  const LllResult r = construct_lll(p, a.n, a.seed, a.max_rounds);
  const json report{
      {"schema", kSchema},
      {"command", "construct random"},
      {"params", json{{"n", a.n},
                      {"eps", p.eps.str()},
                      {"c1", a.c1},
                      {"c2", a.c2},
                      {"seed", a.seed},
                      {"max_rounds", a.max_rounds},
                      {"rng", kRngId}}},
      {"result", json{{"sigma", p.sigma()},
                      {"t", p.t()},
                      {"resamplings", r.resamplings},
                      {"fully_verified", r.fully_verified}}},
      {"verdict", "pass"}};
  emit_string(a.emit, r.s,
              {"construct random", "eps=" + p.eps.str(),
               "n=" + std::to_string(a.n), "seed=" + std::to_string(a.seed),
               "resamplings=" + std::to_string(r.resamplings)},
              report);
  return 0;
}

int run_construct_det(const ConstructArgs& a) {
  const Fraction eps = unit_fraction(a.eps_text, "--eps");
  BuildOverrides over;
  over.m = a.m;
  over.c = a.c;
  if (!a.delta_text.empty())
    over.delta = unit_fraction(a.delta_text, "--delta");
  const BuildResult r = build_long_distance(a.n, eps, a.seed, over);
  const json report{
      {"schema", kSchema},
      {"command", "construct det"},
      {"params", json{{"n", a.n},
                      {"eps", eps.str()},
                      {"seed", a.seed},
                      {"rng", kRngId}}},
      {"plan", json{{"eps0", r.plan.eps0.str()},
                    {"delta", r.plan.delta.str()},
                    {"alpha", r.plan.alpha.str()},
                    {"eps1", r.plan.eps1.str()},
                    {"eps_long", r.plan.eps_long.str()}}},
      {"code", json{{"m", r.m},
                    {"ell", r.ell},
                    {"d", r.d},
                    {"k", r.k},
                    {"q_code", r.q_code},
                    {"q_circle", r.q_circle}}},
      {"result", json{{"c", r.c.str()},
                      {"alphabet", r.s.alphabet_size},
                      {"fully_verified", r.fully_verified}}},
      {"verdict", "pass"}};
  emit_string(a.emit, r.s,
              {"construct det", "eps=" + eps.str(),
               "n=" + std::to_string(a.n), "seed=" + std::to_string(a.seed),
               "c=" + r.c.str(), "m=" + std::to_string(r.m)},
              report);
  return 0;
}

int run_construct_square_free(const ConstructArgs& a) {
  const SyncString s = thue_square_free(a.n);
  const json report{{"schema", kSchema},
                    {"command", "construct square-free"},
                    {"params", json{{"n", a.n}}},
                    {"result", json{{"alphabet", s.alphabet_size}}},
                    {"verdict", "pass"}};
  emit_string(a.emit, s,
              {"construct square-free", "n=" + std::to_string(a.n)}, report);
  return 0;
}

int run_construct_weak_binary(const ConstructArgs& a) {
  const WeakBinaryPlan plan =
      make_weak_plan(unit_fraction(a.eps_prime_text, "--eps-prime"));
  const WeakBinaryResult r = weak_binary(a.n, plan, a.seed);
  const json report{
      {"schema", kSchema},
      {"command", "construct weak-binary"},
      {"params", json{{"n", a.n},
                      {"eps_prime", plan.eps_prime.str()},
                      {"seed", a.seed},
                      {"rng", kRngId}}},
      {"plan", json{{"sigma", plan.sigma},
                    {"bits_per_symbol", plan.k},
                    {"eps", plan.eps.str()}}},
      {"result", json{{"fully_verified", r.fully_verified}}},
      {"verdict", "pass"}};
  emit_string(a.emit, r.s,
              {"construct weak-binary", "eps_prime=" + plan.eps_prime.str(),
               "eps=" + plan.eps.str(), "n=" + std::to_string(a.n),
               "seed=" + std::to_string(a.seed)},
              report);
  return 0;
}

int run_construct_four_letter(const ConstructArgs& a) {
  const Fraction eps = unit_fraction(a.eps_text, "--eps");
  const FourLetterResult r = four_letter(a.n, eps, a.seed);
  const json report{
      {"schema", kSchema},
      {"command", "construct four-letter"},
      {"params", json{{"n", a.n},
                      {"eps", eps.str()},
                      {"seed", a.seed},
                      {"rng", kRngId}}},
      {"plan", json{{"eps_prime", r.eps_prime.str()},
                    {"weak_bits", r.weak.s.symbols.size()}}},
      {"result", json{{"fully_verified", r.fully_verified}}},
      {"verdict", "pass"}};
  emit_string(a.emit, r.s,
              {"construct four-letter", "eps=" + eps.str(),
               "n=" + std::to_string(a.n), "seed=" + std::to_string(a.seed)},
              report);
  return 0;
}

/* ---------- stream ---------- */

struct StreamArgs {
  std::string eps_text;
  uint64_t seed = 0;
  int64_t pos = 0;
  int64_t len = 0;
  int64_t n = 0;
  Emit emit;
};

int run_stream(const std::string& which, const StreamArgs& a) {
  StreamConfig cfg;
  cfg.eps = unit_fraction(a.eps_text, "--eps");
  cfg.seed = a.seed;
  Stream stream(cfg);

  int64_t pos = a.pos, len = a.len;
  if (which == "at") len = 1;
  if (which == "prefix") {
    pos = 1;
    len = a.n;
  }
  if (pos < 1) throw param_error("--pos: must be >= 1");
  if (len < 0) throw param_error(std::string(which == "prefix" ? "--n" : "--len") +
                                 ": must be >= 0");
  const SyncString s = stream.window(pos, len);

  json blocks = json::array();
  for (const BlockInfo& b : stream.built_blocks())
    blocks.push_back(json{{"t", b.t},
                          {"length", b.length},
                          {"source", b.source},
                          {"fully_verified", b.fully_verified},
                          {"resamplings", b.resamplings}});
  const json report{{"schema", kSchema},
                    {"command", "stream " + which},
                    {"params", json{{"eps", cfg.eps.str()},
                                    {"seed", a.seed},
                                    {"pos", pos},
                                    {"len", len},
                                    {"rng", kRngId}}},
                    {"config", json{{"k", cfg.k()},
                                    {"q", cfg.q()},
                                    {"alphabet", 2 * cfg.q()}}},
                    {"blocks", blocks},
                    {"verdict", "pass"}};
  emit_string(a.emit, s,
              {"stream " + which, "eps=" + cfg.eps.str(),
               "seed=" + std::to_string(a.seed),
               "k=" + std::to_string(cfg.k()), "q=" + std::to_string(cfg.q()),
               "pos=" + std::to_string(pos), "len=" + std::to_string(len)},
              report);
  return 0;
}

/* ---------- search-bk ---------- */

struct SearchArgs {
  int64_t k = 0;
  std::string eps_text;
  int64_t budget = int64_t(1) << 62;
  int64_t threads = 1;
  std::string resume_path;
  std::string checkpoint_path;
};

json read_json_file(const std::string& path, const char* flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw param_error(std::string(flag) + ": cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw param_error(std::string(flag) + ": " + e.what());
  }
  return j;
}

int run_search(const SearchArgs& a) {
  const Fraction eps = unit_fraction(a.eps_text, "--eps");
  if (a.threads < 1) throw param_error("--threads: must be >= 1");
  if (a.budget < 0) throw param_error("--budget: must be >= 0");

  SearchCertificate cert;
  if (a.resume_path.empty()) {
    cert = search_bk(a.k, eps, a.budget);
  } else {
    const json j = read_json_file(a.resume_path, "--resume");
    try {
      if (int64_t(j.at("k")) != a.k ||
          Fraction::parse(j.at("eps")) != eps)
        throw param_error("checkpoint was made for different parameters");
      SearchState st;
      for (const auto& v : j.at("path")) st.path.push_back(Symbol(v));
      st.next_symbol = j.at("next_symbol");
      st.nodes_visited = j.at("nodes_visited");
      st.max_length = j.at("max_length");
      st.worst_ratio_seen = Fraction::parse(j.at("worst_ratio_seen"));
      cert = search_bk_resume(a.k, eps, a.budget, st);
    } catch (const json::exception& e) {
      throw param_error(std::string("--resume: ") + e.what());
    }
  }

  const json report{{"schema", kSchema},
                    {"command", "search-bk"},
                    {"params", json{{"k", a.k},
                                    {"eps", eps.str()},
                                    {"budget", a.budget},
                                    {"threads", a.threads}}},
                    {"terminated", cert.terminated},
                    {"max_length", cert.max_length},
                    {"nodes_visited", cert.nodes_visited},
                    {"worst_ratio_seen", cert.worst_ratio_seen.str()},
                    {"frontier", cert.frontier},
                    {"next_symbol", cert.next_symbol},
                    {"verdict", cert.terminated ? "pass" : "budget-exhausted"}};
  print_json(report);

  if (!cert.terminated && !a.checkpoint_path.empty()) {
    const json ck{{"schema", kSchema},
                  {"kind", "search-bk-checkpoint"},
                  {"k", a.k},
                  {"eps", eps.str()},
                  {"path", cert.frontier},
                  {"next_symbol", cert.next_symbol},
                  {"nodes_visited", cert.nodes_visited},
                  {"max_length", cert.max_length},
                  {"worst_ratio_seen", cert.worst_ratio_seen.str()}};
    write_text(a.checkpoint_path, ck.dump(2) + "\n");
  }
  return cert.terminated ? 0 : 3;
}

/* ---------- codec demo ---------- */

struct CodecArgs {
  int64_t n = 0;
  std::string eps_text;
  std::string delta_text;
  int64_t traces = 100;
  uint64_t seed = 0;
};

int run_codec_demo(const CodecArgs& a) {
  const Fraction eps = unit_fraction(a.eps_text, "--eps");
  const Fraction delta = flag_fraction(a.delta_text, "--delta");
  if (!(Fraction(0) < delta && delta <= Fraction(1)))
    throw param_error("--delta: must lie in (0, 1]");
  if (a.n < 2) throw param_error("--n: must be >= 2");
  if (a.traces < 1) throw param_error("--traces: must be >= 1");

  const int64_t d = int64_t((delta * Fraction(a.n)).ceil());
  const int64_t k = a.n - d + 1;
  const uint64_t q = next_prime(uint64_t(a.n) < 2 ? 2 : uint64_t(a.n));
  const BlockCode code = rs_code(a.n, k, q);
  const LllResult built = construct_lll(SamplerParams{eps}, a.n, a.seed);
  const int64_t budget = deletion_budget(code, eps);

  Rng rng(mix_seed(a.seed, 0x636f646563));
  json trace_rows = json::array();
  int64_t decoded_ok = 0;
  for (int64_t i = 0; i < a.traces; ++i) {
    const int64_t message = int64_t(rng.below(code.codewords.size()));
    const int64_t count = int64_t(rng.below(uint64_t(budget) + 1));
    const ChannelTrace trace =
        random_deletions(a.n, count, mix_seed(a.seed, uint64_t(i) + 1));
    const std::optional<int64_t> got =
        decode(transmit(encode(message, code, built.s), trace), code, built.s);
    const bool ok = got.has_value() && *got == message;
    decoded_ok += ok;
    trace_rows.push_back(json{{"trace", i},
                              {"deletions", count},
                              {"message", message},
                              {"ok", ok}});
  }

  const Fraction rate(decoded_ok, a.traces);
  const json report{
      {"schema", kSchema},
      {"command", "codec demo"},
      {"params", json{{"n", a.n},
                      {"eps", eps.str()},
                      {"delta", delta.str()},
                      {"traces", a.traces},
                      {"seed", a.seed},
                      {"rng", kRngId}}},
      {"code", json{{"m", a.n}, {"d", d}, {"k", k}, {"q", q},
                    {"messages", code.codewords.size()}}},
      {"deletion_budget", budget},
      {"results", trace_rows},
      {"decoded", decoded_ok},
      {"total", a.traces},
      {"success_rate", rate.str()},
      {"verdict", decoded_ok == a.traces ? "pass" : "decode-failure"}};
  print_json(report);
  return decoded_ok == a.traces ? 0 : 1;
}

/* ---------- ecc ---------- */

struct EccArgs {
  int64_t m = 0, k = 0, d = 0;
  uint64_t q = 0;
  int64_t count = 0;
  std::string eps_text;
  std::string target_text;
  std::string outer_path, inner_path, code_path, received_text;
  Emit emit;
};

void emit_code(const Emit& e, const BlockCode& code, const std::string& name,
               json report) {
  report["code"] = json{{"m", code.m},
                        {"q", code.q},
                        {"d", code.d},
                        {"count", code.codewords.size()},
                        {"measured_distance", code.measured_distance()}};
  emit_payload(e, format_code_file(code), {name}, report);
}

int run_ecc_build_greedy(const EccArgs& a) {
  GreedyResult r;
  json params{{"m", a.m}};
  if (!a.eps_text.empty()) {
    if (a.q || a.d)
      throw param_error("--eps: give either --eps or --q/--d, not both");
    const Fraction eps = unit_fraction(a.eps_text, "--eps");
    r = greedy_code(a.m, eps);
    params["eps"] = eps.str();
  } else {
    if (!a.q || !a.d)
      throw param_error("--q: --q and --d are both needed without --eps");
    bigint target = 0;
    if (!a.target_text.empty()) {
      try {
        target = bigint(a.target_text);
      } catch (const std::exception&) {
        throw param_error("--target: bad integer '" + a.target_text + "'");
      }
    }
    r = greedy_code_forced(a.m, a.q, a.d, target);
    params["q"] = a.q;
    params["d"] = a.d;
    params["target"] = target.str();
  }
  json report{{"schema", kSchema},
              {"command", "ecc build-greedy"},
              {"params", params},
              {"target", r.target.str()},
              {"reached", r.reached},
              {"verdict", "pass"}};
  emit_code(a.emit, r.code, "ecc build-greedy", report);
  return 0;
}

int run_ecc_build_rs(const EccArgs& a) {
  const BlockCode code = a.count > 0 ? rs_first(a.m, a.k, a.q, a.count)
                                     : rs_code(a.m, a.k, a.q);
  emit_code(a.emit, code, "ecc build-rs",
            json{{"schema", kSchema},
                 {"command", "ecc build-rs"},
                 {"params", json{{"m", a.m},
                                 {"k", a.k},
                                 {"q", a.q},
                                 {"count", a.count}}},
                 {"verdict", "pass"}});
  return 0;
}

int run_ecc_concat(const EccArgs& a) {
  const BlockCode outer = read_code_file(a.outer_path);
  const BlockCode inner = read_code_file(a.inner_path);
  emit_code(a.emit, concat_code(outer, inner), "ecc concat",
            json{{"schema", kSchema},
                 {"command", "ecc concat"},
                 {"params", json{{"outer", a.outer_path},
                                 {"inner", a.inner_path}}},
                 {"verdict", "pass"}});
  return 0;
}

int run_ecc_decode(const EccArgs& a) {
  const BlockCode code = read_code_file(a.code_path);
  std::vector<int64_t> received;
  std::string tok;
  for (char c : a.received_text + ",") {
    if (c == ',') {
      if (!tok.empty()) {
        try {
          received.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          throw param_error("--received: bad integer '" + tok + "'");
        }
        tok.clear();
      }
    } else {
      tok.push_back(c);
    }
  }
  if (int64_t(received.size()) != code.m)
    throw param_error("--received: expected " + std::to_string(code.m) +
                      " comma-separated entries");
  const std::optional<int64_t> got = decode_half_errors(code, received);
  json report{{"schema", kSchema},
              {"command", "ecc decode"},
              {"params", json{{"code", a.code_path},
                              {"received", a.received_text}}},
              {"decoded", got.has_value()},
              {"verdict", got.has_value() ? "pass" : "decode-failure"}};
  if (got) report["message"] = *got;
  print_json(report);
  return got ? 0 : 1;
}

/* ---------- report morphism ---------- */

int run_report_morphism(int64_t max_m) {
  if (max_m < 0) throw param_error("--max-m: must be >= 0");
  const std::vector<DegradationRow> rows =
      morphism_degradation(cyclic_ternary_morphism(), max_m);
  json table = json::array();
  for (const DegradationRow& r : rows)
    table.push_back(json{{"m", r.m},
                         {"lcs", r.lcs},
                         {"length", r.length.str()},
                         {"ratio", r.ratio.str()}});
  print_json(json{{"schema", kSchema},
                  {"command", "report morphism"},
                  {"params", json{{"max_m", max_m}}},
                  {"rows", table},
                  {"verdict", "pass"}});
  return 0;
}

void add_seed_flag(CLI::App* cmd, uint64_t& seed) {
  cmd->add_option("--seed", seed, "rng seed")
      ->envname("SYNCSTR_SEED")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synchronization-string toolkit"};
  app.require_subcommand(1);
  int code = 0;

  /* construct */
  auto* construct = app.add_subcommand("construct", "build strings");
  construct->require_subcommand(1);
  ConstructArgs ca;

  auto* c_random = construct->add_subcommand(
      "random", "resampled string passing the adjacent-interval check");
  c_random->add_option("--n", ca.n, "length")->required();
  c_random->add_option("--eps", ca.eps_text, "quality NUM/DEN")->required();
  c_random->add_option("--c1", ca.c1, "alphabet constant")->capture_default_str();
  c_random->add_option("--c2", ca.c2, "lookback constant")->capture_default_str();
  c_random->add_option("--max-rounds", ca.max_rounds,
                       "resampling budget, 0 = 50n")->capture_default_str();
  add_seed_flag(c_random, ca.seed);
  add_emit_flags(c_random, ca.emit, true);
  c_random->callback([&] { code = run_construct_random(ca); });

  auto* c_det = construct->add_subcommand(
      "det", "code-times-circle long-distance construction");
  c_det->add_option("--n", ca.n, "length")->required();
  c_det->add_option("--eps", ca.eps_text, "quality NUM/DEN")->required();
  c_det->add_option("--m", ca.m, "block length override, 0 = ceil(c log2 n)")
      ->capture_default_str();
  c_det->add_option("--c", ca.c, "length-scale constant override, 0 = ceil(eps^-2)")
      ->capture_default_str();
  c_det->add_option("--delta", ca.delta_text,
                    "code distance fraction override NUM/DEN");
  add_seed_flag(c_det, ca.seed);
  add_emit_flags(c_det, ca.emit, true);
  c_det->callback([&] { code = run_construct_det(ca); });

  auto* c_sf = construct->add_subcommand("square-free",
                                         "ternary square-free prefix");
  c_sf->add_option("--n", ca.n, "length")->required();
  add_emit_flags(c_sf, ca.emit, true);
  c_sf->callback([&] { code = run_construct_square_free(ca); });

  auto* c_wb = construct->add_subcommand(
      "weak-binary", "binary string passing the weak check");
  c_wb->add_option("--n", ca.n, "length")->required();
  c_wb->add_option("--eps-prime", ca.eps_prime_text,
                   "source quality NUM/DEN")->required();
  add_seed_flag(c_wb, ca.seed);
  add_emit_flags(c_wb, ca.emit, true);
  c_wb->callback([&] { code = run_construct_weak_binary(ca); });

  auto* c_fl = construct->add_subcommand(
      "four-letter", "four-letter string for eps in (11/12, 1)");
  c_fl->add_option("--n", ca.n, "length")->required();
  c_fl->add_option("--eps", ca.eps_text, "quality NUM/DEN")->required();
  add_seed_flag(c_fl, ca.seed);
  add_emit_flags(c_fl, ca.emit, true);
  c_fl->callback([&] { code = run_construct_four_letter(ca); });

  /* verify */
  auto* verify = app.add_subcommand("verify", "check a string file");
  verify->require_subcommand(1);
  VerifyArgs va;
  for (const char* kind :
       {"sync", "circle", "weak", "long-distance", "square-free"}) {
    auto* v = verify->add_subcommand(
        kind, std::string("check the ") + kind + " property");
    if (std::string(kind) != "square-free")
      v->add_option("--eps", va.eps_text, "quality NUM/DEN")->required();
    if (std::string(kind) == "long-distance") {
      v->add_option("--c", va.c_text,
                    "length-scale constant NUM/DEN, default ceil(eps^-2)");
      v->add_flag("--exhaustive", va.exhaustive,
                  "all adjacent lengths plus every pair above the scale");
    }
    v->add_option("file", va.file, "string file")->required();
    v->callback([&, kind] { code = run_verify(kind, va); });
  }

  /* stream */
  auto* stream = app.add_subcommand("stream", "infinite-stream access");
  stream->require_subcommand(1);
  StreamArgs sa;
  auto* s_at = stream->add_subcommand("at", "one position");
  s_at->add_option("--pos", sa.pos, "1-based position")->required();
  auto* s_win = stream->add_subcommand("window", "a window");
  s_win->add_option("--pos", sa.pos, "1-based start")->required();
  s_win->add_option("--len", sa.len, "window length")->required();
  auto* s_pre = stream->add_subcommand("prefix", "the first n positions");
  s_pre->add_option("--n", sa.n, "prefix length")->required();
  for (auto [cmd, which] : {std::pair<CLI::App*, const char*>{s_at, "at"},
                            {s_win, "window"},
                            {s_pre, "prefix"}}) {
    cmd->add_option("--eps", sa.eps_text, "stream quality NUM/DEN")->required();
    add_seed_flag(cmd, sa.seed);
    add_emit_flags(cmd, sa.emit, true);
    cmd->callback([&, which] { code = run_stream(which, sa); });
  }

  /* search-bk */
  SearchArgs ba;
  auto* search = app.add_subcommand(
      "search-bk", "canonical backtracking search for the longest string");
  search->add_option("--k", ba.k, "alphabet size, 2..6")->required();
  search->add_option("--eps", ba.eps_text, "quality NUM/DEN")->required();
  search->add_option("--budget", ba.budget,
                     "extension-attempt budget for this run")
      ->capture_default_str();
  search->add_option("--threads", ba.threads,
                     "accepted for compatibility; the search is serial and "
                     "its certificate is schedule-independent")
      ->capture_default_str();
  search->add_option("--resume", ba.resume_path,
                     "checkpoint file to continue from");
  search->add_option("--checkpoint", ba.checkpoint_path,
                     "where to write the stop point if the budget runs out; "
                     "the file holds the canonical prefix stack (path), the "
                     "next candidate symbol, and the counters");
  search->callback([&] { code = run_search(ba); });

  /* codec */
  auto* codec = app.add_subcommand("codec", "deletion-channel codec");
  codec->require_subcommand(1);
  CodecArgs da;
  auto* demo = codec->add_subcommand(
      "demo", "index a Reed-Solomon code with a constructed string and decode "
              "seeded random deletion traces");
  demo->add_option("--n", da.n, "block length")->required();
  demo->add_option("--eps", da.eps_text, "index string quality NUM/DEN")
      ->required();
  demo->add_option("--delta", da.delta_text, "code distance fraction NUM/DEN")
      ->required();
  demo->add_option("--traces", da.traces, "number of random traces")
      ->capture_default_str();
  add_seed_flag(demo, da.seed);
  demo->callback([&] { code = run_codec_demo(da); });

  /* ecc */
  auto* ecc = app.add_subcommand("ecc", "block-code utilities");
  ecc->require_subcommand(1);
  EccArgs ea;
  auto* e_greedy = ecc->add_subcommand("build-greedy", "greedy distance code");
  e_greedy->add_option("--m", ea.m, "block length")->required();
  e_greedy->add_option("--eps", ea.eps_text,
                       "parameter policy: q = ceil(2e/eps), d = ceil((1-eps)m)");
  e_greedy->add_option("--q", ea.q, "alphabet (with --d)");
  e_greedy->add_option("--d", ea.d, "distance (with --q)");
  e_greedy->add_option("--target", ea.target_text,
                       "codeword count to reach, 0 = exhaust");
  add_emit_flags(e_greedy, ea.emit, false);
  e_greedy->callback([&] { code = run_ecc_build_greedy(ea); });

  auto* e_rs = ecc->add_subcommand("build-rs", "Reed-Solomon code");
  e_rs->add_option("--m", ea.m, "block length")->required();
  e_rs->add_option("--k", ea.k, "dimension")->required();
  e_rs->add_option("--q", ea.q, "prime alphabet >= m")->required();
  e_rs->add_option("--count", ea.count, "codewords to emit, 0 = all")
      ->capture_default_str();
  add_emit_flags(e_rs, ea.emit, false);
  e_rs->callback([&] { code = run_ecc_build_rs(ea); });

  auto* e_cat = ecc->add_subcommand("concat", "codeword replacement");
  e_cat->add_option("--outer", ea.outer_path, "outer code file")->required();
  e_cat->add_option("--inner", ea.inner_path, "inner code file")->required();
  add_emit_flags(e_cat, ea.emit, false);
  e_cat->callback([&] { code = run_ecc_concat(ea); });

  auto* e_dec = ecc->add_subcommand("decode", "nearest-codeword decode");
  e_dec->add_option("--code", ea.code_path, "code file")->required();
  e_dec->add_option("--received", ea.received_text,
                    "comma-separated symbols, -1 = erasure")->required();
  e_dec->callback([&] { code = run_ecc_decode(ea); });

  /* report */
  auto* report = app.add_subcommand("report", "measurement tables");
  report->require_subcommand(1);
  int64_t max_m = 6;
  auto* r_morph = report->add_subcommand(
      "morphism", "LCS degradation of the cyclic ternary morphism");
  r_morph->add_option("--max-m", max_m, "last iteration")->capture_default_str();
  r_morph->callback([&] { code = run_report_morphism(max_m); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const construction_error& e) {
    print_json(json{{"schema", kSchema},
                    {"verdict", "violation"},
                    {"error", e.what()},
                    {"violation", violation_json(e.violation)}});
    return 1;
  } catch (const budget_error& e) {
    json j{{"schema", kSchema},
           {"verdict", "budget-exhausted"},
           {"error", e.what()}};
    if (e.has_violation) j["last_violation"] = violation_json(e.last_violation);
    print_json(j);
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
