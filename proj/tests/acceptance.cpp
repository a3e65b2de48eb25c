/* Acceptance gate: runs the eleven release criteria end to end and prints
 * one PASS/FAIL line each, with the measured time. Exit code is the number
 * of failed criteria. argv[1] (optional) is the path of the standalone
 * property-suite binary used by criterion 11. */

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "syncstr/codec.hpp"
#include "syncstr/construct.hpp"
#include "syncstr/ecc.hpp"
#include "syncstr/errors.hpp"
#include "syncstr/extremal.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/sampler.hpp"
#include "syncstr/small_alphabet.hpp"
#include "syncstr/stream.hpp"
#include "syncstr/sync_string.hpp"
#include "syncstr/verify.hpp"

namespace {

using namespace syncstr;
using clk = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

/* criterion 1: edit_distance == independent DP == |a|+|b| - 2*LCS, for every
 * ternary pair up to length 5 and 10^4 random ternary pairs up to length 8. */
Outcome metric_oracle_equivalence() {
  std::vector<std::vector<Symbol>> all;
  all.push_back({});
  size_t lo = 0;
  for (int len = 1; len <= 5; ++len) {
    size_t hi = all.size();
    for (size_t i = lo; i < hi; ++i)
      for (Symbol c = 0; c < 3; ++c) {
        std::vector<Symbol> w = all[i];
        w.push_back(c);
        all.push_back(std::move(w));
      }
    lo = hi;
  }
  auto agree = [](const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    int64_t fast = edit_distance(a, b);
    int64_t dp = oracles::edit_distance_dp(a, b);
    int64_t via_lcs = int64_t(a.size() + b.size()) - 2 * lcs_length(a, b);
    return fast == dp && fast == via_lcs;
  };
  int64_t exhaustive = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!agree(a, b)) return {false, "exhaustive pair disagrees"};
      ++exhaustive;
    }
  Rng rng(20260819);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<Symbol> a(rng.below(9)), b(rng.below(9));
    for (Symbol& c : a) c = Symbol(rng.below(3));
    for (Symbol& c : b) c = Symbol(rng.below(3));
    if (!agree(a, b)) return {false, "random pair disagrees"};
  }
  std::ostringstream d;
  d << exhaustive << " exhaustive + 10000 random ternary pairs agree";
  return {true, d.str()};
}

/* criterion 2: eps = 1/2, n = 500, default sampler: at least 19 of 20 seeds
 * finish inside the 50n resampling budget and pass the full verifier. */
Outcome randomized_construction() {
  SamplerParams p;
  p.eps = Fraction(1, 2);
  int good = 0;
  int64_t most = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    try {
      LllResult r = construct_lll(p, 500, seed);
      if (verify_sync(r.s, p.eps).pass()) {
        ++good;
        most = std::max(most, r.resamplings);
      }
    } catch (const budget_error&) {
    }
  }
  std::ostringstream d;
  d << good << "/20 seeds verified (max resamplings " << most << ")";
  return {good >= 19, d.str()};
}

/* criterion 3: two verified length-100 strings on disjoint banks concatenate
 * to a length-200 circle passing the exact rotation verifier. */
Outcome circle_concatenation() {
  SamplerParams p;
  p.eps = Fraction(1, 2);
  const uint64_t sigma = p.sigma();
  SyncString s1 = construct_lll(p, 100, 1).s;
  SyncString s2 = construct_lll(p, 100, 2).s;
  if (!verify_sync(s1, p.eps).pass() || !verify_sync(s2, p.eps).pass())
    return {false, "a half failed its own verification"};
  for (Symbol& c : s2.symbols) c = Symbol(c + sigma);
  s1.alphabet_size = 2 * sigma;
  s2.alphabet_size = 2 * sigma;
  SyncString circle = circle_from_halves(s1, s2);
  VerifyResult v = verify_circle(circle, p.eps);
  std::ostringstream d;
  if (!v.pass()) {
    d << "rotation " << v.violation->rotation << " fails";
    return {false, d.str()};
  }
  d << "all " << circle.size() << " rotations exact (" << v.checks
    << " interval checks)";
  return {true, d.str()};
}

/* criterion 4: the n = 256 long-distance build passes the exact interval-pair
 * verifier and every codeword pair obeys LCS <= alpha * m. */
Outcome long_distance_build() {
  BuildResult r = build_long_distance(256, Fraction(9, 10), 1);
  VerifyResult v = verify_long_distance(r.s, Fraction(9, 10), r.c);
  if (!v.pass()) return {false, "interval-pair verifier found a violation"};
  const auto& words = r.indexed.codewords;
  int64_t worst = 0;
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j) {
      int64_t l = lcs_length(words[i], words[j]);
      worst = std::max(worst, l);
      if (Fraction(l, 1) > r.plan.alpha * Fraction(r.m, 1)) {
        std::ostringstream d;
        d << "codewords " << i << "," << j << " share an LCS of " << l
          << " > alpha*m = " << (r.plan.alpha * Fraction(r.m, 1)).str();
        return {false, d.str()};
      }
    }
  std::ostringstream d;
  d << "verified at c = " << r.c.str() << "; " << words.size()
    << " codewords pairwise LCS <= " << worst << " <= alpha*m = "
    << (r.plan.alpha * Fraction(r.m, 1)).str();
  return {true, d.str()};
}

/* criterion 5: eps = 1/2 stream: window/prefix bit-consistency on 100 random
 * windows inside the first 5000 positions, full verification of the first
 * 600, and 10^6 sampled triples over the first 4680 with zero violations. */
Outcome infinite_stream() {
  StreamConfig cfg;
  cfg.eps = Fraction(1, 2);
  cfg.seed = 0;
  Stream st(cfg);
  SyncString pre = st.prefix(5000);
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    int64_t pos = int64_t(1 + rng.below(5000));
    int64_t len = int64_t(1 + rng.below(uint64_t(std::min<int64_t>(64, 5000 - pos + 1))));
    SyncString w = st.window(pos, len);
    for (int64_t r = 0; r < len; ++r)
      if (w.symbols[size_t(r)] != pre.symbols[size_t(pos - 1 + r)])
        return {false, "window disagrees with the materialized prefix"};
  }
  VerifyResult v600 = verify_sync(st.window(1, 600), cfg.eps);
  if (!v600.pass()) return {false, "first 600 positions fail full verification"};
  SampleBudget budget;
  budget.triples = 1000000;
  budget.seed = 20260819;
  VerifyResult vs = verify_sync_sampled(st.window(1, 4680), cfg.eps, budget);
  if (!vs.pass()) return {false, "a sampled triple violates in the first 4680"};
  std::ostringstream d;
  d << "100 windows bit-consistent; first 600 exact; " << vs.checks
    << " sampled checks clean";
  return {true, d.str()};
}

/* criterion 6: the ternary square-free prefix at n = 10^4. */
Outcome square_free() {
  SyncString t = thue_square_free(10000);
  VerifyResult v = verify_square_free(t);
  std::ostringstream d;
  d << "length " << t.size() << ", alphabet " << t.alphabet_size << ", "
    << v.checks << " block comparisons";
  return {v.pass() && t.size() == 10000, d.str()};
}

/* criterion 7: the length-400 binary string from an eps' = 1/2 source passes
 * the weak verifier at exactly eps = 1 - (1 - eps')/(18k). */
Outcome weak_binary_gate() {
  WeakBinaryPlan plan = make_weak_plan(Fraction(1, 2));
  Fraction expected =
      Fraction(1) - (Fraction(1) - plan.eps_prime) / Fraction(18 * plan.k, 1);
  if (plan.eps != expected) return {false, "plan eps drifts from the formula"};
  WeakBinaryResult r = weak_binary(400, plan, 11);
  VerifyResult v = verify_weak(r.s, plan.eps);
  std::ostringstream d;
  d << "eps = " << plan.eps.str() << " (k = " << plan.k << "), length "
    << r.s.size() << ", " << v.checks << " checks";
  return {v.pass() && r.s.size() == 400 && r.s.alphabet_size == 2, d.str()};
}

/* criterion 8: the four-letter construction at eps = 35/36, n = 300, passes
 * both the triple verifier and the square checker. */
Outcome four_letter_gate() {
  FourLetterResult r = four_letter(300, Fraction(35, 36), 1);
  if (r.eps_prime != Fraction(2, 3))
    return {false, "derived source quality is not 2/3"};
  VerifyResult vsync = verify_sync(r.s, Fraction(35, 36));
  VerifyResult vsq = verify_square_free(r.s);
  std::ostringstream d;
  d << "length " << r.s.size() << " over " << r.s.alphabet_size
    << " letters, eps' = " << r.eps_prime.str();
  return {vsync.pass() && vsq.pass() && r.s.alphabet_size == 4, d.str()};
}

/* criterion 9: the backtracking searches terminate with certificates; the
 * k = 4 run is a budgeted stretch report, not a gate. */
Outcome extremal_searches() {
  const int64_t open = int64_t(1) << 62;
  SearchCertificate k2 = search_bk(2, Fraction(1, 2), open);
  SearchCertificate k3 = search_bk(3, Fraction(12, 13), open);
  SearchCertificate k4 = search_bk(4, Fraction(10, 13), 2000000);
  std::ostringstream d;
  d << "k=2: max " << k2.max_length << "; k=3 eps=12/13: nodes "
    << k3.nodes_visited << ", max " << k3.max_length << ", worst "
    << k3.worst_ratio_seen.str() << "; stretch k=4 eps=10/13 ("
    << k4.nodes_visited << " nodes): "
    << (k4.terminated ? "terminated, max " : "budget stop, max so far ")
    << k4.max_length;
  return {k2.terminated && k2.max_length <= 3 && k3.terminated, d.str()};
}

/* criterion 10: the n = 60 indexed code decodes 1000 seeded traces inside
 * the deletion budget and round-trips the whole message space untouched. */
Outcome codec_gate() {
  SamplerParams p;
  p.eps = Fraction(1, 2);
  LllResult base = construct_lll(p, 60, 7);
  if (!base.fully_verified) return {false, "index string is not fully verified"};
  BlockCode code = rs_code(60, 2, 61);
  int64_t budget = deletion_budget(code, p.eps);
  if (budget != 19) return {false, "deletion budget is not 19"};
  const int64_t count = int64_t(code.codewords.size());
  for (int64_t i = 1; i <= 1000; ++i) {
    int64_t message = (i * 37) % count;
    ChannelTrace trace = random_deletions(60, i % (budget + 1), mix_seed(100, uint64_t(i)));
    IndexedWord got = transmit(encode(message, code, base.s), trace);
    std::optional<int64_t> back = decode(got, code, base.s);
    if (!back || *back != message) {
      std::ostringstream d;
      d << "trace " << i << " (" << trace.deletions.size()
        << " deletions) failed to decode";
      return {false, d.str()};
    }
  }
  for (int64_t message = 0; message < count; ++message) {
    IndexedWord w = encode(message, code, base.s);
    std::optional<int64_t> back = decode(w, code, base.s);
    if (!back || *back != message)
      return {false, "zero-deletion round-trip failed"};
  }
  std::ostringstream d;
  d << "1000 traces (<= " << budget << " deletions) decoded; " << count
    << " zero-deletion round-trips exact";
  return {true, d.str()};
}

/* criterion 11: the standalone property-suite binary (passed as argv[1])
 * runs green on its fixed-seed corpora. */
Outcome property_suites(const char* path) {
  if (path == nullptr)
    return {false, "property-suite binary path not supplied as argv[1]"};
  std::string cmd = std::string("'") + path + "' >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  bool ok = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
  std::ostringstream d;
  d << "standalone suite exit status "
    << (rc == -1 ? -1 : (WIFEXITED(rc) ? WEXITSTATUS(rc) : -2));
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  struct Row {
    int id;
    const char* name;
    double limit_s;  // 0: no hard bound stated
    Outcome (*run)();
  };
  const char* suite = argc > 1 ? argv[1] : nullptr;
  const Row rows[] = {
      {1, "metric oracle equivalence", 60, metric_oracle_equivalence},
      {2, "randomized construction", 600, randomized_construction},
      {3, "circle concatenation", 300, circle_concatenation},
      {4, "long-distance build", 600, long_distance_build},
      {5, "infinite stream", 900, infinite_stream},
      {6, "square-free construction", 60, square_free},
      {7, "weak binary", 300, weak_binary_gate},
      {8, "four-letter alphabet", 600, four_letter_gate},
      {9, "extremal searches", 0, extremal_searches},
      {10, "insertion-deletion codec", 600, codec_gate},
      {11, "property suites", 300, nullptr},
  };
  int failures = 0;
  for (const Row& row : rows) {
    clk::time_point t0 = clk::now();
    Outcome out;
    try {
      out = row.run != nullptr ? row.run() : property_suites(suite);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(clk::now() - t0).count();
    if (row.limit_s > 0 && dt >= row.limit_s) {
      out.ok = false;
      out.detail += " [over the time limit]";
    }
    std::printf("%s criterion %2d: %s — %s [%.1fs]\n", out.ok ? "PASS" : "FAIL",
                row.id, row.name, out.detail.c_str(), dt);
    std::fflush(stdout);
    if (!out.ok) ++failures;
  }
  std::printf("acceptance: %d/11 criteria passed\n", 11 - failures);
  return failures;
}
