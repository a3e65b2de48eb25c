/* Python bindings for the main operations. Fractions cross the boundary as
 * "NUM/DEN" strings (or plain ints); exact arithmetic stays on the C++ side. */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syncstr/codec.hpp"
#include "syncstr/construct.hpp"
#include "syncstr/ecc.hpp"
#include "syncstr/errors.hpp"
#include "syncstr/extremal.hpp"
#include "syncstr/fraction.hpp"
#include "syncstr/io.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/sampler.hpp"
#include "syncstr/small_alphabet.hpp"
#include "syncstr/stream.hpp"
#include "syncstr/sync_string.hpp"
#include "syncstr/verify.hpp"

namespace py = pybind11;
using namespace syncstr;

namespace {

Fraction to_fraction(const py::object& v) {
  if (py::isinstance<py::int_>(v)) return Fraction(v.cast<long long>());
  return Fraction::parse(v.cast<std::string>());
}

py::object verdict_of(const VerifyResult& vr) {
  py::dict out;
  out["pass"] = vr.pass();
  out["checks"] = vr.checks;
  if (vr.violation) {
    py::dict v;
    v["kind"] = vr.violation->kind;
    v["indices"] = vr.violation->indices;
    v["rotation"] = vr.violation->rotation;
    v["achieved"] = vr.violation->achieved.str();
    v["required"] = vr.violation->required.str();
    out["violation"] = v;
  }
  return out;
}

SyncString make_string(const std::vector<Symbol>& symbols, uint64_t alphabet) {
  SyncString s;
  s.symbols = symbols;
  s.alphabet_size = alphabet;
  s.check();
  return s;
}

}  // namespace

PYBIND11_MODULE(_syncstr, m) {
  m.doc() = "synchronization-string toolkit; fractions are 'NUM/DEN' strings";

  py::register_exception<param_error>(m, "ParamError", PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<construction_error>(m, "ConstructionError",
                                             PyExc_RuntimeError);

  py::class_<SyncString>(m, "SyncString")
      .def(py::init(&make_string), py::arg("symbols"), py::arg("alphabet"))
      .def_readonly("symbols", &SyncString::symbols)
      .def_readonly("alphabet", &SyncString::alphabet_size)
      .def("__len__", [](const SyncString& s) { return s.size(); })
      .def("__repr__", [](const SyncString& s) {
        return "SyncString(n=" + std::to_string(s.size()) +
               ", alphabet=" + std::to_string(s.alphabet_size) + ")";
      });

  /* metric */
  m.def("lcs_length",
        [](const SyncString& a, const SyncString& b) {
          return lcs_length(a, b);
        },
        py::arg("a"), py::arg("b"));
  m.def("edit_distance",
        [](const SyncString& a, const SyncString& b) {
          return edit_distance(a, b);
        },
        py::arg("a"), py::arg("b"));
  m.def("lcs",
        [](const SyncString& a, const SyncString& b) {
          const LcsWitness w = lcs(a, b);
          std::vector<std::pair<int64_t, int64_t>> pairs;
          for (const MatchPair& p : w.matching.pairs)
            pairs.emplace_back(p.left, p.right);
          return py::make_tuple(w.length, pairs);
        },
        py::arg("a"), py::arg("b"),
        "-> (length, [(left, right), ..]), 1-based deterministic witness");

  /* verifiers */
  m.def("verify_sync",
        [](const SyncString& s, const py::object& eps) {
          return verdict_of(verify_sync(s, to_fraction(eps)));
        },
        py::arg("s"), py::arg("eps"));
  m.def("verify_weak",
        [](const SyncString& s, const py::object& eps) {
          return verdict_of(verify_weak(s, to_fraction(eps)));
        },
        py::arg("s"), py::arg("eps"));
  m.def("verify_circle",
        [](const SyncString& s, const py::object& eps) {
          return verdict_of(verify_circle(s, to_fraction(eps)));
        },
        py::arg("s"), py::arg("eps"));
  m.def("verify_square_free",
        [](const SyncString& s) { return verdict_of(verify_square_free(s)); },
        py::arg("s"));
  m.def("verify_long_distance",
        [](const SyncString& s, const py::object& eps, const py::object& c,
           bool exhaustive) {
          return verdict_of(
              verify_long_distance(s, to_fraction(eps), to_fraction(c),
                                   exhaustive));
        },
        py::arg("s"), py::arg("eps"), py::arg("c"),
        py::arg("exhaustive") = false);

  /* constructions */
  m.def("construct_random",
        [](int64_t n, const py::object& eps, uint64_t seed,
           int64_t max_rounds) {
          const LllResult r =
              construct_lll(SamplerParams{to_fraction(eps)}, n, seed,
                            max_rounds);
          py::dict out;
          out["s"] = r.s;
          out["resamplings"] = r.resamplings;
          out["fully_verified"] = r.fully_verified;
          return out;
        },
        py::arg("n"), py::arg("eps"), py::arg("seed") = 0,
        py::arg("max_rounds") = 0);
  m.def("construct_long_distance",
        [](int64_t n, const py::object& eps, uint64_t seed) {
          const BuildResult r = build_long_distance(n, to_fraction(eps), seed);
          py::dict out;
          out["s"] = r.s;
          out["c"] = r.c.str();
          out["m"] = r.m;
          out["d"] = r.d;
          out["k"] = r.k;
          out["eps_long"] = r.plan.eps_long.str();
          out["fully_verified"] = r.fully_verified;
          return out;
        },
        py::arg("n"), py::arg("eps"), py::arg("seed") = 0);
  m.def("thue_square_free", &thue_square_free, py::arg("n"));
  m.def("weak_binary",
        [](int64_t n, const py::object& eps_prime, uint64_t seed) {
          const WeakBinaryPlan plan = make_weak_plan(to_fraction(eps_prime));
          const WeakBinaryResult r = weak_binary(n, plan, seed);
          py::dict out;
          out["s"] = r.s;
          out["eps"] = plan.eps.str();
          out["bits_per_symbol"] = plan.k;
          out["fully_verified"] = r.fully_verified;
          return out;
        },
        py::arg("n"), py::arg("eps_prime"), py::arg("seed") = 0);
  m.def("four_letter",
        [](int64_t n, const py::object& eps, uint64_t seed) {
          const FourLetterResult r = four_letter(n, to_fraction(eps), seed);
          py::dict out;
          out["s"] = r.s;
          out["eps_prime"] = r.eps_prime.str();
          out["fully_verified"] = r.fully_verified;
          return out;
        },
        py::arg("n"), py::arg("eps"), py::arg("seed") = 0);

  /* infinite stream */
  py::class_<Stream>(m, "Stream")
      .def(py::init([](const py::object& eps, uint64_t seed) {
             StreamConfig cfg;
             cfg.eps = to_fraction(eps);
             cfg.seed = seed;
             return std::make_unique<Stream>(cfg);
           }),
           py::arg("eps"), py::arg("seed") = 0)
      .def("symbol_at", &Stream::symbol_at, py::arg("pos"))
      .def("window", &Stream::window, py::arg("pos"), py::arg("len"))
      .def("prefix", &Stream::prefix, py::arg("n"));

  /* extremal search */
  m.def("search_bk",
        [](int64_t k, const py::object& eps, int64_t budget) {
          const SearchCertificate c = search_bk(k, to_fraction(eps), budget);
          py::dict out;
          out["terminated"] = c.terminated;
          out["max_length"] = c.max_length;
          out["nodes_visited"] = c.nodes_visited;
          out["worst_ratio_seen"] = c.worst_ratio_seen.str();
          out["frontier"] = c.frontier;
          out["next_symbol"] = c.next_symbol;
          return out;
        },
        py::arg("k"), py::arg("eps"),
        py::arg("budget") = int64_t(1) << 62);
  m.def("worst_ratio",
        [](int64_t k, int64_t len) {
          const RatioWitness w = worst_ratio(k, len);
          py::dict out;
          out["ratio"] = w.ratio.str();
          out["witness"] = w.witness;
          out["triple"] = py::make_tuple(w.i, w.j, w.k);
          return out;
        },
        py::arg("k"), py::arg("len"));

  /* codec */
  m.def("rs_code",
        [](int64_t mm, int64_t k, uint64_t q) {
          const BlockCode c = rs_code(mm, k, q);
          py::dict out;
          out["m"] = c.m;
          out["q"] = c.q;
          out["d"] = c.d;
          out["count"] = c.codewords.size();
          return out;
        },
        py::arg("m"), py::arg("k"), py::arg("q"),
        "parameters only; use codec_roundtrip for end-to-end runs");
  m.def("codec_roundtrip",
        [](int64_t n, const py::object& eps, int64_t rs_k, int64_t message,
           const std::vector<int64_t>& deletions, uint64_t seed) {
          const BlockCode code = rs_code(n, rs_k, next_prime(uint64_t(n)));
          const LllResult built =
              construct_lll(SamplerParams{to_fraction(eps)}, n, seed);
          ChannelTrace trace;
          trace.deletions = deletions;
          const std::optional<int64_t> got = decode(
              transmit(encode(message, code, built.s), trace), code, built.s);
          py::dict out;
          out["decoded"] = got.has_value();
          out["message"] = got ? py::cast(*got) : py::none();
          out["deletion_budget"] = deletion_budget(code, to_fraction(eps));
          return out;
        },
        py::arg("n"), py::arg("eps"), py::arg("rs_k"), py::arg("message"),
        py::arg("deletions"), py::arg("seed") = 0,
        "encode -> delete -> decode one message through an indexed RS code");
  m.def("random_deletions",
        [](int64_t n, int64_t count, uint64_t seed) {
          return random_deletions(n, count, seed).deletions;
        },
        py::arg("n"), py::arg("count"), py::arg("seed"));

  /* files */
  m.def("parse_string_file",
        [](const std::string& text) { return parse_string_file(text); },
        py::arg("text"));
  m.def("format_string_file",
        [](const SyncString& s, const std::string& format) {
          if (format != "lines" && format != "compact")
            throw param_error("format must be 'lines' or 'compact'");
          return format_string_file(s, format == "lines"
                                           ? StringFormat::lines
                                           : StringFormat::compact);
        },
        py::arg("s"), py::arg("format") = "lines");
}
