#include "syncstr/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "syncstr/errors.hpp"

namespace syncstr {

namespace {

uint64_t derived_count(const Fraction& eps, int64_t c) {
  // ceil(c / eps^2)
  const Fraction e2 = eps * eps;
  return ceil_div(bigint(c) * e2.den(), e2.num()).convert_to<uint64_t>();
}

}  // namespace

uint64_t SamplerParams::sigma() const {
  return sigma_override > 0 ? sigma_override : derived_count(eps, c1);
}

int64_t SamplerParams::t() const {
  return t_override > 0 ? t_override : int64_t(derived_count(eps, c2));
}

void SamplerParams::validate() const {
  if (!(Fraction(0) < eps) || !(eps < Fraction(1)))
    throw param_error("eps must lie strictly between 0 and 1, got " + eps.str());
  if (c1 < 1 || c2 < 1) throw param_error("c1 and c2 must be positive");
  constexpr uint64_t kMaxSigma = 1ULL << 22;
  if (sigma_override == 0) {
    const Fraction e2 = eps * eps;
    if (ceil_div(bigint(c1) * e2.den(), e2.num()) > bigint(kMaxSigma))
      throw param_error("alphabet too large; eps too small for this builder");
  } else if (sigma_override > kMaxSigma) {
    throw param_error("alphabet too large");
  }
  if (sigma() < uint64_t(t()))
    throw param_error("alphabet smaller than the lookback; raise c1 or lower c2");
}

VariableTrace sample_trace(const SamplerParams& params, int64_t n, Rng& rng) {
  const uint64_t sigma = params.sigma();
  const int64_t t = params.t();
  VariableTrace trace(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    const int64_t h = std::min<int64_t>(t - 1, i);
    trace[size_t(i)] = 1 + rng.below(sigma - uint64_t(h));
  }
  return trace;
}

void resample_interval(VariableTrace& trace, const SamplerParams& params,
                       int64_t lo, int64_t hi, Rng& rng) {
  const uint64_t sigma = params.sigma();
  const int64_t t = params.t();
  if (lo < 0 || hi > int64_t(trace.size()) || lo > hi)
    throw param_error("resample interval out of range");
  for (int64_t i = lo; i < hi; ++i) {
    const int64_t h = std::min<int64_t>(t - 1, i);
    trace[size_t(i)] = 1 + rng.below(sigma - uint64_t(h));
  }
}

SyncString derive_string(const SamplerParams& params,
                         const VariableTrace& trace) {
  params.validate();
  const uint64_t sigma = params.sigma();
  const int64_t t = params.t();
  SyncString out;
  out.alphabet_size = sigma;
  out.symbols.reserve(trace.size());
  std::vector<Symbol> list(static_cast<size_t>(sigma));
  std::iota(list.begin(), list.end(), Symbol(0));
  for (size_t i = 0; i < trace.size(); ++i) {
    const int64_t h = std::min<int64_t>(t - 1, int64_t(i));
    const uint64_t p = trace[i];
    if (p < 1 || p > sigma - uint64_t(h))
      throw param_error("trace value out of range at position " +
                        std::to_string(i));
    const size_t idx = size_t(h) + size_t(p) - 1;
    out.symbols.push_back(list[idx]);
    std::rotate(list.begin(), list.begin() + int64_t(idx),
                list.begin() + int64_t(idx) + 1);
  }
  return out;
}

namespace {

LllResult construct_impl(const SamplerParams& params, int64_t n, uint64_t seed,
                         int64_t max_rounds, const SampleBudget* budget) {
  params.validate();
  if (n < 0) throw param_error("n must be nonnegative");
  if (max_rounds <= 0) max_rounds = 50 * std::max<int64_t>(n, 1);
  Rng rng(seed);
  VariableTrace trace = sample_trace(params, n, rng);
  const auto thr = sync_thresholds(params.eps, std::max<int64_t>(n, 1));
  const int64_t min_len = params.t();
  const Fraction required = Fraction(1) - params.eps;
  for (int64_t round = 0;; ++round) {
    SyncString s = derive_string(params, trace);
    std::optional<Violation> v;
    if (budget) {
      SampleBudget b = *budget;
      b.seed = mix_seed(budget->seed, uint64_t(round));
      auto res = verify_sync_sampled(s, params.eps, b);
      v = res.violation;
    } else {
      v = find_violation_banded(s.view(), thr, min_len);
      if (v) v->required = required;
    }
    if (!v)
      return {std::move(s), std::move(trace), round, budget == nullptr};
    if (round >= max_rounds)
      throw budget_error("resampling budget exhausted after " +
                             std::to_string(round) + " rounds",
                         *v);
    resample_interval(trace, params, v->indices[0] - 1, v->indices[2] - 1,
                      rng);
  }
}

}  // namespace

LllResult construct_lll(const SamplerParams& params, int64_t n, uint64_t seed,
                        int64_t max_rounds) {
  return construct_impl(params, n, seed, max_rounds, nullptr);
}

LllResult construct_lll_sampled(const SamplerParams& params, int64_t n,
                                uint64_t seed, const SampleBudget& budget,
                                int64_t max_rounds) {
  return construct_impl(params, n, seed, max_rounds, &budget);
}

}  // namespace syncstr
