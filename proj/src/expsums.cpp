#include "waringlab/expsums.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "waringlab/error.hpp"
#include "waringlab/parallel.hpp"
#include "waringlab/rng.hpp"

namespace waringlab {

UnitRoots::UnitRoots(std::uint64_t p) : table_(p) {
  for (std::uint64_t j = 0; j < p; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
    table_[j] = {std::cos(angle), std::sin(angle)};
  }
}

void PairwiseSum::add(Complex z) {
  block_ += z;
  if (++in_block_ < kBlock) return;
  Complex carry = block_;
  std::uint64_t level = 0;
  block_ = {};
  in_block_ = 0;
  while (!stack_.empty() && stack_.back().second == level) {
    carry = stack_.back().first + carry;
    stack_.pop_back();
    ++level;
  }
  stack_.emplace_back(carry, level);
}

Complex PairwiseSum::total() const {
  Complex acc = block_;
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) acc = it->first + acc;
  return acc;
}

Complex kloosterman(const SubgroupSpec& h, Residue alpha, Residue beta, const UnitRoots& roots) {
  const std::uint64_t p = h.p;
  alpha %= p;
  beta %= p;
  PairwiseSum sum;
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    const Residue u = h.elements[i];
    const Residue u_inv = h.elements[h.inverse_position(i)];
    sum.add(roots[add_mod(mul_mod(alpha, u, p), mul_mod(beta, u_inv, p), p)]);
  }
  return sum.total();
}

Complex kloosterman(const SubgroupSpec& h, Residue alpha, Residue beta) {
  return kloosterman(h, alpha, beta, UnitRoots(h.p));
}

Complex gauss(const FieldCtx& ctx, const SubgroupSpec& h, Fp2Elem alpha, const UnitRoots& roots) {
  PairwiseSum sum;
  for (std::uint64_t idx : h.elements) {
    sum.add(roots[ctx.trace(ctx.mul(alpha, ctx.from_index(idx)))]);
  }
  return sum.total();
}

Complex gauss(const FieldCtx& ctx, const SubgroupSpec& h, Fp2Elem alpha) {
  return gauss(ctx, h, alpha, UnitRoots(ctx.p()));
}

std::string SumMode::label() const {
  if (kind == Kind::Exhaustive) return "exhaustive";
  return fmt::format("sampled:{}:{}", samples, seed);
}

double SumSpectrum::ratio_min() const {
  return max_modulus / bound_menu.at(smallest_term()).value;
}

std::size_t SumSpectrum::smallest_term() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (bound_menu.at(i).value < bound_menu.at(best).value) best = i;
  }
  return best;
}

std::string SumSpectrum::argmax_label() const { return fmt::format("{}:{}", argmax[0], argmax[1]); }

std::vector<BoundTerm> kloosterman_bound_menu(double p, double tau) {
  return {{"p^(1/2)", std::sqrt(p)},
          {"tau^(23/36) p^(1/6)", std::pow(tau, 23.0 / 36.0) * std::pow(p, 1.0 / 6.0)},
          {"tau^(20/27) p^(1/9)", std::pow(tau, 20.0 / 27.0) * std::pow(p, 1.0 / 9.0)},
          {"2 p^(1/2)", 2.0 * std::sqrt(p)}};
}

std::vector<BoundTerm> gauss_bound_menu(double p, double tau) {
  return {{"p^(1/2)", std::sqrt(p)},
          {"tau^(13/20) p^(1/6)", std::pow(tau, 13.0 / 20.0) * std::pow(p, 1.0 / 6.0)},
          {"tau^(34/45) p^(1/9)", std::pow(tau, 34.0 / 45.0) * std::pow(p, 1.0 / 9.0)},
          {"2 p^(1/2)", 2.0 * std::sqrt(p)}};
}

namespace {

struct Candidate {
  std::uint64_t index;  // smallest canonical index of the parameter class
  double modulus;
};

// Picks the max modulus, then the smallest index within `tol` of it. The rule
// only depends on the set of candidates, not on evaluation order.
void select_argmax(const std::vector<Candidate>& cands, double tol, SumSpectrum& out) {
  double best = 0.0;
  for (const auto& c : cands) best = std::max(best, c.modulus);
  std::uint64_t arg = UINT64_MAX;
  for (const auto& c : cands) {
    if (c.modulus >= best - tol) arg = std::min(arg, c.index);
  }
  out.max_modulus = best;
  out.evaluated = cands.size();
  if (arg != UINT64_MAX) {
    out.argmax[0] = arg / out.p;
    out.argmax[1] = arg % out.p;
  }
}

void check_limit(std::uint64_t p, const SpectrumOptions& opts, std::uint64_t default_limit) {
  if (opts.mode.kind != SumMode::Kind::Exhaustive) return;
  const std::uint64_t limit = opts.exhaustive_limit == 0 ? default_limit : opts.exhaustive_limit;
  if (p > limit) {
    throw Error(ErrorKind::RefuseExhaustive,
                fmt::format("exhaustive enumeration refused for p={} above limit {}", p, limit));
  }
}

// Parameter indices whose sums get evaluated: class representatives in
// exhaustive mode, seeded draws from [1, n) otherwise.
template <class MarkClass>
std::vector<std::uint64_t> parameter_indices(std::uint64_t n, const SpectrumOptions& opts, MarkClass&& mark_class) {
  std::vector<std::uint64_t> out;
  if (opts.mode.kind == SumMode::Kind::Sampled) {
    SplitMix64 rng(opts.mode.seed);
    out.reserve(opts.mode.samples);
    for (std::uint64_t i = 0; i < opts.mode.samples; ++i) out.push_back(1 + rng.below(n - 1));
    return out;
  }
  if (!opts.reduce) {
    out.reserve(n - 1);
    for (std::uint64_t i = 1; i < n; ++i) out.push_back(i);
    return out;
  }
  std::vector<bool> seen(n, false);
  for (std::uint64_t i = 1; i < n; ++i) {
    if (seen[i]) continue;
    out.push_back(i);
    mark_class(i, seen);
  }
  return out;
}

}  // namespace

SumSpectrum kloosterman_spectrum(const SubgroupSpec& h, const SpectrumOptions& opts) {
  if (h.ambient != Ambient::FpStar) throw Error(ErrorKind::InvalidInput, "Kloosterman sums need a subgroup of F_p^*");
  const std::uint64_t p = h.p;
  check_limit(p, opts, 500);

  SumSpectrum out;
  out.ambient = h.ambient;
  out.p = p;
  out.tau = h.tau;
  out.mode = opts.mode;
  out.error_budget = 1e-9 * static_cast<double>(h.tau);
  out.bound_menu = kloosterman_bound_menu(static_cast<double>(p), static_cast<double>(h.tau));

  // Index alpha * p + beta; the orbit of (alpha, beta) is {(alpha u, beta u^-1)}.
  const auto params = parameter_indices(p * p, opts, [&](std::uint64_t i, std::vector<bool>& seen) {
    const Residue alpha = i / p, beta = i % p;
    for (std::size_t j = 0; j < h.elements.size(); ++j) {
      const Residue u = h.elements[j], u_inv = h.elements[h.inverse_position(j)];
      seen[mul_mod(alpha, u, p) * p + mul_mod(beta, u_inv, p)] = true;
    }
  });

  const UnitRoots roots(p);
  std::vector<Candidate> cands(params.size());
  parallel_for(params.size(), opts.jobs, [&](std::size_t j) {
    const std::uint64_t i = params[j];
    cands[j] = {i, std::abs(kloosterman(h, i / p, i % p, roots))};
  });
  select_argmax(cands, out.error_budget, out);
  return out;
}

SumSpectrum gauss_spectrum(const FieldCtx& ctx, const SubgroupSpec& h, const SpectrumOptions& opts) {
  if (h.ambient != Ambient::NormOne) throw Error(ErrorKind::InvalidInput, "Gauss sums need a subgroup of N_{p^2}");
  const std::uint64_t p = ctx.p();
  check_limit(p, opts, 150);

  SumSpectrum out;
  out.ambient = h.ambient;
  out.p = p;
  out.tau = h.tau;
  out.mode = opts.mode;
  out.error_budget = 1e-9 * static_cast<double>(h.tau);
  out.bound_menu = gauss_bound_menu(static_cast<double>(p), static_cast<double>(h.tau));

  // Canonical index a + b p; the spectrum reports alpha as (b, a) through
  // select_argmax, so reorder to put a first afterwards.
  const auto params = parameter_indices(p * p, opts, [&](std::uint64_t i, std::vector<bool>& seen) {
    const Fp2Elem alpha = ctx.from_index(i);
    for (std::uint64_t idx : h.elements) seen[ctx.index(ctx.mul(alpha, ctx.from_index(idx)))] = true;
  });

  const UnitRoots roots(p);
  std::vector<Candidate> cands(params.size());
  parallel_for(params.size(), opts.jobs, [&](std::size_t j) {
    const std::uint64_t i = params[j];
    cands[j] = {i, std::abs(gauss(ctx, h, ctx.from_index(i), roots))};
  });
  select_argmax(cands, out.error_budget, out);
  std::swap(out.argmax[0], out.argmax[1]);
  return out;
}

}  // namespace waringlab
