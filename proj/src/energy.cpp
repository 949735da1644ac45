#include "waringlab/energy.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "waringlab/error.hpp"

namespace waringlab {

std::string_view to_string(EnergyKind kind) {
  switch (kind) {
    case EnergyKind::R: return "R";
    case EnergyKind::T: return "T";
    case EnergyKind::Trace: return "trace";
  }
  return "unknown";
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_sum_histogram(
    const std::vector<std::uint64_t>& keys, std::uint64_t p, bool fp2) {
  // Collapse repeated keys first: s(u) = s(u^-1) halves the work for R.
  std::unordered_map<std::uint64_t, std::uint64_t> single;
  for (auto k : keys) ++single[k];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> distinct(single.begin(), single.end());
  std::sort(distinct.begin(), distinct.end());

  auto add = [&](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
    if (!fp2) return add_mod(x, y, p);
    return add_mod(x % p, y % p, p) + add_mod(x / p, y / p, p) * p;
  };

  const std::uint64_t key_space = fp2 ? p * p : p;
  const std::uint64_t pairs = distinct.size() * distinct.size();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (key_space <= 4 * pairs) {
    std::vector<std::uint64_t> dense(key_space, 0);
    for (const auto& [x, cx] : distinct)
      for (const auto& [y, cy] : distinct) dense[add(x, y)] += cx * cy;
    for (std::uint64_t w = 0; w < key_space; ++w)
      if (dense[w] != 0) out.emplace_back(w, dense[w]);
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> sparse;
    sparse.reserve(pairs);
    for (const auto& [x, cx] : distinct)
      for (const auto& [y, cy] : distinct) sparse[add(x, y)] += cx * cy;
    out.assign(sparse.begin(), sparse.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

namespace {

void check_tau(const SubgroupSpec& h, Ambient expected, std::uint64_t tau_limit) {
  if (h.ambient != expected) {
    throw Error(ErrorKind::InvalidInput,
                expected == Ambient::FpStar ? "energy R needs a subgroup of F_p^*"
                                            : "this energy needs a subgroup of N_{p^2}");
  }
  if (h.tau > tau_limit) {
    throw Error(ErrorKind::RefuseQuadratic,
                fmt::format("tau={} exceeds the quadratic-work limit {}", h.tau, tau_limit));
  }
}

std::uint64_t sum_of_squares(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& hist) {
  std::uint64_t total = 0;
  for (const auto& [w, m] : hist) total += m * m;
  return total;
}

EnergyReport make_report(EnergyKind kind, std::uint64_t p, std::uint64_t tau, std::uint64_t count) {
  EnergyReport r;
  r.kind = kind;
  r.p = p;
  r.tau = tau;
  r.count = count;
  const double t = static_cast<double>(tau), pp = static_cast<double>(p);
  r.ref_fp_energy = std::pow(t, 8.0 / 3.0) + std::pow(t, 4.0) / pp;
  r.ref_cubic = std::pow(t, 3.0);
  if (kind == EnergyKind::R) r.bound_value = r.ref_fp_energy;
  if (kind == EnergyKind::T) r.bound_value = std::pow(t, 14.0 / 5.0) + std::pow(t, 4.0) / pp;
  return r;
}

}  // namespace

EnergyReport energy_kloosterman(const FieldCtx& ctx, const SubgroupSpec& h, std::uint64_t tau_limit) {
  check_tau(h, Ambient::FpStar, tau_limit);
  const std::uint64_t p = ctx.p();
  std::vector<std::uint64_t> keys;
  keys.reserve(h.tau);
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    keys.push_back(add_mod(h.elements[i], h.elements[h.inverse_position(i)], p));
  }
  return make_report(EnergyKind::R, p, h.tau, sum_of_squares(pair_sum_histogram(keys, p, false)));
}

EnergyReport energy_additive_fp2(const FieldCtx& ctx, const SubgroupSpec& h, std::uint64_t tau_limit) {
  check_tau(h, Ambient::NormOne, tau_limit);
  return make_report(EnergyKind::T, ctx.p(), h.tau,
                     sum_of_squares(pair_sum_histogram(h.elements, ctx.p(), true)));
}

EnergyReport trace_energy_fp2(const FieldCtx& ctx, const SubgroupSpec& h, std::uint64_t tau_limit) {
  check_tau(h, Ambient::NormOne, tau_limit);
  std::vector<std::uint64_t> keys;
  keys.reserve(h.tau);
  for (auto idx : h.elements) keys.push_back(ctx.trace(ctx.from_index(idx)));
  return make_report(EnergyKind::Trace, ctx.p(), h.tau,
                     sum_of_squares(pair_sum_histogram(keys, ctx.p(), false)));
}

EnergyReport energy(EnergyKind kind, const FieldCtx& ctx, const SubgroupSpec& h, std::uint64_t tau_limit) {
  switch (kind) {
    case EnergyKind::R: return energy_kloosterman(ctx, h, tau_limit);
    case EnergyKind::T: return energy_additive_fp2(ctx, h, tau_limit);
    case EnergyKind::Trace: return trace_energy_fp2(ctx, h, tau_limit);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown energy kind");
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    if (x <= 0 || y <= 0) continue;
    const double lx = std::log(x), ly = std::log(y);
    n += 1;
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || std::abs(denom) < 1e-12) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / denom;
}

}  // namespace waringlab
