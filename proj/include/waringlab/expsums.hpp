#pragma once

// Kloosterman sums over subgroups H of F_p^* and Gauss sums over subgroups of
// the norm-one group, with max-modulus spectra compared against the known
// bound menus. Constants hidden in those bounds are unknown, so spectra carry
// ratios max|sum| / bound-term rather than pass/fail verdicts.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "waringlab/field.hpp"

namespace waringlab {

using Complex = std::complex<double>;

/// Table of e_p(j) = exp(2 pi i j / p) for j in [0, p).
class UnitRoots {
 public:
  explicit UnitRoots(std::uint64_t p);
  std::uint64_t p() const { return static_cast<std::uint64_t>(table_.size()); }
  const Complex& operator[](Residue j) const { return table_[j]; }

 private:
  std::vector<Complex> table_;
};

/// Pairwise (tree) summation with bounded stack depth.
class PairwiseSum {
 public:
  void add(Complex z);
  Complex total() const;

 private:
  static constexpr int kBlock = 16;
  Complex block_{};
  int in_block_ = 0;
  std::vector<std::pair<Complex, std::uint64_t>> stack_;  // (sum, level)
};

/// K_p(H; alpha, beta) = sum over u in H of e_p(alpha u + beta u^-1).
Complex kloosterman(const SubgroupSpec& h, Residue alpha, Residue beta, const UnitRoots& roots);
Complex kloosterman(const SubgroupSpec& h, Residue alpha, Residue beta);

/// G(H; alpha) = sum over u in H of e_p(Tr(alpha u)), H inside N_{p^2}.
Complex gauss(const FieldCtx& ctx, const SubgroupSpec& h, Fp2Elem alpha, const UnitRoots& roots);
Complex gauss(const FieldCtx& ctx, const SubgroupSpec& h, Fp2Elem alpha);

struct SumMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static SumMode exhaustive() { return {}; }
  static SumMode sampled(std::uint64_t n, std::uint64_t seed) { return {Kind::Sampled, n, seed}; }

  /// "exhaustive" or "sampled:<n>:<seed>".
  std::string label() const;
};

struct SpectrumOptions {
  SumMode mode;
  /// Exhaustive enumeration is refused above this prime. 0 selects the
  /// default: 500 for Kloosterman sums, 150 for Gauss sums.
  std::uint64_t exhaustive_limit = 0;
  /// Evaluate one representative per orbit (alpha h, beta h^-1), or per coset
  /// alpha H for Gauss sums; moduli are constant on these classes.
  bool reduce = true;
  unsigned jobs = 1;
};

struct BoundTerm {
  std::string label;
  double value = 0.0;
};

struct SumSpectrum {
  Ambient ambient = Ambient::FpStar;
  std::uint64_t p = 0;
  std::uint64_t tau = 0;
  SumMode mode;
  double max_modulus = 0.0;
  /// Kloosterman: (alpha, beta). Gauss: alpha = argmax[0] + argmax[1] theta.
  /// Among parameters within error_budget of the max, the smallest canonical
  /// index wins.
  Residue argmax[2] = {0, 0};
  double error_budget = 0.0;
  std::uint64_t evaluated = 0;
  /// The lemma's terms first (p^1/2, then the two subgroup-size terms), then
  /// 2 sqrt(p) as an empirical reference.
  std::vector<BoundTerm> bound_menu;

  double bound_weil() const { return bound_menu.at(0).value; }
  double bound_t1() const { return bound_menu.at(1).value; }
  double bound_t2() const { return bound_menu.at(2).value; }
  /// max_modulus divided by the smallest of the three lemma terms.
  double ratio_min() const;
  std::string argmax_label() const;
  /// Index of the lemma term that is smallest (0, 1 or 2).
  std::size_t smallest_term() const;
};

/// Lemma terms for Kloosterman sums over a subgroup of order tau:
/// p^1/2, tau^(23/36) p^(1/6), tau^(20/27) p^(1/9), plus 2 sqrt(p).
std::vector<BoundTerm> kloosterman_bound_menu(double p, double tau);

/// Lemma terms for Gauss sums over a subgroup of N_{p^2} of order tau:
/// p^1/2, tau^(13/20) p^(1/6), tau^(34/45) p^(1/9), plus 2 sqrt(p).
std::vector<BoundTerm> gauss_bound_menu(double p, double tau);

/// max |K_p(H; alpha, beta)| over (alpha, beta) != (0, 0).
/// Throws RefuseExhaustive when p exceeds the exhaustive limit.
SumSpectrum kloosterman_spectrum(const SubgroupSpec& h, const SpectrumOptions& opts = {});

/// max |G(H; alpha)| over alpha in F_{p^2}^*.
SumSpectrum gauss_spectrum(const FieldCtx& ctx, const SubgroupSpec& h, const SpectrumOptions& opts = {});

}  // namespace waringlab
