#pragma once

// Arithmetic in F_p and F_{p^2} = F_p[theta]/(theta^2 - d), plus the cyclic
// subgroups of F_p^* and of the norm-one group that the rest of the library
// works over. Primes are below 2^31, so products of two residues fit in 64
// bits without widening.

#include <cstdint>
#include <vector>

namespace waringlab {

using Residue = std::uint64_t;

inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

inline Residue add_mod(Residue x, Residue y, std::uint64_t p) {
  Residue s = x + y;
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue x, Residue y, std::uint64_t p) {
  return x >= y ? x - y : x + p - y;
}
inline Residue neg_mod(Residue x, std::uint64_t p) { return x == 0 ? 0 : p - x; }
inline Residue mul_mod(Residue x, Residue y, std::uint64_t p) { return x * y % p; }

/// x^n mod p, with 0^0 = 1.
Residue pow_mod(Residue x, std::uint64_t n, std::uint64_t p);

/// Throws NonInvertible when x == 0 mod p.
Residue inv_mod(Residue x, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order (n >= 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least primitive root modulo the prime p.
Residue find_generator(std::uint64_t p);

/// Least quadratic non-residue modulo the odd prime p.
Residue least_nonresidue(std::uint64_t p);

bool is_quadratic_residue(Residue x, std::uint64_t p);

/// Element a + b*theta of F_{p^2}.
struct Fp2Elem {
  Residue a = 0;
  Residue b = 0;

  friend bool operator==(const Fp2Elem&, const Fp2Elem&) = default;
};

/// A prime together with the fixed generators and quadratic extension used
/// across the library. Immutable after construction.
class FieldCtx {
 public:
  /// Validates p (prime, 3 <= p < 2^31) and finds the least primitive root,
  /// the least non-residue d, and the least generator of F_{p^2}^* in
  /// canonical index order.
  explicit FieldCtx(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Residue generator() const { return g_; }
  Residue nonresidue() const { return d_; }
  Fp2Elem ext_generator() const { return ext_gen_; }

  /// p^2, the number of elements of F_{p^2}.
  std::uint64_t ext_size() const { return p_ * p_; }

  Fp2Elem add(Fp2Elem x, Fp2Elem y) const;
  Fp2Elem sub(Fp2Elem x, Fp2Elem y) const;
  Fp2Elem neg(Fp2Elem x) const;
  Fp2Elem mul(Fp2Elem x, Fp2Elem y) const;
  Fp2Elem pow(Fp2Elem x, std::uint64_t n) const;
  Fp2Elem inv(Fp2Elem x) const;
  Fp2Elem frobenius(Fp2Elem x) const;  // x^p = a - b*theta

  /// Closed forms: Tr(a + b*theta) = 2a, Nm(a + b*theta) = a^2 - d*b^2.
  Residue trace(Fp2Elem x) const;
  Residue norm(Fp2Elem x) const;

  /// x + x^p and x^(p+1) by explicit exponentiation (the defining formulas).
  Residue trace_by_power(Fp2Elem x) const;
  Residue norm_by_power(Fp2Elem x) const;

  /// Canonical index a + b*p used for serialization and set membership.
  std::uint64_t index(Fp2Elem x) const { return x.a + x.b * p_; }
  Fp2Elem from_index(std::uint64_t i) const { return {i % p_, i / p_}; }
  Fp2Elem embed(Residue c) const { return {c % p_, 0}; }

  /// Multiplicative order of a nonzero element of F_{p^2}.
  std::uint64_t order(Fp2Elem x) const;

 private:
  std::uint64_t p_;
  Residue g_;
  Residue d_;
  Fp2Elem ext_gen_;
};

/// Alias for the construction step that builds F_{p^2}.
inline FieldCtx build_ext(std::uint64_t p) { return FieldCtx(p); }

enum class Ambient { FpStar, NormOne };

/// Cyclic subgroup of F_p^* or of N_{p^2} = {z : z^(p+1) = 1}.
/// Elements are canonical indices listed as gen^0, gen^1, ..., gen^(tau-1);
/// for FpStar the index is the residue itself.
struct SubgroupSpec {
  Ambient ambient = Ambient::FpStar;
  std::uint64_t p = 0;
  std::uint64_t tau = 0;
  Fp2Elem gen;
  std::vector<std::uint64_t> elements;

  /// Position of the inverse of elements[i].
  std::size_t inverse_position(std::size_t i) const {
    return i == 0 ? 0 : static_cast<std::size_t>(tau - i);
  }
};

/// gen = G^(N/tau) for the generator G of the ambient group of order N.
/// Throws InvalidOrder when tau does not divide N.
SubgroupSpec subgroup(const FieldCtx& ctx, Ambient ambient, std::uint64_t tau);

}  // namespace waringlab
