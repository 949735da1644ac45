#include "waringlab/field.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <tuple>
#include <utility>

#include "waringlab/error.hpp"

namespace waringlab {

Residue pow_mod(Residue x, std::uint64_t n, std::uint64_t p) {
  Residue result = 1 % p;
  Residue base = x % p;
  while (n > 0) {
    if (n & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    n >>= 1;
  }
  return result;
}

Residue inv_mod(Residue x, std::uint64_t p) {
  x %= p;
  if (x == 0) throw Error(ErrorKind::NonInvertible, "0 has no inverse modulo p");
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(x);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) throw Error(ErrorKind::NonInvertible, "argument not coprime to modulus");
  if (t0 < 0) t0 += static_cast<std::int64_t>(p);
  return static_cast<Residue>(t0);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are sufficient for n < 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t q = 1; q * q <= n; ++q) {
    if (n % q == 0) {
      small.push_back(q);
      if (q != n / q) large.push_back(n / q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Residue find_generator(std::uint64_t p) {
  if (p == 2) return 1;
  const auto qs = prime_divisors(p - 1);
  for (Residue g = 2; g < p; ++g) {
    bool ok = std::all_of(qs.begin(), qs.end(),
                          [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  throw Error(ErrorKind::NotPrime, fmt::format("no primitive root modulo {}", p));
}

bool is_quadratic_residue(Residue x, std::uint64_t p) {
  x %= p;
  return x == 0 || pow_mod(x, (p - 1) / 2, p) == 1;
}

Residue least_nonresidue(std::uint64_t p) {
  for (Residue d = 2; d < p; ++d) {
    if (pow_mod(d, (p - 1) / 2, p) == p - 1) return d;
  }
  throw Error(ErrorKind::InvalidParameter, fmt::format("no non-residue modulo {}", p));
}

FieldCtx::FieldCtx(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "p must be prime");
  if (p < 3) throw Error(ErrorKind::InvalidParameter, "p must be an odd prime");
  if (p > kMaxPrime) throw Error(ErrorKind::InvalidParameter, "p must be below 2^31");
  g_ = find_generator(p);
  d_ = least_nonresidue(p);

  const std::uint64_t n = p * p - 1;
  const auto qs = prime_divisors(n);
  for (std::uint64_t i = 1; i < p * p; ++i) {
    Fp2Elem z = from_index(i);
    bool ok = std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) {
      return !(pow(z, n / q) == Fp2Elem{1, 0});
    });
    if (ok) {
      ext_gen_ = z;
      return;
    }
  }
  throw Error(ErrorKind::InvalidParameter, "F_{p^2}^* has no generator");
}

Fp2Elem FieldCtx::add(Fp2Elem x, Fp2Elem y) const {
  return {add_mod(x.a, y.a, p_), add_mod(x.b, y.b, p_)};
}
Fp2Elem FieldCtx::sub(Fp2Elem x, Fp2Elem y) const {
  return {sub_mod(x.a, y.a, p_), sub_mod(x.b, y.b, p_)};
}
Fp2Elem FieldCtx::neg(Fp2Elem x) const { return {neg_mod(x.a, p_), neg_mod(x.b, p_)}; }

Fp2Elem FieldCtx::mul(Fp2Elem x, Fp2Elem y) const {
  Residue bb = mul_mod(x.b, y.b, p_);
  Residue a = add_mod(mul_mod(x.a, y.a, p_), mul_mod(d_, bb, p_), p_);
  Residue b = add_mod(mul_mod(x.a, y.b, p_), mul_mod(x.b, y.a, p_), p_);
  return {a, b};
}

Fp2Elem FieldCtx::pow(Fp2Elem x, std::uint64_t n) const {
  Fp2Elem result{1, 0};
  while (n > 0) {
    if (n & 1) result = mul(result, x);
    x = mul(x, x);
    n >>= 1;
  }
  return result;
}

Fp2Elem FieldCtx::inv(Fp2Elem x) const {
  // x^{-1} = conj(x) / Nm(x)
  Residue n = norm(x);
  if (n == 0) throw Error(ErrorKind::NonInvertible, "0 has no inverse in F_{p^2}");
  Residue ninv = inv_mod(n, p_);
  Fp2Elem c = frobenius(x);
  return {mul_mod(c.a, ninv, p_), mul_mod(c.b, ninv, p_)};
}

Fp2Elem FieldCtx::frobenius(Fp2Elem x) const { return {x.a, neg_mod(x.b, p_)}; }

Residue FieldCtx::trace(Fp2Elem x) const { return add_mod(x.a, x.a, p_); }

Residue FieldCtx::norm(Fp2Elem x) const {
  return sub_mod(mul_mod(x.a, x.a, p_), mul_mod(d_, mul_mod(x.b, x.b, p_), p_), p_);
}

Residue FieldCtx::trace_by_power(Fp2Elem x) const {
  Fp2Elem t = add(x, pow(x, p_));
  if (t.b != 0) throw Error(ErrorKind::InvalidInput, "trace left F_p");
  return t.a;
}

Residue FieldCtx::norm_by_power(Fp2Elem x) const {
  Fp2Elem t = pow(x, p_ + 1);
  if (t.b != 0) throw Error(ErrorKind::InvalidInput, "norm left F_p");
  return t.a;
}

std::uint64_t FieldCtx::order(Fp2Elem x) const {
  if (x == Fp2Elem{}) throw Error(ErrorKind::NonInvertible, "0 has no multiplicative order");
  std::uint64_t ord = p_ * p_ - 1;
  for (std::uint64_t q : prime_divisors(ord)) {
    while (ord % q == 0 && pow(x, ord / q) == Fp2Elem{1, 0}) ord /= q;
  }
  return ord;
}

SubgroupSpec subgroup(const FieldCtx& ctx, Ambient ambient, std::uint64_t tau) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t n = ambient == Ambient::FpStar ? p - 1 : p + 1;
  if (tau == 0 || n % tau != 0) {
    throw Error(ErrorKind::InvalidOrder,
                fmt::format("tau={} must divide {}", tau, ambient == Ambient::FpStar ? "p-1" : "p+1"));
  }
  SubgroupSpec h;
  h.ambient = ambient;
  h.p = p;
  h.tau = tau;
  h.elements.reserve(tau);
  if (ambient == Ambient::FpStar) {
    Residue gen = pow_mod(ctx.generator(), n / tau, p);
    h.gen = ctx.embed(gen);
    Residue x = 1;
    for (std::uint64_t i = 0; i < tau; ++i) {
      h.elements.push_back(x);
      x = mul_mod(x, gen, p);
    }
  } else {
    Fp2Elem norm_one_gen = ctx.pow(ctx.ext_generator(), p - 1);
    h.gen = ctx.pow(norm_one_gen, n / tau);
    Fp2Elem z{1, 0};
    for (std::uint64_t i = 0; i < tau; ++i) {
      h.elements.push_back(ctx.index(z));
      z = ctx.mul(z, h.gen);
    }
  }
  return h;
}

}  // namespace waringlab
