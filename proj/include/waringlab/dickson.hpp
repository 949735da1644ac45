#pragma once

#include <cstdint>

#include "waringlab/field.hpp"
#include "waringlab/value_set.hpp"

namespace waringlab {

/// D_e(X, a) over F_p: D_0 = 2, D_1 = X, D_e = X D_{e-1} - a D_{e-2}.
struct DicksonParams {
  std::uint64_t e = 1;
  Residue a = 0;
  std::uint64_t p = 3;
};

/// D_e(x, a) mod p in O(log e) multiplications, by powering the companion
/// matrix [[x, -a], [1, 0]] and applying it to (D_1, D_0) = (x, 2).
Residue dickson_eval(const DicksonParams& params, Residue x);

/// Checks D_e(v + a/v, a) == v^e + a^e v^-e. Throws NonInvertible for v = 0.
bool check_identity(const DicksonParams& params, Residue v);

/// {D_e(u, a) : u in F_p}, evaluated literally for every u. Requires e >= 1.
ValueSet dickson_value_set(const DicksonParams& params);

/// {v^e + a^e v^-e : v in F_p^*}, the image contained in the Dickson value set
/// through the identity above.
ValueSet reciprocal_power_image(const DicksonParams& params);

/// {b^e Tr(v^e) : v in N_{p^2}} as a subset of F_p. This lies inside the value
/// set of D_e(., b^2). Throws InvalidParameter when b = 0 mod p.
ValueSet norm_one_trace_image(const FieldCtx& ctx, std::uint64_t e, Residue b);

/// {u^k : u in N_{p^2}} over F_{p^2}; its size is (p+1)/gcd(k, p+1).
ValueSet power_value_set(const FieldCtx& ctx, std::uint64_t k);

}  // namespace waringlab
