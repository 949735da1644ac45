#include "waringlab/dickson.hpp"

#include <array>

#include "waringlab/error.hpp"

namespace waringlab {

namespace {

using Mat2 = std::array<Residue, 4>;  // row-major

Mat2 mat_mul(const Mat2& m, const Mat2& n, std::uint64_t p) {
  return {add_mod(mul_mod(m[0], n[0], p), mul_mod(m[1], n[2], p), p),
          add_mod(mul_mod(m[0], n[1], p), mul_mod(m[1], n[3], p), p),
          add_mod(mul_mod(m[2], n[0], p), mul_mod(m[3], n[2], p), p),
          add_mod(mul_mod(m[2], n[1], p), mul_mod(m[3], n[3], p), p)};
}

void require_value_set_params(const DicksonParams& params) {
  if (params.e == 0) throw Error(ErrorKind::InvalidParameter, "e must be at least 1");
  if (params.a >= params.p) throw Error(ErrorKind::InvalidParameter, "a must be a residue mod p");
}

}  // namespace

Residue dickson_eval(const DicksonParams& params, Residue x) {
  const std::uint64_t p = params.p;
  x %= p;
  if (params.e == 0) return 2 % p;
  if (params.e == 1) return x;

  Mat2 result{1, 0, 0, 1};
  Mat2 base{x, neg_mod(params.a % p, p), 1, 0};
  for (std::uint64_t n = params.e - 1; n > 0; n >>= 1) {
    if (n & 1) result = mat_mul(result, base, p);
    base = mat_mul(base, base, p);
  }
  // First row of M^(e-1) applied to (D_1, D_0).
  return add_mod(mul_mod(result[0], x, p), mul_mod(result[1], 2 % p, p), p);
}

bool check_identity(const DicksonParams& params, Residue v) {
  const std::uint64_t p = params.p;
  const Residue a = params.a % p;
  const Residue v_inv = inv_mod(v, p);
  const Residue arg = add_mod(v % p, mul_mod(a, v_inv, p), p);
  const Residue lhs = dickson_eval(params, arg);
  const Residue rhs = add_mod(pow_mod(v, params.e, p),
                              mul_mod(pow_mod(a, params.e, p), pow_mod(v_inv, params.e, p), p), p);
  return lhs == rhs;
}

ValueSet dickson_value_set(const DicksonParams& params) {
  require_value_set_params(params);
  ValueSet out(SetAmbient::Fp, params.p);
  for (Residue u = 0; u < params.p; ++u) out.insert(dickson_eval(params, u));
  return out;
}

ValueSet reciprocal_power_image(const DicksonParams& params) {
  require_value_set_params(params);
  const std::uint64_t p = params.p;
  const Residue ae = pow_mod(params.a, params.e, p);
  ValueSet out(SetAmbient::Fp, p);
  for (Residue v = 1; v < p; ++v) {
    Residue ve = pow_mod(v, params.e, p);
    out.insert(add_mod(ve, mul_mod(ae, inv_mod(ve, p), p), p));
  }
  return out;
}

ValueSet norm_one_trace_image(const FieldCtx& ctx, std::uint64_t e, Residue b) {
  const std::uint64_t p = ctx.p();
  if (b % p == 0) throw Error(ErrorKind::InvalidParameter, "b must be nonzero mod p");
  if (e == 0) throw Error(ErrorKind::InvalidParameter, "e must be at least 1");
  const Residue be = pow_mod(b, e, p);
  const SubgroupSpec norm_one = subgroup(ctx, Ambient::NormOne, p + 1);
  ValueSet out(SetAmbient::Fp, p);
  for (std::uint64_t idx : norm_one.elements) {
    Fp2Elem ve = ctx.pow(ctx.from_index(idx), e);
    out.insert(mul_mod(be, ctx.trace(ve), p));
  }
  return out;
}

ValueSet power_value_set(const FieldCtx& ctx, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidParameter, "k must be at least 1");
  const std::uint64_t p = ctx.p();
  const SubgroupSpec norm_one = subgroup(ctx, Ambient::NormOne, p + 1);
  ValueSet out(SetAmbient::Fp2, p);
  for (std::uint64_t idx : norm_one.elements) {
    out.insert(ctx.index(ctx.pow(ctx.from_index(idx), k)));
  }
  return out;
}

}  // namespace waringlab
