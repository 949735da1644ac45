#include "waringlab/curves.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "waringlab/error.hpp"

namespace waringlab {

std::string_view to_string(CurveFamily family) {
  switch (family) {
    case CurveFamily::DicksonFe: return "dickson";
    case CurveFamily::FermatNorm: return "fermat";
  }
  return "unknown";
}

CurveCountReport count_dickson_curve(std::uint64_t e, Residue A, std::uint64_t p) {
  if (e % p == 0) throw Error(ErrorKind::InvalidParameter, "p must not divide e");
  A %= p;

  std::vector<std::uint64_t> hist(p, 0);
  for (Residue x = 1; x < p; ++x) {
    const Residue xe = pow_mod(x, e, p);
    ++hist[add_mod(xe, inv_mod(xe, p), p)];
  }
  const Residue target = neg_mod(A, p);
  std::uint64_t count = 1;  // (0, 0)
  for (Residue w = 0; w < p; ++w) {
    if (hist[w] != 0) count += hist[w] * hist[sub_mod(target, w, p)];
  }

  CurveCountReport r;
  r.family = CurveFamily::DicksonFe;
  r.p = p;
  r.e_or_k = e;
  r.coeff[0] = A;
  r.affine_count = count;
  const double deg = 3.0 * static_cast<double>(e);
  const double pd = static_cast<double>(p);
  r.bound_value = 8.0 * (4.0 * std::pow(deg, 4.0 / 3.0) * std::pow(pd, 2.0 / 3.0) + 3.0 * pd);
  const bool hypotheses = A != 0 && A != 4 % p && A != neg_mod(4 % p, p);
  if (hypotheses) r.within_bound = static_cast<double>(count) <= r.bound_value;
  return r;
}

CurveCountReport count_fermat_norm_curve(const FieldCtx& ctx, std::uint64_t k, Fp2Elem a) {
  const std::uint64_t p = ctx.p();
  if (a == Fp2Elem{}) throw Error(ErrorKind::InvalidParameter, "a must be nonzero");
  if (k == 0 || std::gcd(k, p) != 1) throw Error(ErrorKind::InvalidParameter, "gcd(k, p) must be 1");
  if (p > kMaxFermatPrime) {
    throw Error(ErrorKind::RefuseExhaustive, "Fermat-norm point count needs p^2 < 2^31");
  }

  const std::uint64_t group = p * p - 1;
  // gcd(k (p-1), p^2 - 1) computed without forming t, which may overflow.
  const std::uint64_t g = (p - 1) * std::gcd(k % (p + 1), p + 1);
  const std::uint64_t image_order = group / g;
  const std::uint64_t fibre = g;  // preimages of each image value

  // mult[index] = number of x in F_{p^2} with x^t equal to that element.
  std::vector<std::uint64_t> mult(ctx.ext_size(), 0);
  mult[0] = 1;
  const Fp2Elem step = ctx.pow(ctx.ext_generator(), g);
  Fp2Elem z{1, 0};
  std::vector<std::uint64_t> image;
  image.reserve(image_order + 1);
  image.push_back(0);
  for (std::uint64_t i = 0; i < image_order; ++i) {
    mult[ctx.index(z)] = fibre;
    image.push_back(ctx.index(z));
    z = ctx.mul(z, step);
  }

  const Fp2Elem minus_a = ctx.neg(a);
  std::uint64_t count = 0;
  for (std::uint64_t s1 : image) {
    const std::uint64_t s2 = ctx.index(ctx.sub(minus_a, ctx.from_index(s1)));
    count += mult[s1] * mult[s2];
  }

  CurveCountReport r;
  r.family = CurveFamily::FermatNorm;
  r.p = p;
  r.e_or_k = k;
  r.coeff[0] = a.a;
  r.coeff[1] = a.b;
  r.affine_count = count;
  const double t = static_cast<double>(k) * static_cast<double>(p - 1);
  const double pd = static_cast<double>(p);
  r.bound_value = std::pow(t, 6.0 / 5.0) * std::pow(pd, 8.0 / 5.0) + pd * pd * pd;
  r.within_bound = static_cast<double>(count) <= r.bound_value;
  return r;
}

}  // namespace waringlab
