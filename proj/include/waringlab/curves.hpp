#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "waringlab/field.hpp"

namespace waringlab {

enum class CurveFamily { DicksonFe, FermatNorm };

std::string_view to_string(CurveFamily family);

struct CurveCountReport {
  CurveFamily family = CurveFamily::DicksonFe;
  std::uint64_t p = 0;
  std::uint64_t e_or_k = 0;
  /// A for the Dickson family; a = coeff[0] + coeff[1] theta for FermatNorm.
  Residue coeff[2] = {0, 0};
  std::uint64_t affine_count = 0;
  double bound_value = 0.0;
  /// Unset when the parameters fall outside the bound's hypotheses
  /// (A in {0, 4, -4} for the Dickson family).
  std::optional<bool> within_bound;
};

/// Affine points over F_p of
///   F_e = X^2e Y^e + X^e Y^2e + X^e + Y^e + A X^e Y^e.
/// Off the axes this is f(x) + f(y) = -A with f(x) = x^e + x^-e, and on the
/// axes only (0, 0) lies on the curve. bound_value = 8 (4 (3e)^(4/3) p^(2/3) + 3p).
/// Throws InvalidParameter when p divides e.
CurveCountReport count_dickson_curve(std::uint64_t e, Residue A, std::uint64_t p);

inline constexpr std::uint64_t kMaxFermatPrime = 46337;

/// Affine points over F_{p^2} of X^t + Y^t + a with t = k (p - 1), counted
/// through the image subgroup of x -> x^t and its fibre size.
/// bound_value = t^(6/5) p^(8/5) + p^3.
/// Throws InvalidParameter when a = 0 or gcd(k, p) != 1, and
/// RefuseExhaustive above kMaxFermatPrime.
CurveCountReport count_fermat_norm_curve(const FieldCtx& ctx, std::uint64_t k, Fp2Elem a);

}  // namespace waringlab
