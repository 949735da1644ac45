#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waringlab/field.hpp"
#include "waringlab/value_set.hpp"

namespace waringlab {

using Count = unsigned __int128;

std::string count_to_string(Count c);

enum class CoverageStatus { Covered, Stabilized, CapReached };

std::string_view to_string(CoverageStatus status);

/// Cardinalities |S_1|, |S_2|, ... of the iterated sumsets S_{s+1} = S_s + A,
/// and how the iteration ended.
///   Covered:    S_g is the whole ambient (g = cards.size()).
///   Stabilized: one step added nothing while coverage is incomplete, so the
///               Waring number is infinite.
///   CapReached: neither happened within `cap` summands.
struct CoverageProfile {
  CoverageStatus status = CoverageStatus::CapReached;
  std::vector<std::uint64_t> cards;
  std::uint64_t cap = 0;

  std::optional<std::uint64_t> g() const {
    if (status != CoverageStatus::Covered) return std::nullopt;
    return cards.size();
  }
};

/// {x + y : x in s, y in a} in the ambient additive group. Word-parallel:
/// one cyclic shifted OR of `s` per member of `a`.
ValueSet add_sumset(const ValueSet& s, const ValueSet& a);

/// Iterates sumsets from S_1 = A. cap = 0 selects the ambient size.
/// Throws InvalidInput when A is empty.
CoverageProfile waring_number(const ValueSet& a, std::uint64_t cap = 0);

/// g_a(e, p) for the Dickson value set of D_e(., a) over F_p.
CoverageProfile waring_dickson(std::uint64_t e, Residue a, std::uint64_t p, std::uint64_t cap = 0);

/// G(k, p): sums of k-th powers of norm-one elements covering F_{p^2}.
CoverageProfile waring_norm_one(const FieldCtx& ctx, std::uint64_t k, std::uint64_t cap = 0);

/// N_s(c) for every c: the number of ordered s-tuples from A summing to c,
/// by repeated exact cyclic convolution of the indicator of A.
/// Throws CountOverflow when card(A)^s does not fit in 127 bits.
std::vector<Count> representation_counts(const ValueSet& a, std::uint64_t s);

/// N_s(c) for a single target c (canonical index).
Count representation_count(const ValueSet& a, std::uint64_t s, std::uint64_t c);

}  // namespace waringlab
