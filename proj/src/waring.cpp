#include "waringlab/waring.hpp"

#include <algorithm>

#include "waringlab/dickson.hpp"
#include "waringlab/error.hpp"

namespace waringlab {

std::string count_to_string(Count c) {
  if (c == 0) return "0";
  std::string s;
  while (c > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string_view to_string(CoverageStatus status) {
  switch (status) {
    case CoverageStatus::Covered: return "covered";
    case CoverageStatus::Stabilized: return "stabilized";
    case CoverageStatus::CapReached: return "cap";
  }
  return "unknown";
}

namespace {

// Up to 64 bits of `src` starting at bit `pos`.
inline std::uint64_t extract_bits(std::span<const std::uint64_t> src, std::uint64_t pos, unsigned k) {
  const std::uint64_t w = pos >> 6;
  const unsigned off = pos & 63;
  std::uint64_t v = src[w] >> off;
  if (off != 0 && off + k > 64) v |= src[w + 1] << (64 - off);
  return k == 64 ? v : v & ((std::uint64_t{1} << k) - 1);
}

// dst[dpos .. dpos+n) |= src[spos .. spos+n)
void or_range(std::span<std::uint64_t> dst, std::uint64_t dpos,
              std::span<const std::uint64_t> src, std::uint64_t spos, std::uint64_t n) {
  while (n > 0) {
    const unsigned off = dpos & 63;
    const unsigned k = static_cast<unsigned>(std::min<std::uint64_t>(64 - off, n));
    dst[dpos >> 6] |= extract_bits(src, spos, k) << off;
    dpos += k;
    spos += k;
    n -= k;
  }
}

// Cyclic rotation of a block of `len` bits: dst bit (i + shift) mod len
// receives src bit i.
void or_rotated(std::span<std::uint64_t> dst, std::uint64_t dst_off,
                std::span<const std::uint64_t> src, std::uint64_t src_off,
                std::uint64_t len, std::uint64_t shift) {
  or_range(dst, dst_off + shift, src, src_off, len - shift);
  if (shift > 0) or_range(dst, dst_off, src, src_off + len - shift, shift);
}

}  // namespace

ValueSet add_sumset(const ValueSet& s, const ValueSet& a) {
  if (!s.same_ambient(a)) throw Error(ErrorKind::AmbientMismatch, "sumset of sets over different ambients");
  const std::uint64_t p = s.p();
  ValueSet out(s.ambient(), p);
  auto dst = out.mutable_words();
  auto src = s.words();
  for (std::uint64_t y : a.members()) {
    if (s.ambient() == SetAmbient::Fp) {
      or_rotated(dst, 0, src, 0, p, y);
    } else {
      const std::uint64_t ya = y % p, yb = y / p;
      for (std::uint64_t row = 0; row < p; ++row) {
        const std::uint64_t target = (row + yb) % p;
        or_rotated(dst, target * p, src, row * p, p, ya);
      }
    }
  }
  out.recount();
  return out;
}

CoverageProfile waring_number(const ValueSet& a, std::uint64_t cap) {
  if (a.card() == 0) throw Error(ErrorKind::InvalidInput, "summand set is empty");
  CoverageProfile prof;
  prof.cap = cap == 0 ? a.ambient_size() : cap;

  ValueSet current = a;
  prof.cards.push_back(current.card());
  while (true) {
    if (current.is_full()) {
      prof.status = CoverageStatus::Covered;
      return prof;
    }
    if (prof.cards.size() >= prof.cap) {
      prof.status = CoverageStatus::CapReached;
      return prof;
    }
    ValueSet next = add_sumset(current, a);
    if (next.card() == current.card()) {
      prof.status = CoverageStatus::Stabilized;
      return prof;
    }
    prof.cards.push_back(next.card());
    current = std::move(next);
  }
}

CoverageProfile waring_dickson(std::uint64_t e, Residue a, std::uint64_t p, std::uint64_t cap) {
  return waring_number(dickson_value_set({e, a % p, p}), cap);
}

CoverageProfile waring_norm_one(const FieldCtx& ctx, std::uint64_t k, std::uint64_t cap) {
  return waring_number(power_value_set(ctx, k), cap);
}

std::vector<Count> representation_counts(const ValueSet& a, std::uint64_t s) {
  if (s == 0) throw Error(ErrorKind::InvalidParameter, "s must be at least 1");
  {
    constexpr Count kLimit = Count{1} << 127;
    Count total = 1;
    for (std::uint64_t i = 0; i < s && total != 0; ++i) {
      if (a.card() != 0 && total > kLimit / a.card()) {
        throw Error(ErrorKind::CountOverflow, "card(A)^s exceeds 2^127");
      }
      total *= a.card();
    }
  }

  const std::uint64_t n = a.ambient_size();
  const std::uint64_t p = a.p();
  const auto members = a.members();
  std::vector<Count> cur(n, 0);
  for (std::uint64_t m : members) cur[m] = 1;

  std::vector<Count> next(n);
  for (std::uint64_t step = 1; step < s; ++step) {
    std::fill(next.begin(), next.end(), Count{0});
    for (std::uint64_t y : members) {
      if (a.ambient() == SetAmbient::Fp) {
        for (std::uint64_t x = 0; x < n; ++x) {
          std::uint64_t t = x + y;
          if (t >= n) t -= n;
          next[t] += cur[x];
        }
      } else {
        const std::uint64_t ya = y % p, yb = y / p;
        for (std::uint64_t row = 0; row < p; ++row) {
          const std::uint64_t trow = (row + yb) % p;
          const Count* src = cur.data() + row * p;
          Count* dst = next.data() + trow * p;
          for (std::uint64_t col = 0; col < p; ++col) {
            std::uint64_t tc = col + ya;
            if (tc >= p) tc -= p;
            dst[tc] += src[col];
          }
        }
      }
    }
    cur.swap(next);
  }
  return cur;
}

Count representation_count(const ValueSet& a, std::uint64_t s, std::uint64_t c) {
  if (c >= a.ambient_size()) throw Error(ErrorKind::InvalidInput, "target outside the ambient");
  return representation_counts(a, s)[c];
}

}  // namespace waringlab
