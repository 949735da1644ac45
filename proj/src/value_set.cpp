#include "waringlab/value_set.hpp"

#include <fmt/format.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "waringlab/error.hpp"
#include "waringlab/field.hpp"

namespace waringlab {

ValueSet::ValueSet(SetAmbient ambient, std::uint64_t p)
    : ambient_(ambient),
      p_(p),
      size_(ambient == SetAmbient::Fp ? p : p * p),
      words_((size_ + 63) / 64, 0) {}

ValueSet ValueSet::full(SetAmbient ambient, std::uint64_t p) {
  ValueSet s(ambient, p);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (s.size_ % 64 != 0) s.words_.back() = (std::uint64_t{1} << (s.size_ % 64)) - 1;
  s.card_ = s.size_;
  return s;
}

void ValueSet::insert(std::uint64_t index) {
  std::uint64_t& w = words_[index >> 6];
  std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (!(w & bit)) {
    w |= bit;
    ++card_;
  }
}

std::vector<std::uint64_t> ValueSet::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(card_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool ValueSet::is_subset_of(const ValueSet& other) const {
  if (!same_ambient(other)) throw Error(ErrorKind::AmbientMismatch, "value sets over different ambients");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

void ValueSet::recount() {
  card_ = 0;
  for (auto w : words_) card_ += static_cast<std::uint64_t>(std::popcount(w));
}

std::string ValueSet::serialize() const {
  std::string out = fmt::format("ambient_size={};card={}\n", size_, card_);
  const std::size_t nbytes = (size_ + 7) / 8;
  out.reserve(out.size() + 2 * nbytes + 1);
  static constexpr char kHex[] = "0123456789abcdef";
  for (std::size_t j = 0; j < nbytes; ++j) {
    auto byte = static_cast<unsigned>((words_[j / 8] >> (8 * (j % 8))) & 0xff);
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 15]);
  }
  out.push_back('\n');
  return out;
}

ValueSet ValueSet::parse(const std::string& text) {
  auto fail = [](const std::string& why) { return Error(ErrorKind::InvalidInput, "value set: " + why); };
  std::istringstream in(text);
  std::string header, hex;
  if (!std::getline(in, header)) throw fail("missing header");
  std::getline(in, hex);

  std::uint64_t n = 0, card = 0;
  if (std::sscanf(header.c_str(), "ambient_size=%lu;card=%lu", &n, &card) != 2) {
    throw fail("bad header '" + header + "'");
  }
  SetAmbient ambient;
  std::uint64_t p;
  if (is_prime(n)) {
    ambient = SetAmbient::Fp;
    p = n;
  } else {
    p = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (p * p != n || !is_prime(p)) throw fail("ambient_size is neither p nor p^2");
    ambient = SetAmbient::Fp2;
  }
  ValueSet s(ambient, p);
  if (hex.size() != 2 * ((n + 7) / 8)) throw fail("hex payload has wrong length");
  for (std::size_t j = 0; j < hex.size() / 2; ++j) {
    unsigned byte = 0;
    auto [ptr, ec] = std::from_chars(hex.data() + 2 * j, hex.data() + 2 * j + 2, byte, 16);
    if (ec != std::errc{} || ptr != hex.data() + 2 * j + 2) throw fail("bad hex digit");
    s.words_[j / 8] |= static_cast<std::uint64_t>(byte) << (8 * (j % 8));
  }
  if (n % 64 != 0 && (s.words_.back() >> (n % 64)) != 0) throw fail("bits set beyond ambient");
  s.recount();
  if (s.card_ != card) throw fail("card does not match payload");
  return s;
}

}  // namespace waringlab
