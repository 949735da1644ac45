#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace waringlab {

/// Additive group a ValueSet lives in: Z/p, or F_{p^2} with componentwise
/// addition on canonical indices a + b*p.
enum class SetAmbient { Fp, Fp2 };

/// Membership bitset over the canonical indices of F_p or F_{p^2}, with a
/// cached population count.
class ValueSet {
 public:
  ValueSet() = default;
  ValueSet(SetAmbient ambient, std::uint64_t p);

  static ValueSet full(SetAmbient ambient, std::uint64_t p);

  SetAmbient ambient() const { return ambient_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t ambient_size() const { return size_; }
  std::uint64_t card() const { return card_; }
  bool is_full() const { return card_ == size_; }

  bool contains(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void insert(std::uint64_t index);

  std::vector<std::uint64_t> members() const;
  bool is_subset_of(const ValueSet& other) const;
  bool same_ambient(const ValueSet& other) const {
    return ambient_ == other.ambient_ && p_ == other.p_;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  /// Recounts the set bits after direct word manipulation.
  void recount();

  /// Two lines: "ambient_size=<n>;card=<c>" and the bitset as lowercase hex,
  /// byte j holding members 8j..8j+7 with member 8j in the low bit.
  std::string serialize() const;

  /// Inverse of serialize(). A prime ambient_size is read as F_p, the square
  /// of a prime as F_{p^2}. Throws InvalidInput on malformed text.
  static ValueSet parse(const std::string& text);

  friend bool operator==(const ValueSet& x, const ValueSet& y) {
    return x.same_ambient(y) && x.words_ == y.words_;
  }

 private:
  SetAmbient ambient_ = SetAmbient::Fp;
  std::uint64_t p_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t card_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace waringlab
