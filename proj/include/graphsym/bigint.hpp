#ifndef GRAPHSYM_BIGINT_HPP
#define GRAPHSYM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace graphsym {

// Unsigned arbitrary-precision integer, just big enough for group orders
// (products of at most n factors of at most n). Limbs are base 1e9.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t v) {
    limbs_.clear();
    do {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    } while (v != 0);
  }

  void mul_small(std::uint64_t factor) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
  }

  std::uint64_t mod_small(std::uint64_t m) const {
    std::uint64_t r = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) r = (r * kBase + *it) % m;
    return r;
  }

  std::string to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
      std::string part = std::to_string(*it);
      out += std::string(9 - part.size(), '0') + part;
    }
    return out;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
  friend bool operator==(const BigUint& a, std::uint64_t b) { return a == BigUint(b); }
  friend bool operator!=(const BigUint& a, std::uint64_t b) { return !(a == BigUint(b)); }

 private:
  static constexpr std::uint64_t kBase = 1000000000;

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;  // little-endian
};

}  // namespace graphsym

#endif
