#include "omega/analysis.hpp"

#include <numeric>
#include <stdexcept>

namespace omega {

Fraction reduced(uint64_t num, uint64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

bool fraction_less(const Fraction& a, const Fraction& b) {
  return (unsigned __int128)a.num * b.den < (unsigned __int128)b.num * a.den;
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

BlockStats block_stats(const Bits& bits, int k) {
  if (k < 1 || k > 24) throw std::invalid_argument("block size out of range");
  if (bits.size() < size_t(k))
    throw std::invalid_argument("input shorter than one block");
  if (!is_bits(bits)) throw std::invalid_argument("input is not a bit string");

  BlockStats st;
  st.k = k;
  st.n_blocks = bits.size() / size_t(k);
  st.counts.assign(size_t(1) << k, 0);
  for (uint64_t b = 0; b < st.n_blocks; ++b) {
    uint64_t v = 0;
    for (int i = 0; i < k; ++i) {
      v = (v << 1) | uint64_t(bits[b * k + i] == '1');
    }
    ++st.counts[v];
  }
  // deviation of block v: |count*2^k - n| / (n*2^k)
  uint64_t worst_num = 0;
  for (uint64_t count : st.counts) {
    uint64_t scaled = count << k;
    uint64_t dev = scaled > st.n_blocks ? scaled - st.n_blocks : st.n_blocks - scaled;
    if (dev > worst_num) worst_num = dev;
  }
  st.max_deviation = reduced(worst_num, st.n_blocks << k);
  return st;
}

std::optional<ApHit> find_monochromatic_ap(const Bits& bits, int length) {
  if (length < 1) throw std::invalid_argument("progression length must be >= 1");
  const size_t n = bits.size();
  for (size_t start = 1; start <= n; ++start) {
    size_t max_diff = length == 1 ? 1 : (n - start) / size_t(length - 1);
    for (size_t diff = 1; diff <= max_diff; ++diff) {
      char sym = bits[start - 1];
      bool mono = true;
      for (int j = 1; j < length; ++j) {
        if (bits[start - 1 + size_t(j) * diff] != sym) {
          mono = false;
          break;
        }
      }
      if (mono) return ApHit{sym, start, diff};
    }
  }
  return std::nullopt;
}

}  // namespace omega
