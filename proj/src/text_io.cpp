// text_io.cpp - hex and decimal string conversions.

#include "krmul/text_io.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace krmul {
namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

char hex_char(unsigned v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

unsigned radix_bits(std::uint32_t rho) {
  if ((rho & (rho - 1)) != 0)
    throw std::invalid_argument("hex i/o requires a power-of-two radix");
  return unsigned(std::countr_zero(rho));
}

}  // namespace

std::vector<limb> trim_leading_zeros(std::vector<limb> a) {
  std::size_t lead = 0;
  while (lead + 1 < a.size() && a[lead] == 0) ++lead;
  if (a.empty()) a.push_back(0);
  if (lead) a.erase(a.begin(), a.begin() + std::ptrdiff_t(lead));
  return a;
}

std::string to_hex(std::uint32_t rho, const limb* a, std::size_t n) {
  const unsigned bits = radix_bits(rho);
  const std::size_t total_bits = n * bits;
  const std::size_t digits = (total_bits + 3) / 4;
  if (digits == 0) return "0";
  std::string out(digits, '0');
  // Walk bits from the least significant end; bit j of the value lives in
  // limb n-1-j/bits.
  for (std::size_t j = 0; j < total_bits; ++j) {
    const std::size_t li = n - 1 - j / bits;
    const unsigned bit = (a[li] >> (j % bits)) & 1u;
    if (!bit) continue;
    const std::size_t di = digits - 1 - j / 4;
    // Accumulate into the hex digit in place.
    int v = hex_digit(out[di]);
    v |= int(1u << (j % 4));
    out[di] = hex_char(unsigned(v));
  }
  return out;
}

std::vector<limb> parse_hex(std::uint32_t rho, std::string_view text) {
  const unsigned bits = radix_bits(rho);
  if (text.empty()) throw std::invalid_argument("empty numeral");
  const std::size_t total_bits = text.size() * 4;
  const std::size_t n = (total_bits + bits - 1) / bits;
  std::vector<limb> out(n, 0);
  for (std::size_t di = 0; di < text.size(); ++di) {
    const int v = hex_digit(text[text.size() - 1 - di]);
    if (v < 0) throw std::invalid_argument("invalid hex digit");
    for (unsigned b = 0; b < 4; ++b) {
      if (!(v & (1 << b))) continue;
      const std::size_t j = di * 4 + b;  // bit position in the value
      out[n - 1 - j / bits] = limb(out[n - 1 - j / bits] | (1u << (j % bits)));
    }
  }
  return out;
}

std::string to_dec(std::uint32_t rho, const limb* a, std::size_t n) {
  assert(radix_valid(rho));
  std::vector<limb> work(a, a + n);
  std::string out;
  std::size_t len = work.size();
  // Strip leading zeros of the working copy as we go.
  std::size_t first = 0;
  while (first < len && work[first] == 0) ++first;
  if (first == len) return "0";
  while (first < len) {
    std::uint32_t rem = 0;
    for (std::size_t i = first; i < len; ++i) {
      std::uint32_t cur = rem * rho + work[i];
      work[i] = limb(cur / 10);
      rem = cur % 10;
    }
    out.push_back(char('0' + rem));
    while (first < len && work[first] == 0) ++first;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<limb> parse_dec(std::uint32_t rho, std::string_view text) {
  assert(radix_valid(rho));
  if (text.empty()) throw std::invalid_argument("empty numeral");
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
    digits.push_back(std::uint8_t(c - '0'));
  }
  std::vector<limb> out;  // collected least significant first
  std::size_t first = 0;
  while (first < digits.size() && digits[first] == 0) ++first;
  if (first == digits.size()) return {0};
  while (first < digits.size()) {
    std::uint32_t rem = 0;
    for (std::size_t i = first; i < digits.size(); ++i) {
      std::uint32_t cur = rem * 10 + digits[i];
      digits[i] = std::uint8_t(cur / rho);
      rem = cur % rho;
    }
    out.push_back(limb(rem));
    while (first < digits.size() && digits[first] == 0) ++first;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string format_natural(std::uint32_t rho, const limb* a, std::size_t n) {
  if ((rho & (rho - 1)) == 0) return to_hex(rho, a, n);
  return to_dec(rho, a, n);
}

std::vector<limb> parse_natural(std::uint32_t rho, std::string_view text) {
  if ((rho & (rho - 1)) == 0) return parse_hex(rho, text);
  return parse_dec(rho, text);
}

}  // namespace krmul
