#pragma once
// text_io.hpp - string conversions for limb arrays.
//
// Hex I/O requires a power-of-two radix. When log2(rho) is a multiple of 4
// the mapping between hex digits and limbs is exact and to_hex/parse_hex
// round-trip limb-for-limb (including leading zero limbs). For other
// power-of-two radices, and for decimal I/O at any radix, strings carry the
// numeric value only, so parsing yields the canonical (shortest) limb form.
//
// Parse errors throw std::invalid_argument.

#include <string>
#include <string_view>
#include <vector>

#include "krmul/limb_core.hpp"

namespace krmul {

std::string to_hex(std::uint32_t rho, const limb* a, std::size_t n);
std::vector<limb> parse_hex(std::uint32_t rho, std::string_view text);

std::string to_dec(std::uint32_t rho, const limb* a, std::size_t n);
std::vector<limb> parse_dec(std::uint32_t rho, std::string_view text);

// Dispatches to hex for power-of-two radices, decimal otherwise.
std::string format_natural(std::uint32_t rho, const limb* a, std::size_t n);
std::vector<limb> parse_natural(std::uint32_t rho, std::string_view text);

// Drops leading zero limbs; the value zero becomes a single zero limb.
std::vector<limb> trim_leading_zeros(std::vector<limb> a);

}  // namespace krmul
