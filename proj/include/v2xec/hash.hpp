#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "v2xec/bigint.hpp"

namespace v2xec {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

// SHA-256 digest read as a big-endian integer, reduced mod n. n >= 2.
BigInt hash_to_int(std::span<const std::uint8_t> data, const BigInt& n);

}  // namespace v2xec
