#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace v2xec {

using BigInt = boost::multiprecision::mpz_int;

// Least non-negative residue of x mod m. Result in [0, m). m must be positive.
BigInt mod(const BigInt& x, const BigInt& m);

// Multiplicative inverse u with (u * x) % m == 1 and 0 < u < m.
// Throws ZeroModulus for m < 2, NonInvertible when gcd(x, m) != 1.
BigInt mod_inverse(const BigInt& x, const BigInt& m);

// Square root of a mod odd prime p: returns r with r*r % p == a % p, or nullopt
// when a is a quadratic non-residue. Uses the (p+1)/4 exponent when p = 3 mod 4,
// Tonelli-Shanks otherwise. Which of {r, p-r} is returned is unspecified.
std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p);

// Minimal number of bytes needed to represent x >= 0 (0 -> 1).
std::size_t byte_length(const BigInt& x);

// Big-endian fixed-width encoding. Throws std::invalid_argument when x < 0 or
// x does not fit in len bytes.
std::vector<std::uint8_t> to_bytes_be(const BigInt& x, std::size_t len);

// Big-endian decode; empty input decodes to 0.
BigInt from_bytes_be(std::span<const std::uint8_t> bytes);

// Lowercase hex, zero-padded to len bytes (2*len digits).
std::string to_hex(const BigInt& x, std::size_t len);
std::string to_hex(std::span<const std::uint8_t> bytes);

// Strict hex parse: even length, [0-9a-fA-F] only. Throws std::invalid_argument.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace v2xec
