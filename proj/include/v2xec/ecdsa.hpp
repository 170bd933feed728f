#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "v2xec/curve.hpp"
#include "v2xec/rng.hpp"

namespace v2xec {

// Signature carries the full (unreduced) x-coordinate of the nonce point R
// plus the parity of its y-coordinate, so a verifier can reconstruct R exactly.
// Acceptance compares x-coordinates mod n; r_x mod n is nonzero by
// construction.
struct Signature {
    BigInt r_x;
    int r_y_parity;  // 0 even, 1 odd
    BigInt s;        // in [1, n-1]
};

// Message hash reduced into the scalar field of one curve.
struct MessageDigest {
    BigInt value;  // in [0, n)
    CurveId curve{CurveId::P256};
};

MessageDigest digest_message(std::span<const std::uint8_t> msg, const CurveParams& curve);

// s = (m + priv * (R.x mod n)) * k^-1 mod n with fresh nonce k per attempt.
// Retries on degenerate draws (R.x mod n = 0, s = 0, or either k or the
// numerator not invertible mod a composite toy order); throws
// RandomnessExhausted after 64 attempts.
Signature sign(const MessageDigest& m, const Scalar& priv, RandomSource& rng);

// XOnly accepts any R' with R'.x = R.x mod n (both signs of s verify);
// FullPoint additionally requires matching y parity.
enum class VerifyMode { XOnly, FullPoint };

// Recomputes T = (m * s^-1)G + ((R.x mod n) * s^-1)Pub; accepts iff T is not
// infinity and T.x = R.x (mod n). Throws MalformedSignature when s is outside
// [1, n-1] or has no inverse, or R.x = 0 (mod n); NotOnCurve for a bad pub.
bool verify(const MessageDigest& m, const Signature& sig, const CurvePoint& pub,
            VerifyMode mode = VerifyMode::XOnly);

// parity byte (0x02 even / 0x03 odd) || r_x || s, coordinates zero-padded to
// the curve's coordinate width.
std::vector<std::uint8_t> serialize_signature(const Signature& sig, const CurveParams& curve);
Signature parse_signature(std::span<const std::uint8_t> bytes, const CurveParams& curve);

}  // namespace v2xec
