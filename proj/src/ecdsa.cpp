#include "v2xec/ecdsa.hpp"

#include "v2xec/hash.hpp"

namespace v2xec {

namespace {

constexpr int kMaxNonceAttempts = 64;

}  // namespace

MessageDigest digest_message(std::span<const std::uint8_t> msg, const CurveParams& curve) {
    return {hash_to_int(msg, curve.n), curve.id};
}

Signature sign(const MessageDigest& m, const Scalar& priv, RandomSource& rng) {
    if (m.curve != priv.curve) throw CurveMismatch("digest and key from different curves");
    const auto& cv = get_curve(priv.curve);
    for (int attempt = 0; attempt < kMaxNonceAttempts; ++attempt) {
        BigInt k = rng.next_in_range(1, cv.n - 1);
        CurvePoint R = scalar_mul(k, cv.G);
        if (R.infinity) continue;
        BigInt rx = mod(R.x, cv.n);
        if (rx == 0) continue;
        BigInt u = mod(m.value + priv.value * rx, cv.n);
        // Both k and the numerator must be units mod n so that the verifier
        // can invert s; on composite toy orders either can fail.
        if (boost::multiprecision::gcd(u, cv.n) != 1) continue;
        BigInt kinv;
        try {
            kinv = mod_inverse(k, cv.n);
        } catch (const NonInvertible&) {
            continue;
        }
        BigInt s = mod(u * kinv, cv.n);
        if (s == 0) continue;
        return Signature{R.x, static_cast<int>(R.y & 1), std::move(s)};
    }
    throw RandomnessExhausted("no usable nonce after 64 attempts");
}

bool verify(const MessageDigest& m, const Signature& sig, const CurvePoint& pub, VerifyMode mode) {
    if (m.curve != pub.curve) throw CurveMismatch("digest and key from different curves");
    if (pub.infinity || !is_on_curve(pub)) throw NotOnCurve("public key invalid");
    const auto& cv = get_curve(pub.curve);
    if (sig.s < 1 || sig.s >= cv.n) throw MalformedSignature("s outside [1, n-1]");
    BigInt rx = mod(sig.r_x, cv.n);
    if (rx == 0) throw MalformedSignature("R.x reduces to 0");
    BigInt t1;
    try {
        t1 = mod_inverse(sig.s, cv.n);
    } catch (const NonInvertible&) {
        throw MalformedSignature("s not invertible");
    }
    BigInt t2 = mod(m.value * t1, cv.n);
    BigInt t3 = mod(rx * t1, cv.n);
    CurvePoint T = point_add(scalar_mul(t2, cv.G), scalar_mul(t3, pub));
    if (T.infinity) return false;
    if (mod(T.x, cv.n) != rx) return false;
    if (mode == VerifyMode::FullPoint && static_cast<int>(T.y & 1) != sig.r_y_parity) return false;
    return true;
}

std::vector<std::uint8_t> serialize_signature(const Signature& sig, const CurveParams& curve) {
    std::vector<std::uint8_t> out;
    out.reserve(1 + 2 * curve.coord_len);
    out.push_back(sig.r_y_parity ? 0x03 : 0x02);
    auto rx = to_bytes_be(sig.r_x, curve.coord_len);
    auto s = to_bytes_be(sig.s, curve.coord_len);
    out.insert(out.end(), rx.begin(), rx.end());
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

Signature parse_signature(std::span<const std::uint8_t> bytes, const CurveParams& curve) {
    if (bytes.size() != 1 + 2 * curve.coord_len) throw LengthMismatch("bad signature length");
    if (bytes[0] != 0x02 && bytes[0] != 0x03) throw MalformedSignature("bad parity byte");
    auto rx = bytes.subspan(1, curve.coord_len);
    auto s = bytes.subspan(1 + curve.coord_len, curve.coord_len);
    return Signature{from_bytes_be(rx), bytes[0] == 0x03 ? 1 : 0, from_bytes_be(s)};
}

}  // namespace v2xec
