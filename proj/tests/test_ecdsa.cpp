#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "v2xec/ecdsa.hpp"
#include "v2xec/hash.hpp"
#include "v2xec/keymgmt.hpp"
#include "toy_oracle.hpp"

using namespace v2xec;

namespace {

const std::vector<std::uint8_t> kMsg{0xde, 0xad, 0xbe, 0xef};

}  // namespace

TEST_CASE("digest_message reduces SHA-256 into [0, n)") {
    const auto& cv = get_curve("TOY-97");
    MessageDigest d = digest_message(kMsg, cv);
    CHECK(d.value >= 0);
    CHECK(d.value < cv.n);
    CHECK(d.value == hash_to_int(kMsg, cv.n));
    CHECK(digest_message(kMsg, cv).value == d.value);
}

TEST_CASE("frozen tuple on TOY-97, cross-checked against the oracle") {
    // G = (0, 10), n = 50. Nonce k = 3, private key 2, digest 3.
    const auto& cv = get_curve("TOY-97");
    Scalar priv{2, cv.id};
    CurvePoint pub = scalar_mul(priv.value, cv.G);
    MessageDigest m{3, cv.id};

    FixedSequenceRng rng({BigInt(3)});
    Signature sig = sign(m, priv, rng);

    // Independent recomputation: R = kG by brute force, s = (m + p*Rx)/k.
    toy::Point R = toy::mul(toy::kToy97, 3, std::make_pair(0LL, 10LL));
    REQUIRE(R.has_value());
    CHECK(R->first == 23);
    CHECK(R->second == 24);
    long long s_want = (3 + 2 * R->first) % 50 * toy::inv(3, 50) % 50;
    CHECK(s_want == 33);

    CHECK(sig.r_x == R->first);
    CHECK(sig.r_y_parity == (R->second & 1));
    CHECK(sig.s == s_want);
    CHECK(verify(m, sig, pub));
    CHECK(verify(m, sig, pub, VerifyMode::FullPoint));
}

TEST_CASE("x-only verification accepts the mirrored signature, full-point rejects it") {
    const auto& cv = get_curve("TOY-97");
    Scalar priv{2, cv.id};
    CurvePoint pub = scalar_mul(priv.value, cv.G);
    MessageDigest m{3, cv.id};
    FixedSequenceRng rng({BigInt(3)});
    Signature sig = sign(m, priv, rng);

    Signature mirrored = sig;
    mirrored.s = cv.n - sig.s;  // 17; corresponds to the negated nonce point
    CHECK(verify(m, mirrored, pub, VerifyMode::XOnly));
    CHECK_FALSE(verify(m, mirrored, pub, VerifyMode::FullPoint));
}

TEST_CASE("verifier recomputes the signing nonce: k = t2 + t3*p mod n") {
    const auto& cv = get_curve("P-256");
    SeededRng keys(11);
    KeyPair key = generate_keypair(cv, keys);
    MessageDigest m = digest_message(kMsg, cv);
    BigInt k = 0x1234567890abcdefULL;
    FixedSequenceRng rng({k});
    Signature sig = sign(m, key.priv, rng);

    BigInt t1 = mod_inverse(sig.s, cv.n);
    BigInt t2 = mod(m.value * t1, cv.n);
    BigInt t3 = mod(mod(sig.r_x, cv.n) * t1, cv.n);
    CHECK(mod(t2 + t3 * key.priv.value, cv.n) == k);
}

TEST_CASE("degenerate nonces are retried") {
    // On TOY-23, k = 1 gives R = G = (0, 1) whose x reduces to 0; the signer
    // must discard it and use the next draw.
    const auto& cv = get_curve("TOY-23");
    Scalar priv{3, cv.id};
    CurvePoint pub = scalar_mul(priv.value, cv.G);
    MessageDigest m{1, cv.id};
    FixedSequenceRng rng({BigInt(1), BigInt(5)});
    Signature sig = sign(m, priv, rng);
    CHECK(rng.draws() == 2);

    toy::Point R = toy::mul(toy::kToy23, 5, std::make_pair(0LL, 1LL));
    REQUIRE(R.has_value());
    CHECK(sig.r_x == R->first);
    long long u = (1 + 3 * R->first) % 28;
    CHECK(sig.s == u * toy::inv(5, 28) % 28);
    CHECK(verify(m, sig, pub));
}

TEST_CASE("unreduced nonce x-coordinates survive signing and verify mod n") {
    // TOY-97 has x-coordinates up to 96 while n = 50; find a nonce whose point
    // has x >= n and which satisfies every retry condition.
    const auto& cv = get_curve("TOY-97");
    Scalar priv{2, cv.id};
    CurvePoint pub = scalar_mul(priv.value, cv.G);
    MessageDigest m{3, cv.id};
    bool exercised = false;
    for (long long k = 1; k < 50; ++k) {
        toy::Point R = toy::mul(toy::kToy97, k, std::make_pair(0LL, 10LL));
        if (!R || R->first < 50 || R->first % 50 == 0) continue;
        if (toy::inv(k, 50) == 0) continue;
        long long u = (3 + 2 * (R->first % 50)) % 50;
        if (toy::inv(u, 50) == 0) continue;
        FixedSequenceRng rng({BigInt(k)});
        Signature sig = sign(m, priv, rng);
        CHECK(sig.r_x == R->first);
        CHECK(sig.r_x >= cv.n);
        CHECK(verify(m, sig, pub));
        exercised = true;
        break;
    }
    CHECK(exercised);
}

TEST_CASE("nonce exhaustion raises after 64 attempts") {
    const auto& cv = get_curve("TOY-23");
    Scalar priv{3, cv.id};
    MessageDigest m{1, cv.id};
    FixedSequenceRng rng({BigInt(1)}, /*repeat_last=*/true);  // x always reduces to 0
    CHECK_THROWS_AS(sign(m, priv, rng), RandomnessExhausted);
    CHECK(rng.draws() == 64);
}

TEST_CASE("malformed signatures are rejected with a reason") {
    const auto& cv = get_curve("TOY-23");
    Scalar priv{3, cv.id};
    CurvePoint pub = scalar_mul(priv.value, cv.G);
    MessageDigest m{1, cv.id};
    SeededRng rng(4);
    Signature good = sign(m, priv, rng);

    Signature bad = good;
    bad.s = 0;
    CHECK_THROWS_AS(verify(m, bad, pub), MalformedSignature);
    bad.s = cv.n;
    CHECK_THROWS_AS(verify(m, bad, pub), MalformedSignature);
    bad.s = 2;  // gcd(2, 28) > 1: no inverse exists
    CHECK_THROWS_AS(verify(m, bad, pub), MalformedSignature);
    bad = good;
    bad.r_x = cv.n;  // reduces to 0
    CHECK_THROWS_AS(verify(m, bad, pub), MalformedSignature);

    CHECK_THROWS_AS(verify(m, good, CurvePoint::affine(cv.id, 0, 5)), NotOnCurve);
    CHECK_THROWS_AS(verify(m, good, CurvePoint::at_infinity(cv.id)), NotOnCurve);
}

TEST_CASE("signing rejects mismatched digest curves") {
    Scalar priv{3, CurveId::Toy23};
    MessageDigest m{1, CurveId::Toy97};
    SeededRng rng(4);
    CHECK_THROWS_AS(sign(m, priv, rng), CurveMismatch);
    CHECK_THROWS_AS(verify(m, Signature{1, 0, 1}, get_curve("TOY-23").G), CurveMismatch);
}

TEST_CASE("round-trips and tamper rejection across every curve") {
    SeededRng rng(31337);
    for (const auto& cv : all_curves()) {
        CAPTURE(cv.name);
        bool toy = cv.id == CurveId::Toy23 || cv.id == CurveId::Toy97;
        for (int i = 0; i < 20; ++i) {
            KeyPair key = generate_keypair(cv, rng);
            std::vector<std::uint8_t> msg(16);
            for (auto& b : msg) {
                b = static_cast<std::uint8_t>(rng.next_in_range(0, 255).convert_to<unsigned>());
            }
            MessageDigest m = digest_message(msg, cv);
            Signature sig{0, 0, 0};
            // Composite toy orders admit (digest, key) pairs with no usable
            // nonce; redraw those until signing succeeds.
            for (;;) {
                try {
                    sig = sign(m, key.priv, rng);
                    break;
                } catch (const RandomnessExhausted&) {
                    if (!toy) throw;
                    key = generate_keypair(cv, rng);
                    m.value = mod(m.value + 1, cv.n);
                }
            }
            CHECK(verify(m, sig, key.pub));

            // On the toy groups (n = 28, 50 below p) a tampered digest can land
            // on a genuine x-mod-n collision, so rejection is asserted only
            // where collisions are negligible.
            if (!toy) {
                MessageDigest other{mod(m.value + 1, cv.n), cv.id};
                if (other.value == 0) other.value = 1;
                CHECK_FALSE(verify(other, sig, key.pub));
            }
        }
    }
}

TEST_CASE("verification with the wrong key fails") {
    const auto& cv = get_curve("P-224");
    SeededRng rng(8);
    KeyPair a = generate_keypair(cv, rng);
    KeyPair b = generate_keypair(cv, rng);
    MessageDigest m = digest_message(kMsg, cv);
    Signature sig = sign(m, a.priv, rng);
    CHECK(verify(m, sig, a.pub));
    CHECK_FALSE(verify(m, sig, b.pub));
}

TEST_CASE("single-bit perturbations never verify on NIST curves") {
    SeededRng rng(515);
    for (const auto& cv : nist_curves()) {
        CAPTURE(cv.name);
        for (int i = 0; i < 50; ++i) {
            KeyPair key = generate_keypair(cv, rng);
            MessageDigest m = digest_message(kMsg, cv);
            Signature sig = sign(m, key.priv, rng);
            unsigned bit =
                rng.next_in_range(0, BigInt(8 * cv.coord_len - 1)).convert_to<unsigned>();
            int which = rng.next_in_range(0, 2).convert_to<int>();
            MessageDigest m2 = m;
            Signature sig2 = sig;
            if (which == 0) m2.value ^= BigInt(1) << bit;
            else if (which == 1) sig2.s ^= BigInt(1) << bit;
            else sig2.r_x ^= BigInt(1) << bit;
            bool rejected;
            try {
                rejected = !verify(m2, sig2, key.pub);
            } catch (const MalformedSignature&) {
                rejected = true;
            }
            CHECK(rejected);
        }
    }
}

TEST_CASE("serialization round-trips; bad framing throws") {
    SeededRng rng(64);
    for (const auto& cv : all_curves()) {
        CAPTURE(cv.name);
        KeyPair key = generate_keypair(cv, rng);
        MessageDigest m = digest_message(kMsg, cv);
        Signature sig = sign(m, key.priv, rng);
        auto bytes = serialize_signature(sig, cv);
        CHECK(bytes.size() == 1 + 2 * cv.coord_len);
        CHECK((bytes[0] == 0x02 || bytes[0] == 0x03));
        Signature back = parse_signature(bytes, cv);
        CHECK(back.r_x == sig.r_x);
        CHECK(back.r_y_parity == sig.r_y_parity);
        CHECK(back.s == sig.s);

        bytes.pop_back();
        CHECK_THROWS_AS(parse_signature(bytes, cv), LengthMismatch);
        bytes.push_back(0);
        bytes[0] = 0x04;
        CHECK_THROWS_AS(parse_signature(bytes, cv), MalformedSignature);
    }
}
