#include "v2xec/curve.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace v2xec {

namespace {

// Internal arithmetic takes params explicitly so registry construction can
// validate entries before they are published through get_curve.

CurvePoint add_impl(const CurveParams& cv, const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const BigInt& p = cv.p;
    BigInt lam;
    if (P.x == Q.x) {
        if (mod(P.y + Q.y, p) == 0) return CurvePoint::at_infinity(cv.id);  // vertical chord/tangent
        // tangent slope (3x^2 + a) / 2y
        lam = mod((3 * P.x * P.x + cv.a.value) * mod_inverse(2 * P.y, p), p);
    } else {
        // chord slope (y2 - y1) / (x2 - x1)
        lam = mod((Q.y - P.y) * mod_inverse(Q.x - P.x, p), p);
    }
    BigInt x3 = mod(lam * lam - P.x - Q.x, p);
    BigInt y3 = mod(lam * (P.x - x3) - P.y, p);
    return CurvePoint::affine(cv.id, std::move(x3), std::move(y3));
}

CurvePoint mul_impl(const CurveParams& cv, BigInt k, CurvePoint P) {
    CurvePoint acc = CurvePoint::at_infinity(cv.id);
    while (k > 0) {
        if ((k & 1) != 0) acc = add_impl(cv, acc, P);
        k >>= 1;
        if (k > 0) P = add_impl(cv, P, P);
    }
    return acc;
}

bool on_curve_impl(const CurveParams& cv, const CurvePoint& P) {
    if (P.infinity) return true;
    const BigInt& p = cv.p;
    BigInt lhs = mod(P.y * P.y, p);
    BigInt rhs = mod(P.x * P.x % p * P.x + cv.a.value * P.x + cv.b.value, p);
    return lhs == rhs;
}

BigInt hex_int(std::string_view h) { return from_bytes_be(from_hex(h)); }

CurveParams make_nist(CurveId id, std::string name, std::size_t coord_len, std::string_view p_hex,
                      std::string_view b_hex, std::string_view gx_hex, std::string_view gy_hex,
                      std::string_view n_hex) {
    BigInt p = hex_int(p_hex);
    CurveParams cv;
    cv.name = std::move(name);
    cv.id = id;
    cv.p = p;
    cv.a = {p - 3, p};
    cv.b = {hex_int(b_hex), p};
    cv.G = CurvePoint::affine(id, hex_int(gx_hex), hex_int(gy_hex));
    cv.n = hex_int(n_hex);
    cv.coord_len = coord_len;
    return cv;
}

CurveParams make_toy(CurveId id, std::string name, long long p, long long a, long long b,
                     long long gx, long long gy, long long n) {
    CurveParams cv;
    cv.name = std::move(name);
    cv.id = id;
    cv.p = p;
    cv.a = {a, p};
    cv.b = {b, p};
    cv.G = CurvePoint::affine(id, gx, gy);
    cv.n = n;
    cv.coord_len = 1;
    return cv;
}

// clang-format off
std::vector<CurveParams> build_registry() {
    std::vector<CurveParams> reg;
    reg.push_back(make_nist(CurveId::P192, "P-192", 24,
        "fffffffffffffffffffffffffffffffeffffffffffffffff",
        "64210519e59c80e70fa7e9ab72243049feb8deecc146b9b1",
        "188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012",
        "07192b95ffc8da78631011ed6b24cdd573f977a11e794811",
        "ffffffffffffffffffffffff99def836146bc9b1b4d22831"));
    reg.push_back(make_nist(CurveId::P224, "P-224", 28,
        "ffffffffffffffffffffffffffffffff000000000000000000000001",
        "b4050a850c04b3abf54132565044b0b7d7bfd8ba270b39432355ffb4",
        "b70e0cbd6bb4bf7f321390b94a03c1d356c21122343280d6115c1d21",
        "bd376388b5f723fb4c22dfe6cd4375a05a07476444d5819985007e34",
        "ffffffffffffffffffffffffffff16a2e0b8f03e13dd29455c5c2a3d"));
    reg.push_back(make_nist(CurveId::P256, "P-256", 32,
        "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff",
        "5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b",
        "6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296",
        "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5",
        "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551"));
    reg.push_back(make_nist(CurveId::P384, "P-384", 48,
        "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffeffffffff0000000000000000ffffffff",
        "b3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f5013875ac656398d8a2ed19d2a85c8edd3ec2aef",
        "aa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e082542a385502f25dbf55296c3a545e3872760ab7",
        "3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113b5f0b8c00a60b1ce1d7e819d7a431d7c90ea0e5f",
        "ffffffffffffffffffffffffffffffffffffffffffffffffc7634d81f4372ddf581a0db248b0a77aecec196accc52973"));
    reg.push_back(make_nist(CurveId::P521, "P-521", 66,
        "01ffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff",
        "0051953eb9618e1c9a1f929a21a0b68540eea2da725b99b315f3b8b489918ef109e156193951ec7e937b1652c0bd3bb1bf073573df883d2c34f1ef451fd46b503f00",
        "00c6858e06b70404e9cd9e3ecb662395b4429c648139053fb521f828af606b4d3dbaa14b5e77efe75928fe1dc127a2ffa8de3348b3c1856a429bf97e7e31c2e5bd66",
        "011839296a789a3bc0045c8a5fb42c7d1bd998f54449579b446817afbd17273e662c97ee72995ef42640c550b9013fad0761353c7086a272c24088be94769fd16650",
        "01fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffa51868783bf2f966b7fcc0148f709a5d03bb5c9b8899c47aebb6fb71e91386409"));
    reg.push_back(make_toy(CurveId::Toy23, "TOY-23", 23, 1, 1, 0, 1, 28));
    reg.push_back(make_toy(CurveId::Toy97, "TOY-97", 97, 2, 3, 0, 10, 50));
// clang-format on

    for (const auto& cv : reg) {
        BigInt disc = mod(4 * cv.a.value * cv.a.value % cv.p * cv.a.value +
                              27 * cv.b.value * cv.b.value,
                          cv.p);
        if (disc == 0) throw std::logic_error(cv.name + ": singular curve");
        if (!on_curve_impl(cv, cv.G)) throw std::logic_error(cv.name + ": G not on curve");
        if (!mul_impl(cv, cv.n, cv.G).infinity) throw std::logic_error(cv.name + ": nG != infinity");
    }
    return reg;
}

const std::vector<CurveParams>& registry() {
    static const std::vector<CurveParams> reg = build_registry();
    return reg;
}

}  // namespace

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.curve != b.curve) return false;
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
}

const BigInt& Scalar::order() const { return get_curve(curve).n; }

bool operator==(const Scalar& a, const Scalar& b) {
    return a.curve == b.curve && a.value == b.value;
}

const CurveParams& get_curve(std::string_view name) {
    for (const auto& cv : registry()) {
        if (cv.name == name) return cv;
    }
    throw UnknownCurve("unknown curve: " + std::string(name));
}

const CurveParams& get_curve(CurveId id) {
    for (const auto& cv : registry()) {
        if (cv.id == id) return cv;
    }
    throw UnknownCurve("unknown curve id");
}

std::span<const CurveParams> all_curves() { return registry(); }

std::span<const CurveParams> nist_curves() { return {registry().data(), 5}; }

CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q) {
    if (P.curve != Q.curve) throw CurveMismatch("point_add across curves");
    return add_impl(get_curve(P.curve), P, Q);
}

CurvePoint point_negate(const CurvePoint& P) {
    if (P.infinity) return P;
    const auto& cv = get_curve(P.curve);
    return CurvePoint::affine(P.curve, P.x, mod(-P.y, cv.p));
}

CurvePoint scalar_mul(const BigInt& k, const CurvePoint& P) {
    const auto& cv = get_curve(P.curve);
    if (k < 0 || k > cv.n) throw ScalarOutOfRange("scalar outside [0, n]");
    return mul_impl(cv, k, P);
}

CurvePoint scalar_mul(const Scalar& k, const CurvePoint& P) {
    if (k.curve != P.curve) throw CurveMismatch("scalar and point from different curves");
    return scalar_mul(k.value, P);
}

bool is_on_curve(const CurvePoint& P) { return on_curve_impl(get_curve(P.curve), P); }

std::string to_string(const CurvePoint& P) {
    if (P.infinity) return "infinity";
    const auto& cv = get_curve(P.curve);
    return "(" + to_hex(P.x, cv.coord_len) + ", " + to_hex(P.y, cv.coord_len) + ")";
}

std::string to_string(const Scalar& s) {
    return to_hex(s.value, byte_length(s.order()));
}

}  // namespace v2xec
