#pragma once

#include <span>
#include <string>
#include <string_view>

#include "v2xec/bigint.hpp"
#include "v2xec/errors.hpp"

namespace v2xec {

enum class CurveId { P192, P224, P256, P384, P521, Toy23, Toy97 };

// Field element with its modulus carried alongside. value in [0, modulus).
struct FieldElement {
    BigInt value;
    BigInt modulus;
};

// Affine point or the point at infinity. Coordinates are not validated on
// construction; is_on_curve checks membership.
struct CurvePoint {
    CurveId curve{CurveId::P256};
    bool infinity = true;
    BigInt x{};
    BigInt y{};

    static CurvePoint at_infinity(CurveId c) { return {c, true, 0, 0}; }
    static CurvePoint affine(CurveId c, BigInt px, BigInt py) {
        return {c, false, std::move(px), std::move(py)};
    }
    bool is_infinity() const { return infinity; }
};

bool operator==(const CurvePoint& a, const CurvePoint& b);

// Integer mod the group order of its curve's base point.
struct Scalar {
    BigInt value;
    CurveId curve{CurveId::P256};

    const BigInt& order() const;
};

bool operator==(const Scalar& a, const Scalar& b);

// Domain parameters for y^2 = x^3 + ax + b over F_p, base point G of order n.
struct CurveParams {
    std::string name;
    CurveId id{};
    BigInt p;
    FieldElement a;
    FieldElement b;
    CurvePoint G;
    BigInt n;                // order of G
    std::size_t coord_len{}; // bytes per field coordinate
};

// Registered curves: P-192, P-224, P-256, P-384, P-521 (NIST), plus two toy
// curves for exhaustive testing: TOY-23 (p=23, a=1, b=1, G=(0,1), n=28) and
// TOY-97 (p=97, a=2, b=3, G=(0,10), n=50; the group is Z_2 x Z_50, G has
// maximal order). Parameters are validated once at first lookup:
// nonsingularity, G on curve, nG = infinity.
const CurveParams& get_curve(std::string_view name);  // throws UnknownCurve
const CurveParams& get_curve(CurveId id);
std::span<const CurveParams> all_curves();   // registry order, NIST first
std::span<const CurveParams> nist_curves();  // P-192 .. P-521

// Group operations. Mixed-curve arguments throw CurveMismatch.
CurvePoint point_add(const CurvePoint& P, const CurvePoint& Q);
CurvePoint point_negate(const CurvePoint& P);

// kP by double-and-add. Accepts 0 <= k <= n (k = n expresses order
// annihilation); throws ScalarOutOfRange otherwise.
CurvePoint scalar_mul(const BigInt& k, const CurvePoint& P);
CurvePoint scalar_mul(const Scalar& k, const CurvePoint& P);

bool is_on_curve(const CurvePoint& P);

// Lowercase big-endian hex, zero-padded to the curve's coordinate width.
// Infinity prints as the literal "infinity".
std::string to_string(const CurvePoint& P);
std::string to_string(const Scalar& s);

}  // namespace v2xec
