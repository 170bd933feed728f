#pragma once

#include "v2xec/curve.hpp"
#include "v2xec/rng.hpp"

namespace v2xec {

struct KeyPair {
    Scalar priv;     // in [1, n-1]
    CurvePoint pub;  // priv * G
};

// Additive key expansion material: r in [1, n-1] with R = rG.
struct ExpansionValue {
    Scalar r;
    CurvePoint R;
};

KeyPair generate_keypair(const CurveParams& curve, RandomSource& rng);
KeyPair generate_keypair(std::string_view curve, RandomSource& rng);  // throws UnknownCurve

ExpansionValue make_expansion(const CurveParams& curve, RandomSource& rng);

// e = (p + r) mod n. Throws OrderMismatch when the operands disagree on n.
Scalar expand_private(const Scalar& p, const Scalar& r);

// E = P + R; expanded public key matching expand_private.
CurvePoint expand_public(const CurvePoint& P, const CurvePoint& R);

}  // namespace v2xec
