#include "v2xec/keymgmt.hpp"

namespace v2xec {

KeyPair generate_keypair(const CurveParams& curve, RandomSource& rng) {
    BigInt d = rng.next_in_range(1, curve.n - 1);
    Scalar priv{d, curve.id};
    return {priv, scalar_mul(d, curve.G)};
}

KeyPair generate_keypair(std::string_view curve, RandomSource& rng) {
    return generate_keypair(get_curve(curve), rng);
}

ExpansionValue make_expansion(const CurveParams& curve, RandomSource& rng) {
    BigInt r = rng.next_in_range(1, curve.n - 1);
    return {Scalar{r, curve.id}, scalar_mul(r, curve.G)};
}

Scalar expand_private(const Scalar& p, const Scalar& r) {
    if (p.order() != r.order()) throw OrderMismatch("expansion operands have different orders");
    return Scalar{mod(p.value + r.value, p.order()), p.curve};
}

CurvePoint expand_public(const CurvePoint& P, const CurvePoint& R) { return point_add(P, R); }

}  // namespace v2xec
