#include "v2xec/point_codec.hpp"

namespace v2xec {

namespace {

// y candidates for x: roots of x^3 + ax + b. Throws NonResidue when none exist.
std::pair<BigInt, BigInt> solve_y(const CurveParams& cv, const BigInt& x) {
    BigInt rhs = mod(x * x % cv.p * x + cv.a.value * x + cv.b.value, cv.p);
    auto root = sqrt_mod(rhs, cv.p);
    if (!root) throw NonResidue("x-coordinate has no point on this curve");
    BigInt even = (*root & 1) == 0 ? *root : BigInt(cv.p - *root);
    BigInt odd = mod(cv.p - even, cv.p);  // y = 0 collapses both to 0
    return {even, odd};
}

BigInt payload_coord(const CurveParams& cv, std::span<const std::uint8_t> payload,
                     std::size_t index) {
    BigInt v = from_bytes_be(payload.subspan(index * cv.coord_len, cv.coord_len));
    if (v >= cv.p) throw NotOnCurve("coordinate outside the field");
    return v;
}

}  // namespace

std::vector<std::uint8_t> EncodedPoint::bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(1 + payload.size());
    out.push_back(static_cast<std::uint8_t>(choice));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::size_t encoded_length(const CurveParams& curve, EncodeMode mode) {
    return mode == EncodeMode::Uncompressed ? 1 + 2 * curve.coord_len : 1 + curve.coord_len;
}

std::size_t encoded_length(std::string_view curve, EncodeMode mode) {
    return encoded_length(get_curve(curve), mode);
}

EncodedPoint encode_point(const CurvePoint& P, EncodeMode mode) {
    if (P.infinity) throw InfinityNotEncodable("infinity has no encoding");
    if (!is_on_curve(P)) throw NotOnCurve("refusing to encode an off-curve point");
    const auto& cv = get_curve(P.curve);
    auto x = to_bytes_be(P.x, cv.coord_len);
    EncodedPoint out;
    switch (mode) {
        case EncodeMode::Uncompressed: {
            out.choice = PointChoice::Uncompressed;
            auto y = to_bytes_be(P.y, cv.coord_len);
            out.payload = std::move(x);
            out.payload.insert(out.payload.end(), y.begin(), y.end());
            break;
        }
        case EncodeMode::Compressed:
            out.choice = (P.y & 1) != 0 ? PointChoice::CompressedY1 : PointChoice::CompressedY0;
            out.payload = std::move(x);
            break;
        case EncodeMode::XOnly:
            out.choice = PointChoice::XOnly;
            out.payload = std::move(x);
            break;
    }
    return out;
}

DecodeResult decode_point(const EncodedPoint& e, const CurveParams& cv) {
    switch (e.choice) {
        case PointChoice::Fill:
            throw ReservedChoice("fill CHOICE is reserved");
        case PointChoice::Uncompressed: {
            if (e.payload.size() != 2 * cv.coord_len) throw LengthMismatch("bad payload length");
            BigInt x = payload_coord(cv, e.payload, 0);
            BigInt y = payload_coord(cv, e.payload, 1);
            CurvePoint P = CurvePoint::affine(cv.id, std::move(x), std::move(y));
            if (!is_on_curve(P)) throw NotOnCurve("decoded point fails the curve equation");
            return P;
        }
        case PointChoice::CompressedY0:
        case PointChoice::CompressedY1: {
            if (e.payload.size() != cv.coord_len) throw LengthMismatch("bad payload length");
            BigInt x = payload_coord(cv, e.payload, 0);
            auto [even, odd] = solve_y(cv, x);
            bool want_odd = e.choice == PointChoice::CompressedY1;
            BigInt y = want_odd ? odd : even;
            if (static_cast<int>(y & 1) != (want_odd ? 1 : 0)) {
                throw NotOnCurve("no point with the requested parity");  // y = 0, odd requested
            }
            return CurvePoint::affine(cv.id, std::move(x), std::move(y));
        }
        case PointChoice::XOnly: {
            if (e.payload.size() != cv.coord_len) throw LengthMismatch("bad payload length");
            BigInt x = payload_coord(cv, e.payload, 0);
            auto [even, odd] = solve_y(cv, x);
            return CandidatePair{CurvePoint::affine(cv.id, x, even),
                                 CurvePoint::affine(cv.id, x, odd)};
        }
    }
    throw ReservedChoice("unknown CHOICE byte");
}

DecodeResult decode_point(const EncodedPoint& e, std::string_view curve) {
    return decode_point(e, get_curve(curve));
}

EncodedPoint parse_encoded(std::span<const std::uint8_t> bytes, const CurveParams& cv) {
    if (bytes.empty()) throw LengthMismatch("empty encoding");
    auto tag = bytes[0];
    if (tag > 0x04) throw ReservedChoice("unknown CHOICE byte");
    auto choice = static_cast<PointChoice>(tag);
    std::size_t want =
        choice == PointChoice::Uncompressed ? 2 * cv.coord_len : cv.coord_len;
    if (bytes.size() != 1 + want) throw LengthMismatch("bad encoding length");
    return EncodedPoint{choice, {bytes.begin() + 1, bytes.end()}};
}

}  // namespace v2xec
