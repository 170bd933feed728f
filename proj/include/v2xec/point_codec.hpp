#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "v2xec/curve.hpp"

namespace v2xec {

// Wire tags for the point CHOICE. 0x01 is reserved (fill) and never emitted;
// decoding it throws ReservedChoice.
enum class PointChoice : std::uint8_t {
    XOnly = 0x00,
    Fill = 0x01,
    CompressedY0 = 0x02,
    CompressedY1 = 0x03,
    Uncompressed = 0x04,
};

enum class EncodeMode { XOnly, Compressed, Uncompressed };

struct EncodedPoint {
    PointChoice choice{PointChoice::Uncompressed};
    std::vector<std::uint8_t> payload;  // x or x||y, fixed-width big-endian

    std::vector<std::uint8_t> bytes() const;  // tag || payload
};

// Result of an x-only decode: the two points sharing that x, even y first.
// When y = 0 both entries are the same point.
struct CandidatePair {
    CurvePoint even_y;
    CurvePoint odd_y;
};

using DecodeResult = std::variant<CurvePoint, CandidatePair>;

// Uncompressed: 1 + 2*coord_len bytes; compressed / x-only: 1 + coord_len.
std::size_t encoded_length(const CurveParams& curve, EncodeMode mode);
std::size_t encoded_length(std::string_view curve, EncodeMode mode);

// Throws InfinityNotEncodable for the point at infinity, NotOnCurve for a
// point failing the curve equation.
EncodedPoint encode_point(const CurvePoint& P, EncodeMode mode);

// Compressed/uncompressed yield a CurvePoint; x-only yields a CandidatePair.
// Throws LengthMismatch, ReservedChoice, NotOnCurve, or NonResidue (x has no
// square root, so no point).
DecodeResult decode_point(const EncodedPoint& e, const CurveParams& curve);
DecodeResult decode_point(const EncodedPoint& e, std::string_view curve);

// Split raw bytes into tag and payload, validating both against the curve's
// expected width.
EncodedPoint parse_encoded(std::span<const std::uint8_t> bytes, const CurveParams& curve);

}  // namespace v2xec
