#include "v2xec/rng.hpp"

#include <stdexcept>

namespace v2xec {

namespace {

// Uniform in [lo, hi] by drawing ceil(bits/64) words, masking to the bit width
// of the range size, and rejecting overshoot. Expected < 2 draws per value.
template <typename Draw64>
BigInt sample_range(Draw64&& draw, const BigInt& lo, const BigInt& hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    BigInt width = hi - lo + 1;
    if (width == 1) return lo;
    std::size_t bits = boost::multiprecision::msb(width) + 1;
    std::size_t words = (bits + 63) / 64;
    for (;;) {
        BigInt v = 0;
        for (std::size_t i = 0; i < words; ++i) v = (v << 64) | draw();
        v >>= words * 64 - bits;
        if (v < width) return lo + v;
    }
}

}  // namespace

BigInt SeededRng::next_in_range(const BigInt& lo, const BigInt& hi) {
    return sample_range([this] { return static_cast<std::uint64_t>(gen_()); }, lo, hi);
}

BigInt SystemRng::next_in_range(const BigInt& lo, const BigInt& hi) {
    auto draw = [this] {
        return (static_cast<std::uint64_t>(dev_()) << 32) | static_cast<std::uint64_t>(dev_());
    };
    return sample_range(draw, lo, hi);
}

BigInt FixedSequenceRng::next_in_range(const BigInt&, const BigInt&) {
    ++draws_;
    if (pos_ < values_.size()) return values_[pos_++];
    if (repeat_last_ && !values_.empty()) return values_.back();
    throw std::out_of_range("fixed random sequence exhausted");
}

}  // namespace v2xec
