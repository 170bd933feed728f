#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "v2xec/bigint.hpp"

namespace v2xec {

// Source of uniform random integers. next_in_range(lo, hi) returns a value in
// [lo, hi] inclusive, uniform for the real sources. Implementations are not
// thread-safe per instance.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual BigInt next_in_range(const BigInt& lo, const BigInt& hi) = 0;
};

// Deterministic source: mt19937_64 stream plus rejection sampling. Same seed,
// same query sequence -> same values, everywhere.
class SeededRng final : public RandomSource {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
    BigInt next_in_range(const BigInt& lo, const BigInt& hi) override;

private:
    std::mt19937_64 gen_;
};

// OS entropy (std::random_device) with the same rejection sampler.
class SystemRng final : public RandomSource {
public:
    BigInt next_in_range(const BigInt& lo, const BigInt& hi) override;

private:
    std::random_device dev_;
};

// Test helper: replays a fixed queue of values verbatim, ignoring the requested
// range. When the queue runs out, either repeats the last value forever
// (repeat_last = true) or throws std::out_of_range.
class FixedSequenceRng final : public RandomSource {
public:
    explicit FixedSequenceRng(std::vector<BigInt> values, bool repeat_last = false)
        : values_(std::move(values)), repeat_last_(repeat_last) {}
    BigInt next_in_range(const BigInt& lo, const BigInt& hi) override;

    std::size_t draws() const { return draws_; }

private:
    std::vector<BigInt> values_;
    bool repeat_last_;
    std::size_t pos_ = 0;
    std::size_t draws_ = 0;
};

}  // namespace v2xec
