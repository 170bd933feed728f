#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "v2xec/curve.hpp"
#include "v2xec/rng.hpp"

namespace v2xec {

// Model: the CA computed w = h*r + c mod n with h uniform in [1, H] and r
// uniform in [1, R]. The reconstruction value leaks c outright exactly when
// the product never wrapped, i.e. h*r + c < n.
struct CrackParams {
    BigInt H;  // >= 1
    BigInt R;  // >= 1
    BigInt n;  // group order, >= 2
    BigInt c;  // CA private key, in [1, n-1]
};

// Exact rational probability. Denominator is H*R, kept unreduced.
struct Probability {
    BigInt num;
    BigInt den;

    double value() const;
    std::string to_string() const;  // "num/den"
};

// Closed-ish form: sum over h of min(R, floor((n-c-1)/h)), h up to
// min(H, n-c-1). Throws TooLarge when the sum would exceed 1e8 terms.
Probability crack_probability_exact(const CrackParams& params);

// Literal double loop over (h, r), counting h*r + c < n. Independent oracle
// for the exact form; throws TooLarge when H*R > 1e8.
Probability crack_probability_enum(const CrackParams& params);

struct McEstimate {
    double estimate;
    double std_err;  // binomial: sqrt(p*(1-p)/trials)
    std::uint64_t hits;
    std::uint64_t trials;
};

// Samples (h, r) pairs; usable at cryptographic scale where exact/enum are
// infeasible. trials >= 1000.
McEstimate crack_probability_montecarlo(const CrackParams& params, std::uint64_t trials,
                                        RandomSource& rng);

// Recovers the CA private key c from one weak issuance (w, h, CA public key C)
// by testing candidates c' = w - h*r' for r' = 1..R_max as integers: the
// candidate is correct when c'G = C. Candidates decrease monotonically, so the
// walk evaluates Q <- Q - hG incrementally (one group addition each) and stops
// at the first non-positive candidate. Returns nullopt when the budget is
// exhausted, i.e. the issuance was not weak enough.
std::optional<Scalar> attack_recover_ca_key(const Scalar& w, const Scalar& h, const CurvePoint& C,
                                            const BigInt& R_max);

}  // namespace v2xec
