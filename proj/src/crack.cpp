#include "v2xec/crack.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace v2xec {

namespace {

const BigInt kTermBudget = 100'000'000;  // 1e8

void validate(const CrackParams& p) {
    if (p.H < 1 || p.R < 1) throw std::invalid_argument("H and R must be at least 1");
    if (p.n < 2) throw std::invalid_argument("n must be at least 2");
    if (p.c < 1 || p.c >= p.n) throw std::invalid_argument("c must lie in [1, n-1]");
}

double big_ratio(const BigInt& num, const BigInt& den) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    return (Float(num) / Float(den)).convert_to<double>();
}

}  // namespace

double Probability::value() const { return big_ratio(num, den); }

std::string Probability::to_string() const { return num.str() + "/" + den.str(); }

Probability crack_probability_exact(const CrackParams& params) {
    validate(params);
    BigInt m = params.n - params.c - 1;  // largest product that avoids wrap
    BigInt h_max = params.H < m ? params.H : m;
    if (h_max > kTermBudget) throw TooLarge("term count exceeds budget");
    BigInt count = 0;
    if (m < (BigInt(1) << 62) && params.R < (BigInt(1) << 62)) {
        auto m64 = m.convert_to<std::uint64_t>();
        auto r64 = params.R.convert_to<std::uint64_t>();
        auto lim = h_max.convert_to<std::uint64_t>();
        BigInt total = 0;
        std::uint64_t partial = 0;
        for (std::uint64_t h = 1; h <= lim; ++h) {
            std::uint64_t cap = m64 / h;
            partial += r64 < cap ? r64 : cap;
            if (partial > (std::uint64_t(1) << 62)) {  // drain before any overflow risk
                total += partial;
                partial = 0;
            }
        }
        count = total + partial;
    } else {
        for (BigInt h = 1; h <= h_max; ++h) {
            BigInt cap = m / h;
            count += params.R < cap ? params.R : cap;
        }
    }
    return {count, params.H * params.R};
}

Probability crack_probability_enum(const CrackParams& params) {
    validate(params);
    if (params.H * params.R > kTermBudget) throw TooLarge("pair count exceeds budget");
    BigInt count = 0;
    // Values fit in machine words for any budget-respecting call with a small
    // n; otherwise fall through to the big-integer loop.
    if (params.H < (BigInt(1) << 62) && params.R < (BigInt(1) << 62) &&
        params.n < (BigInt(1) << 31)) {
        auto h_lim = params.H.convert_to<std::uint64_t>();
        auto r_lim = params.R.convert_to<std::uint64_t>();
        auto n = params.n.convert_to<std::uint64_t>();
        auto c = params.c.convert_to<std::uint64_t>();
        std::uint64_t hits = 0;
        for (std::uint64_t h = 1; h <= h_lim; ++h) {
            for (std::uint64_t r = 1; r <= r_lim; ++r) {
                if (h * r + c < n) ++hits;
            }
        }
        count = hits;
    } else {
        for (BigInt h = 1; h <= params.H; ++h) {
            for (BigInt r = 1; r <= params.R; ++r) {
                if (h * r + params.c < params.n) ++count;
            }
        }
    }
    return {count, params.H * params.R};
}

McEstimate crack_probability_montecarlo(const CrackParams& params, std::uint64_t trials,
                                        RandomSource& rng) {
    validate(params);
    if (trials < 1000) throw std::invalid_argument("trials must be at least 1000");
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        BigInt h = rng.next_in_range(1, params.H);
        BigInt r = rng.next_in_range(1, params.R);
        if (h * r + params.c < params.n) ++hits;
    }
    double estimate = static_cast<double>(hits) / static_cast<double>(trials);
    double std_err = std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
    return {estimate, std_err, hits, trials};
}

std::optional<Scalar> attack_recover_ca_key(const Scalar& w, const Scalar& h, const CurvePoint& C,
                                            const BigInt& R_max) {
    if (w.curve != C.curve || h.curve != C.curve) {
        throw CurveMismatch("attack inputs from different curves");
    }
    const auto& cv = get_curve(C.curve);
    if (h.value < 1) throw std::invalid_argument("h must be positive");
    // Q tracks (w - h*r')G; each candidate costs one group addition. The
    // integer candidate w - h*r' only matches the group walk while it stays in
    // (0, n), which the monotone decrease guarantees until the break.
    CurvePoint step = point_negate(scalar_mul(mod(h.value, cv.n), cv.G));
    CurvePoint Q = scalar_mul(mod(w.value, cv.n), cv.G);
    BigInt cand = w.value;
    for (BigInt r = 1; r <= R_max; ++r) {
        cand -= h.value;
        if (cand <= 0) break;
        Q = point_add(Q, step);
        if (Q == C) return Scalar{cand, C.curve};
    }
    return std::nullopt;
}

}  // namespace v2xec
