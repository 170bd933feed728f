#include "v2xec/bigint.hpp"

#include <iterator>
#include <stdexcept>
#include <utility>

#include "v2xec/errors.hpp"

namespace v2xec {

namespace {

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m) {
    return boost::multiprecision::powm(mod(base, m), exp, m);
}

}  // namespace

BigInt mod(const BigInt& x, const BigInt& m) {
    if (m <= 0) throw ZeroModulus("modulus must be positive");
    BigInt r = x % m;  // % truncates toward zero, so fix up negatives
    if (r < 0) r += m;
    return r;
}

BigInt mod_inverse(const BigInt& x, const BigInt& m) {
    if (m < 2) throw ZeroModulus("modulus must be at least 2");
    BigInt a = mod(x, m);
    BigInt u;
    if (mpz_invert(u.backend().data(), a.backend().data(), m.backend().data()) == 0) {
        throw NonInvertible(a == 0 ? "0 has no inverse" : "gcd(x, m) != 1");
    }
    return u;
}

std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p) {
    BigInt v = mod(a, p);
    if (v == 0) return BigInt(0);
    if (pow_mod(v, (p - 1) / 2, p) != 1) return std::nullopt;  // Euler criterion
    if (p % 4 == 3) return pow_mod(v, (p + 1) / 4, p);

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    BigInt q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    BigInt z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    unsigned m = s;
    BigInt c = pow_mod(z, q, p);
    BigInt t = pow_mod(v, q, p);
    BigInt r = pow_mod(v, (q + 1) / 2, p);
    while (t != 1) {
        unsigned i = 0;
        BigInt t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        BigInt b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;  // b = c^(2^(m-i-1))
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::size_t byte_length(const BigInt& x) {
    if (x < 0) throw std::invalid_argument("byte_length of negative value");
    if (x == 0) return 1;
    return (boost::multiprecision::msb(x) + 8) / 8;
}

std::vector<std::uint8_t> to_bytes_be(const BigInt& x, std::size_t len) {
    if (x < 0) throw std::invalid_argument("cannot encode negative value");
    std::size_t need = x == 0 ? 0 : byte_length(x);
    if (need > len) throw std::invalid_argument("value does not fit in requested width");
    std::vector<std::uint8_t> out(len, 0);
    if (need > 0) mpz_export(out.data() + (len - need), nullptr, 1, 1, 1, 0, x.backend().data());
    return out;
}

BigInt from_bytes_be(std::span<const std::uint8_t> bytes) {
    BigInt x = 0;
    if (!bytes.empty()) mpz_import(x.backend().data(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return x;
}

std::string to_hex(const BigInt& x, std::size_t len) {
    auto bytes = to_bytes_be(x, len);
    return to_hex(bytes);
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("invalid hex digit");
    };
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    }
    return out;
}

}  // namespace v2xec
