#include "v2xec/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "v2xec/errors.hpp"

namespace v2xec {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("SHA-256 failed");
    }
    return out;
}

BigInt hash_to_int(std::span<const std::uint8_t> data, const BigInt& n) {
    if (n < 2) throw ZeroModulus("reduction modulus must be at least 2");
    auto digest = sha256(data);
    return mod(from_bytes_be(digest), n);
}

}  // namespace v2xec
