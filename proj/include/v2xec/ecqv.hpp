#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "v2xec/ecdsa.hpp"
#include "v2xec/keymgmt.hpp"
#include "v2xec/point_codec.hpp"
#include "v2xec/rng.hpp"

namespace v2xec {

// Certificate request: requester's public key plus identity/attribute bytes.
struct CertRequest {
    CurvePoint P;
    std::vector<std::uint8_t> info;  // at most 65535 bytes
};

// Implicit certificate: carries a compressed reconstruction point E instead of
// a public key and signature. Wire layout (encode_cert):
//   version(1) || cert_type(1) || signer_id(8) || info_len(2 BE) || info ||
//   reconstruction bytes
struct ImplicitCert {
    std::uint8_t version = 1;
    std::uint8_t cert_type = 1;
    std::array<std::uint8_t, 8> signer_id{};
    std::vector<std::uint8_t> info;
    EncodedPoint reconstruction_value;  // compressed E
    CurveId curve{CurveId::P256};
};

// Conventional certificate for size comparison: compressed subject key plus a
// CA signature over the preceding bytes.
struct ExplicitCert {
    std::uint8_t version = 1;
    std::uint8_t cert_type = 0;
    std::array<std::uint8_t, 8> signer_id{};
    std::vector<std::uint8_t> info;
    EncodedPoint public_key;  // compressed
    Signature signature;
    CurveId curve{CurveId::P256};
};

// CA's reply: the certificate plus the private reconstruction value
// w = (h * r + ca_priv) mod n.
struct IssuanceResponse {
    ImplicitCert cert;
    Scalar w;
};

// Hash of the certificate bytes into [1, n-1]-ish scalar space; injectable so
// tests and weak-issuance experiments can pin h. Default rule:
// SHA-256(encode_cert) mod n, with 0 mapped to 1.
using CertHasher = std::function<Scalar(const ImplicitCert&)>;

Scalar cert_hash(const ImplicitCert& cert);
CertHasher default_cert_hasher();
// h = SHA-256(cert bytes) mod bound + 1, so h lands in [1, bound]. Models a CA
// whose effective hash entropy is capped; any party can recompute it.
CertHasher truncated_cert_hasher(const BigInt& bound);
CertHasher fixed_cert_hasher(const BigInt& h);

// First 8 bytes of SHA-256 of the CA's compressed public key.
std::array<std::uint8_t, 8> signer_id_from_ca(const KeyPair& ca);

// CA side: draw r in [1, r_upper], E = P + rG, build the cert, h = H(cert),
// w = (h*r + ca_priv) mod n. Retries draws for which E is infinity; throws
// DegenerateReconstruction when every attempt degenerates. r_upper below n-1
// models the weak-randomness issuance studied by the recovery attack.
IssuanceResponse ca_issue(const CertRequest& req, const KeyPair& ca, RandomSource& rng,
                          const BigInt& r_upper, const CertHasher& hasher = {});

// Requester side: z = (h * p + w) mod n.
Scalar derive_private(const ImplicitCert& cert, const Scalar& w, const Scalar& p,
                      const CertHasher& hasher = {});

// Any party: Z = h * E + C, where C is the CA public key.
CurvePoint derive_public(const ImplicitCert& cert, const CurvePoint& C,
                         const CertHasher& hasher = {});

std::vector<std::uint8_t> encode_cert(const ImplicitCert& cert);
std::vector<std::uint8_t> encode_cert(const ExplicitCert& cert);

enum class CertKind { Explicit, Implicit };

// Closed-form encoded size for a given info length: with q = 12 + info_len,
// implicit certs take q + (coord_len + 1) bytes and explicit certs
// q + 2*(coord_len + 1) + coord_len.
std::size_t cert_length(const CurveParams& curve, std::size_t info_len, CertKind kind);
std::size_t cert_length(std::string_view curve, std::size_t info_len, CertKind kind);

// Builds and signs a conventional certificate with the same framing, for size
// and interop comparisons.
ExplicitCert make_explicit_cert(const CurvePoint& subject_pub,
                                std::span<const std::uint8_t> info, const KeyPair& ca,
                                RandomSource& rng);

}  // namespace v2xec
