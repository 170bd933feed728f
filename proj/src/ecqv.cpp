#include "v2xec/ecqv.hpp"

#include <algorithm>
#include <stdexcept>

#include "v2xec/hash.hpp"

namespace v2xec {

namespace {

constexpr std::size_t kMaxInfo = 65535;
constexpr int kMaxIssueAttempts = 64;

void check_info(std::span<const std::uint8_t> info) {
    if (info.size() > kMaxInfo) throw InfoTooLong("info exceeds 65535 bytes");
}

void append_header(std::vector<std::uint8_t>& out, std::uint8_t version, std::uint8_t cert_type,
                   const std::array<std::uint8_t, 8>& signer_id,
                   std::span<const std::uint8_t> info) {
    check_info(info);
    out.push_back(version);
    out.push_back(cert_type);
    out.insert(out.end(), signer_id.begin(), signer_id.end());
    out.push_back(static_cast<std::uint8_t>(info.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(info.size() & 0xff));
    out.insert(out.end(), info.begin(), info.end());
}

Scalar apply_hasher(const CertHasher& hasher, const ImplicitCert& cert) {
    return hasher ? hasher(cert) : cert_hash(cert);
}

}  // namespace

Scalar cert_hash(const ImplicitCert& cert) {
    const auto& cv = get_curve(cert.curve);
    BigInt h = hash_to_int(encode_cert(cert), cv.n);
    if (h == 0) h = 1;
    return Scalar{std::move(h), cert.curve};
}

CertHasher default_cert_hasher() {
    return [](const ImplicitCert& cert) { return cert_hash(cert); };
}

CertHasher truncated_cert_hasher(const BigInt& bound) {
    if (bound < 1) throw std::invalid_argument("hash bound must be positive");
    return [bound](const ImplicitCert& cert) {
        auto digest = sha256(encode_cert(cert));
        return Scalar{mod(from_bytes_be(digest), bound) + 1, cert.curve};
    };
}

CertHasher fixed_cert_hasher(const BigInt& h) {
    return [h](const ImplicitCert& cert) { return Scalar{h, cert.curve}; };
}

std::array<std::uint8_t, 8> signer_id_from_ca(const KeyPair& ca) {
    auto digest = sha256(encode_point(ca.pub, EncodeMode::Compressed).bytes());
    std::array<std::uint8_t, 8> id{};
    std::copy_n(digest.begin(), id.size(), id.begin());
    return id;
}

IssuanceResponse ca_issue(const CertRequest& req, const KeyPair& ca, RandomSource& rng,
                          const BigInt& r_upper, const CertHasher& hasher) {
    const auto& cv = get_curve(ca.priv.curve);
    if (req.P.curve != ca.priv.curve) throw CurveMismatch("request and CA on different curves");
    if (req.P.infinity || !is_on_curve(req.P)) throw NotOnCurve("request key invalid");
    check_info(req.info);
    if (r_upper < 1 || r_upper > cv.n - 1) throw ScalarOutOfRange("r_upper outside [1, n-1]");

    for (int attempt = 0; attempt < kMaxIssueAttempts; ++attempt) {
        BigInt r = rng.next_in_range(1, r_upper);
        CurvePoint E = point_add(req.P, scalar_mul(r, cv.G));  // E = P + rG
        if (E.infinity) continue;
        ImplicitCert cert;
        cert.signer_id = signer_id_from_ca(ca);
        cert.info = req.info;
        cert.reconstruction_value = encode_point(E, EncodeMode::Compressed);
        cert.curve = cv.id;
        Scalar h = apply_hasher(hasher, cert);
        BigInt w = mod(h.value * r + ca.priv.value, cv.n);  // w = h*r + c
        return {std::move(cert), Scalar{std::move(w), cv.id}};
    }
    throw DegenerateReconstruction("reconstruction point degenerate for every draw");
}

Scalar derive_private(const ImplicitCert& cert, const Scalar& w, const Scalar& p,
                      const CertHasher& hasher) {
    if (w.curve != cert.curve || p.curve != cert.curve) {
        throw CurveMismatch("scalar operands from a different curve");
    }
    const auto& cv = get_curve(cert.curve);
    Scalar h = apply_hasher(hasher, cert);
    return Scalar{mod(h.value * p.value + w.value, cv.n), cert.curve};  // z = h*p + w
}

CurvePoint derive_public(const ImplicitCert& cert, const CurvePoint& C, const CertHasher& hasher) {
    if (C.curve != cert.curve) throw CurveMismatch("CA key from a different curve");
    const auto& cv = get_curve(cert.curve);
    CurvePoint E;
    try {
        E = std::get<CurvePoint>(decode_point(cert.reconstruction_value, cv));
    } catch (const Error&) {
        throw NotOnCurve("reconstruction value fails decompression");
    } catch (const std::bad_variant_access&) {
        throw NotOnCurve("reconstruction value is not a compressed point");
    }
    Scalar h = apply_hasher(hasher, cert);
    return point_add(scalar_mul(mod(h.value, cv.n), E), C);  // Z = h*E + C
}

std::vector<std::uint8_t> encode_cert(const ImplicitCert& cert) {
    std::vector<std::uint8_t> out;
    append_header(out, cert.version, cert.cert_type, cert.signer_id, cert.info);
    auto vki = cert.reconstruction_value.bytes();
    out.insert(out.end(), vki.begin(), vki.end());
    return out;
}

std::vector<std::uint8_t> encode_cert(const ExplicitCert& cert) {
    std::vector<std::uint8_t> out;
    append_header(out, cert.version, cert.cert_type, cert.signer_id, cert.info);
    auto key = cert.public_key.bytes();
    out.insert(out.end(), key.begin(), key.end());
    auto sig = serialize_signature(cert.signature, get_curve(cert.curve));
    out.insert(out.end(), sig.begin(), sig.end());
    return out;
}

std::size_t cert_length(const CurveParams& curve, std::size_t info_len, CertKind kind) {
    std::size_t q = 12 + info_len;                 // fixed header plus info
    std::size_t compressed = curve.coord_len + 1;  // tag + x
    return kind == CertKind::Implicit ? q + compressed
                                      : q + 2 * compressed + curve.coord_len;
}

std::size_t cert_length(std::string_view curve, std::size_t info_len, CertKind kind) {
    return cert_length(get_curve(curve), info_len, kind);
}

ExplicitCert make_explicit_cert(const CurvePoint& subject_pub,
                                std::span<const std::uint8_t> info, const KeyPair& ca,
                                RandomSource& rng) {
    if (subject_pub.curve != ca.priv.curve) throw CurveMismatch("subject and CA on different curves");
    if (subject_pub.infinity || !is_on_curve(subject_pub)) throw NotOnCurve("subject key invalid");
    const auto& cv = get_curve(ca.priv.curve);
    ExplicitCert cert;
    cert.signer_id = signer_id_from_ca(ca);
    cert.info.assign(info.begin(), info.end());
    cert.public_key = encode_point(subject_pub, EncodeMode::Compressed);
    cert.curve = cv.id;

    // Sign everything that precedes the signature field.
    std::vector<std::uint8_t> tbs;
    append_header(tbs, cert.version, cert.cert_type, cert.signer_id, cert.info);
    auto key = cert.public_key.bytes();
    tbs.insert(tbs.end(), key.begin(), key.end());
    cert.signature = sign(digest_message(tbs, cv), ca.priv, rng);
    return cert;
}

}  // namespace v2xec
