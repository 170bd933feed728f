// Command-line front end: key generation, signing, point/cert sizes, an
// implicit-certificate walkthrough, weak-randomness crack probabilities, and
// the CA-key recovery experiment.
//
// Exit codes: 0 success, 1 operation failure (reject, key not recovered,
// inconsistent derivation, domain error), 2 usage error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "v2xec/bench.hpp"
#include "v2xec/crack.hpp"
#include "v2xec/ecdsa.hpp"
#include "v2xec/ecqv.hpp"
#include "v2xec/hash.hpp"
#include "v2xec/keymgmt.hpp"
#include "v2xec/point_codec.hpp"

using namespace v2xec;

namespace {

int g_exit = 0;  // soft failures set this; hard errors throw

BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
        std::string hex = s.substr(2);
        if (hex.size() % 2 != 0) hex.insert(hex.begin(), '0');
        return from_bytes_be(from_hex(hex));
    }
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + s);
    }
    return BigInt(s);
}

std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
    if (seed) return std::make_unique<SeededRng>(*seed);
    return std::make_unique<SystemRng>();
}

std::string point_hex(const CurvePoint& P, EncodeMode mode) {
    auto bytes = encode_point(P, mode).bytes();
    return to_hex(bytes);
}

CurvePoint decode_pub(const std::string& hex, const CurveParams& cv) {
    auto enc = parse_encoded(from_hex(hex), cv);
    auto res = decode_point(enc, cv);
    if (std::holds_alternative<CandidatePair>(res)) {
        throw std::invalid_argument("x-only public keys are ambiguous; pass compressed bytes");
    }
    return std::get<CurvePoint>(res);
}

void cmd_keygen(const std::string& curve, const std::optional<std::uint64_t>& seed) {
    const auto& cv = get_curve(curve);
    auto rng = make_rng(seed);
    auto key = generate_keypair(cv, *rng);
    std::cout << "curve " << cv.name << "\n";
    std::cout << "priv " << to_hex(key.priv.value, cv.coord_len) << "\n";
    std::cout << "pub " << point_hex(key.pub, EncodeMode::Compressed) << "\n";
    std::cout << "pub_point " << to_string(key.pub) << "\n";
}

void cmd_sign(const std::string& curve, const std::string& priv_hex, const std::string& msg_hex,
              const std::optional<std::uint64_t>& seed) {
    const auto& cv = get_curve(curve);
    BigInt d = from_bytes_be(from_hex(priv_hex));
    if (d < 1 || d >= cv.n) throw std::invalid_argument("private key outside [1, n-1]");
    auto rng = make_rng(seed);
    auto msg = from_hex(msg_hex);
    auto sig = sign(digest_message(msg, cv), Scalar{d, cv.id}, *rng);
    std::cout << "sig " << to_hex(serialize_signature(sig, cv)) << "\n";
}

void cmd_verify(const std::string& curve, const std::string& pub_hex, const std::string& msg_hex,
                const std::string& sig_hex, bool full_point) {
    const auto& cv = get_curve(curve);
    CurvePoint pub = decode_pub(pub_hex, cv);
    Signature sig = parse_signature(from_hex(sig_hex), cv);
    auto msg = from_hex(msg_hex);
    bool ok = verify(digest_message(msg, cv), sig, pub,
                     full_point ? VerifyMode::FullPoint : VerifyMode::XOnly);
    std::cout << (ok ? "accept" : "reject") << "\n";
    if (!ok) g_exit = 1;
}

void cmd_lengths(const std::string& curve) {
    const auto& cv = get_curve(curve);
    std::size_t unc = encoded_length(cv, EncodeMode::Uncompressed);
    std::size_t comp = encoded_length(cv, EncodeMode::Compressed);
    std::cout << "curve " << cv.name << "\n";
    std::cout << "coord_len " << cv.coord_len << "\n";
    std::cout << "point_uncompressed " << unc << "\n";
    std::cout << "point_compressed " << comp << "\n";
    std::cout << "cert_implicit q+" << cert_length(cv, 0, CertKind::Implicit) - 12
              << "  (q = 12 + info_len)\n";
    std::cout << "cert_explicit q+" << cert_length(cv, 0, CertKind::Explicit) - 12 << "\n";
    std::cout << "cert_savings " << cert_length(cv, 0, CertKind::Explicit) -
                                        cert_length(cv, 0, CertKind::Implicit)
              << "\n";
}

void cmd_ecqv_demo(const std::string& curve, const std::optional<std::uint64_t>& seed,
                   const std::string& info_hex, const std::string& r_upper_str) {
    const auto& cv = get_curve(curve);
    auto rng = make_rng(seed);
    BigInt r_upper = parse_bigint(r_upper_str);
    if (r_upper == 0) r_upper = cv.n - 1;

    auto ca = generate_keypair(cv, *rng);
    auto device = generate_keypair(cv, *rng);
    CertRequest req{device.pub, from_hex(info_hex)};

    std::cout << "curve " << cv.name << "\n";
    std::cout << "ca_priv " << to_string(ca.priv) << "\n";
    std::cout << "ca_pub " << to_string(ca.pub) << "\n";
    std::cout << "request_pub " << to_string(req.P) << "\n";
    std::cout << "request_info " << to_hex(req.info) << "\n";

    auto resp = ca_issue(req, ca, *rng, r_upper);
    auto E = std::get<CurvePoint>(decode_point(resp.cert.reconstruction_value, cv));
    Scalar h = cert_hash(resp.cert);
    Scalar z = derive_private(resp.cert, resp.w, device.priv);
    CurvePoint Z = derive_public(resp.cert, ca.pub);
    CurvePoint zG = scalar_mul(z.value, cv.G);
    bool consistent = zG == Z;

    std::cout << "cert " << to_hex(encode_cert(resp.cert)) << "\n";
    std::cout << "reconstruction_E " << to_string(E) << "\n";
    std::cout << "cert_hash_h " << to_string(h) << "\n";
    std::cout << "private_contrib_w " << to_string(resp.w) << "\n";
    std::cout << "derived_priv_z " << to_string(z) << "\n";
    std::cout << "derived_pub_Z " << to_string(Z) << "\n";
    std::cout << "check_zG " << to_string(zG) << "\n";
    std::cout << "consistent " << (consistent ? "true" : "false") << "\n";
    if (!consistent) g_exit = 1;
}

void cmd_crack_prob(const std::string& h_str, const std::string& r_str, const std::string& n_str,
                    const std::string& c_str, const std::string& method, std::uint64_t trials,
                    const std::optional<std::uint64_t>& seed, bool json) {
    CrackParams params{parse_bigint(h_str), parse_bigint(r_str), parse_bigint(n_str),
                       parse_bigint(c_str)};
    nlohmann::ordered_json j;
    j["H"] = params.H.str();
    j["R"] = params.R.str();
    j["n"] = params.n.str();
    j["c"] = params.c.str();
    j["method"] = method;
    if (method == "mc") {
        auto rng = make_rng(seed);
        auto est = crack_probability_montecarlo(params, trials, *rng);
        if (json) {
            j["estimate"] = est.estimate;
            j["stderr"] = est.std_err;
            j["hits"] = est.hits;
            j["trials"] = est.trials;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "Pr ~ " << est.estimate << " +/- " << est.std_err << " (hits "
                      << est.hits << "/" << est.trials << ")\n";
        }
        return;
    }
    Probability pr =
        method == "exact" ? crack_probability_exact(params) : crack_probability_enum(params);
    if (json) {
        j["exact"] = pr.to_string();
        j["float"] = pr.value();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Pr = " << pr.to_string() << " = " << pr.value() << "\n";
    }
}

void cmd_crack_attack(const std::string& curve, const std::string& r_upper_str,
                      const std::string& budget_str, const std::string& hash_bound_str,
                      bool honest, const std::optional<std::uint64_t>& seed) {
    const auto& cv = get_curve(curve);
    auto rng = make_rng(seed);
    BigInt r_upper = parse_bigint(r_upper_str);
    BigInt budget = parse_bigint(budget_str);
    BigInt hash_bound = parse_bigint(hash_bound_str);
    if (honest) {
        r_upper = 0;
        hash_bound = 0;
    }
    if (r_upper == 0 || r_upper > cv.n - 1) r_upper = cv.n - 1;

    CertHasher hasher = hash_bound > 0 ? truncated_cert_hasher(hash_bound) : CertHasher{};
    auto ca = generate_keypair(cv, *rng);
    auto device = generate_keypair(cv, *rng);
    CertRequest req{device.pub, from_hex("0102")};
    auto resp = ca_issue(req, ca, *rng, r_upper, hasher);

    // Attacker's view: the public cert (hence h), the response scalar w, and
    // the CA public key.
    Scalar h = hasher ? hasher(resp.cert) : cert_hash(resp.cert);
    auto recovered = attack_recover_ca_key(resp.w, h, ca.pub, budget);

    std::cout << "curve " << cv.name << "\n";
    std::cout << "mode " << (honest ? "honest" : "weak") << " (r_upper=" << r_upper.str()
              << ", hash_bound=" << (hash_bound > 0 ? hash_bound.str() : std::string("full"))
              << ", budget=" << budget.str() << ")\n";
    std::cout << "true_c " << to_string(ca.priv) << "\n";
    if (recovered) {
        std::cout << "recovered_c " << to_string(*recovered) << "\n";
        std::cout << "match " << (*recovered == ca.priv ? "true" : "false") << "\n";
        if (!(*recovered == ca.priv)) g_exit = 1;
    } else {
        std::cout << "recovered_c none (budget exhausted)\n";
        g_exit = 1;
    }
}

void cmd_bench(const std::vector<std::string>& op_names, const std::vector<std::string>& curves,
               std::size_t iterations, std::size_t warmup,
               const std::optional<std::uint64_t>& seed, bool json, bool csv) {
    BenchConfig cfg;
    for (const auto& name : op_names) {
        if (name == "keygen") cfg.ops.push_back(BenchOp::KeyGen);
        else if (name == "key_expand") cfg.ops.push_back(BenchOp::KeyExpand);
        else if (name == "sign") cfg.ops.push_back(BenchOp::Sign);
        else if (name == "verify") cfg.ops.push_back(BenchOp::Verify);
        else throw std::invalid_argument("unknown op: " + name);
    }
    cfg.curves = curves;
    cfg.iterations = iterations;
    cfg.warmup = warmup;
    auto rng = make_rng(seed);
    auto results = run_bench(cfg, *rng);
    if (json) {
        for (const auto& r : results) std::cout << to_json_line(r) << "\n";
        return;
    }
    if (csv) {
        std::cout << csv_header() << "\n";
        for (const auto& r : results) std::cout << to_csv_line(r) << "\n";
        return;
    }
    std::cout << std::left << std::setw(12) << "op" << std::setw(8) << "curve" << std::right
              << std::setw(7) << "iters" << std::setw(12) << "mean_ms" << std::setw(12)
              << "median_ms" << std::setw(12) << "stddev_ms" << "\n";
    for (const auto& r : results) {
        std::cout << std::left << std::setw(12) << bench_op_name(r.op) << std::setw(8) << r.curve
                  << std::right << std::setw(7) << r.iterations << std::fixed
                  << std::setprecision(4) << std::setw(12) << r.mean_ms << std::setw(12)
                  << r.median_ms << std::setw(12) << r.stddev_ms << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic-curve credential toolkit (educational; not constant-time)"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::string curve = "P-256";

    // keygen
    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    {
        static std::string cv = curve;
        static std::optional<std::uint64_t> s;
        keygen->add_option("--curve", cv, "curve name")->capture_default_str();
        keygen->add_option("--seed", s, "deterministic seed");
        keygen->callback([] { cmd_keygen(cv, s); });
    }

    // sign
    auto* sgn = app.add_subcommand("sign", "sign a hex message");
    {
        static std::string cv = curve, priv, msg;
        static std::optional<std::uint64_t> s;
        sgn->add_option("--curve", cv, "curve name")->capture_default_str();
        sgn->add_option("--priv", priv, "private key, hex")->required();
        sgn->add_option("--msg", msg, "message bytes, hex")->required();
        sgn->add_option("--seed", s, "deterministic seed");
        sgn->callback([] { cmd_sign(cv, priv, msg, s); });
    }

    // verify
    auto* ver = app.add_subcommand("verify", "verify a signature");
    {
        static std::string cv = curve, pub, msg, sig;
        static bool full = false;
        ver->add_option("--curve", cv, "curve name")->capture_default_str();
        ver->add_option("--pub", pub, "public key point bytes, hex")->required();
        ver->add_option("--msg", msg, "message bytes, hex")->required();
        ver->add_option("--sig", sig, "signature bytes, hex")->required();
        ver->add_flag("--full-point", full, "also require matching nonce-point parity");
        ver->callback([] { cmd_verify(cv, pub, msg, sig, full); });
    }

    // lengths
    auto* len = app.add_subcommand("lengths", "encoded point and certificate sizes");
    {
        static std::string cv = curve;
        len->add_option("--curve", cv, "curve name")->capture_default_str();
        len->callback([] { cmd_lengths(cv); });
    }

    // ecqv demo
    auto* ecqv = app.add_subcommand("ecqv", "implicit-certificate operations");
    ecqv->require_subcommand(1);
    auto* demo = ecqv->add_subcommand("demo", "issue and derive, printing each value");
    {
        static std::string cv = curve, info = "6f62752d30303031", r_upper = "0";
        static std::optional<std::uint64_t> s;
        demo->add_option("--curve", cv, "curve name")->capture_default_str();
        demo->add_option("--seed", s, "deterministic seed");
        demo->add_option("--info", info, "identity bytes, hex")->capture_default_str();
        demo->add_option("--r-upper", r_upper, "CA randomness upper bound (0 = n-1)")
            ->capture_default_str();
        demo->callback([] { cmd_ecqv_demo(cv, s, info, r_upper); });
    }

    // crack prob / crack attack
    auto* crack = app.add_subcommand("crack", "weak-randomness analysis");
    crack->require_subcommand(1);
    auto* prob = crack->add_subcommand("prob", "probability that one issuance leaks the CA key");
    {
        static std::string H, R, n, c, method = "exact";
        static std::uint64_t trials = 1'000'000;
        static std::optional<std::uint64_t> s;
        static bool json = false;
        prob->add_option("--H", H, "hash upper bound")->required();
        prob->add_option("--R", R, "randomness upper bound")->required();
        prob->add_option("--n", n, "group order")->required();
        prob->add_option("--c", c, "CA private key")->required();
        prob->add_option("--method", method, "exact | enum | mc")
            ->check(CLI::IsMember({"exact", "enum", "mc"}))
            ->capture_default_str();
        prob->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
        prob->add_option("--seed", s, "deterministic seed");
        prob->add_flag("--json", json, "JSON output");
        prob->callback([] { cmd_crack_prob(H, R, n, c, method, trials, s, json); });
    }
    auto* attack = crack->add_subcommand("attack", "recover a CA key from one weak issuance");
    {
        static std::string cv = curve, r_upper = "65536", budget = "65536", bound = "65536";
        static bool honest = false;
        static std::optional<std::uint64_t> s;
        attack->add_option("--curve", cv, "curve name")->capture_default_str();
        attack->add_option("--r-upper", r_upper, "CA randomness upper bound (0 = n-1)")
            ->capture_default_str();
        attack->add_option("--budget", budget, "candidates to try")->capture_default_str();
        attack->add_option("--hash-bound", bound, "cert hash bound (0 = full SHA-256 scale)")
            ->capture_default_str();
        attack->add_flag("--honest", honest, "full-range r and full-scale hash");
        attack->add_option("--seed", s, "deterministic seed");
        attack->callback([] { cmd_crack_attack(cv, r_upper, budget, bound, honest, s); });
    }

    // bench
    auto* bench = app.add_subcommand("bench", "time group and signature operations");
    {
        static std::vector<std::string> ops = {"keygen", "key_expand", "sign", "verify"};
        static std::vector<std::string> curves = {"P-192", "P-224", "P-256", "P-384", "P-521"};
        static std::size_t iterations = 100, warmup = 10;
        static std::optional<std::uint64_t> s;
        static bool json = false, csv = false;
        bench->add_option("--ops", ops, "ops to time")->delimiter(',')->capture_default_str();
        bench->add_option("--curves", curves, "curves to time")
            ->delimiter(',')
            ->capture_default_str();
        bench->add_option("--iterations", iterations, "timed iterations (>= 30)")
            ->capture_default_str();
        bench->add_option("--warmup", warmup, "untimed warmup iterations (>= 5)")
            ->capture_default_str();
        bench->add_option("--seed", s, "deterministic seed");
        bench->add_flag("--json", json, "one JSON line per result");
        bench->add_flag("--csv", csv, "CSV output");
        bench->callback([] { cmd_bench(ops, curves, iterations, warmup, s, json, csv); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
