// un-elgamal: ElGamal over U(n) for n = p^m or 2p^m.
//
// Subcommands: keygen, encrypt, decrypt, dlog, classify, bench.
// Results go to stdout, diagnostics to stderr.
//
// Exit codes:
//   0 ok            2 invalid arguments      3 I/O failure
//   4 codec error   5 malformed key/ct file  6 invalid block on decode
//   7 target not in <base>                   8 effort cap exceeded

#include "unelgamal/unelgamal.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace unelgamal;

constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitCodec = 4;
constexpr int kExitMalformed = 5;
constexpr int kExitInvalidBlock = 6;
constexpr int kExitNotInSubgroup = 7;
constexpr int kExitCap = 8;

std::uint64_t effort_cap(std::uint64_t fallback) {
    const char* env = std::getenv("UN_ELGAMAL_EFFORT_CAP");
    if (!env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        std::cerr << "warning: ignoring unparsable UN_ELGAMAL_EFFORT_CAP\n";
        return fallback;
    }
    return v;
}

struct GlobalOpts {
    bool insecure_deterministic = false;
    std::optional<std::uint64_t> seed;

    RandomSource rng() const {
        if (seed) return RandomSource(*seed);
        return RandomSource::from_entropy();
    }
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open for reading: " + path);
    return in;
}

int cmd_keygen(const GlobalOpts& g, unsigned p_bits, unsigned m, bool doubled,
               const std::string& pub_path, const std::string& priv_path,
               const std::string& exact_p, const std::string& exact_a,
               const std::string& exact_r1) {
    KeyPair kp = [&] {
        if (!exact_p.empty()) {
            if (exact_a.empty() || exact_r1.empty())
                throw CLI::ValidationError("--exact-p requires --exact-a and --exact-r1");
            if (!g.insecure_deterministic)
                throw CLI::ValidationError(
                    "the exact-key path requires --insecure-deterministic");
            return keygen_exact(Natural(exact_p), m, doubled, Natural(exact_a),
                                Natural(exact_r1));
        }
        if (p_bits < 1024)
            std::cerr << "WARNING: p-bits " << p_bits
                      << " is far below the recommended 1024 bits; "
                         "keys this small are toys\n";
        RandomSource rng = g.rng();
        return keygen(p_bits, m, doubled, rng);
    }();

    auto pub_out = open_out(pub_path);
    write_public_key(pub_out, kp.pub);
    auto priv_out = open_out(priv_path);
    write_private_key(priv_out, kp.priv);
    std::cout << "n=" << kp.pub.modulus->n << "\n"
              << "n_bits=" << bit_length(kp.pub.modulus->n) << "\n"
              << "r1=" << kp.pub.r1 << "\n";
    return 0;
}

int cmd_encrypt(const GlobalOpts& g, const std::string& pub_path,
                std::string message, const std::string& msg_path,
                const std::string& out_path, bool paper_mode,
                const std::string& k_str) {
    auto pub_in = open_in(pub_path);
    PublicKey pub = read_public_key(pub_in);
    if (!msg_path.empty()) {
        auto min = open_in(msg_path);
        std::ostringstream ss;
        ss << min.rdbuf();
        message = ss.str();
    }
    EncodedMessage msg = encode(message, pub.modulus->n);
    std::vector<CiphertextBlock> cts;
    if (paper_mode) {
        if (k_str.empty())
            throw CLI::ValidationError("--paper-mode requires --k");
        cts = encrypt_message(pub, msg, Natural(k_str));
    } else {
        if (!k_str.empty())
            throw CLI::ValidationError("--k only applies with --paper-mode");
        RandomSource rng = g.rng();
        cts = encrypt_message(pub, msg, rng);
    }
    auto out = open_out(out_path);
    write_ciphertext(out, cts, msg.pad_count);
    std::cerr << "wrote " << cts.size() << " blocks to " << out_path << "\n";
    return 0;
}

int cmd_decrypt(const std::string& priv_path, const std::string& ct_path) {
    auto priv_in = open_in(priv_path);
    PrivateKey priv = read_private_key(priv_in);
    auto ct_in = open_in(ct_path);
    CiphertextFile ct = read_ciphertext(ct_in);
    EncodedMessage msg = decrypt_message(priv, ct.blocks, ct.pad_count);
    std::cout << decode(msg) << "\n";
    return 0;
}

int cmd_dlog(const std::string& base_s, const std::string& target_s,
             const std::string& n_s, const std::string& alg) {
    Natural n(n_s);
    Classification cls = classify_modulus(n, effort_cap(detail::kDefaultRhoIterCap));
    if (cls.kind != ModulusClass::Cyclic_P_M && cls.kind != ModulusClass::Cyclic_2P_M)
        throw CLI::ValidationError("n must be of the form p^m or 2p^m");
    ModulusPtr mod = make_modulus(cls.p, cls.m, cls.kind == ModulusClass::Cyclic_2P_M);
    DlogInstance inst = make_dlog_instance(Natural(base_s), Natural(target_s), mod);
    Natural x = alg == "brute" ? dlog_bruteforce(inst, effort_cap(1ULL << 26))
                               : dlog_bsgs(inst, effort_cap(1ULL << 25));
    std::cout << x << " (" << (alg == "brute" ? "brute" : "bsgs") << ")\n";
    return 0;
}

int cmd_classify(const std::string& n_s) {
    Natural n(n_s);
    if (n < 2) throw CLI::ValidationError("n must be >= 2");
    Classification cls = classify_modulus(n, effort_cap(detail::kDefaultRhoIterCap));
    std::cout << to_string(cls.kind);
    if (cls.kind == ModulusClass::Cyclic_P_M || cls.kind == ModulusClass::Cyclic_2P_M)
        std::cout << ", p=" << cls.p << ", m=" << cls.m;
    std::cout << "\n";
    return 0;
}

int cmd_bench(const GlobalOpts& g, const std::string& bits_csv, unsigned m,
              bool doubled, unsigned trials, const std::string& out_path) {
    std::vector<unsigned> bits_list;
    std::stringstream ss(bits_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int b = std::stoi(tok);
        if (b < 3) throw CLI::ValidationError("p-bits entries must be >= 3");
        bits_list.push_back(static_cast<unsigned>(b));
    }
    if (bits_list.empty()) throw CLI::ValidationError("empty --p-bits list");
    RandomSource rng = g.rng();
    auto reports = scaling_benchmark(bits_list, m, doubled, trials, rng,
                                     effort_cap(1ULL << 25));
    std::string csv = reports_to_csv(reports);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << csv;
    } else {
        std::cout << csv;
    }
    if (bits_list.size() >= 2 && trials >= 1)
        std::cout << "slope=" << fitted_loglog_slope(reports) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ElGamal cryptosystem over the group of units U(n), n = p^m or 2p^m"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--insecure-deterministic", g.insecure_deterministic,
                 "Allow seeded, reproducible randomness (testing only)");
    std::uint64_t seed_val = 0;
    auto* seed_opt =
        app.add_option("--seed", seed_val, "RNG seed (requires --insecure-deterministic)");

    // keygen
    auto* kg = app.add_subcommand("keygen", "Generate a key pair");
    unsigned p_bits = 1024, kg_m = 1;
    bool kg_doubled = false;
    std::string pub_path, priv_path, exact_p, exact_a, exact_r1;
    kg->add_option("--p-bits", p_bits, "Bit size of the prime p")->capture_default_str();
    kg->add_option("--m", kg_m, "Exponent m in p^m")->capture_default_str();
    kg->add_flag("--doubled", kg_doubled, "Use n = 2p^m");
    kg->add_option("--pub", pub_path, "Public key output path")->required();
    kg->add_option("--priv", priv_path, "Private key output path")->required();
    kg->add_option("--exact-p", exact_p, "Exact prime p (test injection)");
    kg->add_option("--exact-a", exact_a, "Exact private exponent a (test injection)");
    kg->add_option("--exact-r1", exact_r1, "Exact generator r1 (test injection)");

    // encrypt
    auto* en = app.add_subcommand("encrypt", "Encrypt a letters-only message");
    std::string en_pub, en_msg, en_msg_file, en_out, en_k;
    bool paper_mode = false;
    en->add_option("--pub", en_pub, "Public key path")->required();
    en->add_option("--message", en_msg, "Message text");
    en->add_option("--in", en_msg_file, "Message file (alternative to --message)");
    en->add_option("--out", en_out, "Ciphertext output path")->required();
    en->add_flag("--paper-mode", paper_mode,
                 "Fixed ephemeral k for all blocks (leaks block equality!)");
    en->add_option("--k", en_k, "Fixed ephemeral exponent (with --paper-mode)");

    // decrypt
    auto* de = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
    std::string de_priv, de_in;
    de->add_option("--priv", de_priv, "Private key path")->required();
    de->add_option("--in", de_in, "Ciphertext path")->required();

    // dlog
    auto* dl = app.add_subcommand("dlog", "Solve a discrete logarithm in U(n)");
    std::string dl_base, dl_target, dl_n, dl_alg = "bsgs";
    dl->add_option("--base", dl_base, "Generator base")->required();
    dl->add_option("--target", dl_target, "Target element")->required();
    dl->add_option("--n", dl_n, "Modulus (must be p^m or 2p^m)")->required();
    dl->add_option("--alg", dl_alg, "Algorithm: brute | bsgs")
        ->check(CLI::IsMember({"brute", "bsgs"}));

    // classify
    auto* cl = app.add_subcommand("classify", "Classify n against the cyclic forms");
    std::string cl_n;
    cl->add_option("n", cl_n, "Modulus to classify")->required();

    // bench
    auto* be = app.add_subcommand("bench", "DLP cost-scaling benchmark");
    std::string be_bits = "12,16,20,24", be_out;
    unsigned be_m = 1, be_trials = 5;
    bool be_doubled = false;
    be->add_option("--p-bits", be_bits, "Comma-separated p bit sizes")->capture_default_str();
    be->add_option("--m", be_m, "Exponent m")->capture_default_str();
    be->add_flag("--doubled", be_doubled, "Use n = 2p^m");
    be->add_option("--trials", be_trials, "Trials per size")->capture_default_str();
    be->add_option("--out", be_out, "CSV output path (default stdout)");

    // let --insecure-deterministic / --seed appear after the subcommand too
    for (auto* sub : {kg, en, de, dl, cl, be}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitArgs;
    }

    if (*seed_opt) {
        if (!g.insecure_deterministic) {
            std::cerr << "error: --seed requires --insecure-deterministic\n";
            return kExitArgs;
        }
        g.seed = seed_val;
    }

    try {
        if (*kg)
            return cmd_keygen(g, p_bits, kg_m, kg_doubled, pub_path, priv_path,
                              exact_p, exact_a, exact_r1);
        if (*en)
            return cmd_encrypt(g, en_pub, en_msg, en_msg_file, en_out, paper_mode, en_k);
        if (*de) return cmd_decrypt(de_priv, de_in);
        if (*dl) return cmd_dlog(dl_base, dl_target, dl_n, dl_alg);
        if (*cl) return cmd_classify(cl_n);
        if (*be) return cmd_bench(g, be_bits, be_m, be_doubled, be_trials, be_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const UnsupportedCharacter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCodec;
    } catch (const ModulusTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCodec;
    } catch (const InvalidBlock& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidBlock;
    } catch (const MalformedFile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const NotInSubgroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotInSubgroup;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const MemoryBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const FactorizationTooHard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    }
    return kExitArgs;
}
