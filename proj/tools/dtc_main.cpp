#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtc/block_code.hpp"
#include "dtc/bounds.hpp"
#include "dtc/channel.hpp"
#include "dtc/lee_code.hpp"
#include "dtc/list_code.hpp"
#include "dtc/oracle.hpp"
#include "dtc/sequence.hpp"
#include "dtc/shift_code.hpp"
#include "dtc/single_code.hpp"

using namespace dtc;

// exit codes: 0 ok, 1 decode failure, 2 usage error, 3 verification failure

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailure = 3;

BitString read_word(const std::string& inline_bits, const std::string& path) {
    if (!inline_bits.empty()) return bits_from_text(inline_bits);
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::string line;
        std::getline(in, line);
        return bits_from_text(line);
    }
    std::string line;
    std::getline(std::cin, line);
    return bits_from_text(line);
}

std::vector<int64_t> parse_residues(const std::string& text, int expect) {
    std::vector<int64_t> out;
    if (!text.empty()) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            out.push_back(std::stoll(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    }
    if (out.empty()) out.assign(expect, 0);
    if (static_cast<int>(out.size()) != expect)
        throw std::runtime_error("expected " + std::to_string(expect) + " residues");
    return out;
}

// {"decode": {"family": "single", "n": 6, ...}}; explicit flags win
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        auto render = [](const nlohmann::json& v) {
            return v.is_string() ? v.get<std::string>() : v.dump();
        };
        auto j = nlohmann::json::parse(input);
        std::vector<CLI::ConfigItem> out;
        for (const auto& [key, val] : j.items()) {
            if (val.is_object()) {
                for (const auto& [name, inner] : val.items()) {
                    CLI::ConfigItem item;
                    item.parents = {key};
                    item.name = name;
                    item.inputs = {render(inner)};
                    out.push_back(std::move(item));
                }
            } else {
                CLI::ConfigItem item;
                item.name = key;
                item.inputs = {render(val)};
                out.push_back(std::move(item));
            }
        }
        return out;
    }
};

int emit_outcome(const DecodeOutcome& out) {
    if (!out.ok()) {
        std::cerr << "decode failed: " << to_string(out.status) << "\n";
        return kExitDecodeFailure;
    }
    std::cout << to_text(out.word) << "\n";
    return kExitOk;
}

int run_paper_preset() {
    // the published block-decoding walkthrough; the inner decoder's output is
    // part of the preset because its code stays abstract at this size
    BlockCode bc(10, BlockParams{2, 2, 1, false});
    BitString y = bits_from_text("0110110");
    auto tr = bc.decode_with_reference(y, {1, 2, 1, 2, 0});
    std::cout << "y        = " << to_text(y) << "\n";
    std::cout << "z'       = ";
    for (int v : tr.z_prime) std::cout << v;
    std::cout << "\nz*       = ";
    for (int v : tr.z_star) std::cout << v;
    std::cout << "\neps'     = " << phi_to_text(tr.eps_prime);
    std::cout << "\neps      = " << phi_to_text(tr.eps);
    std::cout << "\ndecoded  = " << (tr.outcome.ok() ? to_text(tr.outcome.word) : "(failed)")
              << "\n";
    return tr.outcome.ok() && tr.outcome.word == bits_from_text("0100101001")
               ? kExitOk
               : kExitDecodeFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes for 0-deletions, adjacent transpositions and limited-magnitude "
                 "block deletions"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON run configuration");

    std::string family, bits_in, infile, outfile, residues, preset;
    int n = 10, t = 1, s_plus = 0, s_minus = 0, t_b = 1, ell = 1, s = 0, k = 12, b = 0;
    int64_t a = 0;
    uint64_t seed = 1;
    bool strict_paper = false, use_t1 = false, block_budget = false, with_block_bound = false;

    auto add_word_opts = [&](CLI::App* cmd) {
        cmd->add_option("--in", bits_in, "input bits inline");
        cmd->add_option("--infile", infile, "input bits from file (first line)");
    };

    auto* gen = app.add_subcommand("gen", "enumerate a codebook, one word per line");
    gen->add_option("--family", family, "single|shift|lee|list|block")->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--a", a);
    gen->add_option("--residues", residues, "comma-separated syndrome residues");
    gen->add_option("--b", b);
    gen->add_option("--t", t);
    gen->add_option("--s-plus", s_plus);
    gen->add_option("--s-minus", s_minus);
    gen->add_option("--tb", t_b);
    gen->add_option("--ell", ell);
    gen->add_option("--s", s);
    gen->add_option("-o,--out", outfile);

    auto* enc = app.add_subcommand("encode", "systematic block-code encoding");
    enc->add_option("--k", k)->required();
    enc->add_option("--tb", t_b)->required();
    enc->add_option("--ell", ell)->required();
    enc->add_option("--s", s);
    enc->add_flag("--strict-paper", strict_paper);
    add_word_opts(enc);

    auto* cor = app.add_subcommand("corrupt", "apply a seeded channel pattern");
    cor->add_option("--seed", seed)->required();
    cor->add_option("--t", t);
    cor->add_option("--s-plus", s_plus);
    cor->add_option("--s-minus", s_minus);
    cor->add_option("--tb", t_b);
    cor->add_option("--ell", ell);
    cor->add_option("--s", s);
    cor->add_flag("--block", block_budget, "use the block-deletion budget (tb, ell, s)");
    add_word_opts(cor);

    auto* dec = app.add_subcommand("decode", "decode one received word");
    dec->add_option("--family", family, "single|shift|lee|list|block|block-systematic");
    dec->add_option("--preset", preset, "paper-example");
    dec->add_option("--n", n);
    dec->add_option("--a", a);
    dec->add_option("--residues", residues);
    dec->add_option("--b", b);
    dec->add_option("--t", t);
    dec->add_option("--s-plus", s_plus);
    dec->add_option("--s-minus", s_minus);
    dec->add_option("--tb", t_b);
    dec->add_option("--ell", ell);
    dec->add_option("--s", s);
    dec->add_option("--k", k);
    dec->add_flag("--strict-paper", strict_paper);
    dec->add_flag("--t1-path", use_t1, "use the t=1 list fast path");
    add_word_opts(dec);

    auto* ver = app.add_subcommand("verify", "run the exhaustive oracle for one family");
    ver->add_option("--family", family, "single|shift|lee|list|block|block-systematic")
        ->required();
    ver->add_option("--n", n);
    ver->add_option("--t", t);
    ver->add_option("--s-plus", s_plus);
    ver->add_option("--s-minus", s_minus);
    ver->add_option("--tb", t_b);
    ver->add_option("--ell", ell);
    ver->add_option("--s", s);
    ver->add_option("--k", k);
    ver->add_option("--seed", seed);

    auto* bnd = app.add_subcommand("bounds", "print the bound report as JSON");
    bnd->add_option("--n", n)->required();
    bnd->add_option("--t", t);
    bnd->add_option("--s", s);
    bnd->add_option("--tb", t_b);
    bnd->add_option("--ell", ell);
    bnd->add_flag("--block", with_block_bound, "include the block-code size bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::vector<BitString> code;
            if (family == "single") {
                code = SingleCode(n, a).codebook();
            } else if (family == "shift") {
                code = ShiftCode(n, s_plus, s_minus, a, b).codebook();
            } else if (family == "lee") {
                int r = t + 2 * s;
                code = LeeCode(n, r, parse_residues(residues, r)).codebook();
            } else if (family == "list") {
                int kappa = std::max(t, s_plus + s_minus + 1);
                code = ListCode(n, t, s_plus, s_minus, parse_residues(residues, kappa)).codebook();
            } else if (family == "block") {
                code = BlockCode(n, BlockParams{t_b, ell, s, strict_paper}).codebook();
            } else {
                std::cerr << "unknown family " << family << "\n";
                return kExitUsage;
            }
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!outfile.empty()) {
                file.open(outfile);
                out = &file;
            }
            for (const auto& x : code) *out << to_text(x) << "\n";
            return kExitOk;
        }

        if (enc->parsed()) {
            static const IdentityProtector prot;
            SystematicBlockCode code(k, BlockParams{t_b, ell, s, strict_paper}, prot);
            BitString msg = read_word(bits_in, infile);
            std::cout << to_text(code.encode(msg)) << "\n";
            std::cerr << code.layout().to_json() << "\n";
            return kExitOk;
        }

        if (cor->parsed()) {
            BitString x = read_word(bits_in, infile);
            ErrorPattern pat = block_budget
                                   ? sample_pattern(x, BlockBudget{t_b, ell, s}, seed)
                                   : sample_pattern(x, ShiftBudget{t, s_plus, s_minus}, seed);
            auto y = apply_pattern(x, pat);
            if (!y) {
                std::cerr << "pattern inapplicable\n";
                return kExitDecodeFailure;
            }
            std::cout << to_text(*y) << "\n";
            std::cerr << pat.to_json() << "\n";
            return kExitOk;
        }

        if (dec->parsed()) {
            if (preset == "paper-example") return run_paper_preset();
            if (!preset.empty()) {
                std::cerr << "unknown preset " << preset << "\n";
                return kExitUsage;
            }
            BitString y = read_word(bits_in, infile);
            if (family == "single") return emit_outcome(SingleCode(n, a).decode(y));
            if (family == "shift")
                return emit_outcome(ShiftCode(n, s_plus, s_minus, a, b).decode(y));
            if (family == "lee") {
                int r = t + 2 * s;
                return emit_outcome(LeeCode(n, r, parse_residues(residues, r)).decode(y, t, s));
            }
            if (family == "list") {
                int kappa = std::max(t, s_plus + s_minus + 1);
                ListCode code(n, t, s_plus, s_minus, parse_residues(residues, kappa));
                auto list = use_t1 ? code.decode_list_t1(y) : code.decode_list(y);
                for (const auto& cand : list) std::cout << to_text(cand) << "\n";
                return list.empty() ? kExitDecodeFailure : kExitOk;
            }
            if (family == "block")
                return emit_outcome(
                    BlockCode(n, BlockParams{t_b, ell, s, strict_paper}).decode(y));
            if (family == "block-systematic") {
                static const IdentityProtector prot;
                SystematicBlockCode code(k, BlockParams{t_b, ell, s, strict_paper}, prot);
                return emit_outcome(code.decode(y));
            }
            std::cerr << "unknown family " << family << "\n";
            return kExitUsage;
        }

        if (ver->parsed()) {
            VerificationReport rep;
            if (family == "single")
                rep = verify_single_exhaustive(n);
            else if (family == "shift")
                rep = verify_shift_exhaustive(n, s_plus, s_minus);
            else if (family == "lee")
                rep = verify_lee_exhaustive(n, t, s);
            else if (family == "list")
                rep = verify_list_exhaustive(n, t, s_plus, s_minus);
            else if (family == "block")
                rep = verify_block_nonsys_exhaustive(n, BlockParams{t_b, ell, s, false});
            else if (family == "block-systematic") {
                if (ver->count("--seed") == 0) {
                    std::cerr << "--seed is required for the randomized harness\n";
                    return kExitUsage;
                }
                rep = verify_block_systematic_random(k, BlockParams{t_b, ell, s, false}, 500,
                                                     seed);
            }
            else {
                std::cerr << "unknown family " << family << "\n";
                return kExitUsage;
            }
            std::cout << rep.to_json() << "\n";
            return rep.verified() ? kExitOk : kExitVerifyFailure;
        }

        if (bnd->parsed()) {
            BoundReport rep =
                with_block_bound
                    ? bound_report_block(n, t_b, ell, s, BlockParams{t_b, ell, s, false}.prime())
                    : bound_report(n, t, s);
            std::cout << rep.to_json() << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
