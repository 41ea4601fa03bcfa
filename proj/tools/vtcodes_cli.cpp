// Batch front end over the vtcodes library: encode, decode, corrupt, verify,
// enumerate, tables, fuzz. Exit codes: 0 success, 1 decode/verify failure,
// 2 usage error or exceeded enumeration budget.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vtcodes/channel.hpp"
#include "vtcodes/encoders.hpp"
#include "vtcodes/tables.hpp"

namespace {

using namespace vtcodes;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    return out.str();
}

std::string format_digits(const std::vector<Symbol>& digits) {
    std::ostringstream out;
    for (Symbol d : digits) out << d;  // one digit per symbol for q <= 10 uses
    return out.str();
}

void print_decode_report(std::ostream& os, const DecodeReport& report, bool trace) {
    os << " codeword=" << format_word(report.codeword) << " kind=" << to_string(report.kind)
       << " position=";
    if (report.position) {
        os << *report.position;
    } else {
        os << '-';
    }
    os << " symbol=";
    if (report.symbol) {
        os << *report.symbol;
    } else {
        os << '-';
    }
    if (trace) {
        os << " delta=" << report.trace.delta << " s=" << report.trace.s
           << " case=" << to_string(report.trace.case_tag) << " h=";
        if (report.trace.h) {
            os << *report.trace.h;
        } else {
            os << '-';
        }
        os << " comparisons=" << report.trace.comparisons;
    }
}

// "5" -> [5, 5]; "4..8" -> [4, 8]
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            return {v, v};
        }
        const std::uint64_t lo = std::stoull(text.substr(0, dots));
        const std::uint64_t hi = std::stoull(text.substr(dots + 2));
        if (hi < lo) throw UsageError("empty range: " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed range: " + text);
    } catch (const std::out_of_range&) {
        throw UsageError("malformed range: " + text);
    }
}

struct EncodeArgs {
    std::string variant = "vt2";
    Symbol q = 0;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> k;
    std::string message;
    bool trace = false;
    std::string format = "text";
};

int cmd_encode(const EncodeArgs& args) {
    const bool record = args.format == "record";
    if (args.variant == "vt2") {
        if (args.n == 0 || !args.a) throw UsageError("encode --variant vt2 requires -n and -a");
        VtStarCode code(CodeParams(args.q, args.n, *args.a));
        const Word msg = parse_word(args.message, args.q);
        const Encoder2Result result = encode2_traced(code, msg);
        std::ostringstream out;
        if (record) {
            out << "encode variant=vt2 q=" << args.q << " n=" << args.n << " a=" << *args.a
                << " msg=" << format_word(msg) << " codeword=" << format_word(result.codeword);
            if (args.trace) {
                out << " S=" << join_u64(result.trace.s_indices)
                    << " a_prime=" << result.trace.a_prime << " alpha=" << result.trace.alpha
                    << " a_dprime=" << result.trace.a_dprime
                    << " z=" << format_digits(result.trace.z);
            }
            out << '\n';
        } else {
            out << format_word(result.codeword) << '\n';
            if (args.trace) {
                out << "S=" << join_u64(result.trace.s_indices) << '\n'
                    << "I=" << join_u64(result.trace.i_indices) << '\n'
                    << "a_prime=" << result.trace.a_prime << '\n'
                    << "alpha=" << result.trace.alpha << '\n'
                    << "a_dprime=" << result.trace.a_dprime << '\n'
                    << "z=" << format_digits(result.trace.z) << '\n';
            }
        }
        std::cout << out.str();
        return 0;
    }
    // sys1
    if (!args.k) throw UsageError("encode --variant sys1 requires -k");
    const Word msg = parse_word(args.message, args.q);
    const SystematicFrame frame = encode1(args.q, *args.k, msg);
    std::ostringstream out;
    if (record) {
        out << "encode variant=sys1 q=" << args.q << " k=" << *args.k
            << " msg=" << format_word(msg) << " frame=" << format_word(frame.frame);
        if (args.trace) {
            out << " marker=" << frame.marker
                << " digits=" << format_digits(frame.syndrome_digits);
        }
        out << '\n';
    } else {
        out << format_word(frame.frame) << '\n';
        if (args.trace) {
            out << "marker=" << frame.marker << '\n'
                << "digits=" << format_digits(frame.syndrome_digits) << '\n';
        }
    }
    std::cout << out.str();
    return 0;
}

struct DecodeArgs {
    std::string variant = "vt2";
    Symbol q = 0;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> a;
    std::optional<std::uint64_t> k;
    std::string received;
    bool trace = false;
    std::string format = "text";
};

int cmd_decode(const DecodeArgs& args) {
    const bool record = args.format == "record";
    if (args.variant == "vt2") {
        if (args.n == 0 || !args.a) throw UsageError("decode --variant vt2 requires -n and -a");
        VtStarCode code(CodeParams(args.q, args.n, *args.a));
        const Word received = parse_word(args.received, args.q);
        const Decode2Result result = decode2_traced(code, received);
        std::ostringstream out;
        if (record) {
            out << "decode variant=vt2 q=" << args.q << " n=" << args.n << " a=" << *args.a
                << " received=" << format_word(received)
                << " message=" << format_word(result.message);
            print_decode_report(out, result.report, args.trace);
            out << '\n';
        } else {
            out << format_word(result.message) << '\n';
            out << "codeword=" << format_word(result.report.codeword) << '\n'
                << "kind=" << to_string(result.report.kind) << '\n';
            if (args.trace) {
                out << "delta=" << result.report.trace.delta << '\n'
                    << "s=" << result.report.trace.s << '\n'
                    << "case=" << to_string(result.report.trace.case_tag) << '\n';
                if (result.report.trace.h) out << "h=" << *result.report.trace.h << '\n';
                if (result.report.position) out << "position=" << *result.report.position << '\n';
                if (result.report.symbol) out << "symbol=" << *result.report.symbol << '\n';
                out << "comparisons=" << result.report.trace.comparisons << '\n';
            }
        }
        std::cout << out.str();
        return 0;
    }
    if (!args.k) throw UsageError("decode --variant sys1 requires -k");
    const Word received = parse_word(args.received, args.q);
    const Word message = decode1(args.q, *args.k, received);
    if (record) {
        std::cout << "decode variant=sys1 q=" << args.q << " k=" << *args.k
                  << " received=" << format_word(received)
                  << " message=" << format_word(message) << '\n';
    } else {
        std::cout << format_word(message) << '\n';
    }
    return 0;
}

struct CorruptArgs {
    Symbol q = 0;
    std::string word;
    std::uint64_t seed = 0;
    std::string mode = "either";
    std::string format = "text";
};

int cmd_corrupt(const CorruptArgs& args) {
    const Word w = parse_word(args.word, args.q);
    CorruptMode mode = CorruptMode::either;
    if (args.mode == "deletion") mode = CorruptMode::deletion;
    if (args.mode == "insertion") mode = CorruptMode::insertion;
    const auto [corrupted, corruption] = random_corrupt(w, args.seed, mode);
    if (args.format == "record") {
        std::cout << "corrupt q=" << args.q << " seed=" << args.seed << " mode=" << args.mode
                  << " word=" << format_word(w) << " corrupted=" << format_word(corrupted)
                  << " kind=" << to_string(corruption.kind)
                  << " position=" << corruption.position << " symbol=";
        if (corruption.symbol) {
            std::cout << *corruption.symbol;
        } else {
            std::cout << '-';
        }
        std::cout << '\n';
    } else {
        std::cout << format_word(corrupted) << '\n'
                  << "kind=" << to_string(corruption.kind) << '\n'
                  << "position=" << corruption.position << '\n';
        if (corruption.symbol) std::cout << "symbol=" << *corruption.symbol << '\n';
    }
    return 0;
}

struct VerifyArgs {
    Symbol q = 0;
    std::string n_range;
    std::string a = "all";
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& args) {
    const auto [n_lo, n_hi] = parse_range(args.n_range);
    if (n_lo < 2) throw UsageError("verify requires n >= 2");
    const bool record = args.format == "record";
    std::uint64_t total_failures = 0;

    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const std::uint64_t modulus = static_cast<std::uint64_t>(args.q) * n;
        std::vector<std::uint64_t> a_values;
        if (args.a == "all") {
            for (std::uint64_t a = 0; a < modulus; ++a) a_values.push_back(a);
        } else {
            try {
                a_values.push_back(std::stoull(args.a));
            } catch (const std::exception&) {
                throw UsageError("-a expects a residue value or 'all'");
            }
        }

        std::uint64_t members_total = 0, checks = 0, failures = 0;
        std::uint64_t max_size = 0, max_a = 0;
        bool disjoint_ok = true;
        std::string first_witness;

        for (std::uint64_t a : a_values) {
            VtStarCode code(CodeParams(args.q, n, a));
            const std::vector<Word> members = code.enumerate(args.budget);
            members_total += members.size();
            if (members.size() > max_size) {
                max_size = members.size();
                max_a = a;
            }
            if (auto witness = check_code_disjointness(members)) {
                disjoint_ok = false;
                ++failures;
                if (first_witness.empty()) {
                    first_witness = "disjointness x=" + format_word(witness->x) +
                                    " y=" + format_word(witness->y) +
                                    " common=" + format_word(witness->common);
                }
            }
            for (const Word& x : members) {
                for (std::uint64_t i = 1; i <= n; ++i) {
                    ++checks;
                    try {
                        if (decode(code, delete_at(x, i)).codeword == x) continue;
                    } catch (const UncorrectableError&) {
                    }
                    ++failures;
                    if (first_witness.empty()) {
                        first_witness = "deletion x=" + format_word(x) + " i=" + std::to_string(i);
                    }
                }
                for (std::uint64_t i = 1; i <= n + 1; ++i) {
                    for (Symbol v = 0; v < args.q; ++v) {
                        ++checks;
                        try {
                            if (decode(code, insert_at(x, i, v)).codeword == x) continue;
                        } catch (const UncorrectableError&) {
                        }
                        ++failures;
                        if (first_witness.empty()) {
                            first_witness = "insertion x=" + format_word(x) +
                                            " i=" + std::to_string(i) +
                                            " v=" + std::to_string(v);
                        }
                    }
                }
            }
        }

        // Pigeonhole bound only makes sense over all residues.
        std::uint64_t space = 1;
        for (std::uint64_t i = 0; i < n; ++i) space *= args.q;
        const bool bound_ok =
            args.a != "all" || max_size * modulus >= space;  // max >= q^n/(qn)
        if (!bound_ok) ++failures;

        total_failures += failures;
        if (record) {
            std::cout << "verify q=" << args.q << " n=" << n << " a=" << args.a
                      << " codes=" << a_values.size() << " members=" << members_total
                      << " checks=" << checks << " failures=" << failures
                      << " disjoint=" << (disjoint_ok ? "ok" : "violated")
                      << " max_a=" << max_a << " max_size=" << max_size
                      << " bound=" << (bound_ok ? "ok" : "violated") << '\n';
        } else {
            std::cout << "n=" << n << ": " << a_values.size() << " codes, " << members_total
                      << " members, " << checks << " decode checks, " << failures
                      << " failures, disjointness " << (disjoint_ok ? "ok" : "VIOLATED")
                      << ", largest class a=" << max_a << " size=" << max_size;
            if (args.a == "all") {
                std::cout << " (pigeonhole " << max_size << "*" << modulus
                          << " >= " << space << (bound_ok ? " ok" : " VIOLATED") << ")";
            }
            std::cout << '\n';
        }
        if (!first_witness.empty()) std::cout << "first_failure " << first_witness << '\n';
    }
    return total_failures == 0 ? 0 : 1;
}

struct EnumerateArgs {
    Symbol q = 0;
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::string format = "text";
};

int cmd_enumerate(const EnumerateArgs& args) {
    VtStarCode code(CodeParams(args.q, args.n, args.a));
    const std::vector<Word> members = code.enumerate(args.budget);
    if (args.format == "record") {
        std::cout << "enumerate q=" << args.q << " n=" << args.n << " a=" << args.a
                  << " count=" << members.size() << '\n';
    } else {
        for (const Word& w : members) std::cout << format_word(w) << '\n';
    }
    return 0;
}

struct TablesArgs {
    std::vector<Symbol> qs;
    std::vector<std::uint64_t> ns;
    std::string format = "text";
};

int cmd_tables(const TablesArgs& args) {
    const std::vector<RedundancyRow> rows = redundancy_rows(args.qs, args.ns);
    std::cout << std::fixed << std::setprecision(4);
    if (args.format == "record") {
        for (const RedundancyRow& r : rows) {
            std::cout << "table q=" << r.q << " n=" << r.n << " enc_t=" << r.enc_t
                      << " enc_a_lb=" << r.enc_a_lower << " enc1=";
            if (r.enc1_measured) {
                std::cout << *r.enc1_measured << " enc1_k=" << *r.enc1_k;
            } else {
                std::cout << "- enc1_k=-";
            }
            std::cout << " enc1_formula=" << r.enc1_formula << " enc2=" << r.enc2
                      << " floor=" << r.optimal_floor << '\n';
        }
    } else {
        std::cout << std::left << std::setw(6) << "q" << std::setw(12) << "n" << std::setw(8)
                  << "enc_t" << std::setw(12) << "enc_a_lb" << std::setw(8) << "enc1"
                  << std::setw(14) << "enc1_formula" << std::setw(8) << "enc2" << std::setw(10)
                  << "floor" << '\n';
        for (const RedundancyRow& r : rows) {
            std::cout << std::left << std::setw(6) << r.q << std::setw(12) << r.n << std::setw(8)
                      << r.enc_t << std::setw(12) << r.enc_a_lower << std::setw(8)
                      << (r.enc1_measured ? std::to_string(*r.enc1_measured) : std::string("-"))
                      << std::setw(14) << r.enc1_formula << std::setw(8) << r.enc2
                      << std::setw(10) << r.optimal_floor << '\n';
        }
    }
    return 0;
}

struct FuzzArgs {
    Symbol q = 0;
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
};

int cmd_fuzz(const FuzzArgs& args) {
    VtStarCode code(CodeParams(args.q, args.n, args.a));
    const FuzzReport report = fuzz_roundtrip(code, args.trials, args.seed);
    std::cout << report;
    return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-indel-correcting q-ary VT codes: codecs and verification tools"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"text", "record"});

    EncodeArgs enc;
    auto* enc_cmd = app.add_subcommand("encode", "Encode a message into a codeword or frame");
    enc_cmd->add_option("--variant", enc.variant, "vt2 (syndrome) or sys1 (systematic frame)")
        ->check(CLI::IsMember({"vt2", "sys1"}));
    enc_cmd->add_option("-q,--alphabet", enc.q, "alphabet size")->required();
    enc_cmd->add_option("-n,--length", enc.n, "codeword length (vt2)");
    enc_cmd->add_option("-a,--syndrome", enc.a, "syndrome residue (vt2)");
    enc_cmd->add_option("-k,--data-length", enc.k, "message length (sys1)");
    enc_cmd->add_option("-m,--message", enc.message, "message word")->required();
    enc_cmd->add_flag("--trace", enc.trace, "print encoder intermediates");
    enc_cmd->add_option("--format", enc.format, "text or record")->check(format_check);

    DecodeArgs dec;
    auto* dec_cmd = app.add_subcommand("decode", "Recover a message from a received word");
    dec_cmd->add_option("--variant", dec.variant)->check(CLI::IsMember({"vt2", "sys1"}));
    dec_cmd->add_option("-q,--alphabet", dec.q)->required();
    dec_cmd->add_option("-n,--length", dec.n, "codeword length (vt2)");
    dec_cmd->add_option("-a,--syndrome", dec.a, "syndrome residue (vt2)");
    dec_cmd->add_option("-k,--data-length", dec.k, "message length (sys1)");
    dec_cmd->add_option("-r,--received", dec.received, "received word")->required();
    dec_cmd->add_flag("--trace", dec.trace, "print decoder internals");
    dec_cmd->add_option("--format", dec.format)->check(format_check);

    CorruptArgs cor;
    auto* cor_cmd = app.add_subcommand("corrupt", "Apply one random indel");
    cor_cmd->add_option("-q,--alphabet", cor.q)->required();
    cor_cmd->add_option("-w,--word", cor.word)->required();
    cor_cmd->add_option("--seed", cor.seed);
    cor_cmd->add_option("--mode", cor.mode)->check(CLI::IsMember({"deletion", "insertion", "either"}));
    cor_cmd->add_option("--format", cor.format)->check(format_check);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Exhaustively verify codes over a length range");
    ver_cmd->add_option("-q,--alphabet", ver.q)->required();
    ver_cmd->add_option("-n,--length", ver.n_range, "length or lo..hi range")->required();
    ver_cmd->add_option("-a,--syndrome", ver.a, "residue value or 'all'");
    ver_cmd->add_option("--budget", ver.budget, "enumeration budget")
        ->envname("VTCODES_ENUM_BUDGET");
    ver_cmd->add_option("--format", ver.format)->check(format_check);

    EnumerateArgs enu;
    auto* enu_cmd = app.add_subcommand("enumerate", "List all codewords of one code");
    enu_cmd->add_option("-q,--alphabet", enu.q)->required();
    enu_cmd->add_option("-n,--length", enu.n)->required();
    enu_cmd->add_option("-a,--syndrome", enu.a)->required();
    enu_cmd->add_option("--budget", enu.budget)->envname("VTCODES_ENUM_BUDGET");
    enu_cmd->add_option("--format", enu.format)->check(format_check);

    TablesArgs tab;
    auto* tab_cmd = app.add_subcommand("tables", "Redundancy comparison across encoders");
    tab_cmd->add_option("--q", tab.qs, "alphabet sizes");
    tab_cmd->add_option("--n", tab.ns, "code lengths");
    tab_cmd->add_option("--format", tab.format)->check(format_check);

    FuzzArgs fuz;
    auto* fuz_cmd = app.add_subcommand("fuzz", "Randomized encode-corrupt-decode round trips");
    fuz_cmd->add_option("-q,--alphabet", fuz.q)->required();
    fuz_cmd->add_option("-n,--length", fuz.n)->required();
    fuz_cmd->add_option("-a,--syndrome", fuz.a)->required();
    fuz_cmd->add_option("--trials", fuz.trials);
    fuz_cmd->add_option("--seed", fuz.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enc_cmd->parsed()) return cmd_encode(enc);
        if (dec_cmd->parsed()) return cmd_decode(dec);
        if (cor_cmd->parsed()) return cmd_corrupt(cor);
        if (ver_cmd->parsed()) return cmd_verify(ver);
        if (enu_cmd->parsed()) return cmd_enumerate(enu);
        if (tab_cmd->parsed()) return cmd_tables(tab);
        if (fuz_cmd->parsed()) return cmd_fuzz(fuz);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UncorrectableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
