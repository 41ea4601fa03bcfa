// Python bindings: a thin, string-based functional facade over the library.
// Words cross the boundary in the CLI text format (digit string for q <= 10,
// comma-separated symbols otherwise) together with an explicit alphabet size.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vtcodes/channel.hpp"
#include "vtcodes/decoder.hpp"
#include "vtcodes/encoders.hpp"
#include "vtcodes/tables.hpp"
#include "vtcodes/transform.hpp"
#include "vtcodes/vtstar.hpp"

namespace py = pybind11;
using namespace vtcodes;

namespace {

Word to_word(const std::string& text, Symbol q) { return parse_word(text, q); }

py::object opt_int(const std::optional<std::uint64_t>& v) {
    return v ? py::cast(*v) : py::none();
}

py::object opt_sym(const std::optional<Symbol>& v) {
    return v ? py::cast(static_cast<std::uint64_t>(*v)) : py::none();
}

py::dict report_to_dict(const DecodeReport& r) {
    py::dict d;
    d["codeword"] = format_word(r.codeword);
    d["kind"] = std::string(to_string(r.kind));
    d["position"] = opt_int(r.position);
    d["symbol"] = opt_sym(r.symbol);
    d["delta"] = r.trace.delta;
    d["s"] = r.trace.s;
    d["case"] = std::string(to_string(r.trace.case_tag));
    d["h"] = opt_int(r.trace.h);
    d["comparisons"] = r.trace.comparisons;
    return d;
}

CorruptMode parse_mode(const std::string& mode) {
    if (mode == "deletion") return CorruptMode::deletion;
    if (mode == "insertion") return CorruptMode::insertion;
    if (mode == "either") return CorruptMode::either;
    throw ArgumentError("invalid parameters: mode must be deletion, insertion, or either");
}

py::dict corruption_to_dict(const Word& word, const Corruption& c) {
    py::dict d;
    d["word"] = format_word(word);
    d["kind"] = std::string(to_string(c.kind));
    d["position"] = c.position;
    d["symbol"] = opt_sym(c.symbol);
    d["seed"] = c.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Non-binary single-indel-correcting codes: differential transforms, "
              "syndrome decoders, encoders, and channel tooling.";
#ifdef VTCODES_VERSION
    m.attr("__version__") = VTCODES_VERSION;
#else
    m.attr("__version__") = "0.0.0";
#endif

    py::register_exception<UncorrectableError>(m, "UncorrectableError", PyExc_RuntimeError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    // --- transforms ---
    m.def(
        "diff", [](const std::string& w, Symbol q) { return format_word(diff(to_word(w, q))); },
        py::arg("word"), py::arg("q"),
        "Differential transform: consecutive differences mod q, last symbol verbatim.");
    m.def(
        "inv_diff",
        [](const std::string& w, Symbol q) { return format_word(inv_diff(to_word(w, q))); },
        py::arg("word"), py::arg("q"));
    m.def(
        "gamma_p",
        [](const std::string& w, Symbol q, Symbol p) {
            return format_word(gamma_p(to_word(w, q), p));
        },
        py::arg("word"), py::arg("q"), py::arg("p"),
        "Differential transform scaled by a unit p (gcd(p, q) = 1).");
    m.def(
        "inv_gamma_p",
        [](const std::string& w, Symbol q, Symbol p) {
            return format_word(inv_gamma_p(to_word(w, q), p));
        },
        py::arg("word"), py::arg("q"), py::arg("p"));
    m.def("mod_inverse", &mod_inverse, py::arg("p"), py::arg("q"),
          "Multiplicative inverse of p modulo q.");

    // --- syndrome and membership ---
    m.def(
        "syndrome",
        [](const std::string& w, Symbol q, std::optional<std::uint64_t> modulus) {
            const Word y = to_word(w, q);
            const SyndromeValue s = modulus ? syndrome(y, *modulus) : syndrome(y);
            py::dict d;
            d["unreduced"] = s.unreduced;
            d["value"] = s.value;
            d["modulus"] = s.modulus;
            return d;
        },
        py::arg("word"), py::arg("q"), py::arg("modulus") = py::none(),
        "Weighted sum of positions times symbols; modulus defaults to q * len(word).");
    m.def(
        "is_member",
        [](const std::string& w, Symbol q, std::uint64_t n, std::uint64_t a, Symbol p) {
            return VtStarCode(CodeParams(q, n, a), p).is_member(to_word(w, q));
        },
        py::arg("word"), py::arg("q"), py::arg("n"), py::arg("a"), py::arg("p") = 1);
    m.def(
        "enumerate_code",
        [](Symbol q, std::uint64_t n, std::uint64_t a, Symbol p, std::uint64_t budget) {
            const VtStarCode code(CodeParams(q, n, a), p);
            std::vector<Word> members;
            {
                py::gil_scoped_release release;
                members = code.enumerate(budget);
            }
            std::vector<std::string> out;
            out.reserve(members.size());
            for (const Word& w : members) out.push_back(format_word(w));
            return out;
        },
        py::arg("q"), py::arg("n"), py::arg("a"), py::arg("p") = 1,
        py::arg("budget") = kDefaultEnumerationBudget,
        "All codewords in lexicographic order; refuses when q**n exceeds the budget.");
    m.def(
        "best_syndrome",
        [](Symbol q, std::uint64_t n, std::uint64_t budget) {
            const BestSyndrome b = best_syndrome(n, q, budget);
            return py::make_tuple(b.a, b.cardinality);
        },
        py::arg("q"), py::arg("n"), py::arg("budget") = kDefaultEnumerationBudget,
        "The residue with the largest code and that cardinality (smallest residue on ties).");
    m.def(
        "syndrome_histogram",
        [](Symbol q, std::uint64_t n, std::uint64_t budget) {
            py::gil_scoped_release release;
            return syndrome_histogram(n, q, budget);
        },
        py::arg("q"), py::arg("n"), py::arg("budget") = kDefaultEnumerationBudget);

    // --- decoding ---
    m.def(
        "decode",
        [](const std::string& received, Symbol q, std::uint64_t n, std::uint64_t a, Symbol p) {
            return report_to_dict(decode(VtStarCode(CodeParams(q, n, a), p), to_word(received, q)));
        },
        py::arg("received"), py::arg("q"), py::arg("n"), py::arg("a"), py::arg("p") = 1,
        "Correct one deletion or insertion (by length); raises UncorrectableError otherwise.");

    // --- encoders ---
    m.def(
        "encode2",
        [](const std::string& msg, Symbol q, std::uint64_t n, std::uint64_t a, Symbol p) {
            return format_word(encode2(VtStarCode(CodeParams(q, n, a), p), to_word(msg, q)));
        },
        py::arg("message"), py::arg("q"), py::arg("n"), py::arg("a"), py::arg("p") = 1,
        "Non-systematic encoder; message length must be n - ceil(log_q n) - 1.");
    m.def(
        "encode2_traced",
        [](const std::string& msg, Symbol q, std::uint64_t n, std::uint64_t a, Symbol p) {
            const Encoder2Result r =
                encode2_traced(VtStarCode(CodeParams(q, n, a), p), to_word(msg, q));
            py::dict d;
            d["codeword"] = format_word(r.codeword);
            d["s_indices"] = r.trace.s_indices;
            d["i_indices"] = r.trace.i_indices;
            d["a_prime"] = r.trace.a_prime;
            d["alpha"] = static_cast<std::uint64_t>(r.trace.alpha);
            d["a_dprime"] = r.trace.a_dprime;
            d["z"] = r.trace.z;
            return d;
        },
        py::arg("message"), py::arg("q"), py::arg("n"), py::arg("a"), py::arg("p") = 1);
    m.def(
        "decode2",
        [](const std::string& received, Symbol q, std::uint64_t n, std::uint64_t a, Symbol p) {
            return format_word(decode2(VtStarCode(CodeParams(q, n, a), p), to_word(received, q)));
        },
        py::arg("received"), py::arg("q"), py::arg("n"), py::arg("a"), py::arg("p") = 1);
    m.def("frame_length", &frame_length, py::arg("q"), py::arg("k"),
          "Systematic frame length: k + ceil(log_q k) + 6.");
    m.def(
        "encode1",
        [](const std::string& msg, Symbol q, std::uint64_t k) {
            const SystematicFrame f = encode1(q, k, to_word(msg, q));
            py::dict d;
            d["frame"] = format_word(f.frame);
            d["data"] = format_word(f.data);
            d["marker"] = static_cast<std::uint64_t>(f.marker);
            d["syndrome_digits"] = f.syndrome_digits;
            return d;
        },
        py::arg("message"), py::arg("q"), py::arg("k"),
        "Systematic encoder: message verbatim, then marker, syndrome digits, terminator.");
    m.def(
        "decode1",
        [](const std::string& received, Symbol q, std::uint64_t k) {
            return format_word(decode1(q, k, to_word(received, q)));
        },
        py::arg("received"), py::arg("q"), py::arg("k"));

    // --- channel ---
    m.def(
        "delete_at",
        [](const std::string& w, Symbol q, std::uint64_t position) {
            return format_word(delete_at(to_word(w, q), position));
        },
        py::arg("word"), py::arg("q"), py::arg("position"));
    m.def(
        "insert_at",
        [](const std::string& w, Symbol q, std::uint64_t position, Symbol symbol) {
            return format_word(insert_at(to_word(w, q), position, symbol));
        },
        py::arg("word"), py::arg("q"), py::arg("position"), py::arg("symbol"));
    m.def(
        "is_subsequence",
        [](const std::string& needle, const std::string& hay, Symbol q) {
            return is_subsequence(to_word(needle, q), to_word(hay, q));
        },
        py::arg("needle"), py::arg("hay"), py::arg("q"));
    m.def(
        "indel_ball",
        [](const std::string& w, Symbol q) {
            std::vector<std::string> out;
            for (const Word& b : indel_ball(to_word(w, q))) out.push_back(format_word(b));
            return out;
        },
        py::arg("word"), py::arg("q"),
        "Every distinct word one deletion or insertion away, sorted by (length, lex).");
    m.def(
        "check_disjointness",
        [](const std::vector<std::string>& code, Symbol q) -> py::object {
            std::vector<Word> words;
            words.reserve(code.size());
            for (const std::string& w : code) words.push_back(to_word(w, q));
            const auto witness = check_code_disjointness(words);
            if (!witness) return py::none();
            return py::make_tuple(format_word(witness->x), format_word(witness->y),
                                  format_word(witness->common));
        },
        py::arg("code"), py::arg("q"),
        "None when all pairwise indel balls are disjoint, else a witness (x, y, common).");
    m.def(
        "random_corrupt",
        [](const std::string& w, Symbol q, std::uint64_t seed, const std::string& mode) {
            const auto [word, c] = random_corrupt(to_word(w, q), seed, parse_mode(mode));
            return corruption_to_dict(word, c);
        },
        py::arg("word"), py::arg("q"), py::arg("seed"), py::arg("mode") = "either");
    m.def(
        "fuzz_roundtrip",
        [](Symbol q, std::uint64_t n, std::uint64_t a, std::uint64_t trials, std::uint64_t seed,
           Symbol p) {
            const VtStarCode code(CodeParams(q, n, a), p);
            FuzzReport rep;
            {
                py::gil_scoped_release release;
                rep = fuzz_roundtrip(code, trials, seed);
            }
            py::dict d;
            d["q"] = rep.q;
            d["n"] = rep.n;
            d["a"] = rep.a;
            d["seed"] = rep.seed;
            d["trials"] = rep.trials;
            d["failures"] = rep.failures;
            py::list witnesses;
            for (const FuzzWitness& w : rep.witnesses) {
                py::dict wd;
                wd["trial"] = w.trial;
                wd["seed"] = w.seed;
                wd["message"] = format_word(w.message);
                wd["kind"] = std::string(to_string(w.corruption.kind));
                wd["position"] = w.corruption.position;
                wd["symbol"] = opt_sym(w.corruption.symbol);
                wd["decoded"] = w.decoded ? py::cast(format_word(*w.decoded)) : py::none();
                wd["error"] = w.error;
                witnesses.append(wd);
            }
            d["witnesses"] = witnesses;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("a"), py::arg("trials"), py::arg("seed"),
        py::arg("p") = 1,
        "Encode random messages, corrupt with one indel, decode, compare; failures are data.");
    m.def(
        "brute_force_indel_decode",
        [](const std::vector<std::string>& code, Symbol q, const std::string& received) {
            std::vector<Word> words;
            words.reserve(code.size());
            for (const std::string& w : code) words.push_back(to_word(w, q));
            return format_word(brute_force_indel_decode(words, to_word(received, q)));
        },
        py::arg("code"), py::arg("q"), py::arg("received"),
        "Reference decoder from the definition; oracle use only.");

    // --- baselines and tables ---
    m.def(
        "binary_vt_member",
        [](std::uint64_t n, std::uint64_t a, const std::string& w) {
            return binary_vt_member(n, a, to_word(w, 2));
        },
        py::arg("n"), py::arg("a"), py::arg("word"));
    m.def(
        "signature",
        [](const std::string& w, Symbol q) { return format_word(signature(to_word(w, q))); },
        py::arg("word"), py::arg("q"),
        "Binary vector marking non-decreasing adjacent pairs.");
    m.def(
        "tenengolts_member",
        [](const std::string& w, Symbol q, std::uint64_t n, std::uint64_t a, Symbol b) {
            return tenengolts_member(TenengoltsParams(q, n, a, b), to_word(w, q));
        },
        py::arg("word"), py::arg("q"), py::arg("n"), py::arg("a"), py::arg("b"));
    m.def(
        "redundancy_row",
        [](Symbol q, std::uint64_t n) {
            const RedundancyRow r = redundancy_row(q, n);
            py::dict d;
            d["q"] = static_cast<std::uint64_t>(r.q);
            d["n"] = r.n;
            d["enc_t"] = r.enc_t;
            d["enc_a_lower"] = r.enc_a_lower;
            d["enc1_formula"] = r.enc1_formula;
            d["enc1_measured"] = opt_int(r.enc1_measured);
            d["enc1_k"] = opt_int(r.enc1_k);
            d["enc2"] = r.enc2;
            d["optimal_floor"] = r.optimal_floor;
            return d;
        },
        py::arg("q"), py::arg("n"),
        "Redundancy comparison row: formula costs, measured frame cost, converse floor.");
}
