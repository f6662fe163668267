#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "bouquet_kit/betti.hpp"
#include "bouquet_kit/bouquets.hpp"
#include "bouquet_kit/caps.hpp"
#include "bouquet_kit/covers.hpp"
#include "bouquet_kit/io.hpp"
#include "bouquet_kit/random_gen.hpp"
#include "bouquet_kit/report.hpp"

namespace bouquet_kit {

namespace cli_detail {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_size_guard = 2;

struct Options {
    std::string command;
    std::string file;
    bool json = false;
    bool minimalize = false;
    bool exact = false;
    bool with_pd = false;
    std::string field = "q";
    std::string from_cover;
    std::uint64_t seed = 0;
    int gen_n = 6;
    int gen_m = 6;
    std::string arity = "2..3";
    int cap_vertices = -1;
    long long cap_covers = -1;
};

inline FieldTag parse_field(const std::string& name) {
    if (name == "q") return FieldTag::rationals();
    if (name == "gf2") return FieldTag::gf(2);
    fail(ErrorKind::usage_error, "unknown field '" + name + "' (expected q or gf2)");
}

inline std::pair<int, int> parse_arity(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        fail(ErrorKind::usage_error, "cannot parse arity range '" + text + "' (expected MIN..MAX)");
    }
}

inline std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline Caps effective_caps(const Options& opt) {
    Caps caps;
    if (const char* env = std::getenv("BOUQUET_KIT_CAPS")) caps = parse_caps_override(env, caps);
    if (opt.cap_vertices >= 0) caps.max_vertices = opt.cap_vertices;
    if (opt.cap_covers >= 0) caps.max_covers = opt.cap_covers;
    return caps;
}

inline Hypergraph load_input(const Options& opt, std::istream& in) {
    BuildMode mode = opt.minimalize ? BuildMode::minimalize : BuildMode::strict;
    if (opt.file.empty()) return parse_hypergraph(in, mode);
    return parse_hypergraph_file(opt.file, mode);
}

inline std::string join_labels(const Hypergraph& h, const VertexSet& s) {
    std::string out;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (!out.empty()) out += ' ';
        out += h.label(v);
    }
    return out.empty() ? "(empty)" : out;
}

inline void print_bouquets_text(const Hypergraph& h, const BouquetSet& s, std::ostream& out) {
    int i = 0;
    for (const auto& b : s.bouquets) {
        out << "bouquet " << ++i << ":";
        for (int e : b.edge_indices) out << " {" << join_labels(h, h.edge(e)) << "}";
        out << " | flowers:";
        for (int f : b.flowers) out << ' ' << h.label(f);
        out << " | stem: " << (b.stem ? h.label(*b.stem) : "-") << "\n";
    }
    if (s.bouquets.empty()) out << "(no bouquets)\n";
}

} // namespace cli_detail

/// Executes one CLI invocation: parses flags, loads the input, runs the
/// library operation, and prints the result (human text by default, the
/// AnalysisReport as JSON with --json). Returns the process exit code:
/// 0 success, 2 size guard, 1 anything else. No algorithm lives here; every
/// subcommand is a thin wrapper over one library call.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       std::istream& in = std::cin) {
    using namespace cli_detail;

    CLI::App app{"bouquet-kit: minimal vertex covers, bouquet decompositions, "
                 "and projective dimension bounds for simple hypergraphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool takes_file) {
        sub->add_flag("--json", opt.json, "emit a JSON report");
        if (takes_file) {
            sub->add_option("file", opt.file, "input hypergraph (text or JSON; stdin if omitted)");
            sub->add_flag("--minimalize", opt.minimalize,
                          "drop non-minimal edges instead of rejecting containments");
        }
        sub->add_option("--cap-vertices", opt.cap_vertices, "override the vertex size guard");
        sub->add_option("--cap-covers", opt.cap_covers, "override the cover count size guard");
    };

    CLI::App* check = app.add_subcommand("check", "parse and validate a hypergraph");
    add_common(check, true);
    CLI::App* covers = app.add_subcommand("covers", "enumerate all minimal vertex covers");
    add_common(covers, true);
    CLI::App* alpha = app.add_subcommand("alpha", "maximum cardinality of a minimal vertex cover");
    add_common(alpha, true);
    CLI::App* bouquets = app.add_subcommand("bouquets",
                                            "construct semi-strongly disjoint bouquets from a minimal cover");
    add_common(bouquets, true);
    bouquets->add_option("--from-cover", opt.from_cover,
                         "comma-separated cover labels (default: a maximum minimal cover)");
    CLI::App* dprime = app.add_subcommand("dprime", "exhaustive d' search (size-guarded)");
    add_common(dprime, true);
    CLI::App* pd = app.add_subcommand("pd", "projective dimension of S/I(H) with its Betti table");
    add_common(pd, true);
    pd->add_option("--field", opt.field, "coefficient field: q or gf2")->default_str("q");
    CLI::App* verify = app.add_subcommand("verify", "check the cover/bouquet duality identities");
    add_common(verify, true);
    verify->add_flag("--exact", opt.exact, "compute d' by exhaustive search instead of construction");
    verify->add_flag("--pd", opt.with_pd, "also check pd >= d'");
    verify->add_option("--field", opt.field, "coefficient field for --pd: q or gf2")->default_str("q");
    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random hypergraph");
    gen->add_flag("--json", opt.json, "emit the JSON input format instead of text");
    gen->add_option("--seed", opt.seed, "RNG seed");
    gen->add_option("--n", opt.gen_n, "vertex universe size");
    gen->add_option("--m", opt.gen_m, "edge draws (realized count may be lower)");
    gen->add_option("--arity", opt.arity, "edge size range MIN..MAX");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_error;
    }
    opt.command = app.get_subcommands().front()->get_name();

    AnalysisReport report;
    report.command = opt.command;
    int exit_code = exit_ok;
    std::ostringstream text;

    const auto t0 = std::chrono::steady_clock::now();
    double parse_ms = 0.0;
    try {
        Caps caps = effective_caps(opt);

        if (opt.command == "gen") {
            auto [amin, amax] = parse_arity(opt.arity);
            Hypergraph h = generate_random_hypergraph(
                {opt.gen_n, opt.gen_m, amin, amax, opt.seed});
            // gen emits the hypergraph itself so its output can be piped
            // straight back in, not an AnalysisReport.
            if (opt.json)
                out << to_input_json(h).dump(2) << "\n";
            else
                out << to_text(h);
            return exit_ok;
        }

        Hypergraph h = load_input(opt, in);
        parse_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
        report.input_digest = hypergraph_digest(h);

        if (opt.command == "check") {
            report.results = {{"vertices", h.vertex_count()}, {"edges", h.edge_count()}};
            text << "ok: " << h.vertex_count() << " vertices, " << h.edge_count() << " edges\n"
                 << "digest: " << report.input_digest << "\n";
        } else if (opt.command == "covers") {
            auto covers_list = enumerate_minimal_covers(h, caps);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : covers_list) arr.push_back(labels_json(h, c.cover));
            report.results = {{"count", covers_list.size()}, {"covers", std::move(arr)}};
            text << "minimal covers (" << covers_list.size() << "):\n";
            for (const auto& c : covers_list) text << "  " << join_labels(h, c.cover) << "\n";
        } else if (opt.command == "alpha") {
            AlphaResult a = alpha0_prime(h, caps);
            report.results = {{"alpha", a.value}, {"witness", labels_json(h, a.witness.cover)}};
            text << "alpha0' = " << a.value << "\n"
                 << "witness: " << join_labels(h, a.witness.cover) << "\n";
        } else if (opt.command == "bouquets") {
            VertexSet cover = opt.from_cover.empty()
                                  ? alpha0_prime(h, caps).witness.cover
                                  : h.vertex_set(split_labels(opt.from_cover));
            BouquetSet s = construct_bouquets_from_cover(h, cover);
            report.results = {{"from_cover", labels_json(h, cover)},
                              {"bouquet_set", bouquet_set_json(h, s)}};
            text << "cover: " << join_labels(h, cover) << "\n";
            print_bouquets_text(h, s, text);
        } else if (opt.command == "dprime") {
            DPrimeResult d = d_prime_bruteforce(h, caps);
            report.results = {{"d_prime", d.value},
                              {"witness", bouquet_set_json(h, d.witness)}};
            text << "d' = " << d.value << "\n";
            print_bouquets_text(h, d.witness, text);
        } else if (opt.command == "pd") {
            FieldTag field = parse_field(opt.field);
            BettiTable table = projective_dimension(h, field, caps);
            nlohmann::json betti = nlohmann::json::array();
            for (const auto& e : table.entries)
                betti.push_back({{"i", e.i}, {"sigma", labels_json(h, e.sigma)}, {"dim", e.dim}});
            report.results = {{"pd", table.pd}, {"field", field.name()}, {"betti", std::move(betti)}};
            text << "pd = " << table.pd << " (field " << field.name() << ", "
                 << table.entries.size() << " nonzero Betti entries)\n";
        } else if (opt.command == "verify") {
            DualityReport duality = verify_duality(h, opt.exact, caps);
            report.results = {{"alpha", duality.alpha},
                              {"d_prime", duality.d_prime},
                              {"equal", duality.equal},
                              {"exact", duality.exact},
                              {"cover_witness", labels_json(h, duality.cover_witness.cover)},
                              {"bouquet_witness", bouquet_set_json(h, duality.bouquet_witness)}};
            text << "alpha0' = " << duality.alpha << "\n"
                 << "d'      = " << duality.d_prime << (duality.exact ? " (exact)" : " (constructive)")
                 << "\n"
                 << "equal   : " << (duality.equal ? "yes" : "NO") << "\n"
                 << "cover witness: " << join_labels(h, duality.cover_witness.cover) << "\n";
            print_bouquets_text(h, duality.bouquet_witness, text);
            bool all_hold = duality.equal;
            if (opt.with_pd) {
                FieldTag field = parse_field(opt.field);
                PdBoundReport bound = check_pd_bound(h, field, caps);
                report.results["pd_check"] = {{"pd", bound.pd},
                                              {"d_prime", bound.d_prime},
                                              {"field", field.name()},
                                              {"bound_holds", bound.bound_holds}};
                text << "pd (" << field.name() << ") = " << bound.pd << " >= d' = " << bound.d_prime
                     << " : " << (bound.bound_holds ? "ok" : "VIOLATED") << "\n";
                all_hold = all_hold && bound.bound_holds;
            }
            if (!all_hold) exit_code = exit_error;
        }
    } catch (const Error& e) {
        report.status = e.kind() == ErrorKind::size_guard ? "size_guard" : "error";
        report.detail = std::string(error_kind_name(e.kind())) + ": " + e.what();
        exit_code = e.kind() == ErrorKind::size_guard ? exit_size_guard : exit_error;
    }

    const double total_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0).count();
    report.timings = {{"parse_ms", parse_ms}, {"total_ms", total_ms}};

    if (opt.json) {
        out << report.to_json().dump(2) << "\n";
    } else if (report.status != "ok") {
        err << report.detail << "\n";
    } else {
        out << text.str();
    }
    return exit_code;
}

} // namespace bouquet_kit
