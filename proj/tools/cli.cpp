#include "cli.hpp"

#include <cstdint>
#include <ostream>
#include <variant>

#include <CLI11.hpp>

#include "mlc/coloring.hpp"
#include "mlc/error.hpp"
#include "mlc/exchange.hpp"
#include "mlc/io.hpp"
#include "mlc/oracle.hpp"
#include "mlc/uncross.hpp"

namespace mlc::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string matroid_path;
    std::string lists_path;
    std::string sizes_path;
    std::string parts_path;
    std::string bases_path;
    std::string qs_path;
    std::string qls_path;
    std::string subset_json;
    std::string exchanged_json;
    std::string variant = "single";
    int k = 0;
    int trials = 200;
    int element = -1;
    std::uint64_t seed = 0;
};

int emit(std::ostream& out, const json& j) {
    out << j.dump() << '\n';
    return 0;
}

json parse_inline(const std::string& text, const char* flag) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ArgumentError(std::string(flag) + " is not valid JSON: " + e.what());
    }
}

Matroid load_matroid(const Options& o) { return matroid_from_json(load_json_file(o.matroid_path)); }

std::vector<Subset> subsets_from_file(const std::string& path, int n) {
    json j = load_json_file(path);
    if (!j.is_array()) throw ArgumentError("'" + path + "' must hold a JSON array of subsets");
    std::vector<Subset> out;
    out.reserve(j.size());
    for (const json& s : j) out.push_back(subset_from_json(s, n));
    return out;
}

ListAssignment lists_for(const Options& o, const Matroid& m) {
    if (!o.lists_path.empty() && o.k > 0)
        throw ArgumentError("--lists and --k are mutually exclusive");
    if (!o.lists_path.empty()) return lists_from_json(load_json_file(o.lists_path));
    if (o.k > 0) return constant_lists(m.size(), o.k);
    throw ArgumentError("either --lists or --k is required");
}

SizeFunction sizes_for(const Options& o, const Matroid& m) {
    if (!o.sizes_path.empty() && o.k > 0)
        throw ArgumentError("--sizes and --k are mutually exclusive");
    if (!o.sizes_path.empty()) return sizes_from_json(load_json_file(o.sizes_path));
    if (o.k > 0) return SizeFunction{std::vector<int>(static_cast<std::size_t>(m.size()), o.k)};
    throw ArgumentError("either --sizes or --k is required");
}

int cmd_rank(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    Subset a = o.subset_json.empty()
                   ? m.full_set()
                   : subset_from_json(parse_inline(o.subset_json, "--subset"), m.size());
    return emit(out, json{{"rank", m.rank(a)}});
}

int cmd_chroma(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    return emit(out, json{{"chi", chromatic_number(m)}});
}

int cmd_color(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    ColoringResult result = color_from_lists(m, lists_for(o, m));
    if (const auto* cert = std::get_if<DeficiencyCertificate>(&result)) {
        emit(out, certificate_to_json(*cert));
        return 2;
    }
    return emit(out, coloring_to_json(std::get<Coloring>(result)));
}

int cmd_verify_theorem2(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    if (o.trials < 1) throw ArgumentError("--trials must be at least 1");
    SufficiencyReport report = check_canonical_sufficiency(m, sizes_for(o, m), o.trials, o.seed);
    emit(out, report_to_json(report));
    return report.premise_false || !report.failures.empty() ? 2 : 0;
}

int cmd_axioms(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    bool rank_ok = bf_check_rank_axioms(m);
    bool exchange_ok = bf_base_exchange_axiom(m);
    emit(out, json{{"rank_axioms", rank_ok}, {"base_exchange", exchange_ok}});
    return rank_ok && exchange_ok ? 0 : 2;
}

int cmd_uncross(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    if (o.qs_path.empty() || o.qls_path.empty())
        throw ArgumentError("--qs and --qls are required");
    std::vector<Subset> family = subsets_from_file(o.qs_path, m.size());
    std::vector<Subset> canonical = subsets_from_file(o.qls_path, m.size());
    Subset eval = o.subset_json.empty()
                      ? m.full_set()
                      : subset_from_json(parse_inline(o.subset_json, "--subset"), m.size());
    UncrossTrace trace = uncross_verify(m, family, canonical, eval);
    emit(out, trace_to_json(trace));
    bool ok = trace.final_equals_canonical && trace.pair_counts_strictly_decrease &&
              trace.left_sums_non_increasing && trace.inequality_holds;
    return ok ? 0 : 2;
}

int cmd_exchange(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    if (o.bases_path.empty()) throw ArgumentError("--bases is required");
    std::vector<Subset> bases = subsets_from_file(o.bases_path, m.size());

    ExchangeWitness w;
    if (o.variant == "single" || o.variant == "multi") {
        if (bases.size() != 2)
            throw ArgumentError("variant '" + o.variant + "' needs exactly two bases");
        if (o.variant == "single") {
            if (o.element < 0) throw ArgumentError("--element is required for variant 'single'");
            w = symmetric_exchange(m, bases[0], bases[1], o.element);
        } else {
            if (o.exchanged_json.empty())
                throw ArgumentError("--exchanged is required for variant 'multi'");
            Subset a1 = subset_from_json(parse_inline(o.exchanged_json, "--exchanged"), m.size());
            w = multi_symmetric_exchange(m, bases[0], bases[1], a1);
        }
    } else if (o.variant == "into" || o.variant == "from") {
        if (bases.size() != 1)
            throw ArgumentError("variant '" + o.variant + "' needs exactly one basis (--parts define the other)");
        if (o.parts_path.empty())
            throw ArgumentError("--parts is required for variant '" + o.variant + "'");
        std::vector<Subset> parts = subsets_from_file(o.parts_path, m.size());
        w = o.variant == "into" ? partition_exchange_into(m, bases[0], parts)
                                : partition_exchange_from(m, bases[0], parts);
    } else {
        throw ArgumentError("unknown variant '" + o.variant +
                            "' (expected single, multi, into or from)");
    }
    return emit(out, witness_to_json(w));
}

int cmd_bf(const Options& o, std::ostream& out) {
    Matroid m = load_matroid(o);
    if (!o.lists_path.empty() || o.k > 0) {
        auto coloring = bf_color_from_lists(m, lists_for(o, m));
        emit(out, json{{"coloring", coloring ? coloring_to_json(*coloring) : json(nullptr)}});
        return coloring ? 0 : 2;
    }
    json bases = json::array();
    for (Subset b : bf_all_bases(m)) bases.push_back(subset_to_json(b));
    return emit(out, json{{"bases", std::move(bases)}});
}

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const ArgumentError*>(&e)) return "argument";
    if (dynamic_cast<const ConstructionError*>(&e)) return "construction";
    if (dynamic_cast<const ContractError*>(&e)) return "contract";
    if (dynamic_cast<const SizeError*>(&e)) return "size";
    if (dynamic_cast<const LoopError*>(&e)) return "loop";
    if (dynamic_cast<const InfeasibleError*>(&e)) return "infeasible";
    if (dynamic_cast<const InternalError*>(&e)) return "internal";
    if (dynamic_cast<const Error*>(&e)) return "error";
    return "unexpected";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"matroid list-coloring toolkit"};
    app.name("mlc");
    app.require_subcommand(1);

    auto add_matroid = [&](CLI::App* cmd) {
        cmd->add_option("--matroid", o.matroid_path, "matroid description (JSON file)")
            ->required();
    };

    auto* rank = app.add_subcommand("rank", "rank of a subset (default: the whole ground set)");
    add_matroid(rank);
    rank->add_option("--subset", o.subset_json, "inline JSON array of element ids");

    auto* chroma = app.add_subcommand("chroma", "chromatic number");
    add_matroid(chroma);

    auto* color = app.add_subcommand("color", "proper coloring from lists, or a certificate");
    add_matroid(color);
    color->add_option("--lists", o.lists_path, "list assignment (JSON file)");
    color->add_option("--k", o.k, "use constant lists {1..k} instead of --lists");

    auto* exchange = app.add_subcommand("exchange", "base exchange witnesses");
    add_matroid(exchange);
    exchange->add_option("--variant", o.variant, "single | multi | into | from")
        ->default_str("single");
    exchange->add_option("--bases", o.bases_path,
                         "JSON file: [B1, B2] for single/multi, [A] for into/from");
    exchange->add_option("--element", o.element, "exchanged element e (single)");
    exchange->add_option("--exchanged", o.exchanged_json, "inline JSON subset A1 (multi)");
    exchange->add_option("--parts", o.parts_path, "JSON file: partition of the second basis");

    auto* verify = app.add_subcommand(
        "verify-theorem2", "canonical-lists colorability vs random same-size lists");
    add_matroid(verify);
    verify->add_option("--sizes", o.sizes_path, "list size function (JSON file)");
    verify->add_option("--k", o.k, "use constant sizes k instead of --sizes");
    verify->add_option("--trials", o.trials, "number of random list assignments (default 200)");
    verify->add_option("--seed", o.seed, "PRNG seed (default 0)");

    auto* axioms = app.add_subcommand("axioms", "exhaustive rank and base exchange axiom checks");
    add_matroid(axioms);

    auto* uncross = app.add_subcommand("uncross", "uncrossing trace towards a canonical chain");
    add_matroid(uncross);
    uncross->add_option("--qs", o.qs_path, "family to uncross (JSON file, array of subsets)");
    uncross->add_option("--qls", o.qls_path, "canonical chain (JSON file, array of subsets)");
    uncross->add_option("--subset", o.subset_json, "inline JSON subset to evaluate ranks on");

    auto* bf = app.add_subcommand("bf", "brute-force oracles (debugging)");
    add_matroid(bf);
    bf->add_option("--lists", o.lists_path, "color from lists exhaustively");
    bf->add_option("--k", o.k, "constant lists {1..k}");
    bf->group("");  // hidden

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(out, json{{"error", {{"type", "usage"}, {"message", e.what()}}}});
        return 1;
    }

    try {
        if (rank->parsed()) return cmd_rank(o, out);
        if (chroma->parsed()) return cmd_chroma(o, out);
        if (color->parsed()) return cmd_color(o, out);
        if (exchange->parsed()) return cmd_exchange(o, out);
        if (verify->parsed()) return cmd_verify_theorem2(o, out);
        if (axioms->parsed()) return cmd_axioms(o, out);
        if (uncross->parsed()) return cmd_uncross(o, out);
        if (bf->parsed()) return cmd_bf(o, out);
        err << "no command selected\n";
        return 1;
    } catch (const std::exception& e) {
        emit(out, json{{"error", {{"type", error_type(e)}, {"message", e.what()}}}});
        return 1;
    }
}

}  // namespace mlc::cli
