#include "mlc/io.hpp"

#include <fstream>
#include <utility>

#include "mlc/error.hpp"

namespace mlc {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object()) throw ArgumentError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ArgumentError(std::string("missing field '") + name + "'");
    return *it;
}

int to_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ArgumentError(what + " must be an integer");
    return j.get<int>();
}

int int_field(const json& j, const char* name) {
    return to_int(field(j, name), std::string("field '") + name + "'");
}

std::vector<int> int_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw ArgumentError(what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(to_int(v, "entry of " + what));
    return out;
}

}  // namespace

json subset_to_json(Subset s) { return json(s.elements()); }

Subset subset_from_json(const json& j, int n) {
    Subset s;
    for (int e : int_array(j, "subset")) {
        if (e < 0 || e >= n)
            throw ArgumentError("element " + std::to_string(e) + " is outside the ground set of " +
                                std::to_string(n) + " elements");
        if (s.contains(e)) throw ArgumentError("duplicate element " + std::to_string(e));
        s.add(e);
    }
    return s;
}

json matroid_to_json(const Matroid& m) {
    json j;
    j["kind"] = m.kind();
    const MatroidParams& p = m.params();
    if (const auto* u = std::get_if<UniformParams>(&p)) {
        j["n"] = m.size();
        j["k"] = u->k;
    } else if (std::get_if<FreeParams>(&p)) {
        j["n"] = m.size();
    } else if (const auto* g = std::get_if<GraphicParams>(&p)) {
        j["vertices"] = g->vertices;
        j["edges"] = g->edges;
        if (!m.ground().labels.empty()) j["labels"] = m.ground().labels;
    } else if (const auto* l = std::get_if<LinearParams>(&p)) {
        j["p"] = l->p;
        j["matrix"] = l->rows;
    } else if (const auto* b = std::get_if<PartitionParams>(&p)) {
        j["n"] = m.size();
        json blocks = json::array();
        for (Subset block : b->blocks) blocks.push_back(subset_to_json(block));
        j["blocks"] = std::move(blocks);
        j["capacities"] = b->capacities;
    } else if (const auto* r = std::get_if<RestrictionParams>(&p)) {
        j["inner"] = matroid_to_json(*r->inner);
        j["keep"] = subset_to_json(r->keep);
    } else if (const auto* e = std::get_if<ParallelParams>(&p)) {
        j["inner"] = matroid_to_json(*e->inner);
        j["copies"] = e->copies;
    } else {
        throw InternalError("unserializable matroid parameters");
    }
    return j;
}

Matroid matroid_from_json(const json& j) {
    const json& kind_field = field(j, "kind");
    if (!kind_field.is_string()) throw ArgumentError("field 'kind' must be a string");
    const std::string kind = kind_field.get<std::string>();

    if (kind == "uniform") return make_uniform(int_field(j, "k"), int_field(j, "n"));
    if (kind == "free") return make_free(int_field(j, "n"));
    if (kind == "graphic") {
        const json& edges_field = field(j, "edges");
        if (!edges_field.is_array()) throw ArgumentError("field 'edges' must be an array");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edges_field.size());
        for (const json& e : edges_field) {
            if (!e.is_array() || e.size() != 2)
                throw ArgumentError("each edge must be a two-element array");
            edges.emplace_back(to_int(e[0], "edge endpoint"), to_int(e[1], "edge endpoint"));
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            const json& lf = j["labels"];
            if (!lf.is_array()) throw ArgumentError("field 'labels' must be an array");
            for (const json& l : lf) {
                if (!l.is_string()) throw ArgumentError("labels must be strings");
                labels.push_back(l.get<std::string>());
            }
        }
        return make_graphic(int_field(j, "vertices"), edges, std::move(labels));
    }
    if (kind == "linear") {
        const json& rows_field = field(j, "matrix");
        if (!rows_field.is_array()) throw ArgumentError("field 'matrix' must be an array");
        std::vector<std::vector<int>> rows;
        rows.reserve(rows_field.size());
        for (const json& r : rows_field) rows.push_back(int_array(r, "matrix row"));
        return make_linear(int_field(j, "p"), rows);
    }
    if (kind == "partition") {
        int n = int_field(j, "n");
        const json& blocks_field = field(j, "blocks");
        if (!blocks_field.is_array()) throw ArgumentError("field 'blocks' must be an array");
        std::vector<Subset> blocks;
        blocks.reserve(blocks_field.size());
        for (const json& b : blocks_field) blocks.push_back(subset_from_json(b, n));
        return make_partition(n, blocks, int_array(field(j, "capacities"), "field 'capacities'"));
    }
    if (kind == "restriction" || kind == "dense-restriction") {
        Matroid inner = matroid_from_json(field(j, "inner"));
        Subset keep = subset_from_json(field(j, "keep"), inner.size());
        if (kind == "restriction") return restrict_extended(inner, keep);
        return restrict_to(inner, keep).first;
    }
    if (kind == "parallel-extension") {
        Matroid inner = matroid_from_json(field(j, "inner"));
        return add_parallel(inner, int_array(field(j, "copies"), "field 'copies'")).first;
    }
    throw ArgumentError("unknown matroid kind '" + kind + "'");
}

json lists_to_json(const ListAssignment& lists) {
    json arr = json::array();
    for (Subset l : lists.lists) {
        json one = json::array();
        for (int bit : l) one.push_back(bit + 1);
        arr.push_back(std::move(one));
    }
    return json{{"universe", lists.universe}, {"lists", std::move(arr)}};
}

ListAssignment lists_from_json(const json& j) {
    ListAssignment out;
    out.universe = int_field(j, "universe");
    if (out.universe < 0 || out.universe > kMaxGroundSize)
        throw ArgumentError("color universe must be between 0 and " +
                            std::to_string(kMaxGroundSize));
    const json& lists_field = field(j, "lists");
    if (!lists_field.is_array()) throw ArgumentError("field 'lists' must be an array");
    for (const json& l : lists_field) {
        Subset mask;
        for (int c : int_array(l, "color list")) {
            if (c < 1 || c > out.universe)
                throw ArgumentError("color " + std::to_string(c) + " is outside 1.." +
                                    std::to_string(out.universe));
            if (mask.contains(c - 1)) throw ArgumentError("duplicate color " + std::to_string(c));
            mask.add(c - 1);
        }
        out.lists.push_back(mask);
    }
    return out;
}

json sizes_to_json(const SizeFunction& sizes) { return json(sizes.sizes); }

SizeFunction sizes_from_json(const json& j) {
    SizeFunction out;
    out.sizes = int_array(j, "size function");
    for (int s : out.sizes)
        if (s < 1 || s > kMaxGroundSize)
            throw ArgumentError("list sizes must be between 1 and " +
                                std::to_string(kMaxGroundSize));
    return out;
}

json coloring_to_json(const Coloring& c) { return json(c.colors); }

Coloring coloring_from_json(const json& j) {
    Coloring out;
    out.colors = int_array(j, "coloring");
    for (int c : out.colors)
        if (c < 1) throw ArgumentError("colors must be positive integers");
    return out;
}

json certificate_to_json(const DeficiencyCertificate& cert) {
    return json{{"set", subset_to_json(cert.set)}, {"deficiency", cert.deficiency}};
}

json witness_to_json(const ExchangeWitness& w) {
    json j;
    j["variant"] = w.variant;
    j["first_basis"] = subset_to_json(w.first_basis);
    j["second_basis"] = subset_to_json(w.second_basis);
    if (w.exchanged_element) j["exchanged_element"] = *w.exchanged_element;
    if (w.exchanged_subset) j["exchanged_subset"] = subset_to_json(*w.exchanged_subset);
    if (!w.second_parts.empty()) {
        json parts = json::array();
        for (Subset p : w.second_parts) parts.push_back(subset_to_json(p));
        j["second_parts"] = std::move(parts);
    }
    if (w.found_element) j["found_element"] = *w.found_element;
    if (w.found_subset) j["found_subset"] = subset_to_json(*w.found_subset);
    if (!w.first_parts.empty()) {
        json parts = json::array();
        for (Subset p : w.first_parts) parts.push_back(subset_to_json(p));
        j["first_parts"] = std::move(parts);
    }
    json checks = json::array();
    for (const BaseCheck& c : w.checks)
        checks.push_back(json{{"set", subset_to_json(c.set)}, {"is_basis", c.is_basis}});
    j["checks"] = std::move(checks);
    return j;
}

json report_to_json(const SufficiencyReport& r) {
    json j;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["universe"] = r.universe;
    j["premise_false"] = r.premise_false;
    if (r.canonical_certificate) j["canonical_certificate"] = certificate_to_json(*r.canonical_certificate);
    j["successes"] = r.successes;
    json failures = json::array();
    for (const ListTrialFailure& f : r.failures)
        failures.push_back(json{{"trial", f.trial},
                                {"lists", lists_to_json(f.lists)},
                                {"certificate", certificate_to_json(f.certificate)}});
    j["failures"] = std::move(failures);
    return j;
}

json trace_to_json(const UncrossTrace& t) {
    auto family = [](const std::vector<Subset>& f) {
        json arr = json::array();
        for (Subset s : f) arr.push_back(subset_to_json(s));
        return arr;
    };
    json steps = json::array();
    for (const UncrossStep& s : t.steps)
        steps.push_back(json{{"first_index", s.first_index},
                             {"second_index", s.second_index},
                             {"incomparable_pairs", s.incomparable_pairs},
                             {"left_rank_sum", s.left_rank_sum}});
    return json{{"initial_family", family(t.initial_family)},
                {"canonical_family", family(t.canonical_family)},
                {"final_family", family(t.final_family)},
                {"eval", subset_to_json(t.eval)},
                {"initial_incomparable_pairs", t.initial_incomparable_pairs},
                {"initial_left_rank_sum", t.initial_left_rank_sum},
                {"canonical_rank_sum", t.canonical_rank_sum},
                {"steps", std::move(steps)},
                {"final_equals_canonical", t.final_equals_canonical},
                {"pair_counts_strictly_decrease", t.pair_counts_strictly_decrease},
                {"left_sums_non_increasing", t.left_sums_non_increasing},
                {"inequality_holds", t.inequality_holds}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ArgumentError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace mlc
