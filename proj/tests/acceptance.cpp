// Acceptance gate: nine end-to-end checks over the shared corpus, one
// PASS/FAIL line each, nonzero exit if any fail. An optional argument names
// the installed CLI binary; when given, criterion 9 also exercises it
// out-of-process.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cli.hpp"
#include "corpus.hpp"
#include "mlc/coloring.hpp"
#include "mlc/exchange.hpp"
#include "mlc/io.hpp"
#include "mlc/oracle.hpp"
#include "mlc/partition.hpp"
#include "mlc/uncross.hpp"

using namespace mlc;

namespace {

// ---------------------------------------------------------------- helpers

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::uint64_t mask_of(const Matroid& m) {
    return m.size() == 64 ? ~0ULL : ((1ULL << m.size()) - 1);
}

ListAssignment random_lists(std::mt19937_64& rng, int n, int universe) {
    ListAssignment lists;
    lists.universe = universe;
    const std::uint64_t cap = (universe == 64) ? ~0ULL : ((1ULL << universe) - 1);
    for (int e = 0; e < n; ++e) {
        Subset l;
        while (l.empty()) l = Subset::from_bits(rng() & cap);
        lists.lists.push_back(l);
    }
    return lists;
}

// The matroid-partition instance behind a list-coloring question: one class
// per color, restricted to the elements whose list offers that color.
PartitionProblem coloring_problem(const Matroid& m, const ListAssignment& lists) {
    PartitionProblem problem;
    for (int c = 1; c <= lists.universe; ++c) {
        Subset allowed;
        for (int e = 0; e < m.size(); ++e)
            if (lists.allows(e, c)) allowed.add(e);
        problem.matroids.push_back(restrict_extended(m, allowed));
    }
    return problem;
}

std::vector<std::vector<Subset>> ordered_partitions(Subset whole, int k) {
    std::vector<std::vector<Subset>> out;
    const std::vector<int> ids = whole.elements();
    std::vector<int> digits(ids.size(), 0);
    while (true) {
        std::vector<Subset> parts(static_cast<std::size_t>(k));
        for (std::size_t t = 0; t < ids.size(); ++t)
            parts[static_cast<std::size_t>(digits[t])].add(ids[t]);
        out.push_back(std::move(parts));
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == k - 1) digits[pos++] = 0;
        if (pos == digits.size()) break;
        ++digits[pos];
    }
    return out;
}

// ---------------------------------------------------------------- criteria

// 1. Exhaustive rank axioms on the corpus and on fresh combinator outputs.
Outcome criterion_rank_axioms() {
    std::vector<std::pair<std::string, Matroid>> subjects;
    for (const auto& entry : corpus::all())
        if (entry.matroid.size() <= 10) subjects.emplace_back(entry.name, entry.matroid);

    subjects.emplace_back("restrict_extended(K5)",
                          restrict_extended(corpus::k5(), Subset::of({0, 1, 2, 3, 8})));
    subjects.emplace_back("restrict_to(U36)",
                          restrict_to(corpus::u36(), Subset::of({1, 2, 4})).first);
    subjects.emplace_back("add_parallel(U13)",
                          add_parallel(corpus::u13(), {3, 2, 1}).first);
    subjects.emplace_back(
        "add_parallel(restrict_to(K4))",
        add_parallel(restrict_to(corpus::k4(), Subset::of({0, 1, 3, 4})).first, {2, 1, 1, 1})
            .first);

    int checked = 0;
    for (const auto& [name, m] : subjects) {
        if (m.size() > 10) return {false, name + " exceeds the 10-element check cap"};
        if (!bf_check_rank_axioms(m)) return {false, "rank axioms fail on " + name};
        ++checked;
    }
    return {true, std::to_string(checked) + " matroids"};
}

// 2. Chromatic number equals the exhaustive covering formula.
Outcome criterion_chromatic_formula() {
    int checked = 0;
    for (const auto& entry : corpus::all()) {
        if (!entry.matroid.loopless() || entry.matroid.size() > 16) continue;
        const int chi = chromatic_number(entry.matroid);
        const int formula = edmonds_formula_bruteforce(entry.matroid);
        if (chi != formula)
            return {false, entry.name + ": solver says " + std::to_string(chi) +
                               ", formula says " + std::to_string(formula)};
        ++checked;
    }
    if (chromatic_number(corpus::k4()) != 2) return {false, "chi(K4) != 2"};
    if (chromatic_number(corpus::k5()) != 3) return {false, "chi(K5) != 3"};
    if (chromatic_number(corpus::u13()) != 3) return {false, "chi(U13) != 3"};
    return {true, std::to_string(checked) + " loopless matroids, K4/K5/U13 pinned"};
}

// 3. Constant lists of chi colors succeed, chi-1 colors fail.
Outcome criterion_tight_constant_lists() {
    int checked = 0;
    for (const auto& entry : corpus::all()) {
        if (!entry.matroid.loopless() || entry.matroid.size() == 0) continue;
        const int chi = chromatic_number(entry.matroid);
        const auto at_chi = color_from_lists(entry.matroid, constant_lists(entry.matroid.size(), chi));
        if (!std::holds_alternative<Coloring>(at_chi))
            return {false, entry.name + ": no coloring with chi colors"};
        if (chi >= 2) {
            const auto below =
                color_from_lists(entry.matroid, constant_lists(entry.matroid.size(), chi - 1));
            if (!std::holds_alternative<DeficiencyCertificate>(below))
                return {false, entry.name + ": colorable with chi-1 colors"};
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " loopless matroids"};
}

// 4. Random same-size lists color whenever the canonical lists do.
Outcome criterion_random_lists_always_color() {
    int reports = 0;
    for (const auto& entry : corpus::all()) {
        if (!entry.matroid.loopless() || entry.matroid.size() == 0) continue;
        const int n = entry.matroid.size();
        const int chi = chromatic_number(entry.matroid);

        std::vector<std::pair<std::string, SizeFunction>> size_functions;
        size_functions.emplace_back("constant chi",
                                    SizeFunction{std::vector<int>(static_cast<std::size_t>(n), chi)});
        size_functions.emplace_back("graded chi", class_graded_sizes(entry.matroid, chi));
        size_functions.emplace_back("graded chi+1", class_graded_sizes(entry.matroid, chi + 1));

        for (const auto& [label, sizes] : size_functions) {
            const SufficiencyReport report =
                check_canonical_sufficiency(entry.matroid, sizes, 200, 0xACCE5500 + reports);
            if (report.premise_false)
                return {false, entry.name + " (" + label + "): canonical lists uncolorable"};
            if (!report.failures.empty())
                return {false, entry.name + " (" + label + "): " +
                                   std::to_string(report.failures.size()) +
                                   " of 200 random assignments failed"};
            ++reports;
        }
    }
    return {true, std::to_string(reports) + " matroid/size-function pairs, 200 trials each"};
}

// 5. Graded sizes have mean at most (k+1)/2.
Outcome criterion_graded_mean_bound() {
    int checked = 0;
    for (const auto& entry : corpus::all()) {
        if (!entry.matroid.loopless() || entry.matroid.size() == 0) continue;
        const int chi = chromatic_number(entry.matroid);
        for (int k : {chi, chi + 1, chi + 2}) {
            const SizeFunction sizes = class_graded_sizes(entry.matroid, k);
            long long total = 0;
            for (int s : sizes.sizes) total += s;
            // mean <= (k+1)/2  <=>  2 * total <= n * (k+1)
            if (2 * total > static_cast<long long>(entry.matroid.size()) * (k + 1))
                return {false, entry.name + ", k=" + std::to_string(k) + ": mean " +
                                   std::to_string(static_cast<double>(total) /
                                                  entry.matroid.size()) +
                                   " exceeds (k+1)/2"};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " size functions"};
}

// 6. Fast solver and exhaustive search agree; certificates check out twice.
Outcome criterion_solver_oracle_agreement() {
    int instances = 0;
    int infeasible = 0;
    std::uint64_t seed = 0x50C1A1;
    for (const auto& entry : corpus::all()) {
        if (entry.matroid.size() > 10) continue;
        std::mt19937_64 rng(seed++);
        for (int trial = 0; trial < 500; ++trial) {
            const int universe = 1 + static_cast<int>(rng() % 4);
            const ListAssignment lists = random_lists(rng, entry.matroid.size(), universe);

            const ColoringResult fast = color_from_lists(entry.matroid, lists);
            const std::optional<Coloring> slow = bf_color_from_lists(entry.matroid, lists);
            const bool fast_ok = std::holds_alternative<Coloring>(fast);
            if (fast_ok != slow.has_value())
                return {false, entry.name + " trial " + std::to_string(trial) +
                                   ": solver and exhaustive search disagree"};

            if (fast_ok) {
                if (!is_proper(entry.matroid, std::get<Coloring>(fast), &lists))
                    return {false, entry.name + " trial " + std::to_string(trial) +
                                       ": solver produced an improper coloring"};
            } else {
                const auto& cert = std::get<DeficiencyCertificate>(fast);
                const PartitionProblem problem = coloring_problem(entry.matroid, lists);
                if (!verify_certificate(problem, cert))
                    return {false, entry.name + " trial " + std::to_string(trial) +
                                       ": certificate fails verify_certificate"};
                const auto [worst, value] = min_deficiency_bruteforce(problem);
                if (value >= 0)
                    return {false, entry.name + " trial " + std::to_string(trial) +
                                       ": certificate for a feasible instance"};
                if (cert.deficiency > -value)
                    return {false, entry.name + " trial " + std::to_string(trial) +
                                       ": certificate overstates the deficiency"};
                ++infeasible;
            }
            ++instances;
        }
    }
    return {true, std::to_string(instances) + " instances, " + std::to_string(infeasible) +
                      " infeasible, all certified twice"};
}

// 7. Uncrossing touches the canonical chain with monotone progress.
Outcome criterion_uncrossing() {
    std::mt19937_64 rng(0xCA0551);
    const auto& entries = corpus::all();
    for (int trial = 0; trial < 200; ++trial) {
        const auto& entry = entries[trial % entries.size()];
        const Matroid& m = entry.matroid;
        const std::uint64_t mask = mask_of(m);

        const int d = 1 + static_cast<int>(rng() % 5);
        std::vector<Subset> family;
        for (int i = 0; i < d; ++i) family.push_back(Subset::from_bits(rng() & mask));

        // Canonical chain: level i keeps the elements covered more than i times.
        std::vector<Subset> chain(family.size());
        for (int e = 0; e < m.size(); ++e) {
            int mult = 0;
            for (const Subset& q : family) mult += q.contains(e) ? 1 : 0;
            for (int i = 0; i < mult; ++i) chain[static_cast<std::size_t>(i)].add(e);
        }
        const Subset eval = Subset::from_bits(rng() & mask);

        const UncrossTrace trace = uncross_verify(m, family, chain, eval);
        if (!trace.pair_counts_strictly_decrease)
            return {false, entry.name + " trial " + std::to_string(trial) +
                               ": incomparable-pair count failed to strictly decrease"};
        if (!trace.left_sums_non_increasing)
            return {false, entry.name + " trial " + std::to_string(trial) +
                               ": left rank sum increased"};
        if (!trace.final_equals_canonical)
            return {false, entry.name + " trial " + std::to_string(trial) +
                               ": final family differs from the canonical chain"};
    }
    return {true, "200 random families"};
}

// 8. Exchange operations, exhaustively, against brute-forced answer sets.

std::vector<Subset> all_subsets(Subset whole) {
    const std::vector<int> ids = whole.elements();
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << ids.size());
    for (std::uint64_t bits = 0; bits < (1ULL << ids.size()); ++bits) {
        Subset s;
        for (std::size_t t = 0; t < ids.size(); ++t)
            if (bits & (1ULL << t)) s.add(ids[t]);
        out.push_back(s);
    }
    return out;
}

Outcome criterion_exchange_exhaustive() {
    long long multi_calls = 0;
    long long partition_calls = 0;
    for (const auto& entry : corpus::all()) {
        const Matroid& m = entry.matroid;
        if (m.size() > 9) continue;
        const auto bases = bf_all_bases(m);

        // Subsets and ordered partitions of each basis, enumerated once.
        std::vector<std::vector<Subset>> subsets_of;
        std::vector<std::array<std::vector<std::vector<Subset>>, 4>> partitions_of;
        subsets_of.reserve(bases.size());
        partitions_of.reserve(bases.size());
        for (const Subset& b : bases) {
            subsets_of.push_back(all_subsets(b));
            partitions_of.push_back({});
            for (int k = 1; k <= 3; ++k)
                partitions_of.back()[static_cast<std::size_t>(k)] = ordered_partitions(b, k);
        }

        for (std::size_t i1 = 0; i1 < bases.size(); ++i1) {
            const Subset b1 = bases[i1];
            for (std::size_t i2 = 0; i2 < bases.size(); ++i2) {
                const Subset b2 = bases[i2];

                // Multiple symmetric exchange for every A1.
                for (const Subset& a1 : subsets_of[i1]) {
                    const ExchangeWitness w = multi_symmetric_exchange(m, b1, b2, a1);
                    if (!w.found_subset)
                        return {false, entry.name + ": multiple exchange returned no set"};
                    const Subset a2 = *w.found_subset;
                    // Membership in the brute-forced valid set.
                    bool enumerated = false;
                    for (const Subset& cand : subsets_of[i2]) {
                        if (cand == a2 && m.is_basis((b1 - a1) | cand) &&
                            m.is_basis((b2 - cand) | a1)) {
                            enumerated = true;
                            break;
                        }
                    }
                    if (!enumerated)
                        return {false, entry.name + ": invalid multiple exchange for B1=" +
                                           b1.to_string() + " B2=" + b2.to_string() +
                                           " A1=" + a1.to_string()};
                    ++multi_calls;
                }

                // Both partition ops for every split of b2 into k <= 3 parts.
                for (int k = 1; k <= 3; ++k) {
                    for (const auto& b_parts : partitions_of[i2][static_cast<std::size_t>(k)]) {
                        const ExchangeWitness into = partition_exchange_into(m, b1, b_parts);
                        const ExchangeWitness from = partition_exchange_from(m, b1, b_parts);

                        bool into_found = false;
                        bool from_found = false;
                        for (const auto& a_parts :
                             partitions_of[i1][static_cast<std::size_t>(k)]) {
                            if (!into_found && a_parts == into.first_parts) {
                                bool valid = true;
                                for (int i = 0; i < k && valid; ++i)
                                    valid = m.is_basis((b2 - b_parts[static_cast<std::size_t>(i)]) |
                                                       a_parts[static_cast<std::size_t>(i)]);
                                into_found = valid;
                            }
                            if (!from_found && a_parts == from.first_parts) {
                                bool valid = true;
                                for (int i = 0; i < k && valid; ++i)
                                    valid = m.is_basis((b1 - a_parts[static_cast<std::size_t>(i)]) |
                                                       b_parts[static_cast<std::size_t>(i)]);
                                from_found = valid;
                            }
                            if (into_found && from_found) break;
                        }
                        if (!into_found)
                            return {false, entry.name +
                                               ": partition_exchange_into answer not in the "
                                               "brute-forced valid set (A=" +
                                               b1.to_string() + ", B=" + b2.to_string() + ")"};
                        if (!from_found)
                            return {false, entry.name +
                                               ": partition_exchange_from answer not in the "
                                               "brute-forced valid set (A=" +
                                               b1.to_string() + ", B=" + b2.to_string() + ")"};
                        partition_calls += 2;
                    }
                }
            }
        }
    }
    return {true, std::to_string(multi_calls) + " multiple exchanges, " +
                      std::to_string(partition_calls) + " partition exchanges"};
}

// 9. Byte-identical CLI output across repeated runs.

struct CliCase {
    std::string label;
    std::vector<std::string> args;
};

class TempFile {
public:
    TempFile(std::string path, const std::string& content) : path_(std::move(path)) {
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

std::pair<int, std::string> run_in_process(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = mlc::cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

std::optional<std::pair<int, std::string>> run_binary(const std::string& binary,
                                                      const std::vector<std::string>& args) {
    std::string command = "'" + binary + "'";
    for (const std::string& a : args) command += " '" + a + "'";
    command += " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return std::nullopt;
    std::string output;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    return std::make_pair(status, output);
}

Outcome criterion_cli_determinism(const std::string& binary) {
    const TempFile u24_file("acc_u24.json", R"({"kind":"uniform","n":4,"k":2})");
    const TempFile k4_file(
        "acc_k4.json",
        R"({"kind":"graphic","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    const TempFile bases_file("acc_bases.json", "[[0,1],[2,3]]");
    const TempFile base_a_file("acc_base_a.json", "[[0,1]]");
    const TempFile parts_file("acc_parts.json", "[[2],[3]]");
    const TempFile qs_file("acc_qs.json", "[[0],[1],[0,2]]");
    const TempFile qls_file("acc_qls.json", "[[0,1,2],[0],[]]");
    const TempFile lists_file("acc_lists.json", R"({"universe":2,"lists":[[1,2],[1,2],[1],[2]]})");

    const std::vector<CliCase> cases = {
        {"rank", {"rank", "--matroid", u24_file.path(), "--subset", "[0,1,2]"}},
        {"chroma", {"chroma", "--matroid", k4_file.path()}},
        {"color", {"color", "--matroid", k4_file.path(), "--k", "2"}},
        {"color-lists", {"color", "--matroid", u24_file.path(), "--lists", lists_file.path()}},
        {"exchange-single",
         {"exchange", "--matroid", u24_file.path(), "--bases", bases_file.path(), "--element",
          "1"}},
        {"exchange-multi",
         {"exchange", "--matroid", u24_file.path(), "--variant", "multi", "--bases",
          bases_file.path(), "--exchanged", "[0]"}},
        {"exchange-into",
         {"exchange", "--matroid", u24_file.path(), "--variant", "into", "--bases",
          base_a_file.path(), "--parts", parts_file.path()}},
        {"exchange-from",
         {"exchange", "--matroid", u24_file.path(), "--variant", "from", "--bases",
          base_a_file.path(), "--parts", parts_file.path()}},
        {"verify-theorem2",
         {"verify-theorem2", "--matroid", u24_file.path(), "--k", "2", "--trials", "100",
          "--seed", "42"}},
        {"axioms", {"axioms", "--matroid", u24_file.path()}},
        {"uncross",
         {"uncross", "--matroid", u24_file.path(), "--qs", qs_file.path(), "--qls",
          qls_file.path(), "--subset", "[0,1,2,3]"}},
        {"bf", {"bf", "--matroid", u24_file.path(), "--k", "2"}},
    };

    int runs = 0;
    for (const CliCase& c : cases) {
        const auto first = run_in_process(c.args);
        const auto second = run_in_process(c.args);
        if (first != second) return {false, c.label + ": in-process output differs"};
        if (first.second.empty()) return {false, c.label + ": no output produced"};
        ++runs;

        if (!binary.empty()) {
            const auto b1 = run_binary(binary, c.args);
            const auto b2 = run_binary(binary, c.args);
            if (!b1 || !b2) return {false, c.label + ": could not launch " + binary};
            if (*b1 != *b2) return {false, c.label + ": binary output differs between runs"};
            if (b1->second != first.second)
                return {false, c.label + ": binary and in-process output differ"};
            ++runs;
        }
    }
    return {true, std::to_string(runs) + " command pairs compared"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";

    struct Criterion {
        int id;
        std::string label;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "rank axioms on corpus and combinator outputs", criterion_rank_axioms},
        {2, "chromatic number matches the exhaustive formula", criterion_chromatic_formula},
        {3, "constant lists: chi colors enough, chi-1 too few", criterion_tight_constant_lists},
        {4, "random same-size lists color when canonical lists do",
         criterion_random_lists_always_color},
        {5, "graded list sizes respect the (k+1)/2 mean bound", criterion_graded_mean_bound},
        {6, "solver agrees with exhaustive search, certificates verified",
         criterion_solver_oracle_agreement},
        {7, "uncrossing reaches the canonical chain monotonically", criterion_uncrossing},
        {8, "exchange operations verified exhaustively", criterion_exchange_exhaustive},
        {9, "CLI output is byte-identical across runs",
         [&binary]() { return criterion_cli_determinism(binary); }},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        char line[512];
        std::snprintf(line, sizeof(line), "%s %d: %s — %s (%.2fs)",
                      outcome.pass ? "PASS" : "FAIL", c.id, c.label.c_str(),
                      outcome.detail.c_str(), seconds);
        std::cout << line << std::endl;
        all_pass = all_pass && outcome.pass;
    }
    return all_pass ? 0 : 1;
}
