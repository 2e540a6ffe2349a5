#include "mlc/uncross.hpp"

#include <algorithm>
#include <utility>

#include "mlc/error.hpp"
#include "mlc/oracle.hpp"

namespace mlc {

namespace {

bool comparable(Subset a, Subset b) { return a.is_subset_of(b) || b.is_subset_of(a); }

int incomparable_pairs(const std::vector<Subset>& family) {
    int count = 0;
    for (std::size_t k = 0; k + 1 < family.size(); ++k)
        for (std::size_t l = k + 1; l < family.size(); ++l)
            if (!comparable(family[k], family[l])) ++count;
    return count;
}

long long rank_sum(const Matroid& m, const std::vector<Subset>& family, Subset eval) {
    long long sum = 0;
    for (Subset q : family) sum += m.rank(q & eval);
    return sum;
}

std::vector<Subset> chain_sorted(std::vector<Subset> family) {
    std::sort(family.begin(), family.end(), [](Subset a, Subset b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return family;
}

}  // namespace

UncrossTrace uncross_verify(const Matroid& m, const std::vector<Subset>& family,
                            const std::vector<Subset>& canonical, Subset eval) {
    const Subset ground = m.full_set();
    for (Subset q : family)
        if (!q.is_subset_of(ground)) throw ArgumentError("family set leaves the ground set");
    for (Subset c : canonical)
        if (!c.is_subset_of(ground)) throw ArgumentError("canonical set leaves the ground set");
    if (!eval.is_subset_of(ground))
        throw ArgumentError("evaluation set leaves the ground set");
    if (!multiset_union_equal(family, canonical))
        throw ArgumentError("family and canonical family have different multiset unions");

    std::vector<Subset> chain = chain_sorted(canonical);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!chain[i + 1].is_subset_of(chain[i]))
            throw ArgumentError("canonical family is not a chain");

    UncrossTrace trace;
    trace.initial_family = family;
    trace.canonical_family = canonical;
    trace.eval = eval;
    trace.initial_incomparable_pairs = incomparable_pairs(family);
    trace.initial_left_rank_sum = rank_sum(m, family, eval);
    trace.canonical_rank_sum = rank_sum(m, canonical, eval);

    std::vector<Subset> current = family;
    int pairs = trace.initial_incomparable_pairs;
    long long sum = trace.initial_left_rank_sum;
    trace.pair_counts_strictly_decrease = true;
    trace.left_sums_non_increasing = true;

    while (pairs > 0) {
        // Lexicographically first incomparable pair, replaced by union and
        // intersection. Submodularity caps the new rank sum by the old one.
        int k = -1, l = -1;
        for (std::size_t i = 0; i + 1 < current.size() && k < 0; ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (!comparable(current[i], current[j])) {
                    k = static_cast<int>(i);
                    l = static_cast<int>(j);
                    break;
                }
        if (k < 0) throw InternalError("positive pair count but no incomparable pair found");

        Subset a = current[static_cast<std::size_t>(k)];
        Subset b = current[static_cast<std::size_t>(l)];
        current[static_cast<std::size_t>(k)] = a | b;
        current[static_cast<std::size_t>(l)] = a & b;

        UncrossStep step;
        step.first_index = k;
        step.second_index = l;
        step.incomparable_pairs = incomparable_pairs(current);
        step.left_rank_sum = rank_sum(m, current, eval);
        if (step.incomparable_pairs >= pairs) trace.pair_counts_strictly_decrease = false;
        if (step.left_rank_sum > sum) trace.left_sums_non_increasing = false;
        pairs = step.incomparable_pairs;
        sum = step.left_rank_sum;
        trace.steps.push_back(step);

        if (trace.steps.size() > static_cast<std::size_t>(trace.initial_incomparable_pairs))
            throw InternalError("uncrossing failed to terminate");
    }

    trace.final_family = current;
    trace.final_equals_canonical = chain_sorted(current) == chain;
    trace.inequality_holds = trace.initial_left_rank_sum >= trace.canonical_rank_sum;
    return trace;
}

}  // namespace mlc
