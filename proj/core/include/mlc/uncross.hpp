#pragma once

#include <vector>

#include "mlc/matroid.hpp"
#include "mlc/subset.hpp"

namespace mlc {

/// One uncrossing step: the incomparable pair (first, second) was replaced
/// by (first | second, first & second). The counters record the state
/// *after* the replacement.
struct UncrossStep {
    int first_index = 0;
    int second_index = 0;
    int incomparable_pairs = 0;
    long long left_rank_sum = 0;
};

struct UncrossTrace {
    std::vector<Subset> initial_family;
    std::vector<Subset> canonical_family;
    std::vector<Subset> final_family;
    Subset eval;

    int initial_incomparable_pairs = 0;
    long long initial_left_rank_sum = 0;
    long long canonical_rank_sum = 0;
    std::vector<UncrossStep> steps;

    bool final_equals_canonical = false;
    bool pair_counts_strictly_decrease = false;
    bool left_sums_non_increasing = false;
    bool inequality_holds = false;
};

/// Repeatedly replaces incomparable pairs by their union and intersection
/// until the family is a chain, recording rank sums along the way. Since
/// uncrossing preserves the multiset union and a chain family with a given
/// multiset union is unique, the result must equal `canonical`; rank sums
/// never increase (submodularity), so sum r(Q_i) >= sum r(C_i) — with the
/// canonical sets intersected against `eval` on both sides.
///
/// `canonical` must be a chain with the same multiset union as `family`
/// (ArgumentError otherwise); all sets must live in m's ground set.
UncrossTrace uncross_verify(const Matroid& m, const std::vector<Subset>& family,
                            const std::vector<Subset>& canonical, Subset eval);

}  // namespace mlc
