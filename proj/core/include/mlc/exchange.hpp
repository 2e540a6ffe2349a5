#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlc/matroid.hpp"
#include "mlc/subset.hpp"

namespace mlc {

struct BaseCheck {
    Subset set;
    bool is_basis = false;
};

/// Witness of one exchange. `variant` is "single", "multi",
/// "partition-into" or "partition-from"; only the fields relevant to that
/// variant are populated. `checks` records every base test the routine ran
/// on candidate exchanged sets, in order.
struct ExchangeWitness {
    std::string variant;
    Subset first_basis;
    Subset second_basis;

    std::optional<int> exchanged_element;    // single: e in B1 \ B2
    std::optional<Subset> exchanged_subset;  // multi: A1, a subset of B1
    std::vector<Subset> second_parts;        // partition-*: the parts of B2

    std::optional<int> found_element;    // single: f in B2 \ B1
    std::optional<Subset> found_subset;  // multi: A2, a subset of B2
    std::vector<Subset> first_parts;     // partition-*: the produced parts of B1

    std::vector<BaseCheck> checks;
};

/// Symmetric exchange: for e in B1 \ B2, the smallest f in B2 \ B1 such
/// that both B1 - e + f and B2 - f + e are bases (one always exists).
ExchangeWitness symmetric_exchange(const Matroid& m, Subset b1, Subset b2, int e);

/// Multiple symmetric exchange: for A1, a subset of B1, some A2, a subset
/// of B2, such that B1 - A1 + A2 and B2 - A2 + A1 are both bases. Found by
/// list-coloring the matroid on the multiset union of B1 and B2 (shared
/// elements doubled as parallel copies): A1 copies are pinned to color 1,
/// the rest of B1 to color 2, B2 copies may take either; both color classes
/// then map onto the two exchanged bases.
ExchangeWitness multi_symmetric_exchange(const Matroid& m, Subset b1, Subset b2, Subset a1);

/// For bases A and B with B partitioned into parts B1..Bk, a partition of A
/// into A1..Ak such that every (B - Bi) + Ai is a basis. Found by coloring
/// the multiset of A plus k-1 copies of B, where copies of an element of Bi
/// may take any color except i: color class i is exactly (B - Bi) + Ai.
ExchangeWitness partition_exchange_into(const Matroid& m, Subset a,
                                        const std::vector<Subset>& b_parts);

/// For bases A and B with B partitioned into parts B1..Bk, a partition of A
/// into A1..Ak such that every (A - Ai) + Bi is a basis. Found by coloring
/// the multiset of B plus k-1 copies of A, where elements of Bi are pinned
/// to color i: Ai collects the elements of A none of whose copies took
/// color i, making color class i exactly (A - Ai) + Bi.
ExchangeWitness partition_exchange_from(const Matroid& m, Subset a,
                                        const std::vector<Subset>& b_parts);

}  // namespace mlc
