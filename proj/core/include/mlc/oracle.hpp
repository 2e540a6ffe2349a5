#pragma once

#include <optional>
#include <vector>

#include "mlc/coloring_types.hpp"
#include "mlc/matroid.hpp"

namespace mlc {

/// Hard limits for the exhaustive checkers. Exceeding a budget is an error,
/// never a silent truncation.
struct OracleBudget {
    int max_ground_coloring = 12;  // bf_color_from_lists
    int max_ground_scan = 20;      // bf_all_bases
    long long max_assignments = 50'000'000;  // DFS node guard
};

inline constexpr int kAxiomCheckCap = 10;     // bf_check_rank_axioms
inline constexpr int kExchangeCheckCap = 9;   // bf_base_exchange_axiom

/// Depth-first search over per-element list choices, pruning whenever a
/// prefix color class goes dependent. Returns the lexicographically first
/// proper coloring, or nullopt if none exists.
std::optional<Coloring> bf_color_from_lists(const Matroid& m, const ListAssignment& lists,
                                            const OracleBudget& budget = {});

/// All bases, in lexicographic order of their ascending element sequences.
std::vector<Subset> bf_all_bases(const Matroid& m, const OracleBudget& budget = {});

/// Exhaustively verifies r(∅)=0, 0 <= r(A) <= |A|, monotonicity and
/// submodularity over all pairs of subsets.
bool bf_check_rank_axioms(const Matroid& m);

/// Same check on a raw rank table of 2^n entries indexed by subset bitmask,
/// so arbitrary (including deliberately broken) rank functions can be fed in.
bool bf_check_rank_table(int n, const std::vector<int>& ranks);

/// Checks the base exchange axiom and the symmetric exchange property over
/// all ordered base pairs.
bool bf_base_exchange_axiom(const Matroid& m);

/// Same checks on an explicit set family (so a non-matroid family can be
/// fed in). All members must have equal size.
bool bf_family_exchange_axiom(const std::vector<Subset>& bases);
bool bf_family_symmetric_exchange(const std::vector<Subset>& bases);

/// Per-element multiplicities across the two families agree.
bool multiset_union_equal(const std::vector<Subset>& qs, const std::vector<Subset>& rs);

}  // namespace mlc
