#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "mlc/matroid.hpp"

namespace mlc {

/// Matroids M_1..M_d over one common ground set. Sought: a partition of E
/// into classes I_1..I_d with I_i independent in M_i.
struct PartitionProblem {
    std::vector<Matroid> matroids;

    int ground_size() const { return matroids.empty() ? 0 : matroids.front().size(); }
};

struct PartitionSolution {
    std::vector<Subset> classes;  // disjoint, covering, I_i independent in M_i
};

/// A subset A with sum_i r_i(A) < |A|; proof that no partition exists.
struct DeficiencyCertificate {
    Subset set;
    int deficiency = 0;  // |A| - sum_i r_i(A), positive
};

using PartitionResult = std::variant<PartitionSolution, DeficiencyCertificate>;

struct PartitionStats {
    int augmentations = 0;
};

/// Augmenting-path solver. Grows a partial solution one element at a time:
/// for each uncovered element a breadth-first search runs over the exchange
/// digraph (arc y -> x when x lies in the fundamental circuit of y in x's
/// class, arc y -> sink_i when class i can absorb y), and the exchanges
/// along a shortest path are applied simultaneously. Shortest paths are
/// required for the simultaneous exchanges to preserve independence. If no
/// sink is reachable, the set of reachable elements is returned as a
/// deficiency certificate.
///
/// Deterministic: uncovered elements are processed in increasing id order,
/// the search visits element arcs in increasing id order and sinks in
/// increasing class order. The first certificate found is returned as-is.
PartitionResult partition(const PartitionProblem& problem, PartitionStats* stats = nullptr);

bool verify_partition(const PartitionProblem& problem, const PartitionSolution& solution);
bool verify_certificate(const PartitionProblem& problem, const DeficiencyCertificate& cert);

/// Exhaustive scan over all subsets (|E| <= 20): returns the set minimizing
/// sum_i r_i(A) - |A|, ties broken by numerically smallest bit mask, with
/// the minimum value. The problem is feasible iff the value is >= 0.
std::pair<Subset, int> min_deficiency_bruteforce(const PartitionProblem& problem);

}  // namespace mlc
