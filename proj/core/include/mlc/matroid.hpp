#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mlc/subset.hpp"

namespace mlc {

struct GroundSet {
    int n = 0;
    /// Optional human-readable names; either empty or exactly n distinct strings.
    std::vector<std::string> labels;
};

/// Maps elements of a parallel extension back to the base ground set.
struct ParallelMap {
    std::vector<int> original;  // extended id -> base id, surjective
    int base_size = 0;

    /// De-duplicated image of an extended subset in the base ground set.
    Subset image(Subset extended) const {
        Subset img;
        for (int e : extended) img.add(original[static_cast<std::size_t>(e)]);
        return img;
    }

    /// Extended ids mapping to base element `b`, ascending.
    std::vector<int> instances(int b) const {
        std::vector<int> out;
        for (int e = 0; e < static_cast<int>(original.size()); ++e)
            if (original[static_cast<std::size_t>(e)] == b) out.push_back(e);
        return out;
    }
};

// Construction parameters, kept so matroids can be re-serialized verbatim.
class Matroid;
struct UniformParams {
    int k = 0;
};
struct FreeParams {};
struct GraphicParams {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};
struct LinearParams {
    int p = 2;
    std::vector<std::vector<int>> rows;  // rows x n matrix, entries reduced mod p
};
struct PartitionParams {
    std::vector<Subset> blocks;
    std::vector<int> capacities;
};
struct RestrictionParams {
    std::shared_ptr<const Matroid> inner;
    Subset keep;
};
struct ParallelParams {
    std::shared_ptr<const Matroid> inner;
    std::vector<int> copies;
};
using MatroidParams = std::variant<UniformParams, FreeParams, GraphicParams, LinearParams,
                                   PartitionParams, RestrictionParams, ParallelParams>;

/// A matroid presented by its rank oracle over a ground set of at most 64
/// elements. Values are immutable after construction and cheap to copy;
/// rank queries on the representation-backed kinds (graphic, linear) are
/// memoized behind the oracle, which combinators share through their inner
/// matroid.
class Matroid {
public:
    int size() const;  // |E|
    const GroundSet& ground() const;
    const std::string& kind() const;
    const MatroidParams& params() const;

    Subset full_set() const { return Subset::full(size()); }

    /// Rank of a subset. Throws ArgumentError on out-of-range elements.
    int rank(Subset a) const;
    /// Rank of the whole ground set.
    int rank() const;

    bool is_independent(Subset a) const { return rank(a) == a.size(); }
    bool is_basis(Subset b) const { return b.size() == rank() && is_independent(b); }

    /// Elements of rank zero.
    Subset loops() const;
    bool loopless() const { return loops().empty(); }

private:
    struct Impl;
    explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    /// Validates labels, precomputes the full rank, wraps up. All factories
    /// funnel through here.
    static Matroid finish(std::shared_ptr<Impl> impl);
    std::shared_ptr<const Impl> impl_;

    friend Matroid make_uniform(int k, int n);
    friend Matroid make_free(int n);
    friend Matroid make_graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> labels);
    friend Matroid make_linear(int p, const std::vector<std::vector<int>>& rows);
    friend Matroid make_partition(int n, const std::vector<Subset>& blocks,
                                  const std::vector<int>& capacities);
    friend Matroid restrict_extended(const Matroid& m, Subset s);
    friend std::pair<Matroid, std::vector<int>> restrict_to(const Matroid& m, Subset s);
    friend std::pair<Matroid, ParallelMap> add_parallel(const Matroid& m,
                                                        const std::vector<int>& copies);
};

/// U_{k,n}: rank of A is min(|A|, k).
Matroid make_uniform(int k, int n);

/// Every subset independent.
Matroid make_free(int n);

/// Cycle matroid of a multigraph; element i is edges[i]. Self-loops become
/// matroid loops, parallel edges parallel elements.
Matroid make_graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                     std::vector<std::string> labels = {});

/// Column matroid of a rows x n matrix over GF(p); element j is column j.
Matroid make_linear(int p, const std::vector<std::vector<int>>& rows);

/// Blocks partition {0..n-1}; rank of A is sum_i min(|A ∩ block_i|, cap_i).
Matroid make_partition(int n, const std::vector<Subset>& blocks,
                       const std::vector<int>& capacities);

/// Restriction to S, keeping the full ground set: r'(A) = r(A ∩ S).
/// Elements outside S become loops.
Matroid restrict_extended(const Matroid& m, Subset s);

/// Restriction to S on a densely re-indexed ground set of |S| elements.
/// Returns the matroid and the ascending list of original ids, so
/// new element j corresponds to original ids[j].
std::pair<Matroid, std::vector<int>> restrict_to(const Matroid& m, Subset s);

/// Replaces each element e by copies[e] >= 1 mutually parallel instances.
/// Extended ids are assigned in base-id order, contiguous per base element;
/// r'(A) = r(image of A).
std::pair<Matroid, ParallelMap> add_parallel(const Matroid& m, const std::vector<int>& copies);

/// The unique circuit contained in I ∪ {y}: {x ∈ I : I ∪ {y} \ {x} independent} ∪ {y}.
/// Requires I independent and I ∪ {y} dependent (ContractError otherwise).
Subset fundamental_circuit(const Matroid& m, Subset independent, int y);

namespace gf {
/// True for primes p <= 2^16.
bool is_prime(int p);
/// Rank over GF(p) of the columns of `rows` selected by `cols`, by Gaussian
/// elimination with exact modular inverses.
int rank_mod_p(const std::vector<std::vector<int>>& rows, Subset cols, int p);
}  // namespace gf

}  // namespace mlc
