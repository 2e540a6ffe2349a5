#include "mlc/matroid.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mlc/error.hpp"

namespace mlc {

struct Matroid::Impl {
    GroundSet ground;
    std::string kind;
    MatroidParams params;
    std::function<int(Subset)> oracle;
    bool memoize = false;
    int full_rank = 0;

    mutable std::mutex mu;
    mutable std::unordered_map<std::uint64_t, int> cache;

    int query(Subset a) const {
        if (!memoize) return oracle(a);
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(a.bits());
        if (it != cache.end()) return it->second;
        int r = oracle(a);
        cache.emplace(a.bits(), r);
        return r;
    }
};

namespace {

void check_ground_size(int n) {
    if (n < 0) throw ConstructionError("ground set size must be non-negative");
    if (n > kMaxGroundSize)
        throw ConstructionError("ground set size " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(kMaxGroundSize) + " elements");
}

void check_labels(const GroundSet& g) {
    if (g.labels.empty()) return;
    if (static_cast<int>(g.labels.size()) != g.n)
        throw ConstructionError("labels must match the ground set size");
    std::set<std::string> seen(g.labels.begin(), g.labels.end());
    if (static_cast<int>(seen.size()) != g.n) throw ConstructionError("labels must be distinct");
}

}  // namespace

Matroid Matroid::finish(std::shared_ptr<Matroid::Impl> impl) {
    check_labels(impl->ground);
    impl->full_rank = impl->query(Subset::full(impl->ground.n));
    return Matroid(std::move(impl));
}

int Matroid::size() const { return impl_->ground.n; }
const GroundSet& Matroid::ground() const { return impl_->ground; }
const std::string& Matroid::kind() const { return impl_->kind; }
const MatroidParams& Matroid::params() const { return impl_->params; }

int Matroid::rank(Subset a) const {
    if (!a.is_subset_of(full_set()))
        throw ArgumentError("subset " + a.to_string() + " has elements outside the ground set");
    return impl_->query(a);
}

int Matroid::rank() const { return impl_->full_rank; }

Subset Matroid::loops() const {
    Subset out;
    for (int e = 0; e < size(); ++e)
        if (rank(Subset::single(e)) == 0) out.add(e);
    return out;
}

Matroid make_uniform(int k, int n) {
    check_ground_size(n);
    if (k < 0) throw ConstructionError("uniform matroid needs k >= 0");
    if (k > n) throw ConstructionError("uniform matroid needs k <= n");
    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{n, {}};
    impl->kind = "uniform";
    impl->params = UniformParams{k};
    impl->oracle = [k](Subset a) { return std::min(a.size(), k); };
    return Matroid::finish(std::move(impl));
}

Matroid make_free(int n) {
    check_ground_size(n);
    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{n, {}};
    impl->kind = "free";
    impl->params = FreeParams{};
    impl->oracle = [](Subset a) { return a.size(); };
    return Matroid::finish(std::move(impl));
}

Matroid make_graphic(int vertices, const std::vector<std::pair<int, int>>& edges,
                     std::vector<std::string> labels) {
    check_ground_size(static_cast<int>(edges.size()));
    if (vertices < 0) throw ConstructionError("vertex count must be non-negative");
    for (const auto& [u, v] : edges)
        if (u < 0 || u >= vertices || v < 0 || v >= vertices)
            throw ConstructionError("edge endpoint out of range");

    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{static_cast<int>(edges.size()), std::move(labels)};
    impl->kind = "graphic";
    impl->params = GraphicParams{vertices, edges};
    impl->memoize = true;
    // Union-find per query. Rank equals touched vertices minus components of
    // the induced subgraph, which is exactly the number of successful merges.
    impl->oracle = [vertices, edges](Subset a) {
        std::vector<int> parent(static_cast<std::size_t>(vertices));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        int merges = 0;
        for (int e : a) {
            auto [u, v] = edges[static_cast<std::size_t>(e)];
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[static_cast<std::size_t>(ru)] = rv;
                ++merges;
            }
        }
        return merges;
    };
    return Matroid::finish(std::move(impl));
}

Matroid make_linear(int p, const std::vector<std::vector<int>>& rows) {
    if (!gf::is_prime(p)) throw ConstructionError("field order must be a prime <= 65536");
    std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != width) throw ConstructionError("matrix rows must have equal length");
        for (int v : row)
            if (v < 0 || v >= p) throw ConstructionError("matrix entry out of GF(p) range");
    }
    check_ground_size(static_cast<int>(width));

    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{static_cast<int>(width), {}};
    impl->kind = "linear";
    impl->params = LinearParams{p, rows};
    impl->memoize = true;
    impl->oracle = [p, rows](Subset a) { return gf::rank_mod_p(rows, a, p); };
    return Matroid::finish(std::move(impl));
}

Matroid make_partition(int n, const std::vector<Subset>& blocks,
                       const std::vector<int>& capacities) {
    check_ground_size(n);
    if (blocks.size() != capacities.size())
        throw ConstructionError("one capacity per block required");
    Subset covered;
    for (const Subset& b : blocks) {
        if (!(covered & b).empty()) throw ConstructionError("blocks must be disjoint");
        covered |= b;
    }
    if (covered != Subset::full(n)) throw ConstructionError("blocks must cover the ground set");
    for (int c : capacities)
        if (c < 0) throw ConstructionError("capacities must be non-negative");

    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{n, {}};
    impl->kind = "partition";
    impl->params = PartitionParams{blocks, capacities};
    impl->oracle = [blocks, capacities](Subset a) {
        int r = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            r += std::min((a & blocks[i]).size(), capacities[i]);
        return r;
    };
    return Matroid::finish(std::move(impl));
}

Matroid restrict_extended(const Matroid& m, Subset s) {
    if (!s.is_subset_of(m.full_set()))
        throw ArgumentError("restriction set has elements outside the ground set");
    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = m.ground();
    impl->kind = "restriction";
    impl->params = RestrictionParams{std::make_shared<const Matroid>(m), s};
    // Delegates to the inner matroid, sharing its cache.
    impl->oracle = [m, s](Subset a) { return m.rank(a & s); };
    return Matroid::finish(std::move(impl));
}

std::pair<Matroid, std::vector<int>> restrict_to(const Matroid& m, Subset s) {
    if (!s.is_subset_of(m.full_set()))
        throw ArgumentError("restriction set has elements outside the ground set");
    std::vector<int> ids = s.elements();
    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{static_cast<int>(ids.size()), {}};
    impl->kind = "dense-restriction";
    impl->params = RestrictionParams{std::make_shared<const Matroid>(m), s};
    impl->oracle = [m, ids](Subset a) {
        Subset img;
        for (int j : a) img.add(ids[static_cast<std::size_t>(j)]);
        return m.rank(img);
    };
    return {Matroid::finish(std::move(impl)), ids};
}

std::pair<Matroid, ParallelMap> add_parallel(const Matroid& m, const std::vector<int>& copies) {
    if (static_cast<int>(copies.size()) != m.size())
        throw ArgumentError("one copy count per element required");
    long long total = 0;
    for (int c : copies) {
        if (c < 1) throw ArgumentError("copy counts must be >= 1");
        total += c;
    }
    if (total > kMaxGroundSize)
        throw SizeError("parallel extension exceeds the " + std::to_string(kMaxGroundSize) +
                        "-element cap");

    ParallelMap map;
    map.base_size = m.size();
    map.original.reserve(static_cast<std::size_t>(total));
    for (int e = 0; e < m.size(); ++e)
        for (int c = 0; c < copies[static_cast<std::size_t>(e)]; ++c) map.original.push_back(e);

    auto impl = std::make_shared<Matroid::Impl>();
    impl->ground = GroundSet{static_cast<int>(total), {}};
    impl->kind = "parallel-extension";
    impl->params = ParallelParams{std::make_shared<const Matroid>(m), copies};
    impl->oracle = [m, map](Subset a) { return m.rank(map.image(a)); };
    return {Matroid::finish(std::move(impl)), map};
}

Subset fundamental_circuit(const Matroid& m, Subset independent, int y) {
    if (y < 0 || y >= m.size()) throw ArgumentError("element out of range");
    if (!independent.is_subset_of(m.full_set()))
        throw ArgumentError("subset has elements outside the ground set");
    if (!m.is_independent(independent)) throw ContractError("fundamental_circuit: set dependent");
    Subset with_y = independent.with(y);
    if (independent.contains(y) || m.is_independent(with_y))
        throw ContractError("fundamental_circuit: adding the element keeps the set independent");
    Subset circuit = Subset::single(y);
    int target = independent.size();
    for (int x : independent)
        if (m.rank(with_y.without(x)) == target) circuit.add(x);
    return circuit;
}

namespace gf {

bool is_prime(int p) {
    if (p < 2 || p > 65536) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {
// Inverse mod prime p by extended Euclid.
int inverse_mod(int a, int p) {
    int t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}
}  // namespace

int rank_mod_p(const std::vector<std::vector<int>>& rows, Subset cols, int p) {
    std::vector<int> ids = cols.elements();
    std::size_t ncols = ids.size();
    if (ncols == 0 || rows.empty()) return 0;
    // Work on the selected column submatrix.
    std::vector<std::vector<long long>> a(rows.size(), std::vector<long long>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            a[i][j] = rows[i][static_cast<std::size_t>(ids[j])];

    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        long long inv = inverse_mod(static_cast<int>(a[static_cast<std::size_t>(rank)][col]), p);
        for (std::size_t j = col; j < ncols; ++j)
            a[static_cast<std::size_t>(rank)][j] =
                a[static_cast<std::size_t>(rank)][j] * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                a[i][j] = ((a[i][j] - f * a[static_cast<std::size_t>(rank)][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace gf

}  // namespace mlc
