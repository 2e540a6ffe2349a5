#include "mlc/partition.hpp"

#include <algorithm>
#include <deque>

#include "mlc/error.hpp"

namespace mlc {

namespace {

void validate(const PartitionProblem& problem) {
    if (problem.matroids.empty()) throw ArgumentError("at least one matroid required");
    int n = problem.matroids.front().size();
    for (const Matroid& m : problem.matroids)
        if (m.size() != n) throw ArgumentError("matroids must share one ground set");
}

struct SearchOutcome {
    bool reached_sink = false;
    int sink = -1;
    std::vector<int> path;  // source first, insertion tail last
    Subset visited;
};

// BFS over the exchange digraph from one uncovered source. classes/class_of
// describe the current partial solution and are not modified.
SearchOutcome search(const PartitionProblem& problem, const std::vector<Subset>& classes,
                     const std::vector<int>& class_of, int source) {
    int d = static_cast<int>(problem.matroids.size());
    std::vector<int> prev(static_cast<std::size_t>(problem.ground_size()), -1);
    SearchOutcome out;
    out.visited = Subset::single(source);
    std::deque<int> queue{source};

    while (!queue.empty()) {
        int y = queue.front();
        queue.pop_front();
        // Sink arcs first: class i can absorb y directly.
        for (int i = 0; i < d; ++i) {
            if (class_of[static_cast<std::size_t>(y)] == i) continue;
            if (problem.matroids[static_cast<std::size_t>(i)].is_independent(
                    classes[static_cast<std::size_t>(i)].with(y))) {
                out.reached_sink = true;
                out.sink = i;
                for (int v = y; v != -1; v = prev[static_cast<std::size_t>(v)])
                    out.path.push_back(v);
                std::reverse(out.path.begin(), out.path.end());
                return out;
            }
        }
        // Element arcs: y can replace any member of its fundamental circuit
        // in that member's class.
        Subset targets;
        for (int i = 0; i < d; ++i) {
            if (class_of[static_cast<std::size_t>(y)] == i) continue;
            targets |= fundamental_circuit(problem.matroids[static_cast<std::size_t>(i)],
                                           classes[static_cast<std::size_t>(i)], y)
                           .without(y);
        }
        for (int x : targets - out.visited) {
            out.visited.add(x);
            prev[static_cast<std::size_t>(x)] = y;
            queue.push_back(x);
        }
    }
    return out;
}

}  // namespace

PartitionResult partition(const PartitionProblem& problem, PartitionStats* stats) {
    validate(problem);
    int n = problem.ground_size();
    int d = static_cast<int>(problem.matroids.size());

    std::vector<Subset> classes(static_cast<std::size_t>(d));
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    if (stats) stats->augmentations = 0;

    for (int source = 0; source < n; ++source) {
        SearchOutcome found = search(problem, classes, class_of, source);
        if (!found.reached_sink) {
            DeficiencyCertificate cert;
            cert.set = found.visited;
            int total = 0;
            for (const Matroid& m : problem.matroids) total += m.rank(cert.set);
            cert.deficiency = cert.set.size() - total;
            if (!verify_certificate(problem, cert))
                throw InternalError("partition: certificate fails its own check");
            return cert;
        }

        // Shift every path node into the class of its successor; the tail
        // joins the absorbing class. All moves are simultaneous.
        const std::vector<int>& path = found.path;
        std::vector<int> dest(path.size());
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            dest[j] = class_of[static_cast<std::size_t>(path[j + 1])];
        dest[path.size() - 1] = found.sink;
        for (std::size_t j = 1; j < path.size(); ++j)
            classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(path[j])])]
                .remove(path[j]);
        for (std::size_t j = 0; j < path.size(); ++j) {
            classes[static_cast<std::size_t>(dest[j])].add(path[j]);
            class_of[static_cast<std::size_t>(path[j])] = dest[j];
        }
        if (stats) ++stats->augmentations;

        for (int i = 0; i < d; ++i)
            if (!problem.matroids[static_cast<std::size_t>(i)].is_independent(
                    classes[static_cast<std::size_t>(i)]))
                throw InternalError("partition: augmentation broke a class");
    }

    PartitionSolution solution{std::move(classes)};
    if (!verify_partition(problem, solution))
        throw InternalError("partition: solution fails its own check");
    return solution;
}

bool verify_partition(const PartitionProblem& problem, const PartitionSolution& solution) {
    validate(problem);
    if (solution.classes.size() != problem.matroids.size()) return false;
    Subset seen;
    for (std::size_t i = 0; i < solution.classes.size(); ++i) {
        if (!(seen & solution.classes[i]).empty()) return false;
        seen |= solution.classes[i];
        if (!problem.matroids[i].is_independent(solution.classes[i])) return false;
    }
    return seen == Subset::full(problem.ground_size());
}

bool verify_certificate(const PartitionProblem& problem, const DeficiencyCertificate& cert) {
    validate(problem);
    if (!cert.set.is_subset_of(Subset::full(problem.ground_size()))) return false;
    int total = 0;
    for (const Matroid& m : problem.matroids) total += m.rank(cert.set);
    return total < cert.set.size();
}

std::pair<Subset, int> min_deficiency_bruteforce(const PartitionProblem& problem) {
    validate(problem);
    int n = problem.ground_size();
    if (n > 20) throw SizeError("min_deficiency_bruteforce: ground set exceeds 20 elements");

    Subset best;
    int best_value = 0;  // the empty set scores 0
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < count; ++bits) {
        Subset a = Subset::from_bits(bits);
        int total = 0;
        for (const Matroid& m : problem.matroids) total += m.rank(a);
        int value = total - a.size();
        if (value < best_value) {
            best_value = value;
            best = a;
        }
    }
    return {best, best_value};
}

}  // namespace mlc
