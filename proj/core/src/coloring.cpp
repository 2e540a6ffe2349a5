#include "mlc/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mlc/error.hpp"

namespace mlc {

ListAssignment canonical_lists(const SizeFunction& sizes) {
    ListAssignment out;
    out.universe = 0;
    out.lists.reserve(sizes.sizes.size());
    for (std::size_t e = 0; e < sizes.sizes.size(); ++e) {
        int l = sizes.sizes[e];
        if (l < 1)
            throw ArgumentError("list size of element " + std::to_string(e) +
                                " must be positive, got " + std::to_string(l));
        if (l > kMaxGroundSize)
            throw SizeError("list size " + std::to_string(l) + " exceeds the supported maximum " +
                            std::to_string(kMaxGroundSize));
        out.lists.push_back(ListAssignment::color_range(l));
        out.universe = std::max(out.universe, l);
    }
    return out;
}

ListAssignment constant_lists(int n, int k) {
    if (n < 0) throw ArgumentError("ground size must be non-negative");
    if (k < 1) throw ArgumentError("number of colors must be positive, got " + std::to_string(k));
    if (k > kMaxGroundSize)
        throw SizeError("number of colors " + std::to_string(k) +
                        " exceeds the supported maximum " + std::to_string(kMaxGroundSize));
    ListAssignment out;
    out.universe = k;
    out.lists.assign(static_cast<std::size_t>(n), ListAssignment::color_range(k));
    return out;
}

namespace {

void check_lists(const Matroid& m, const ListAssignment& lists) {
    if (lists.lists.size() != static_cast<std::size_t>(m.size()))
        throw ArgumentError("list assignment covers " + std::to_string(lists.lists.size()) +
                            " elements, matroid has " + std::to_string(m.size()));
    if (lists.universe < 0 || lists.universe > kMaxGroundSize)
        throw ArgumentError("color universe must be between 0 and " +
                            std::to_string(kMaxGroundSize));
    const Subset range = ListAssignment::color_range(lists.universe);
    for (int e = 0; e < m.size(); ++e) {
        if (lists.lists[static_cast<std::size_t>(e)].empty())
            throw ArgumentError("element " + std::to_string(e) + " has an empty color list");
        if (!lists.lists[static_cast<std::size_t>(e)].is_subset_of(range))
            throw ArgumentError("list of element " + std::to_string(e) +
                                " leaves the color universe {1.." +
                                std::to_string(lists.universe) + "}");
    }
}

}  // namespace

ColoringResult color_from_lists(const Matroid& m, const ListAssignment& lists) {
    check_lists(m, lists);
    if (m.size() == 0) return Coloring{};

    // One partition class per color, over the elements listing that color.
    // Elements outside Q_i become loops of M_i and can never enter class i,
    // so any partition the solver finds automatically respects the lists.
    PartitionProblem problem;
    problem.matroids.reserve(static_cast<std::size_t>(lists.universe));
    for (int color = 1; color <= lists.universe; ++color) {
        Subset q;
        for (int e = 0; e < m.size(); ++e)
            if (lists.allows(e, color)) q.add(e);
        problem.matroids.push_back(restrict_extended(m, q));
    }

    PartitionResult result = partition(problem);
    if (auto* cert = std::get_if<DeficiencyCertificate>(&result)) return *cert;

    const auto& classes = std::get<PartitionSolution>(result).classes;
    Coloring coloring;
    coloring.colors.assign(static_cast<std::size_t>(m.size()), 0);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (int e : classes[i]) coloring.colors[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
    if (!is_proper(m, coloring, &lists))
        throw InternalError("partition produced an improper list coloring");
    return coloring;
}

bool is_proper(const Matroid& m, const Coloring& coloring, const ListAssignment* lists) {
    if (coloring.colors.size() != static_cast<std::size_t>(m.size()))
        throw ArgumentError("coloring covers " + std::to_string(coloring.colors.size()) +
                            " elements, matroid has " + std::to_string(m.size()));
    if (lists != nullptr && lists->lists.size() != coloring.colors.size())
        throw ArgumentError("coloring and list assignment cover different element counts");

    int max_color = 0;
    for (int e = 0; e < m.size(); ++e) {
        int c = coloring.colors[static_cast<std::size_t>(e)];
        if (c < 1) return false;
        if (c > kMaxGroundSize) return false;
        if (lists != nullptr && !lists->allows(e, c)) return false;
        max_color = std::max(max_color, c);
    }
    std::vector<Subset> classes(static_cast<std::size_t>(max_color));
    for (int e = 0; e < m.size(); ++e)
        classes[static_cast<std::size_t>(coloring.colors[static_cast<std::size_t>(e)] - 1)].add(e);
    for (const Subset& cls : classes)
        if (!m.is_independent(cls)) return false;
    return true;
}

int chromatic_number(const Matroid& m) {
    if (!m.loopless())
        throw LoopError("chromatic number is undefined in the presence of loops");
    if (m.size() == 0) return 1;

    // ceil(n / r(E)) colors are necessary; n always suffice (loopless, so
    // singletons are independent).
    int lower = (m.size() + m.rank() - 1) / m.rank();
    for (int k = std::max(1, lower); k <= m.size(); ++k) {
        ColoringResult result = color_from_lists(m, constant_lists(m.size(), k));
        if (std::holds_alternative<Coloring>(result)) return k;
    }
    throw InternalError("no proper coloring with n colors on a loopless matroid");
}

int edmonds_formula_bruteforce(const Matroid& m) {
    if (!m.loopless())
        throw LoopError("the chromatic formula is undefined in the presence of loops");
    if (m.size() == 0) return 1;
    if (m.size() > 20)
        throw SizeError("exhaustive formula evaluation is capped at 20 elements, got " +
                        std::to_string(m.size()));

    int best = 1;
    const std::uint64_t limit = std::uint64_t{1} << m.size();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Subset a = Subset::from_bits(bits);
        int r = m.rank(a);
        best = std::max(best, (a.size() + r - 1) / r);
    }
    return best;
}

SizeFunction class_graded_sizes(const Matroid& m, int k) {
    if (k < 1) throw ArgumentError("number of colors must be positive, got " + std::to_string(k));
    ColoringResult result = color_from_lists(m, constant_lists(m.size(), k));
    if (std::holds_alternative<DeficiencyCertificate>(result))
        throw InfeasibleError("matroid has no proper coloring with " + std::to_string(k) +
                              " colors");
    const Coloring& coloring = std::get<Coloring>(result);

    // Classes sorted by descending size: the i-th largest class is graded i,
    // which biases small sizes toward large classes and keeps the mean low.
    std::vector<Subset> classes(static_cast<std::size_t>(k));
    for (int e = 0; e < m.size(); ++e)
        classes[static_cast<std::size_t>(coloring.colors[static_cast<std::size_t>(e)] - 1)].add(e);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const Subset& a, const Subset& b) { return a.size() > b.size(); });

    SizeFunction out;
    out.sizes.assign(static_cast<std::size_t>(m.size()), 0);
    for (int grade = 1; grade <= k; ++grade)
        for (int e : classes[static_cast<std::size_t>(grade - 1)])
            out.sizes[static_cast<std::size_t>(e)] = grade;

    long long total = std::accumulate(out.sizes.begin(), out.sizes.end(), 0LL);
    if (2 * total > static_cast<long long>(m.size()) * (k + 1))
        throw InternalError("graded sizes exceed the (k+1)/2 mean bound");
    return out;
}

SufficiencyReport check_canonical_sufficiency(const Matroid& m, const SizeFunction& sizes,
                                              int trials, std::uint64_t seed) {
    if (sizes.sizes.size() != static_cast<std::size_t>(m.size()))
        throw ArgumentError("size function covers " + std::to_string(sizes.sizes.size()) +
                            " elements, matroid has " + std::to_string(m.size()));
    if (trials < 0) throw ArgumentError("trial count must be non-negative");

    SufficiencyReport report;
    report.seed = seed;
    report.trials = trials;
    report.universe = std::max(8, sizes.max());

    ColoringResult canonical = color_from_lists(m, canonical_lists(sizes));
    if (auto* cert = std::get_if<DeficiencyCertificate>(&canonical)) {
        report.premise_false = true;
        report.canonical_certificate = *cert;
        return report;
    }

    std::mt19937_64 rng(seed);
    std::vector<int> palette(static_cast<std::size_t>(report.universe));
    for (int trial = 0; trial < trials; ++trial) {
        ListAssignment lists;
        lists.universe = report.universe;
        lists.lists.reserve(static_cast<std::size_t>(m.size()));
        for (int e = 0; e < m.size(); ++e) {
            // Partial Fisher-Yates: the first l(e) entries become a uniform
            // l(e)-subset of {1..universe}.
            std::iota(palette.begin(), palette.end(), 1);
            Subset list;
            for (int j = 0; j < sizes.sizes[static_cast<std::size_t>(e)]; ++j) {
                std::uniform_int_distribution<int> pick(j, report.universe - 1);
                std::swap(palette[static_cast<std::size_t>(j)],
                          palette[static_cast<std::size_t>(pick(rng))]);
                list.add(palette[static_cast<std::size_t>(j)] - 1);
            }
            lists.lists.push_back(list);
        }

        ColoringResult result = color_from_lists(m, lists);
        if (auto* cert = std::get_if<DeficiencyCertificate>(&result))
            report.failures.push_back({trial, std::move(lists), *cert});
        else
            ++report.successes;
    }
    return report;
}

}  // namespace mlc
