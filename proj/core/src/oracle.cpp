#include "mlc/oracle.hpp"

#include <algorithm>
#include <array>

#include "mlc/error.hpp"

namespace mlc {

namespace {

void check_budget(int n, int cap, const char* what) {
    if (n > cap)
        throw SizeError(std::string(what) + ": ground set of " + std::to_string(n) +
                        " exceeds the budget of " + std::to_string(cap));
}

}  // namespace

std::optional<Coloring> bf_color_from_lists(const Matroid& m, const ListAssignment& lists,
                                            const OracleBudget& budget) {
    int n = m.size();
    check_budget(n, budget.max_ground_coloring, "bf_color_from_lists");
    if (static_cast<int>(lists.lists.size()) != n)
        throw ArgumentError("one list per element required");
    for (const Subset& l : lists.lists)
        if (l.empty()) throw ArgumentError("empty color list");

    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<Subset> classes(static_cast<std::size_t>(lists.universe) + 1);
    long long nodes = 0;

    // Try colors in ascending order at each element; the first complete
    // assignment found is lexicographically minimal.
    auto dfs = [&](auto&& self, int e) -> bool {
        if (e == n) return true;
        if (++nodes > budget.max_assignments)
            throw SizeError("bf_color_from_lists: assignment budget exhausted");
        for (int bit : lists.lists[static_cast<std::size_t>(e)]) {
            int c = bit + 1;
            Subset& cls = classes[static_cast<std::size_t>(c)];
            Subset grown = cls.with(e);
            if (!m.is_independent(grown)) continue;
            cls = grown;
            colors[static_cast<std::size_t>(e)] = c;
            if (self(self, e + 1)) return true;
            cls = grown.without(e);
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return Coloring{std::move(colors)};
}

std::vector<Subset> bf_all_bases(const Matroid& m, const OracleBudget& budget) {
    int n = m.size();
    check_budget(n, budget.max_ground_scan, "bf_all_bases");
    int r = m.rank();
    std::vector<Subset> out;

    // Standard combination walk emits size-r subsets in lexicographic order
    // of their ascending element sequences.
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        Subset b;
        for (int e : pick) b.add(e);
        if (m.is_independent(b)) out.push_back(b);
        if (r == 0) break;
        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

bool bf_check_rank_axioms(const Matroid& m) {
    int n = m.size();
    check_budget(n, kAxiomCheckCap, "bf_check_rank_axioms");
    std::uint64_t count = std::uint64_t{1} << n;
    std::vector<int> r(static_cast<std::size_t>(count));
    for (std::uint64_t a = 0; a < count; ++a)
        r[static_cast<std::size_t>(a)] = m.rank(Subset::from_bits(a));
    return bf_check_rank_table(n, r);
}

bool bf_check_rank_table(int n, const std::vector<int>& ranks) {
    check_budget(n, kAxiomCheckCap, "bf_check_rank_table");
    std::uint64_t count = std::uint64_t{1} << n;
    if (ranks.size() != count) throw ArgumentError("rank table needs one entry per subset");

    if (ranks[0] != 0) return false;
    for (std::uint64_t a = 0; a < count; ++a) {
        if (ranks[static_cast<std::size_t>(a)] < 0 ||
            ranks[static_cast<std::size_t>(a)] > Subset::from_bits(a).size())
            return false;
    }
    for (std::uint64_t a = 0; a < count; ++a) {
        for (std::uint64_t b = 0; b < count; ++b) {
            if ((a & ~b) == 0 &&
                ranks[static_cast<std::size_t>(a)] > ranks[static_cast<std::size_t>(b)])
                return false;  // monotonicity
            if (ranks[static_cast<std::size_t>(a | b)] + ranks[static_cast<std::size_t>(a & b)] >
                ranks[static_cast<std::size_t>(a)] + ranks[static_cast<std::size_t>(b)])
                return false;  // submodularity
        }
    }
    return true;
}

bool bf_family_exchange_axiom(const std::vector<Subset>& bases) {
    for (const Subset& b1 : bases)
        for (const Subset& b2 : bases)
            for (int e : b1 - b2) {
                bool found = false;
                for (int f : b2 - b1) {
                    Subset swapped = b1.without(e).with(f);
                    if (std::find(bases.begin(), bases.end(), swapped) != bases.end()) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    return true;
}

bool bf_family_symmetric_exchange(const std::vector<Subset>& bases) {
    auto member = [&bases](Subset s) {
        return std::find(bases.begin(), bases.end(), s) != bases.end();
    };
    for (const Subset& b1 : bases)
        for (const Subset& b2 : bases)
            for (int e : b1 - b2) {
                bool found = false;
                for (int f : b2 - b1) {
                    if (member(b1.without(e).with(f)) && member(b2.without(f).with(e))) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    return true;
}

bool bf_base_exchange_axiom(const Matroid& m) {
    check_budget(m.size(), kExchangeCheckCap, "bf_base_exchange_axiom");
    std::vector<Subset> bases = bf_all_bases(m);
    return bf_family_exchange_axiom(bases) && bf_family_symmetric_exchange(bases);
}

bool multiset_union_equal(const std::vector<Subset>& qs, const std::vector<Subset>& rs) {
    std::array<int, kMaxGroundSize> mult{};
    for (const Subset& q : qs)
        for (int e : q) ++mult[static_cast<std::size_t>(e)];
    for (const Subset& r : rs)
        for (int e : r) --mult[static_cast<std::size_t>(e)];
    return std::all_of(mult.begin(), mult.end(), [](int c) { return c == 0; });
}

}  // namespace mlc
