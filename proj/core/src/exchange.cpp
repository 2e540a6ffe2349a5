#include "mlc/exchange.hpp"

#include <utility>
#include <variant>

#include "mlc/coloring.hpp"
#include "mlc/error.hpp"

namespace mlc {

namespace {

void require_basis(const Matroid& m, Subset b, const char* name) {
    if (!b.is_subset_of(m.full_set()))
        throw ArgumentError(std::string(name) + " leaves the ground set");
    if (!m.is_basis(b)) throw ArgumentError(std::string(name) + " is not a basis");
}

// Checks the parts are pairwise disjoint (ArgumentError otherwise) and
// returns their union.
Subset union_of_parts(const Matroid& m, const std::vector<Subset>& parts) {
    if (parts.empty()) throw ArgumentError("need at least one part");
    Subset whole;
    for (Subset p : parts) {
        if (!p.is_subset_of(m.full_set())) throw ArgumentError("part leaves the ground set");
        if (!(p & whole).empty()) throw ArgumentError("parts are not pairwise disjoint");
        whole |= p;
    }
    return whole;
}

void assert_partition_of(const std::vector<Subset>& parts, Subset whole) {
    Subset seen;
    for (Subset p : parts) {
        if (!(p & seen).empty()) throw InternalError("produced parts overlap");
        seen |= p;
    }
    if (seen != whole) throw InternalError("produced parts do not cover the basis");
}

// The coloring instance behind the construction-based exchanges: m is
// restricted to `support` and every dense element is replicated once per
// entry of its list vector (the instances keep that order). The instance
// coloring is guaranteed proper and list-respecting; parallel copies of one
// element always end up with pairwise distinct colors.
struct Replicated {
    std::vector<int> ids;  // dense index -> element of m
    ParallelMap map;       // instance -> dense index
    Coloring coloring;     // instance -> color
};

Replicated color_replicated(const Matroid& m, Subset support,
                            const std::vector<std::vector<Subset>>& lists_per_element,
                            int universe) {
    auto [dense, ids] = restrict_to(m, support);
    if (lists_per_element.size() != static_cast<std::size_t>(dense.size()))
        throw InternalError("replication lists do not match the support");

    std::vector<int> counts;
    counts.reserve(lists_per_element.size());
    ListAssignment lists;
    lists.universe = universe;
    for (const auto& per_copy : lists_per_element) {
        counts.push_back(static_cast<int>(per_copy.size()));
        for (Subset l : per_copy) lists.lists.push_back(l);
    }
    auto [extended, map] = add_parallel(dense, counts);

    ColoringResult result = color_from_lists(extended, lists);
    if (std::holds_alternative<DeficiencyCertificate>(result))
        throw InternalError("exchange construction is uncolorable");
    Replicated out{std::move(ids), std::move(map), std::get<Coloring>(std::move(result))};

    for (int t = 0; t < dense.size(); ++t) {
        Subset seen;
        for (int j : out.map.instances(t)) {
            int bit = out.coloring.colors[static_cast<std::size_t>(j)] - 1;
            if (seen.contains(bit)) throw InternalError("parallel copies share a color");
            seen.add(bit);
        }
    }
    return out;
}

}  // namespace

ExchangeWitness symmetric_exchange(const Matroid& m, Subset b1, Subset b2, int e) {
    require_basis(m, b1, "first basis");
    require_basis(m, b2, "second basis");
    if (e < 0 || e >= m.size())
        throw ArgumentError("element " + std::to_string(e) + " is out of range");
    if (!b1.contains(e) || b2.contains(e))
        throw ArgumentError("element must lie in the first basis but not the second");

    ExchangeWitness w;
    w.variant = "single";
    w.first_basis = b1;
    w.second_basis = b2;
    w.exchanged_element = e;

    for (int f : b2 - b1) {
        Subset s1 = b1.without(e).with(f);
        bool ok1 = m.is_basis(s1);
        w.checks.push_back({s1, ok1});
        if (!ok1) continue;
        Subset s2 = b2.without(f).with(e);
        bool ok2 = m.is_basis(s2);
        w.checks.push_back({s2, ok2});
        if (ok2) {
            w.found_element = f;
            return w;
        }
    }
    throw InternalError("no symmetric exchange partner exists");
}

ExchangeWitness multi_symmetric_exchange(const Matroid& m, Subset b1, Subset b2, Subset a1) {
    require_basis(m, b1, "first basis");
    require_basis(m, b2, "second basis");
    if (!a1.is_subset_of(b1))
        throw ArgumentError("exchanged subset must lie inside the first basis");

    ExchangeWitness w;
    w.variant = "multi";
    w.first_basis = b1;
    w.second_basis = b2;
    w.exchanged_subset = a1;

    // Instance layout per element: the B1 copy (pinned to color 1 on A1,
    // color 2 elsewhere) precedes the free B2 copy.
    const Subset support = b1 | b2;
    const std::vector<int> ids = support.elements();
    std::vector<std::vector<Subset>> lists(ids.size());
    for (std::size_t t = 0; t < ids.size(); ++t) {
        int o = ids[t];
        if (b1.contains(o)) lists[t].push_back(Subset::single(a1.contains(o) ? 0 : 1));
        if (b2.contains(o)) lists[t].push_back(ListAssignment::color_range(2));
        // the feasibility guarantee needs list sizes 1 on B1, 2 on B2
        if ((b1.contains(o) && lists[t].front().size() != 1) ||
            (b2.contains(o) && lists[t].back().size() != 2))
            throw InternalError("construction lists deviate from the stated sizes");
    }
    Replicated r = color_replicated(m, support, lists, 2);

    // A2 = elements whose B2 copy took color 2; color class 2 is then
    // (B1 - A1) + A2 and color class 1 is (B2 - A2) + A1.
    Subset a2;
    for (std::size_t t = 0; t < ids.size(); ++t) {
        int o = ids[t];
        if (!b2.contains(o)) continue;
        const auto instances = r.map.instances(static_cast<int>(t));
        if (r.coloring.colors[static_cast<std::size_t>(instances.back())] == 2) a2.add(o);
    }
    w.found_subset = a2;

    Subset s1 = (b1 - a1) | a2;
    Subset s2 = (b2 - a2) | a1;
    bool ok1 = m.is_basis(s1);
    bool ok2 = m.is_basis(s2);
    w.checks.push_back({s1, ok1});
    w.checks.push_back({s2, ok2});
    if (!ok1 || !ok2) throw InternalError("multiple exchange produced a non-basis");
    return w;
}

ExchangeWitness partition_exchange_into(const Matroid& m, Subset a,
                                        const std::vector<Subset>& b_parts) {
    require_basis(m, a, "first basis");
    const Subset b = union_of_parts(m, b_parts);
    require_basis(m, b, "union of the parts");
    const int k = static_cast<int>(b_parts.size());

    ExchangeWitness w;
    w.variant = "partition-into";
    w.first_basis = a;
    w.second_basis = b;
    w.second_parts = b_parts;

    if (k == 1) {
        // (B - B1) + A1 with A1 = A is just A.
        w.first_parts = {a};
        w.checks.push_back({a, m.is_basis(a)});
        return w;
    }

    auto part_of = [&](int o) {
        for (int i = 0; i < k; ++i)
            if (b_parts[static_cast<std::size_t>(i)].contains(o)) return i;
        throw InternalError("element escaped its parts");
    };

    // One free copy per element of A (laid out first), k-1 copies per
    // element of B barred from its own part's color. The copies of an
    // element of Bi then use every color but i, so color class i covers
    // B - Bi exactly once and is completed to a basis by Ai.
    const Subset all_colors = ListAssignment::color_range(k);
    const Subset support = a | b;
    const std::vector<int> ids = support.elements();
    std::vector<std::vector<Subset>> lists(ids.size());
    for (std::size_t t = 0; t < ids.size(); ++t) {
        int o = ids[t];
        if (a.contains(o)) lists[t].push_back(all_colors);
        if (b.contains(o)) {
            Subset barred = all_colors.without(part_of(o));
            lists[t].insert(lists[t].end(), static_cast<std::size_t>(k - 1), barred);
        }
        // the feasibility guarantee needs list sizes k on A, k-1 on B
        if ((a.contains(o) && lists[t].front().size() != k) ||
            (b.contains(o) && lists[t].back().size() != k - 1))
            throw InternalError("construction lists deviate from the stated sizes");
    }
    Replicated r = color_replicated(m, support, lists, k);

    std::vector<Subset> parts(static_cast<std::size_t>(k));
    for (std::size_t t = 0; t < ids.size(); ++t) {
        int o = ids[t];
        if (!a.contains(o)) continue;
        int j = r.map.instances(static_cast<int>(t)).front();
        parts[static_cast<std::size_t>(r.coloring.colors[static_cast<std::size_t>(j)] - 1)].add(o);
    }
    w.first_parts = parts;
    assert_partition_of(parts, a);

    for (int i = 0; i < k; ++i) {
        Subset s = (b - b_parts[static_cast<std::size_t>(i)]) | parts[static_cast<std::size_t>(i)];
        bool ok = m.is_basis(s);
        w.checks.push_back({s, ok});
        if (!ok) throw InternalError("partition exchange produced a non-basis");
    }
    return w;
}

ExchangeWitness partition_exchange_from(const Matroid& m, Subset a,
                                        const std::vector<Subset>& b_parts) {
    require_basis(m, a, "first basis");
    const Subset b = union_of_parts(m, b_parts);
    require_basis(m, b, "union of the parts");
    const int k = static_cast<int>(b_parts.size());

    ExchangeWitness w;
    w.variant = "partition-from";
    w.first_basis = a;
    w.second_basis = b;
    w.second_parts = b_parts;

    if (k == 1) {
        // (A - A1) + B1 with A1 = A is just B.
        w.first_parts = {a};
        w.checks.push_back({b, m.is_basis(b)});
        return w;
    }

    auto part_of = [&](int o) {
        for (int i = 0; i < k; ++i)
            if (b_parts[static_cast<std::size_t>(i)].contains(o)) return i;
        throw InternalError("element escaped its parts");
    };

    // k-1 free copies per element of A (laid out first), one copy per
    // element of B pinned to its part's color. The copies of an element of
    // A use all colors but one; collecting the missed colors partitions A
    // so that color class i is exactly (A - Ai) + Bi.
    const Subset all_colors = ListAssignment::color_range(k);
    const Subset support = a | b;
    const std::vector<int> ids = support.elements();
    std::vector<std::vector<Subset>> lists(ids.size());
    for (std::size_t t = 0; t < ids.size(); ++t) {
        int o = ids[t];
        if (a.contains(o))
            lists[t].insert(lists[t].end(), static_cast<std::size_t>(k - 1), all_colors);
        if (b.contains(o)) lists[t].push_back(Subset::single(part_of(o)));
        // the feasibility guarantee needs list sizes k on A, 1 on B
        if ((a.contains(o) && lists[t].front().size() != k) ||
            (b.contains(o) && lists[t].back().size() != 1))
            throw InternalError("construction lists deviate from the stated sizes");
    }
    Replicated r = color_replicated(m, support, lists, k);

    std::vector<Subset> parts(static_cast<std::size_t>(k));
    for (std::size_t t = 0; t < ids.size(); ++t) {
        int o = ids[t];
        if (!a.contains(o)) continue;
        const auto instances = r.map.instances(static_cast<int>(t));
        Subset used;
        for (int idx = 0; idx < k - 1; ++idx)
            used.add(r.coloring.colors[static_cast<std::size_t>(instances[static_cast<std::size_t>(idx)])] - 1);
        Subset missed = all_colors - used;
        if (missed.size() != 1) throw InternalError("element misses more than one color");
        parts[static_cast<std::size_t>(missed.min_element())].add(o);
    }
    w.first_parts = parts;
    assert_partition_of(parts, a);

    for (int i = 0; i < k; ++i) {
        Subset s = (a - parts[static_cast<std::size_t>(i)]) | b_parts[static_cast<std::size_t>(i)];
        bool ok = m.is_basis(s);
        w.checks.push_back({s, ok});
        if (!ok) throw InternalError("partition exchange produced a non-basis");
    }
    return w;
}

}  // namespace mlc
