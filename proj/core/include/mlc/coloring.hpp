#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mlc/coloring_types.hpp"
#include "mlc/matroid.hpp"
#include "mlc/partition.hpp"

namespace mlc {

/// The lists {1..l(e)} for a size function l.
ListAssignment canonical_lists(const SizeFunction& sizes);

/// Constant lists {1..k} on every element.
ListAssignment constant_lists(int n, int k);

using ColoringResult = std::variant<Coloring, DeficiencyCertificate>;

/// Proper coloring from lists, by reduction to matroid partition: one class
/// per color i over the restriction of M to the elements whose list
/// contains i. Returns either a coloring (proper, respecting the lists) or
/// a deficiency certificate. Loops make the instance infeasible and yield
/// a certificate, never an error.
ColoringResult color_from_lists(const Matroid& m, const ListAssignment& lists);

/// True iff every color class is independent and, when lists are supplied,
/// every element's color is on its list.
bool is_proper(const Matroid& m, const Coloring& coloring,
               const ListAssignment* lists = nullptr);

/// Minimum number of colors in a proper coloring; smallest k for which
/// constant lists {1..k} are colorable. Requires a loopless matroid.
int chromatic_number(const Matroid& m);

/// Exhaustive evaluation of max over non-empty A of ceil(|A| / r(A)),
/// Edmonds' chromatic formula. Requires loopless and |E| <= 20.
int edmonds_formula_bruteforce(const Matroid& m);

/// Size function built from a k-coloring: classes are sorted by descending
/// size and elements of the i-th class get size i. The mean size is then
/// at most (k+1)/2. Requires k >= chromatic number (InfeasibleError below).
SizeFunction class_graded_sizes(const Matroid& m, int k);

struct ListTrialFailure {
    int trial = 0;
    ListAssignment lists;
    DeficiencyCertificate certificate;
};

/// Outcome of check_canonical_sufficiency. `failures` must stay empty: a
/// colorable canonical instance with an uncolorable same-size instance
/// would contradict the library's own solver, not the mathematics.
struct SufficiencyReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int universe = 0;
    bool premise_false = false;
    std::optional<DeficiencyCertificate> canonical_certificate;
    int successes = 0;
    std::vector<ListTrialFailure> failures;
};

/// Checks that colorability from the canonical lists {1..l(e)} predicts
/// colorability from arbitrary lists of the same sizes. If the canonical
/// lists are uncolorable the report says so (premise_false) and carries the
/// certificate; otherwise `trials` list assignments of size l are sampled
/// uniformly from the universe {1..max(8, max l)} and each is colored.
SufficiencyReport check_canonical_sufficiency(const Matroid& m, const SizeFunction& sizes,
                                              int trials, std::uint64_t seed);

}  // namespace mlc
