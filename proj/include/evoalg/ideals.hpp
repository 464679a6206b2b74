#ifndef EVOALG_IDEALS_HPP
#define EVOALG_IDEALS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"

namespace evoalg {

/// Subset of the index set {0..n-1} as a bitmask.
using IndexSet = std::uint32_t;

inline int set_size(IndexSet s) { return __builtin_popcount(s); }

inline std::vector<int> set_elements(IndexSet s) {
    std::vector<int> v;
    for (int i = 0; s >> i; ++i)
        if ((s >> i) & 1u) v.push_back(i);
    return v;
}

/// Support of column i: the first-generation descendants of index i.
inline IndexSet first_descendants(const SupportPattern& p, int i) {
    if (i < 0 || i >= p.dim()) throw std::out_of_range("first_descendants: index");
    return p.column(i);
}

/// Reachability closure of {i} under first descendants; i itself is included
/// only when reachable.
inline IndexSet descendants(const SupportPattern& p, int i) {
    IndexSet frontier = first_descendants(p, i);
    IndexSet seen = frontier;
    while (frontier) {
        IndexSet next = 0;
        for (int k = 0; k < p.dim(); ++k)
            if ((frontier >> k) & 1u) next |= p.column(k);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

/// Smallest closed superset of s: s together with all descendants of its members.
inline IndexSet closure(const SupportPattern& p, IndexSet s) {
    IndexSet out = s;
    for (int i = 0; i < p.dim(); ++i)
        if ((s >> i) & 1u) out |= descendants(p, i);
    return out;
}

/// s is closed when every column of s has support inside s.
inline bool is_closed(const SupportPattern& p, IndexSet s) {
    for (int i = 0; i < p.dim(); ++i)
        if ((s >> i) & 1u && (p.column(i) & ~s)) return false;
    return true;
}

/// A basic ideal is spanned by basis vectors whose index set is proper,
/// nonempty and closed under first descendants.
inline bool is_basic_ideal(const SupportPattern& p, IndexSet s) {
    const IndexSet full = (1u << p.dim()) - 1;
    if (s == 0 || s == full) return false;
    return is_closed(p, s);
}

/// All proper nonempty closed index sets, ascending as bitmasks (which is
/// lexicographic on the sorted element lists for fixed cardinality).
inline std::vector<IndexSet> closed_proper_sets(const SupportPattern& p) {
    const IndexSet full = (1u << p.dim()) - 1;
    std::vector<IndexSet> out;
    for (IndexSet s = 1; s < full; ++s)
        if (is_closed(p, s)) out.push_back(s);
    return out;
}

struct IdealReport {
    std::vector<IndexSet> all_closed_proper_sets;
    std::vector<IndexSet> maximal_basic_ideals;  // the closed sets of largest cardinality
    bool is_basic_simple = false;
    /// Pattern-level ideal tests are basis-independent only for perfect
    /// algebras; callers should check this flag when the input is not known
    /// to be perfect.
    bool basis_independent = true;
};

inline IdealReport maximal_basic_ideals(const SupportPattern& p) {
    IdealReport r;
    r.all_closed_proper_sets = closed_proper_sets(p);
    int best = 0;
    for (IndexSet s : r.all_closed_proper_sets) best = std::max(best, set_size(s));
    for (IndexSet s : r.all_closed_proper_sets)
        if (set_size(s) == best) r.maximal_basic_ideals.push_back(s);
    r.is_basic_simple = r.all_closed_proper_sets.empty();
    return r;
}

/// The ideal generated by each single basis vector is everything.
inline bool is_basic_simple(const SupportPattern& p) {
    const IndexSet full = (1u << p.dim()) - 1;
    for (int i = 0; i < p.dim(); ++i)
        if ((closure(p, 1u << i)) != full) return false;
    return true;
}

inline bool is_irreducible_pattern(const SupportPattern& p) {
    return is_connected(associated_graph(p));
}

/// Witness for Condition (3,2,3): two distinct closed 3-sets whose
/// intersection is a closed 2-set.
inline std::optional<std::pair<IndexSet, IndexSet>> condition_323_witness(const SupportPattern& p) {
    auto closed = closed_proper_sets(p);
    std::vector<IndexSet> threes;
    for (IndexSet s : closed)
        if (set_size(s) == 3) threes.push_back(s);
    for (std::size_t a = 0; a < threes.size(); ++a)
        for (std::size_t b = a + 1; b < threes.size(); ++b) {
            IndexSet both = threes[a] & threes[b];
            if (set_size(both) == 2 && is_closed(p, both))
                return std::make_pair(threes[a], threes[b]);
        }
    return std::nullopt;
}

/// For a pattern whose last index spans the one-dimensional quotient (last row
/// zero except the corner), returns an index i among the first n-1 with no
/// in-edge from any other index and a first-descendant count different from
/// that of the last index. Such an i is exactly what makes the zero counts of
/// the diagonal blocks non-invariant.
inline std::optional<int> noninvariance_witness(const SupportPattern& p) {
    const int n = p.dim();
    for (int i = 0; i < n - 1; ++i)
        if (p.get(n - 1, i)) throw std::invalid_argument("noninvariance_witness: last row not zero");
    if (!p.get(n - 1, n - 1)) throw std::invalid_argument("noninvariance_witness: zero corner");
    for (int i = 0; i < n - 1; ++i) {
        bool received = false;
        for (int j = 0; j < n && !received; ++j)
            if (j != i && p.get(i, j)) received = true;
        if (received) continue;
        if (set_size(first_descendants(p, i)) != set_size(first_descendants(p, n - 1)))
            return i;
    }
    return std::nullopt;
}

} // namespace evoalg

#endif
