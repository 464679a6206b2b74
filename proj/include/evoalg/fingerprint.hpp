#ifndef EVOALG_FINGERPRINT_HPP
#define EVOALG_FINGERPRINT_HPP

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "pattern.hpp"

namespace evoalg {

/// Relabeling-invariant tuple separating non-isomorphic pattern families:
/// total zero count, diagonal zero count, sorted (out, in) degree pairs, and
/// the canonical form of the associated graph.
struct Fingerprint {
    int zero_count = 0;
    int diag_zero_count = 0;
    std::vector<std::pair<int, int>> degree_multiset;
    DirectedGraph graph_class;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.zero_count == b.zero_count && a.diag_zero_count == b.diag_zero_count &&
               a.degree_multiset == b.degree_multiset && a.graph_class == b.graph_class;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
    friend bool operator<(const Fingerprint& a, const Fingerprint& b) {
        return std::tie(a.zero_count, a.diag_zero_count, a.degree_multiset, a.graph_class) <
               std::tie(b.zero_count, b.diag_zero_count, b.degree_multiset, b.graph_class);
    }

    std::string str() const {
        std::string s = "zeros=" + std::to_string(zero_count) +
                        " diag_zeros=" + std::to_string(diag_zero_count) + " degrees=";
        for (auto [o, i] : degree_multiset)
            s += "(" + std::to_string(o) + "," + std::to_string(i) + ")";
        return s;
    }
};

inline Fingerprint fingerprint(const SupportPattern& p) {
    Fingerprint fp;
    fp.zero_count = p.zero_count();
    fp.diag_zero_count = p.diag_zero_count();
    DirectedGraph g = associated_graph(p);
    fp.degree_multiset = degree_multiset(g);
    fp.graph_class = canonical_graph(g);
    return fp;
}

} // namespace evoalg

#endif
