#ifndef EVOALG_PATTERN_HPP
#define EVOALG_PATTERN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace evoalg {

/// Zero/nonzero shape of an n x n structure matrix, n <= 8.
///
/// Bit (r, c) set means the structure constant in row r, column c is nonzero.
/// Row r, column c follow the structure-matrix orientation: column i carries
/// the coordinates of the i-th squared basis vector.
class SupportPattern {
public:
    SupportPattern() : n_(0), bits_(0) {}
    SupportPattern(int n, std::uint64_t bits) : n_(n), bits_(bits) {
        if (n < 0 || n > 8) throw std::invalid_argument("SupportPattern: need 0 <= n <= 8");
    }
    explicit SupportPattern(int n) : SupportPattern(n, 0) {}

    int dim() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    bool get(int r, int c) const { return (bits_ >> (r * n_ + c)) & 1u; }
    void set(int r, int c, bool v) {
        std::uint64_t m = std::uint64_t(1) << (r * n_ + c);
        bits_ = v ? (bits_ | m) : (bits_ & ~m);
    }

    int count() const { return __builtin_popcountll(bits_); }
    int zero_count() const { return n_ * n_ - count(); }
    int diag_zero_count() const {
        int z = 0;
        for (int i = 0; i < n_; ++i)
            if (!get(i, i)) ++z;
        return z;
    }

    /// Column support as a bitmask over rows.
    std::uint32_t column(int c) const {
        std::uint32_t m = 0;
        for (int r = 0; r < n_; ++r)
            if (get(r, c)) m |= 1u << r;
        return m;
    }
    std::uint32_t row(int r) const {
        std::uint32_t m = 0;
        for (int c = 0; c < n_; ++c)
            if (get(r, c)) m |= 1u << c;
        return m;
    }

    friend bool operator==(const SupportPattern& a, const SupportPattern& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator<(const SupportPattern& a, const SupportPattern& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
    }

    std::string str() const {
        std::string s;
        for (int r = 0; r < n_; ++r) {
            for (int c = 0; c < n_; ++c) s += get(r, c) ? '*' : '0';
            s += '\n';
        }
        return s;
    }

private:
    int n_;
    std::uint64_t bits_;
};

/// Relabeling action: result(j, i) = p(sigma(j), sigma(i)).
inline SupportPattern permute_pattern(const Perm& sigma, const SupportPattern& p) {
    SupportPattern q(p.dim());
    for (int j = 0; j < p.dim(); ++j)
        for (int i = 0; i < p.dim(); ++i)
            if (p.get(sigma(j), sigma(i))) q.set(j, i, true);
    return q;
}

/// Lexicographically minimal row-major pattern over the orbit under g.
inline SupportPattern canonical_pattern(const SupportPattern& p, const PermGroup& g) {
    SupportPattern best = p;
    for (const Perm& s : g.elements()) {
        SupportPattern q = permute_pattern(s, p);
        if (q < best) best = q;
    }
    return best;
}

/// True iff some permutation tau has p(tau(i), i) nonzero for all i, i.e. the
/// determinant is a nonzero polynomial when the nonzero cells are independent
/// indeterminates. Decided by bipartite augmenting-path matching.
inline bool generically_perfect(const SupportPattern& p) {
    const int n = p.dim();
    if (n == 0) return true;
    std::vector<int> match_row(n, -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int c, std::vector<bool>& seen) {
        for (int r = 0; r < n; ++r) {
            if (p.get(r, c) && !seen[r]) {
                seen[r] = true;
                if (match_row[r] < 0 || augment(match_row[r], seen)) {
                    match_row[r] = c;
                    return true;
                }
            }
        }
        return false;
    };
    for (int c = 0; c < n; ++c) {
        std::vector<bool> seen(n, false);
        if (!augment(c, seen)) return false;
    }
    return true;
}

/// Constraints for pattern enumeration. Cells may be forced zero or forced
/// nonzero; remaining cells are free and enumerated by binary counting.
struct PatternConstraints {
    int n = 4;
    SupportPattern forced_nonzero;  // empty means unconstrained
    SupportPattern forced_zero;
    std::function<bool(const SupportPattern&)> filter;  // optional
};

/// Deterministic enumeration of all patterns compatible with the constraints.
inline std::vector<SupportPattern> enumerate_patterns(const PatternConstraints& cs) {
    const int n = cs.n;
    for (const SupportPattern* f : {&cs.forced_nonzero, &cs.forced_zero})
        if (f->dim() != 0 && f->dim() != n)
            throw std::invalid_argument("enumerate_patterns: constraint dimension mismatch");
    std::vector<int> free_cells;
    for (int idx = 0; idx < n * n; ++idx) {
        bool nz = (cs.forced_nonzero.bits() >> idx) & 1u;
        bool z = (cs.forced_zero.bits() >> idx) & 1u;
        if (nz && z) throw std::invalid_argument("enumerate_patterns: cell forced both ways");
        if (!nz && !z) free_cells.push_back(idx);
    }
    std::vector<SupportPattern> out;
    const std::uint64_t total = std::uint64_t(1) << free_cells.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        std::uint64_t bits = cs.forced_nonzero.bits();
        for (std::size_t k = 0; k < free_cells.size(); ++k)
            if ((m >> k) & 1u) bits |= std::uint64_t(1) << free_cells[k];
        SupportPattern p(n, bits);
        if (!cs.filter || cs.filter(p)) out.push_back(p);
    }
    return out;
}

/// Subgroup of S_n whose relabelings preserve a block split: indices
/// {0..m-1} and {m..n-1} are each stabilized setwise.
inline PermGroup block_preserving_group(int n, int m) {
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < m; ++i) {
        Perm t(n);
        std::vector<int> img(n);
        for (int k = 0; k < n; ++k) img[k] = k;
        std::swap(img[i], img[i + 1]);
        gens.push_back(Perm(img));
    }
    for (int i = m; i + 1 < n; ++i) {
        std::vector<int> img(n);
        for (int k = 0; k < n; ++k) img[k] = k;
        std::swap(img[i], img[i + 1]);
        gens.push_back(Perm(img));
    }
    return PermGroup::generated(n, gens);
}

/// The subgroup of block-preserving relabelings under which the pattern keeps
/// its normalized off-diagonal block: the lower-left block stays zero and the
/// upper-right block keeps its shape. A split of 0 or n imposes nothing and
/// yields all of S_n.
inline PermGroup allowed_permutations(const SupportPattern& p, int split) {
    const int n = p.dim();
    if (split <= 0 || split >= n) return PermGroup::symmetric(n);
    for (int j = split; j < n; ++j)
        for (int i = 0; i < split; ++i)
            if (p.get(j, i)) throw std::invalid_argument("allowed_permutations: pattern not in block form");
    PermGroup blocks = block_preserving_group(n, split);
    std::vector<Perm> keep;
    for (const Perm& s : blocks.elements()) {
        SupportPattern q = permute_pattern(s, p);
        bool ok = true;
        for (int j = 0; j < split && ok; ++j)
            for (int i = split; i < n && ok; ++i)
                if (q.get(j, i) != p.get(j, i)) ok = false;
        if (ok) keep.push_back(s);
    }
    return PermGroup::generated(n, keep);
}

} // namespace evoalg

#endif
