#ifndef EVOALG_CLASSIFY_HPP
#define EVOALG_CLASSIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fingerprint.hpp"
#include "ideals.hpp"
#include "pattern.hpp"

namespace evoalg {

// ---------------------------------------------------------------------------
// base pattern sets
// ---------------------------------------------------------------------------

/// All generically perfect 2x2 patterns (7 of them).
inline std::vector<SupportPattern> dim2_perfect_patterns() {
    PatternConstraints cs;
    cs.n = 2;
    cs.forced_nonzero = SupportPattern(2);
    cs.forced_zero = SupportPattern(2);
    cs.filter = [](const SupportPattern& p) { return generically_perfect(p); };
    return enumerate_patterns(cs);
}

/// The four shapes of simple 2-dimensional algebras (generically perfect and
/// strongly connected).
inline std::vector<SupportPattern> dim2_simple_patterns() {
    PatternConstraints cs;
    cs.n = 2;
    cs.filter = [](const SupportPattern& p) {
        return generically_perfect(p) && is_strongly_connected(associated_graph(p));
    };
    return enumerate_patterns(cs);
}

/// Simple 3-dimensional pattern shapes (138 of them).
inline std::vector<SupportPattern> dim3_simple_patterns() {
    PatternConstraints cs;
    cs.n = 3;
    cs.filter = [](const SupportPattern& p) {
        return generically_perfect(p) && is_strongly_connected(associated_graph(p));
    };
    return enumerate_patterns(cs);
}

/// Generically perfect 3x3 patterns with no closed 2-subset.
inline std::vector<SupportPattern> dim3_no_two_basic_patterns() {
    PatternConstraints cs;
    cs.n = 3;
    cs.filter = [](const SupportPattern& p) {
        if (!generically_perfect(p)) return false;
        for (IndexSet s : closed_proper_sets(p))
            if (set_size(s) == 2) return false;
        return true;
    };
    return enumerate_patterns(cs);
}

// ---------------------------------------------------------------------------
// family sets
// ---------------------------------------------------------------------------

struct Family {
    SupportPattern rep;   // canonical under the case group
    Fingerprint fp;
};

struct FamilySet {
    std::string case_label;
    PermGroup group;
    std::vector<Family> families;

    std::size_t count() const { return families.size(); }
};

inline FamilySet make_family_set(const std::string& label, const PermGroup& g,
                                 const std::vector<SupportPattern>& pats) {
    std::set<SupportPattern> reps;
    for (const SupportPattern& p : pats) reps.insert(canonical_pattern(p, g));
    FamilySet fs{label, g, {}};
    for (const SupportPattern& r : reps) fs.families.push_back({r, fingerprint(r)});
    return fs;
}

/// Orbit classification of the generically perfect 2x2 shapes (5 families).
inline FamilySet classify_dim2_perfect() {
    return make_family_set("2", PermGroup::symmetric(2), dim2_perfect_patterns());
}

/// Orbit classification of the simple 3-dimensional shapes (28 families).
inline FamilySet classify_dim3_simple() {
    return make_family_set("3-simple", PermGroup::symmetric(3), dim3_simple_patterns());
}

// ---------------------------------------------------------------------------
// section 3 cases: one-dimensional maximal basic ideal
// ---------------------------------------------------------------------------

namespace detail {

inline SupportPattern embed_corner(const SupportPattern& block, int n, int at,
                                   const SupportPattern& frame) {
    SupportPattern p = frame;
    for (int r = 0; r < block.dim(); ++r)
        for (int c = 0; c < block.dim(); ++c)
            if (block.get(r, c)) p.set(at + r, at + c, true);
    return p;
}

inline PermGroup two_element(int n, const std::string& cycle) {
    return PermGroup::generated(n, {Perm::from_cycles(cycle, n)});
}

} // namespace detail

/// Cases with a 1-dimensional maximal basic ideal, keyed by the zero count of
/// the normalized first-row tail: "3.1" two zeros, "3.2" one zero, "3.3" none.
inline FamilySet classify_one_dim_case(const std::string& label) {
    std::vector<bool> urow;
    PermGroup g(4);
    if (label == "3.1") { urow = {true, false, false}; g = detail::two_element(4, "(3,4)"); }
    else if (label == "3.2") { urow = {false, true, true}; g = detail::two_element(4, "(3,4)"); }
    else if (label == "3.3") { urow = {true, true, true}; g = PermGroup::generated(4, {Perm::from_cycles("(2,3)", 4), Perm::from_cycles("(3,4)", 4)}); }
    else throw std::invalid_argument("classify_one_dim_case: " + label);

    SupportPattern frame(4);
    frame.set(0, 0, true);
    for (int c = 0; c < 3; ++c)
        if (urow[c]) frame.set(0, c + 1, true);
    std::vector<SupportPattern> pats;
    for (const SupportPattern& y : dim3_simple_patterns())
        pats.push_back(detail::embed_corner(y, 4, 1, frame));
    return make_family_set(label, g, pats);
}

// ---------------------------------------------------------------------------
// section 4 cases: two-dimensional maximal basic ideal
// ---------------------------------------------------------------------------

/// The five normalized shapes of a perfect 2x2 diagonal block, in the fixed
/// case order 4.1 .. 4.5.
inline std::vector<SupportPattern> dim2_case_blocks() {
    auto mk = [](std::initializer_list<int> bits) {
        SupportPattern p(2);
        int k = 0;
        for (int b : bits) {
            if (b) p.set(k / 2, k % 2, true);
            ++k;
        }
        return p;
    };
    return {mk({1, 0, 0, 1}), mk({1, 0, 1, 1}), mk({1, 1, 1, 1}),
            mk({0, 1, 1, 0}), mk({0, 1, 1, 1})};
}

/// Block relabelings (inside {1,2} and {3,4}) that keep the given 2x2 top
/// block shape.
inline PermGroup w_block_stabilizer(const SupportPattern& w) {
    std::vector<Perm> keep;
    PermGroup blocks = block_preserving_group(4, 2);
    for (const Perm& s : blocks.elements()) {
        bool ok = true;
        for (int r = 0; r < 2 && ok; ++r)
            for (int c = 0; c < 2 && ok; ++c)
                if (w.get(s(r), s(c)) != w.get(r, c)) ok = false;
        if (ok) keep.push_back(s);
    }
    return PermGroup::generated(4, keep);
}

/// Case "4.<w>.<u>": top block the w-th shape of the case order, off-diagonal
/// block with 4-u nonzero entries, bottom block any simple 2x2 shape.
inline FamilySet classify_two_dim_case(int wcase, int ucase) {
    if (wcase < 1 || wcase > 5 || ucase < 1 || ucase > 4)
        throw std::invalid_argument("classify_two_dim_case: bad case");
    const SupportPattern w = dim2_case_blocks()[wcase - 1];
    const int u_nonzero = ucase;  // sub-case u has 4-u zeros in the off-diagonal block
    PermGroup g = w_block_stabilizer(w);
    std::vector<SupportPattern> pats;
    for (int umask = 0; umask < 16; ++umask) {
        if (__builtin_popcount(umask) != u_nonzero) continue;
        for (const SupportPattern& y : dim2_simple_patterns()) {
            SupportPattern p(4);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    if (w.get(r, c)) p.set(r, c, true);
                    if (y.get(r, c)) p.set(r + 2, c + 2, true);
                    if ((umask >> (r * 2 + c)) & 1) p.set(r, c + 2, true);
                }
            pats.push_back(p);
        }
    }
    std::string label = "4." + std::to_string(wcase) + "." + std::to_string(ucase);
    return make_family_set(label, g, pats);
}

// ---------------------------------------------------------------------------
// section 5: three-dimensional maximal basic ideal
// ---------------------------------------------------------------------------

enum class GridLabel { Reducible, Irreducible, IrreducibleStar };

inline char grid_label_char(GridLabel l) {
    switch (l) {
        case GridLabel::Reducible: return 'R';
        case GridLabel::Irreducible: return 'I';
        default: return 'S';
    }
}

/// Assemble the 4x4 pattern (w u; 0 1) from a 3x3 block and a 3-bit column.
inline SupportPattern corner_form_pattern(const SupportPattern& w, int ucol) {
    SupportPattern p(4);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c)
            if (w.get(r, c)) p.set(r, c, true);
        if ((ucol >> r) & 1) p.set(r, 3, true);
    }
    p.set(3, 3, true);
    return p;
}

/// Grid cell label: reducible when the associated graph is disconnected,
/// starred when irreducible without a (3,2,3) witness.
inline GridLabel label_case5_cell(const SupportPattern& w, int ucol) {
    if (w.dim() != 3) throw std::invalid_argument("label_case5_cell: block must be 3x3");
    if (w.get(2, 0) || w.get(2, 1))
        throw std::invalid_argument("label_case5_cell: third row must be (0,0,*)");
    SupportPattern p = corner_form_pattern(w, ucol);
    if (!is_irreducible_pattern(p)) return GridLabel::Reducible;
    return condition_323_witness(p) ? GridLabel::Irreducible : GridLabel::IrreducibleStar;
}

/// The 28 diagonal blocks of the grid: 3x3 generically perfect patterns whose
/// first two indices form a closed pair (third row (0,0,*)).
inline std::vector<SupportPattern> grid_block_patterns() {
    PatternConstraints cs;
    cs.n = 3;
    SupportPattern fz(3);
    fz.set(2, 0, true);
    fz.set(2, 1, true);
    cs.forced_zero = fz;
    cs.filter = [](const SupportPattern& p) { return generically_perfect(p); };
    return enumerate_patterns(cs);
}

/// Column order of the grids: the seven nonzero 3-bit columns.
inline const std::vector<int>& grid_ucols() {
    static const std::vector<int> cols = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
    return cols;
}

struct GridCell {
    SupportPattern w;
    int ucol;
    GridLabel label;
};

struct GridClassification {
    std::vector<GridCell> cells;
    int reducible = 0, irreducible = 0, starred = 0;
};

inline GridClassification classify_grid() {
    GridClassification g;
    for (const SupportPattern& w : grid_block_patterns())
        for (int u : grid_ucols()) {
            GridLabel l = label_case5_cell(w, u);
            g.cells.push_back({w, u, l});
            if (l == GridLabel::Reducible) ++g.reducible;
            else if (l == GridLabel::Irreducible) ++g.irreducible;
            else ++g.starred;
        }
    return g;
}

struct TypeEntry {
    SupportPattern pattern;
    Fingerprint fp;
    int type = 0;  // 1-based index into the distinct fingerprints, first-seen order
};

struct TypeClassification {
    std::vector<TypeEntry> entries;
    int distinct_types = 0;
};

/// The case with Condition (3,2,3): the unstarred irreducible grid cells,
/// grouped by fingerprint.
inline TypeClassification classify_condition_323() {
    TypeClassification tc;
    std::vector<Fingerprint> seen;
    for (const GridCell& c : classify_grid().cells) {
        if (c.label != GridLabel::Irreducible) continue;
        SupportPattern p = corner_form_pattern(c.w, c.ucol);
        TypeEntry e{p, fingerprint(p), 0};
        int idx = 0;
        for (std::size_t k = 0; k < seen.size(); ++k)
            if (seen[k] == e.fp) { idx = static_cast<int>(k) + 1; break; }
        if (idx == 0) {
            seen.push_back(e.fp);
            idx = static_cast<int>(seen.size());
        }
        e.type = idx;
        tc.entries.push_back(e);
    }
    tc.distinct_types = static_cast<int>(seen.size());
    return tc;
}

/// Cases without any 2-basic ideal inside the 3-basic ideal, keyed by the
/// nonzero count of the last column: "5.2.1" one, "5.2.2" two, "5.2.3" three.
inline FamilySet classify_no_two_basic_case(const std::string& label) {
    int ucol;
    PermGroup g(4);
    if (label == "5.2.1") { ucol = 0b100; g = detail::two_element(4, "(1,2)"); }
    else if (label == "5.2.2") { ucol = 0b011; g = detail::two_element(4, "(1,2)"); }
    else if (label == "5.2.3") { ucol = 0b111; g = PermGroup::generated(4, {Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(2,3)", 4)}); }
    else throw std::invalid_argument("classify_no_two_basic_case: " + label);
    std::vector<SupportPattern> pats;
    for (const SupportPattern& w : dim3_no_two_basic_patterns())
        pats.push_back(corner_form_pattern(w, ucol));
    return make_family_set(label, g, pats);
}

// ---------------------------------------------------------------------------
// reducible four-dimensional algebras: direct sums of lower classifications
// ---------------------------------------------------------------------------

/// Perfect 3x3 pattern shapes up to relabeling, used for the 1+3 splits.
inline FamilySet classify_dim3_perfect() {
    PatternConstraints cs;
    cs.n = 3;
    cs.filter = [](const SupportPattern& p) { return generically_perfect(p); };
    return make_family_set("3-perfect", PermGroup::symmetric(3), enumerate_patterns(cs));
}

/// Reducible perfect non-simple families: direct sums 1+3 and 2+2 of the
/// lower-dimensional classifications, canonicalized in S_4.
inline FamilySet classify_reducible() {
    std::vector<SupportPattern> pats;
    SupportPattern frame(4);
    frame.set(0, 0, true);
    for (const Family& f : classify_dim3_perfect().families)
        pats.push_back(detail::embed_corner(f.rep, 4, 1, frame));
    for (const Family& a : classify_dim2_perfect().families)
        for (const Family& b : classify_dim2_perfect().families) {
            SupportPattern p(4);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    if (a.rep.get(r, c)) p.set(r, c, true);
                    if (b.rep.get(r, c)) p.set(r + 2, c + 2, true);
                }
            pats.push_back(p);
        }
    return make_family_set("reducible", PermGroup::symmetric(4), pats);
}

// ---------------------------------------------------------------------------
// case registry
// ---------------------------------------------------------------------------

struct CaseInfo {
    std::string label;
    std::optional<int> stated_count;  // the count the classification itself states, when any
};

inline const std::vector<CaseInfo>& case_registry() {
    static const std::vector<CaseInfo> reg = [] {
        std::vector<CaseInfo> r;
        r.push_back({"2", 5});
        for (const char* c : {"3.1", "3.2", "3.3"}) r.push_back({c, std::nullopt});
        const int counts[5][4] = {{4, 10, 4, 3}, {8, 14, 8, 3}, {4, 10, 4, 3},
                                  {4, 10, 4, 3}, {8, 14, 8, 3}};
        for (int w = 1; w <= 5; ++w)
            for (int u = 1; u <= 4; ++u)
                r.push_back({"4." + std::to_string(w) + "." + std::to_string(u), counts[w - 1][u - 1]});
        r.push_back({"5.1.1", 24});
        for (const char* c : {"5.2.1", "5.2.2", "5.2.3"}) r.push_back({c, std::nullopt});
        r.push_back({"grid", 93});
        r.push_back({"reducible", std::nullopt});
        return r;
    }();
    return reg;
}

inline std::optional<CaseInfo> find_case(const std::string& label) {
    for (const CaseInfo& c : case_registry())
        if (c.label == label) return c;
    return std::nullopt;
}

/// Family-set cases only; "5.1.1", "grid" and "5.2" have dedicated entry points.
inline FamilySet classify_case(const std::string& label) {
    if (label == "2") return classify_dim2_perfect();
    if (label.rfind("3.", 0) == 0 && label.size() == 3) return classify_one_dim_case(label);
    if (label.rfind("4.", 0) == 0 && label.size() == 5)
        return classify_two_dim_case(label[2] - '0', label[4] - '0');
    if (label.rfind("5.2.", 0) == 0) return classify_no_two_basic_case(label);
    if (label == "reducible") return classify_reducible();
    throw std::invalid_argument("classify_case: unknown or non-family case '" + label + "'");
}

} // namespace evoalg

#endif
