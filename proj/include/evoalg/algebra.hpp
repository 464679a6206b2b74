#ifndef EVOALG_ALGEBRA_HPP
#define EVOALG_ALGEBRA_HPP

#include <stdexcept>
#include <vector>

#include "ideals.hpp"
#include "matrix.hpp"
#include "pattern.hpp"
#include "perm.hpp"

namespace evoalg {

/// Finite-dimensional evolution algebra, fixed by its structure matrix: entry
/// (k, i) is the coefficient of the k-th basis vector in the square of the
/// i-th one.
template <class F>
class EvolutionAlgebra {
public:
    using Elem = typename F::Element;

    EvolutionAlgebra(const F& field, int dim)
        : mat_(field, dim, dim) {}
    explicit EvolutionAlgebra(Matrix<F> m) : mat_(std::move(m)) {
        if (mat_.rows() != mat_.cols()) throw std::invalid_argument("EvolutionAlgebra: matrix not square");
    }

    const F& field() const { return mat_.field(); }
    int dim() const { return mat_.rows(); }
    Matrix<F>& matrix() { return mat_; }
    const Matrix<F>& matrix() const { return mat_; }
    Elem& at(int k, int i) { return mat_.at(k, i); }
    const Elem& at(int k, int i) const { return mat_.at(k, i); }

    friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
        return a.mat_ == b.mat_;
    }

private:
    Matrix<F> mat_;
};

template <class F>
SupportPattern support(const EvolutionAlgebra<F>& a) {
    SupportPattern p(a.dim());
    for (int k = 0; k < a.dim(); ++k)
        for (int i = 0; i < a.dim(); ++i)
            if (!a.field().is_zero(a.at(k, i))) p.set(k, i, true);
    return p;
}

/// Product of two coordinate vectors. Distinct basis vectors multiply to
/// zero, so only the squares contribute: sum_i u_i v_i * (column i).
template <class F>
std::vector<typename F::Element> multiply(const EvolutionAlgebra<F>& a,
                                          const std::vector<typename F::Element>& u,
                                          const std::vector<typename F::Element>& v) {
    const F& f = a.field();
    const int n = a.dim();
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw std::invalid_argument("multiply: vector length mismatch");
    std::vector<typename F::Element> out(n, f.zero());
    for (int i = 0; i < n; ++i) {
        auto c = f.mul(u[i], v[i]);
        if (f.is_zero(c)) continue;
        for (int k = 0; k < n; ++k)
            out[k] = f.add(out[k], f.mul(c, a.at(k, i)));
    }
    return out;
}

/// Perfect means the algebra equals its own square; for finite dimension this
/// is an invertible structure matrix.
template <class F>
bool is_perfect(const EvolutionAlgebra<F>& a) {
    return !a.field().is_zero(determinant(a.matrix()));
}

/// Natural-basis change: a permutation of the basis combined with nonzero
/// scalings. These are the only natural-basis changes of a perfect evolution
/// algebra.
template <class F>
struct MonomialMap {
    Perm sigma;                              // index relabeling used by the action below
    std::vector<typename F::Element> scales; // one nonzero scale per index

    static MonomialMap identity(const F& field, int n) {
        return {Perm::identity(n), std::vector<typename F::Element>(n, field.one())};
    }

    /// The map written in tables as the matrix whose i-th column is the
    /// sigma(i)-th unit column. Under the action below that matrix acts
    /// through the inverse relabeling; this constructor pins that convention
    /// (the worked isomorphic pair in the regression tests fixes it).
    static MonomialMap table_map(const std::string& cycles, const F& field, int n) {
        return {Perm::from_cycles(cycles, n).inverse(),
                std::vector<typename F::Element>(n, field.one())};
    }
};

/// Action of a monomial basis change on a structure matrix:
/// result(j, i) = scale_i^2 / scale_j * m(sigma(j), sigma(i)).
template <class F>
EvolutionAlgebra<F> apply_monomial(const MonomialMap<F>& p, const EvolutionAlgebra<F>& a) {
    const F& f = a.field();
    const int n = a.dim();
    if (p.sigma.size() != n || static_cast<int>(p.scales.size()) != n)
        throw std::invalid_argument("apply_monomial: dimension mismatch");
    for (const auto& d : p.scales)
        if (f.is_zero(d)) throw std::invalid_argument("apply_monomial: zero scale");
    EvolutionAlgebra<F> out(f, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            auto v = a.at(p.sigma(j), p.sigma(i));
            if (f.is_zero(v)) continue;
            auto num = f.mul(f.mul(p.scales[i], p.scales[i]), v);
            out.at(j, i) = f.div(num, p.scales[j]);
        }
    return out;
}

template <class F>
MonomialMap<F> compose(const MonomialMap<F>& p, const MonomialMap<F>& q, const F& field) {
    // apply_monomial(compose(p, q), m) == apply_monomial(p, apply_monomial(q, m))
    const int n = p.sigma.size();
    MonomialMap<F> r{q.sigma * p.sigma, std::vector<typename F::Element>(n, field.one())};
    for (int i = 0; i < n; ++i)
        r.scales[i] = field.mul(q.scales[p.sigma(i)], p.scales[i]);
    return r;
}

template <class F>
struct BlockDecomposition {
    Matrix<F> w, u, l, y;
};

/// Split the structure matrix at index m into the four blocks
/// (w u; l y); callers inspect l for the zero-block condition.
template <class F>
BlockDecomposition<F> block_decompose(const EvolutionAlgebra<F>& a, int m) {
    const int n = a.dim();
    if (m < 1 || m >= n) throw std::out_of_range("block_decompose: split index");
    const F& f = a.field();
    BlockDecomposition<F> b{Matrix<F>(f, m, m), Matrix<F>(f, m, n - m),
                            Matrix<F>(f, n - m, m), Matrix<F>(f, n - m, n - m)};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r < m && c < m) b.w.at(r, c) = a.at(r, c);
            else if (r < m) b.u.at(r, c - m) = a.at(r, c);
            else if (c < m) b.l.at(r - m, c) = a.at(r, c);
            else b.y.at(r - m, c - m) = a.at(r, c);
        }
    return b;
}

/// Quotient by the basic ideal spanned by the indices in s: the structure
/// matrix restricted to the complementary rows and columns.
template <class F>
EvolutionAlgebra<F> quotient(const EvolutionAlgebra<F>& a, IndexSet s) {
    const int n = a.dim();
    const IndexSet full = (IndexSet(1) << n) - 1;
    if (s == 0) return a;
    if (s == full) throw std::invalid_argument("quotient: ideal is the whole index set");
    if (!is_closed(support(a), s)) throw std::invalid_argument("quotient: index set not closed");
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!((s >> i) & 1u)) keep.push_back(i);
    EvolutionAlgebra<F> q(a.field(), static_cast<int>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c)
            q.at(static_cast<int>(r), static_cast<int>(c)) = a.at(keep[r], keep[c]);
    return q;
}

/// Simple means perfect with a strongly connected associated graph.
template <class F>
bool is_simple(const EvolutionAlgebra<F>& a) {
    return is_perfect(a) && is_strongly_connected(associated_graph(support(a)));
}

/// Ideal report for an algebra. Index-set tests are basis-independent only
/// for perfect algebras; the flag records whether that hypothesis holds.
template <class F>
IdealReport maximal_basic_ideals(const EvolutionAlgebra<F>& a) {
    IdealReport r = maximal_basic_ideals(support(a));
    r.basis_independent = is_perfect(a);
    return r;
}

enum class Irreducibility { Reducible, Irreducible, UnknownNotPerfect };

/// Connectivity of the associated graph decides irreducibility for perfect
/// algebras; for non-perfect input the criterion is unproven and the result
/// says so.
template <class F>
Irreducibility irreducibility(const EvolutionAlgebra<F>& a) {
    bool connected = is_connected(associated_graph(support(a)));
    if (!is_perfect(a)) return Irreducibility::UnknownNotPerfect;
    return connected ? Irreducibility::Irreducible : Irreducibility::Reducible;
}

} // namespace evoalg

#endif
