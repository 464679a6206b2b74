// Build a small algebra in code and print its structural report.

#include <evoalg/algebra.hpp>
#include <evoalg/isotest.hpp>

#include <iostream>

using namespace evoalg;

int main() {
    Rationals q;
    // squares: e1^2 = e2, e2^2 = e1, e3^2 = e1+e2+e3, e4^2 = e2+e4
    EvolutionAlgebra<Rationals> a(q, 4);
    int entries[4][4] = {{0, 1, 1, 0}, {1, 0, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a.at(r, c) = Rational(entries[r][c]);

    std::cout << "perfect: " << (is_perfect(a) ? "yes" : "no") << "\n";
    std::cout << "simple: " << (is_simple(a) ? "yes" : "no") << "\n";

    SupportPattern p = support(a);
    IdealReport rep = maximal_basic_ideals(p);
    std::cout << "maximal basic ideals:";
    for (IndexSet s : rep.maximal_basic_ideals) {
        std::cout << " {";
        for (int i : set_elements(s)) std::cout << " " << i + 1;
        std::cout << " }";
    }
    std::cout << "\n";

    if (auto w = condition_323_witness(p))
        std::cout << "condition (3,2,3) holds\n";

    // change basis by swapping the last two vectors and rescaling one of them
    MonomialMap<Rationals> m{Perm::from_cycles("(3,4)", 4), {Rational(1), Rational(1), Rational(2), Rational(1)}};
    auto b = apply_monomial(m, a);
    std::cout << "zero count preserved: " << (support(b).zero_count() == p.zero_count() ? "yes" : "no")
              << "\n";
    auto found = find_isomorphism(a, b);
    std::cout << "oracle recovers a map: " << (found ? "yes" : "no") << "\n";
    return 0;
}
