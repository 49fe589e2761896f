// Builds M(3, t) with t kept symbolic, factors it by elimination and compares
// the result against the closed-form L and U.

#include <iostream>

#include <cauchydet/cauchydet.hpp>

int main() {
    using namespace cauchydet;

    const auto t = symbolic_t();
    const auto m = build_matrix(3, t);
    const auto lu = lu_doolittle(m);

    std::cout << "M = " << m.to_string() << "\n\n";
    std::cout << "L = " << lu.L.to_string() << "\n\n";
    std::cout << "U = " << lu.U.to_string() << "\n\n";

    const bool same = lu.L == build_L(3, t) && lu.U == build_U(3, t);
    std::cout << "closed forms " << (same ? "match" : "do not match") << " the elimination factors\n";
    std::cout << "D_3(t) = " << det_closed(3, t) << "\n";
    std::cout << "D_3(1) = " << det_closed(3, Rational(1)) << "\n";
    return same ? 0 : 1;
}
