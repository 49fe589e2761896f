#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace cauchydet {

/// The symbolic value of t (the indeterminate itself).
inline RationalFunction symbolic_t() { return RationalFunction::variable(); }

/// M(s, t) with M_{i,l} = 1 / ((2l)^2 - t^2 (2i-1)^2), 1 <= i, l <= s.
/// Throws SingularEntry listing every (i, l) whose denominator vanishes.
template <ExactField F>
Matrix<F> build_matrix(std::size_t s, const F& t) {
    if (s < 1)
        throw DomainError("matrix size must be at least 1");
    const F t2 = t * t;
    Matrix<F> m(s, s);
    std::vector<SingularEntry::Index> bad;
    for (std::size_t i = 1; i <= s; ++i) {
        const long odd = 2 * static_cast<long>(i) - 1;
        const F scaled = t2 * F(odd * odd);
        for (std::size_t l = 1; l <= s; ++l) {
            const long even = 2 * static_cast<long>(l);
            F den = F(even * even) - scaled;
            if (den.is_zero())
                bad.emplace_back(i, l);
            else
                m.at(i, l) = den.inverse();
        }
    }
    if (!bad.empty())
        throw SingularEntry(std::move(bad), "(2l)^2 - t^2 (2i-1)^2 = 0 at t = " + t.to_string());
    return m;
}

} // namespace cauchydet
