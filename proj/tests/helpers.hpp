#pragma once

#include <selim/matrix.hpp>

#include <cstdint>
#include <random>

namespace selim::test {

inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rational_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return Rational(static_cast<long>(rand_int(rng, lo, hi)));
}

inline QMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                 std::int64_t hi) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rand_rational_int(rng, lo, hi);
    return m;
}

} // namespace selim::test
