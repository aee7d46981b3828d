#pragma once

// The named modules of the D4 counterexample. Vertex 0 is the center "1",
// vertices 1..3 are the leaves "2".."4"; "ak" acts leaf -> center and "ak*"
// center -> leaf.

#include "quiver.hpp"

#include <string>

namespace brickyard::d4 {

namespace detail {
inline void set_entry(const Algebra& A, Representation& R, const std::string& arrow, std::size_t row, std::size_t col,
                      std::int64_t value) {
    R.maps[A.arrow_index(arrow)](row, col) = A.field.reduce(value);
}
} // namespace detail

/// 1 over 3
inline Representation M(const Algebra& A) {
    auto R = blank_rep(A, {1, 0, 1, 0});
    detail::set_entry(A, R, "a3*", 0, 0, 1);
    return R;
}

/// 1 over 2
inline Representation N(const Algebra& A) {
    auto R = blank_rep(A, {1, 1, 0, 0});
    detail::set_entry(A, R, "a2*", 0, 0, 1);
    return R;
}

/// 2 over 1 over 4
inline Representation N_prime(const Algebra& A) {
    auto R = blank_rep(A, {1, 1, 0, 1});
    detail::set_entry(A, R, "a2", 0, 0, 1);
    detail::set_entry(A, R, "a4*", 0, 0, 1);
    return R;
}

/// 1 over 23 over 1 over 4, center basis (x, y) with x on top.
inline Representation E(const Algebra& A) {
    auto R = blank_rep(A, {2, 1, 1, 1});
    detail::set_entry(A, R, "a2*", 0, 0, 1);
    detail::set_entry(A, R, "a3*", 0, 0, 1);
    detail::set_entry(A, R, "a2", 1, 0, 1);
    detail::set_entry(A, R, "a3", 1, 0, -1);
    detail::set_entry(A, R, "a4*", 0, 1, 1);
    return R;
}

/// 1 over 23
inline Representation one_over_23(const Algebra& A) {
    auto R = blank_rep(A, {1, 1, 1, 0});
    detail::set_entry(A, R, "a2*", 0, 0, 1);
    detail::set_entry(A, R, "a3*", 0, 0, 1);
    return R;
}

} // namespace brickyard::d4
