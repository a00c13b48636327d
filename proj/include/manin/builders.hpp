#pragma once

#include "manin/lie.hpp"
#include "manin/multivector.hpp"

namespace manin {
namespace builders {

/// sl2 in the basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
    return from_sparse_brackets(3,
                                {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}},
                                {"h", "e", "f"});
}

/// Heisenberg algebra in the basis (x, y, z): [x,y] = z.
inline LieAlgebra heisenberg3() {
    return from_sparse_brackets(3, {{0, 1, 2, 1}}, {"x", "y", "z"});
}

/// Affine line algebra in the basis (x, y): [x,y] = y.
inline LieAlgebra aff1() {
    return from_sparse_brackets(2, {{0, 1, 1, 1}}, {"x", "y"});
}

/// The trace form of the defining sl2 representation in the (h, e, f)
/// basis; invariant and nondegenerate.
inline Matrix sl2_invariant_form() {
    return Matrix{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}};
}

inline Multivector sl2_ef_bivector() { return Multivector::wedge_pair(3, 1, 2); }

}  // namespace builders
}  // namespace manin
