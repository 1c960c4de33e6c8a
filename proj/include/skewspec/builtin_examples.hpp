#pragma once

#include "skewspec/int_matrix.hpp"
#include "skewspec/oriented_graph.hpp"

namespace skewspec::builtin {

// Reference pair on 7 vertices: a controllable F_7 member whose walk
// determinant is -14392 = (-1) * 2^3 * 7 * 257, together with a generalized
// cospectral non-isomorphic mate. The mate classes realize certificate
// levels 7, 1799 and 257.
const IntMatrix& example1_skew_d();
const IntMatrix& example1_skew_c();
const OrientedGraph& example1_d();
const OrientedGraph& example1_c();

// Reference graph on 6 vertices with walk determinant 1528 = 2^3 * 191: the
// reduced part is an odd prime, so the transpose criterion applies and the
// transpose is the unique mate class (certificate level 191).
const IntMatrix& example2_skew_d();
const OrientedGraph& example2_d();

}  // namespace skewspec::builtin
