#include "skewspec/builtin_examples.hpp"

#include "skewspec/spectral.hpp"

namespace skewspec::builtin {

const IntMatrix& example1_skew_d() {
    static const IntMatrix s = IntMatrix::from_rows({
        {0, 1, 1, -1, 0, 0, 0},
        {-1, 0, 0, 0, 0, 0, 0},
        {-1, 0, 0, 1, 1, 1, 0},
        {1, 0, -1, 0, 1, 0, 1},
        {0, 0, -1, -1, 0, 1, -1},
        {0, 0, -1, 0, -1, 0, 0},
        {0, 0, 0, -1, 1, 0, 0},
    });
    return s;
}

const IntMatrix& example1_skew_c() {
    static const IntMatrix s = IntMatrix::from_rows({
        {0, 1, 1, -1, 0, 0, 0},
        {-1, 0, 1, 0, 0, 0, -1},
        {-1, -1, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, -1, -1, 0},
        {0, 0, 0, 1, 0, 1, 1},
        {0, 0, 0, 1, -1, 0, -1},
        {0, 1, 0, 0, -1, 1, 0},
    });
    return s;
}

const IntMatrix& example2_skew_d() {
    static const IntMatrix s = IntMatrix::from_rows({
        {0, 1, -1, -1, 0, 0},
        {-1, 0, 0, 0, 0, 0},
        {1, 0, 0, -1, -1, 0},
        {1, 0, 1, 0, -1, -1},
        {0, 0, 1, 1, 0, 0},
        {0, 0, 0, 1, 0, 0},
    });
    return s;
}

const OrientedGraph& example1_d() {
    static const OrientedGraph g = graph_from_skew(example1_skew_d());
    return g;
}

const OrientedGraph& example1_c() {
    static const OrientedGraph g = graph_from_skew(example1_skew_c());
    return g;
}

const OrientedGraph& example2_d() {
    static const OrientedGraph g = graph_from_skew(example2_skew_d());
    return g;
}

}  // namespace skewspec::builtin
