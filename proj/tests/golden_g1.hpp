#pragma once

/// Reference 16x16 matrices for the 4-vertex weighted graph G1 used across
/// the test suite. G1 is complete and undirected with weights
/// w(1,2)=30, w(1,3)=42, w(1,4)=12, w(2,3)=20, w(2,4)=34, w(3,4)=35.
namespace golden {

inline constexpr int kN = 4;
inline constexpr int kDim = 16;

inline constexpr double kWeights[4][4] = {
    {0, 30, 42, 12},
    {30, 0, 20, 34},
    {42, 20, 0, 35},
    {12, 34, 35, 0},
};

/// Vertex one-hot term: block-diagonal, each block has -1 on the diagonal
/// and 2 on the strict upper triangle. Offset n = 4.
inline constexpr double kMvp[16][16] = {
    {-1, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -1, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 2, 2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
};

/// Position one-hot term: -1 on the diagonal, 2 at matching positions of
/// every vertex pair u < v. Offset n = 4.
inline constexpr double kMpv[16][16] = {
    {-1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0},
    {0, -1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0},
    {0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0},
    {0, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2},
    {0, 0, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
};

/// Missing-edge term for the complete graph G1: only the folded diagonal
/// blocks remain (cells (p, p+1) plus the wrap folded to (1, n)).
inline constexpr double kMec[16][16] = {
    {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

/// Hamiltonian-cycle matrix with c1 = 1: sum of the three terms above.
/// Offset 2n = 8.
inline constexpr double kMhcp[16][16] = {
    {-2, 3, 2, 3, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0},
    {0, -2, 3, 2, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0},
    {0, 0, -2, 3, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0},
    {0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2},
    {0, 0, 0, 0, -2, 3, 2, 3, 2, 0, 0, 0, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, -2, 3, 2, 0, 2, 0, 0, 0, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, -2, 3, 0, 0, 2, 0, 0, 0, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, -2, 3, 2, 3, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 3, 2, 0, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 3, 0, 0, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 3, 2, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 3, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2},
};

/// Tour-weight matrix: cyclic successor blocks scaled by each edge weight.
inline constexpr double kMw[16][16] = {
    {0, 0, 0, 0, 0, 30, 0, 0, 0, 42, 0, 0, 0, 12, 0, 0},
    {0, 0, 0, 0, 0, 0, 30, 0, 0, 0, 42, 0, 0, 0, 12, 0},
    {0, 0, 0, 0, 0, 0, 0, 30, 0, 0, 0, 42, 0, 0, 0, 12},
    {0, 0, 0, 0, 30, 0, 0, 0, 42, 0, 0, 0, 12, 0, 0, 0},
    {0, 30, 0, 0, 0, 0, 0, 0, 0, 20, 0, 0, 0, 34, 0, 0},
    {0, 0, 30, 0, 0, 0, 0, 0, 0, 0, 20, 0, 0, 0, 34, 0},
    {0, 0, 0, 30, 0, 0, 0, 0, 0, 0, 0, 20, 0, 0, 0, 34},
    {30, 0, 0, 0, 0, 0, 0, 0, 20, 0, 0, 0, 34, 0, 0, 0},
    {0, 42, 0, 0, 0, 20, 0, 0, 0, 0, 0, 0, 0, 35, 0, 0},
    {0, 0, 42, 0, 0, 0, 20, 0, 0, 0, 0, 0, 0, 0, 35, 0},
    {0, 0, 0, 42, 0, 0, 0, 20, 0, 0, 0, 0, 0, 0, 0, 35},
    {42, 0, 0, 0, 20, 0, 0, 0, 0, 0, 0, 0, 35, 0, 0, 0},
    {0, 12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, 0, 0, 0, 0},
    {0, 0, 12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, 0, 0, 0},
    {0, 0, 0, 12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, 0, 0},
    {12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, 0, 0, 0, 0, 0},
};

/// Travelling-salesman matrix with c1 = c2 = 1: kMhcp + kMw. Offset 8.
inline constexpr double kMtsp[16][16] = {
    {-2, 3, 2, 3, 2, 30, 0, 0, 2, 42, 0, 0, 2, 12, 0, 0},
    {0, -2, 3, 2, 0, 2, 30, 0, 0, 2, 42, 0, 0, 2, 12, 0},
    {0, 0, -2, 3, 0, 0, 2, 30, 0, 0, 2, 42, 0, 0, 2, 12},
    {0, 0, 0, -2, 30, 0, 0, 2, 42, 0, 0, 2, 12, 0, 0, 2},
    {0, 30, 0, 0, -2, 3, 2, 3, 2, 20, 0, 0, 2, 34, 0, 0},
    {0, 0, 30, 0, 0, -2, 3, 2, 0, 2, 20, 0, 0, 2, 34, 0},
    {0, 0, 0, 30, 0, 0, -2, 3, 0, 0, 2, 20, 0, 0, 2, 34},
    {30, 0, 0, 0, 0, 0, 0, -2, 20, 0, 0, 2, 34, 0, 0, 2},
    {0, 42, 0, 0, 0, 20, 0, 0, -2, 3, 2, 3, 2, 35, 0, 0},
    {0, 0, 42, 0, 0, 0, 20, 0, 0, -2, 3, 2, 0, 2, 35, 0},
    {0, 0, 0, 42, 0, 0, 0, 20, 0, 0, -2, 3, 0, 0, 2, 35},
    {42, 0, 0, 0, 20, 0, 0, 0, 0, 0, 0, -2, 35, 0, 0, 2},
    {0, 12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, -2, 3, 2, 3},
    {0, 0, 12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, -2, 3, 2},
    {0, 0, 0, 12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, -2, 3},
    {12, 0, 0, 0, 34, 0, 0, 0, 35, 0, 0, 0, 0, 0, 0, -2},
};

/// Min-max normalized TSP matrix, values rounded to two decimals. Weight
/// cells sit in the folded layout (wrap entry inside the upper triangle of
/// each block), so comparisons must go through canonical upper form.
inline constexpr double kNtsp[16][16] = {
    {-2.00, 3.00, 2.00, 3.00, 2.00, 0.71, 0.00, 0.71, 2.00, 1.00, 0.00, 1.00, 2.00, 0.29, 0.00, 0.29},
    {0.00, -2.00, 3.00, 2.00, 0.00, 2.00, 0.71, 0.00, 0.00, 2.00, 1.00, 0.00, 0.00, 2.00, 0.29, 0.00},
    {0.00, 0.00, -2.00, 3.00, 0.00, 0.00, 2.00, 0.71, 0.00, 0.00, 2.00, 1.00, 0.00, 0.00, 2.00, 0.29},
    {0.00, 0.00, 0.00, -2.00, 0.00, 0.00, 0.00, 2.00, 0.00, 0.00, 0.00, 2.00, 0.00, 0.00, 0.00, 2.00},
    {0.00, 0.71, 0.00, 0.71, -2.00, 3.00, 2.00, 3.00, 2.00, 0.48, 0.00, 0.48, 2.00, 0.81, 0.00, 0.81},
    {0.00, 0.00, 0.71, 0.00, 0.00, -2.00, 3.00, 2.00, 0.00, 2.00, 0.48, 0.00, 0.00, 2.00, 0.81, 0.00},
    {0.00, 0.00, 0.00, 0.71, 0.00, 0.00, -2.00, 3.00, 0.00, 0.00, 2.00, 0.48, 0.00, 0.00, 2.00, 0.81},
    {0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, -2.00, 0.00, 0.00, 0.00, 2.00, 0.00, 0.00, 0.00, 2.00},
    {0.00, 1.00, 0.00, 1.00, 0.00, 0.48, 0.00, 0.48, -2.00, 3.00, 2.00, 3.00, 2.00, 0.83, 0.00, 0.83},
    {0.00, 0.00, 1.00, 0.00, 0.00, 0.00, 0.48, 0.00, 0.00, -2.00, 3.00, 2.00, 0.00, 2.00, 0.83, 0.00},
    {0.00, 0.00, 0.00, 1.00, 0.00, 0.00, 0.00, 0.48, 0.00, 0.00, -2.00, 3.00, 0.00, 0.00, 2.00, 0.83},
    {0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, -2.00, 0.00, 0.00, 0.00, 2.00},
    {0.00, 0.29, 0.00, 0.29, 0.00, 0.81, 0.00, 0.81, 0.00, 0.83, 0.00, 0.83, -2.00, 3.00, 2.00, 3.00},
    {0.00, 0.00, 0.29, 0.00, 0.00, 0.00, 0.81, 0.00, 0.00, 0.00, 0.83, 0.00, 0.00, -2.00, 3.00, 2.00},
    {0.00, 0.00, 0.00, 0.29, 0.00, 0.00, 0.00, 0.81, 0.00, 0.00, 0.00, 0.83, 0.00, 0.00, -2.00, 3.00},
    {0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00, -2.00},
};

}  // namespace golden
