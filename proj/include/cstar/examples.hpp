#pragma once

#include <cstdint>

#include "cstar/matrix.hpp"

namespace cstar::examples {

// Demo matrices from the numerical experiments. Randomized constructions
// draw from the 64-bit LCG in lcg.hpp so runs are bit-reproducible.

// Bidiagonal Toeplitz over C([1,2]): unit diagonal, superdiagonal e^{-t}.
CStarMatrix<FunctionElement> ex1_bidiagonal(int n, int grid = FunctionElement::kDefaultGrid);

// C C* for the ex1 matrix: Hermitian tridiagonal over C([1,2]).
// Shared by the inverse (ex2) and exponential (ex3) demos.
CStarMatrix<FunctionElement> ex2_cct(int n, int grid = FunctionElement::kDefaultGrid);

// Tridiagonal Hermitian Toeplitz over C([0,1]): diagonal 1, off-diagonals e^{-t}.
CStarMatrix<FunctionElement> ex4_toeplitz(int n, int grid = FunctionElement::kDefaultGrid);

// Tridiagonal Hermitian over C([0,1]) with off-diagonal entries cycling
// through 1 / t / 1 / t^2-1 by column index.
CStarMatrix<FunctionElement> ex4bis_pattern(int n, int grid = FunctionElement::kDefaultGrid);

// Banded non-Hermitian block matrix: k x k blocks with entries uniform on
// [-1,1], lower bandwidth 2 and upper bandwidth 1.
CStarMatrix<BlockElement> ex6_block_banded(int n, std::uint64_t seed, int k = 5);

// Hermitian tridiagonal Toeplitz quaternion matrix, components uniform on
// [-5,5]: real diagonal, one off-diagonal quaternion and its conjugate.
CStarMatrix<QuaternionElement> ex7a_quaternion_tridiagonal(int n, std::uint64_t seed);

// Hermitian quaternion matrix with a random sparsity pattern (edge density
// 0.15) and components uniform on [-5,5].
CStarMatrix<QuaternionElement> ex7b_quaternion_sparse(int n, std::uint64_t seed);

}  // namespace cstar::examples
