#ifndef VALFROB_INT_LINALG_HPP
#define VALFROB_INT_LINALG_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace valfrob {

using ZMatrix = std::vector<std::vector<mpz_class>>;  // row major

// Basis of the full integer kernel lattice {v : M v = 0}, computed by
// column-style Hermite elimination with unimodular tracking. The returned
// vectors span every integer solution (the lattice is saturated).
std::vector<std::vector<mpz_class>> integer_kernel_basis(const ZMatrix& m);

// Rank of an integer matrix over Q.
std::size_t rank(const ZMatrix& m);

// |det| of a square integer matrix (fraction-free Gaussian elimination).
mpz_class abs_det(const ZMatrix& m);

// Solves B c = v for integer c where the columns of B are a lattice basis.
// Returns nullopt when v is not in the lattice.
std::optional<std::vector<mpz_class>> solve_integer(const ZMatrix& basis_cols,
                                                    const std::vector<mpz_class>& v);

}  // namespace valfrob

#endif
