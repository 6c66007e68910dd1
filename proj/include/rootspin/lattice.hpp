#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootspin/rootsys.hpp"

namespace rootspin {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

// Column Hermite normal form of an integer lattice in Z^m.
//
// Column k has its first nonzero entry (the pivot) in row pivot_rows[k], the
// pivot rows increase strictly with k, pivots are positive, and every entry
// to the left of a pivot in its row lies in [0, pivot).
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<BigVector> columns;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return columns.size(); }

  bool contains(const BigVector& target) const;
  bool contains(const IntVector& target) const;

  // Integer coefficients x with sum_k x[k] * columns[k] == target, if any.
  bool solve(const BigVector& target, BigVector& coefficients) const;
};

// Throws DimensionMismatch if the vectors disagree in length.
LatticeBasis hnf(const std::vector<IntVector>& vectors);
LatticeBasis hnf(const std::vector<BigVector>& vectors, std::size_t ambient_dim);

struct ObstructionResult {
  bool pass = true;
  std::string reason;
};

// Necessary condition for a zero signed sum: since e_i a_i == a_i mod 2L, a
// zero signed sum forces sum_i a_i into 2L, L the lattice spanned by the
// roots. `pass == false` proves that no sign vector sums to zero; `pass ==
// true` proves nothing.
ObstructionResult obstruction_2L(const RootSystem& system);

}  // namespace rootspin
