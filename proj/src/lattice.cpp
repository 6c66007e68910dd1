#include "rootspin/lattice.hpp"

#include <algorithm>
#include <utility>

#include "rootspin/errors.hpp"

namespace rootspin {

namespace {

// Floor division for arbitrary precision integers.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(BigVector& y, const BigInt& factor, const BigVector& x) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= factor * x[i];
}

BigVector widen(const IntVector& v) { return BigVector(v.begin(), v.end()); }

}  // namespace

LatticeBasis hnf(const std::vector<BigVector>& vectors, std::size_t ambient_dim) {
  std::vector<BigVector> cols;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("hnf: vectors of unequal length");
    if (std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x != 0; })) cols.push_back(v);
  }

  LatticeBasis basis;
  basis.ambient_dim = ambient_dim;
  std::size_t pivot = 0;
  for (std::size_t row = 0; row < ambient_dim && pivot < cols.size(); ++row) {
    // Euclid on row `row` across columns pivot..end until one nonzero remains.
    for (;;) {
      std::size_t best = cols.size();
      std::size_t nonzero = 0;
      for (std::size_t k = pivot; k < cols.size(); ++k) {
        if (cols[k][row] == 0) continue;
        ++nonzero;
        if (best == cols.size() || abs(cols[k][row]) < abs(cols[best][row])) best = k;
      }
      if (nonzero == 0) break;
      std::swap(cols[pivot], cols[best]);
      if (nonzero == 1) break;
      for (std::size_t k = pivot + 1; k < cols.size(); ++k) {
        if (cols[k][row] == 0) continue;
        axpy(cols[k], floor_div(cols[k][row], cols[pivot][row]), cols[pivot]);
      }
    }
    if (cols[pivot][row] == 0) continue;
    if (cols[pivot][row] < 0) {
      for (auto& x : cols[pivot]) x = -x;
    }
    for (std::size_t k = 0; k < pivot; ++k) {
      axpy(cols[k], floor_div(cols[k][row], cols[pivot][row]), cols[pivot]);
    }
    basis.pivot_rows.push_back(row);
    ++pivot;
  }
  cols.resize(pivot);
  basis.columns = std::move(cols);
  return basis;
}

LatticeBasis hnf(const std::vector<IntVector>& vectors) {
  std::vector<BigVector> wide;
  wide.reserve(vectors.size());
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("hnf: vectors of unequal length");
    wide.push_back(widen(v));
  }
  return hnf(wide, dim);
}

bool LatticeBasis::solve(const BigVector& target, BigVector& coefficients) const {
  if (target.size() != ambient_dim) throw DimensionMismatch("lattice membership: wrong length");
  BigVector residual = target;
  coefficients.assign(columns.size(), 0);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const std::size_t row = pivot_rows[k];
    const BigInt& p = columns[k][row];
    if (residual[row] % p != 0) return false;
    coefficients[k] = residual[row] / p;
    axpy(residual, coefficients[k], columns[k]);
  }
  return std::all_of(residual.begin(), residual.end(), [](const BigInt& x) { return x == 0; });
}

bool LatticeBasis::contains(const BigVector& target) const {
  BigVector unused;
  return solve(target, unused);
}

bool LatticeBasis::contains(const IntVector& target) const { return contains(widen(target)); }

ObstructionResult obstruction_2L(const RootSystem& system) {
  BigVector total(system.ambient_dim, 0);
  for (const auto& root : system.roots) {
    if (root.size() != system.ambient_dim) throw DimensionMismatch("root of wrong length");
    for (std::size_t c = 0; c < root.size(); ++c) total[c] += root[c];
  }

  for (std::size_t c = 0; c < total.size(); ++c) {
    if (total[c] % 2 != 0) {
      return {false, "coordinate " + std::to_string(c + 1) + " of the root sum is odd (" +
                         total[c].str() + ")"};
    }
  }
  BigVector half(total.size());
  for (std::size_t c = 0; c < total.size(); ++c) half[c] = total[c] / 2;

  const LatticeBasis lattice = hnf(system.roots);
  if (!lattice.contains(half)) {
    return {false, "half the root sum is not in the root lattice"};
  }
  return {true, "root sum lies in 2L"};
}

}  // namespace rootspin
