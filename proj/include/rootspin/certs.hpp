#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootspin/rootsys.hpp"
#include "rootspin/sigsum.hpp"
#include "rootspin/uint128.hpp"

namespace rootspin {

struct SignedIndex {
  std::size_t root_index;
  int sign;
};

// Partial sign assignment over a subset of roots whose signed sum is zero.
struct CertificateBlock {
  std::string name;
  std::vector<SignedIndex> terms;
};

// Disjoint blocks covering every root: flipping any subset of blocks keeps
// the total at zero, so the blocks certify 2^#blocks zero signed sums.
// `alternates` are further full zero-sum sign vectors outside the span of
// the blocks (only G2 needs one).
struct CertificateFamily {
  FamilyRank system_id;
  std::vector<CertificateBlock> blocks;
  std::vector<SignVector> alternates;

  std::size_t root_count() const;
  // Full sign vector with block k negated when bit k of `flips` is set.
  SignVector assemble(std::uint64_t flips = 0) const;
  // Number of distinct zero-sum sign vectors this certificate exhibits.
  u128 certified_bound() const;
};

// nullopt exactly for the families with no zero signed sum: A_n with n odd,
// every B_n, C_n with n = 1,2 mod 4, D_n with n = 2,3 mod 4, and E7.
// Throws InvalidRank.
std::optional<CertificateFamily> certificate(const FamilyRank& id);

struct Verification {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

// Structural check (blocks partition the index set) followed by exact
// evaluation of every block and alternate.
Verification verify(const RootSystem& system, const CertificateFamily& cert);

// Known lower bound for the number of zero signed sums: closed forms for
// the classical families, exact values for E6, F4 and G2, 369600 for E8,
// 0 where none exist. Throws InvalidRank, CountOverflow past 2^127.
u128 lower_bound(const FamilyRank& id);

}  // namespace rootspin
