#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rootspin {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct FamilyRank {
  Family family;
  int rank;

  friend bool operator==(const FamilyRank&, const FamilyRank&) = default;
};

// Parses a single family letter (case-insensitive); throws InvalidRank.
Family parse_family(const std::string& text);
char family_letter(Family family);
std::string to_string(const FamilyRank& id);

bool is_admissible(const FamilyRank& id);
// Throws InvalidRank unless is_admissible(id).
void require_admissible(const FamilyRank& id);

using IntVector = std::vector<std::int64_t>;

// Positive roots scaled by a global denominator so that every coordinate is
// an integer. The true root is roots[i] / denominator.
struct RootSystem {
  FamilyRank id;
  std::size_t ambient_dim = 0;
  std::int64_t denominator = 1;
  std::vector<IntVector> roots;

  std::size_t size() const { return roots.size(); }

  // Same id, ambient space and denominator; roots restricted to `indices`
  // in the given order.
  RootSystem subsystem(const std::vector<std::size_t>& indices) const;
};

// Canonical ordering:
//   rows of the classical table top to bottom; inside a row, lexicographic
//   in the index tuple (i), (i,j), (i,j,k). F4's half roots run over the
//   sign pattern of (l2,l3,l4) with + before -. G2 is listed as printed:
//   l1, l2, -l1-l2, l1-l2, l1+2l2, 2l1+l2.
// The A_n system lives in R^n: l_i - l_j and l_i + (l_1 + ... + l_n).
RootSystem positive_roots(const FamilyRank& id);

// Number of positive roots, from the closed form.
std::size_t root_count(const FamilyRank& id);

// Text format: "family rank r ambient_dim denominator" then one root per
// line, coordinates separated by single spaces, every line ending in '\n'.
void write_root_list(std::ostream& out, const RootSystem& system);
std::string format_root_list(const RootSystem& system);

}  // namespace rootspin
