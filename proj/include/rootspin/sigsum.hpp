#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootspin/lattice.hpp"
#include "rootspin/rootsys.hpp"
#include "rootspin/uint128.hpp"

namespace rootspin {

// A choice of sign for every root, indexed by canonical root order.
class SignVector {
 public:
  SignVector() = default;
  // All +1.
  explicit SignVector(std::size_t length) : signs_(length, 1) {}
  // Throws std::invalid_argument if an entry is not +1 or -1.
  explicit SignVector(std::vector<int> signs);
  // Bit i of `mask` set means sign i is -1.
  static SignVector from_mask(std::uint64_t mask, std::size_t length);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  void set(std::size_t i, int sign);
  void flip(std::size_t i) { signs_[i] = static_cast<std::int8_t>(-signs_[i]); }
  SignVector negated() const;
  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

enum class CountKind { Exact, LowerBound, ExistsOnly, Zero };
enum class CountMethod { BruteForce, MeetInMiddle, Obstruction, Certificate };

std::string to_string(CountKind kind);
std::string to_string(CountMethod method);

struct CountResult {
  CountKind kind = CountKind::Exact;
  u128 value = 0;
  CountMethod method = CountMethod::BruteForce;
  std::chrono::nanoseconds elapsed{0};
  std::size_t memory_peak = 0;  // bytes held by the enumeration tables
};

inline constexpr std::size_t kDefaultBruteForceLimit = 26;
inline constexpr std::size_t kDefaultMitmLimit = 48;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{8} << 30;

struct CountOptions {
  std::size_t limit_r = 0;  // 0 picks the method's default
  unsigned threads = 1;
  std::size_t memory_budget = kDefaultMemoryBudget;
  // Sum vectors whose packed form needs more bits fall back to vector keys.
  unsigned max_key_bits = 128;
};

// sum_i eps_i a_i in scaled coordinates. Throws LengthMismatch.
IntVector signed_sum(const RootSystem& system, const SignVector& eps);

// Exhaustive 2^r Gray-code enumeration. Throws ResourceLimit if r exceeds
// the limit (default 26).
CountResult count_bruteforce(const RootSystem& system, const CountOptions& options = {});

// Meet-in-the-middle join of the two half enumerations. Throws ResourceLimit
// if r exceeds the limit (default 48) or the left table exceeds the memory
// budget, CountOverflow if the count does not fit in 128 bits.
CountResult count_mitm(const RootSystem& system, const CountOptions& options = {});

// Every zero-sum sign vector, in Gray-code visiting order. For small r.
std::vector<SignVector> enumerate_witnesses(const RootSystem& system, std::size_t limit_r = 20);

// First zero-sum sign vector found by a meet-in-the-middle search, or
// nullopt when none exists. Same limits as count_mitm.
std::optional<SignVector> find_witness_mitm(const RootSystem& system,
                                            const CountOptions& options = {});

// How the left/right split of a meet-in-the-middle run was chosen; exposed
// for tests.
struct MitmSplit {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<std::int64_t> bounds;  // per-coordinate max |partial sum|
  unsigned key_bits = 0;
};
MitmSplit plan_mitm_split(const RootSystem& system);

enum class Evidence { Obstruction, Certificate, Search };
std::string to_string(Evidence evidence);

struct Existence {
  bool exists = false;
  Evidence evidence = Evidence::Obstruction;
  std::optional<SignVector> witness;
  ObstructionResult obstruction;
};

// Obstruction first, then a verified family certificate, then a
// meet-in-the-middle search. Any returned witness has zero signed sum.
Existence exists_strong_dependence(const RootSystem& system, const CountOptions& options = {});

}  // namespace rootspin
