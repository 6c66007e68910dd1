#include "rootspin/sigsum.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "rootspin/errors.hpp"

namespace rootspin {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(std::vector<int> signs) {
  signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

SignVector SignVector::from_mask(std::uint64_t mask, std::size_t length) {
  SignVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    if ((mask >> i) & 1u) v.signs_[i] = -1;
  }
  return v;
}

void SignVector::set(std::size_t i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  signs_.at(i) = static_cast<std::int8_t>(sign);
}

SignVector SignVector::negated() const {
  SignVector v = *this;
  for (auto& s : v.signs_) s = static_cast<std::int8_t>(-s);
  return v;
}

std::string SignVector::str() const {
  std::string out;
  out.reserve(signs_.size());
  for (auto s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

std::string to_string(CountKind kind) {
  switch (kind) {
    case CountKind::Exact: return "exact";
    case CountKind::LowerBound: return "lower_bound";
    case CountKind::ExistsOnly: return "exists_only";
    case CountKind::Zero: return "zero";
  }
  return "?";
}

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::BruteForce: return "brute_force";
    case CountMethod::MeetInMiddle: return "meet_in_middle";
    case CountMethod::Obstruction: return "obstruction";
    case CountMethod::Certificate: return "certificate";
  }
  return "?";
}

std::string to_string(Evidence evidence) {
  switch (evidence) {
    case Evidence::Obstruction: return "obstruction";
    case Evidence::Certificate: return "certificate";
    case Evidence::Search: return "search";
  }
  return "?";
}

namespace {

void check_shape(const RootSystem& system) {
  for (const auto& root : system.roots) {
    if (root.size() != system.ambient_dim) {
      throw DimensionMismatch("root of length " + std::to_string(root.size()) +
                              " in ambient dimension " + std::to_string(system.ambient_dim));
    }
  }
}

void require_limit(const RootSystem& system, std::size_t limit, const char* what) {
  if (system.size() > limit) {
    throw ResourceLimit(std::string(what) + ": r = " + std::to_string(system.size()) +
                        " exceeds limit " + std::to_string(limit));
  }
  if (system.size() > 62) throw ResourceLimit(std::string(what) + ": r > 62 unsupported");
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

void check_add(u128& total, u128 amount) {
  if (__builtin_add_overflow(total, amount, &total)) {
    throw CountOverflow("count exceeds 128 bits");
  }
}

// Gray-code walk over the signs of roots idx[0..low), with the signs of
// idx[low..] fixed by `prefix`. `visit(mask)` sees every assignment; bit i of
// mask refers to idx[i] and means sign -1. `update(i, negative)` is called
// before visiting whenever sign idx[i] flips.
template <class Update, class Visit>
void gray_walk(std::size_t low, Update&& update, Visit&& visit, std::uint64_t prefix_mask) {
  std::uint64_t mask = prefix_mask;
  visit(mask);
  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    mask ^= std::uint64_t{1} << bit;
    update(bit, ((mask >> bit) & 1u) != 0);
    visit(mask);
  }
}

IntVector start_sum(const RootSystem& system, const std::vector<std::size_t>& idx,
                    std::uint64_t mask) {
  IntVector sum(system.ambient_dim, 0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const int sign = ((mask >> i) & 1u) ? -1 : 1;
    const auto& root = system.roots[idx[i]];
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += sign * root[c];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Sum-vector keys for the meet-in-the-middle tables.

// Every partial sum of a half fits in [-bound_c, bound_c] per coordinate, so
// the offset fields (s_c + bound_c) never carry into each other and the
// packed key is linear in the sum. Flipping a sign is a single 128-bit add.
class PackedCodec {
 public:
  using Key = u128;

  PackedCodec(const RootSystem& system, const std::vector<std::int64_t>& bounds) {
    std::vector<unsigned> offsets(bounds.size());
    unsigned offset = 0;
    for (std::size_t c = 0; c < bounds.size(); ++c) {
      offsets[c] = offset;
      offset += static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(2 * bounds[c])));
      bias_ += static_cast<u128>(bounds[c]) << offsets[c];
    }
    twice_.reserve(system.size());
    for (const auto& root : system.roots) {
      u128 lin = 0;
      for (std::size_t c = 0; c < root.size(); ++c) {
        lin += static_cast<u128>(static_cast<i128>(2 * root[c])) << offsets[c];
      }
      twice_.push_back(lin);
    }
    offsets_ = std::move(offsets);
  }

  Key encode(const IntVector& sum) const {
    u128 key = bias_;
    for (std::size_t c = 0; c < sum.size(); ++c) {
      key += static_cast<u128>(static_cast<i128>(sum[c])) << offsets_[c];
    }
    return key;
  }
  // Key of the negated sum.
  Key opposite(const Key& key) const { return 2 * bias_ - key; }
  void flip(Key& key, std::size_t root, bool to_negative) const {
    if (to_negative) {
      key -= twice_[root];
    } else {
      key += twice_[root];
    }
  }
  std::size_t bytes_per_key() const { return sizeof(Key); }

 private:
  std::vector<unsigned> offsets_;
  std::vector<u128> twice_;
  u128 bias_ = 0;
};

class VectorCodec {
 public:
  using Key = IntVector;

  explicit VectorCodec(const RootSystem& system) : system_(&system) {}

  Key encode(const IntVector& sum) const { return sum; }
  Key opposite(const Key& key) const {
    Key neg(key.size());
    std::transform(key.begin(), key.end(), neg.begin(), [](std::int64_t x) { return -x; });
    return neg;
  }
  void flip(Key& key, std::size_t root, bool to_negative) const {
    const auto& a = system_->roots[root];
    const std::int64_t f = to_negative ? -2 : 2;
    for (std::size_t c = 0; c < key.size(); ++c) key[c] += f * a[c];
  }
  std::size_t bytes_per_key() const {
    return sizeof(Key) + system_->ambient_dim * sizeof(std::int64_t);
  }

 private:
  const RootSystem* system_;
};

// Walks all 2^|idx| signed sums of the roots in `idx` whose top `prefix`
// signs are given by `task`. visit(key, mask) with mask over positions in idx.
template <class Codec, class Visit>
void walk_half(const Codec& codec, const RootSystem& system, const std::vector<std::size_t>& idx,
               unsigned prefix, std::uint64_t task, Visit&& visit) {
  const std::size_t low = idx.size() - prefix;
  const std::uint64_t prefix_mask = task << low;
  auto key = codec.encode(start_sum(system, idx, prefix_mask));
  gray_walk(
      low, [&](std::size_t i, bool negative) { codec.flip(key, idx[i], negative); },
      [&](std::uint64_t mask) { visit(key, mask); }, prefix_mask);
}

template <class Codec>
CountResult mitm_count_with(const Codec& codec, const RootSystem& system, const MitmSplit& split,
                            const CountOptions& options) {
  using Key = typename Codec::Key;
  const auto start = Clock::now();
  const unsigned threads = detail::resolve_threads(options.threads);

  const std::size_t left_size = std::size_t{1} << split.left.size();
  const std::size_t table_bytes = left_size * (codec.bytes_per_key() + sizeof(std::uint64_t));
  if (table_bytes > options.memory_budget) {
    throw ResourceLimit("meet-in-the-middle table needs " + std::to_string(table_bytes) +
                        " bytes, budget is " + std::to_string(options.memory_budget));
  }

  // Left half: every signed sum, then sort and collapse to multiplicities.
  std::vector<Key> keys(left_size);
  {
    const unsigned prefix = detail::prefix_bits(split.left.size(), threads);
    const std::size_t chunk = left_size >> prefix;
    detail::parallel_for(std::size_t{1} << prefix, threads, [&](std::size_t task) {
      Key* out = keys.data() + task * chunk;
      walk_half(codec, system, split.left, prefix, task,
                [&](const Key& key, std::uint64_t mask) {
                  out[mask & (chunk - 1)] = key;
                });
    });
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::uint64_t> counts;
  {
    std::size_t write = 0;
    for (std::size_t read = 0; read < keys.size();) {
      std::size_t end = read + 1;
      while (end < keys.size() && keys[end] == keys[read]) ++end;
      if (write != read) keys[write] = std::move(keys[read]);
      counts.push_back(end - read);
      ++write;
      read = end;
    }
    keys.resize(write);
  }
  const std::size_t peak = left_size * codec.bytes_per_key() + counts.size() * sizeof(std::uint64_t);

  // Right half: the left table is read-only from here on.
  const unsigned prefix = detail::prefix_bits(split.right.size(), threads);
  std::vector<u128> partial(std::size_t{1} << prefix, 0);
  detail::parallel_for(partial.size(), threads, [&](std::size_t task) {
    u128 local = 0;
    walk_half(codec, system, split.right, prefix, task, [&](const Key& key, std::uint64_t) {
      const Key target = codec.opposite(key);
      auto it = std::lower_bound(keys.begin(), keys.end(), target);
      if (it != keys.end() && *it == target) {
        check_add(local, counts[static_cast<std::size_t>(it - keys.begin())]);
      }
    });
    partial[task] = local;
  });
  u128 total = 0;
  for (u128 p : partial) check_add(total, p);

  CountResult result;
  result.kind = CountKind::Exact;
  result.value = total;
  result.method = CountMethod::MeetInMiddle;
  result.memory_peak = peak;
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

template <class Codec>
std::optional<SignVector> mitm_witness_with(const Codec& codec, const RootSystem& system,
                                            const MitmSplit& split, const CountOptions& options) {
  using Key = typename Codec::Key;
  const std::size_t left_size = std::size_t{1} << split.left.size();
  const std::size_t table_bytes = left_size * (codec.bytes_per_key() + sizeof(std::uint64_t));
  if (table_bytes > options.memory_budget) {
    throw ResourceLimit("witness search table exceeds the memory budget");
  }
  std::vector<std::pair<Key, std::uint64_t>> table;
  table.reserve(left_size);
  walk_half(codec, system, split.left, 0, 0,
            [&](const Key& key, std::uint64_t mask) { table.emplace_back(key, mask); });
  std::sort(table.begin(), table.end());

  std::optional<SignVector> found;
  // Single-threaded so the first hit is deterministic; bail out of the walk
  // cheaply once found.
  walk_half(codec, system, split.right, 0, 0, [&](const Key& key, std::uint64_t right_mask) {
    if (found) return;
    const Key target = codec.opposite(key);
    auto it = std::lower_bound(table.begin(), table.end(), target,
                               [](const auto& entry, const Key& k) { return entry.first < k; });
    if (it == table.end() || !(it->first == target)) return;
    SignVector eps(system.size());
    for (std::size_t i = 0; i < split.left.size(); ++i) {
      if ((it->second >> i) & 1u) eps.set(split.left[i], -1);
    }
    for (std::size_t i = 0; i < split.right.size(); ++i) {
      if ((right_mask >> i) & 1u) eps.set(split.right[i], -1);
    }
    found = std::move(eps);
  });
  return found;
}

std::vector<std::int64_t> half_bounds(const RootSystem& system,
                                      const std::vector<std::size_t>& left,
                                      const std::vector<std::size_t>& right) {
  std::vector<std::int64_t> bounds(system.ambient_dim, 0);
  for (std::size_t c = 0; c < system.ambient_dim; ++c) {
    std::int64_t l = 0;
    std::int64_t r = 0;
    for (auto i : left) l += std::abs(system.roots[i][c]);
    for (auto i : right) r += std::abs(system.roots[i][c]);
    bounds[c] = std::max(l, r);
  }
  return bounds;
}

unsigned key_bits(const std::vector<std::int64_t>& bounds) {
  unsigned bits = 0;
  for (auto b : bounds) bits += static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(2 * b)));
  return bits;
}

}  // namespace

IntVector signed_sum(const RootSystem& system, const SignVector& eps) {
  if (eps.size() != system.size()) {
    throw LengthMismatch("sign vector of length " + std::to_string(eps.size()) + " for " +
                         std::to_string(system.size()) + " roots");
  }
  check_shape(system);
  IntVector sum(system.ambient_dim, 0);
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += eps[i] * system.roots[i][c];
  }
  return sum;
}

CountResult count_bruteforce(const RootSystem& system, const CountOptions& options) {
  const auto start = Clock::now();
  require_limit(system, options.limit_r ? options.limit_r : kDefaultBruteForceLimit,
                "brute force");
  check_shape(system);

  const std::size_t r = system.size();
  const unsigned threads = detail::resolve_threads(options.threads);
  const unsigned prefix = detail::prefix_bits(r, threads);
  const std::size_t low = r - prefix;

  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<IntVector> twice(system.roots);
  for (auto& v : twice) {
    for (auto& x : v) x *= 2;
  }

  std::vector<std::uint64_t> partial(std::size_t{1} << prefix, 0);
  detail::parallel_for(partial.size(), threads, [&](std::size_t task) {
    const std::uint64_t prefix_mask = static_cast<std::uint64_t>(task) << low;
    IntVector sum = start_sum(system, idx, prefix_mask);
    std::uint64_t hits = 0;
    gray_walk(
        low,
        [&](std::size_t i, bool negative) {
          const auto& d = twice[i];
          if (negative) {
            for (std::size_t c = 0; c < sum.size(); ++c) sum[c] -= d[c];
          } else {
            for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += d[c];
          }
        },
        [&](std::uint64_t) { hits += is_zero(sum); }, prefix_mask);
    partial[task] = hits;
  });

  CountResult result;
  result.kind = CountKind::Exact;
  result.method = CountMethod::BruteForce;
  for (auto p : partial) check_add(result.value, p);
  result.memory_peak = (system.ambient_dim * sizeof(std::int64_t)) * (r + partial.size());
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

std::vector<SignVector> enumerate_witnesses(const RootSystem& system, std::size_t limit_r) {
  require_limit(system, limit_r, "witness enumeration");
  check_shape(system);
  const std::size_t r = system.size();
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  IntVector sum = start_sum(system, idx, 0);
  std::vector<SignVector> out;
  gray_walk(
      r,
      [&](std::size_t i, bool negative) {
        const std::int64_t f = negative ? -2 : 2;
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += f * system.roots[i][c];
      },
      [&](std::uint64_t mask) {
        if (is_zero(sum)) out.push_back(SignVector::from_mask(mask, r));
      },
      0);
  return out;
}

MitmSplit plan_mitm_split(const RootSystem& system) {
  check_shape(system);
  const std::size_t r = system.size();
  const std::size_t left_size = (r + 1) / 2;

  MitmSplit contiguous;
  for (std::size_t i = 0; i < r; ++i) (i < left_size ? contiguous.left : contiguous.right).push_back(i);
  contiguous.bounds = half_bounds(system, contiguous.left, contiguous.right);
  contiguous.key_bits = key_bits(contiguous.bounds);

  // Greedy balance of per-coordinate magnitudes, heaviest roots first.
  std::vector<std::int64_t> magnitude(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (auto x : system.roots[i]) magnitude[i] += std::abs(x);
  }
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return magnitude[a] > magnitude[b]; });
  MitmSplit balanced;
  std::vector<std::int64_t> load_left(system.ambient_dim, 0);
  std::vector<std::int64_t> load_right(system.ambient_dim, 0);
  for (std::size_t i : order) {
    bool to_left;
    if (balanced.left.size() == left_size) {
      to_left = false;
    } else if (balanced.right.size() == r - left_size) {
      to_left = true;
    } else {
      // Place where the worst resulting per-coordinate load is smaller.
      std::int64_t cost_left = 0;
      std::int64_t cost_right = 0;
      for (std::size_t c = 0; c < system.ambient_dim; ++c) {
        const std::int64_t a = std::abs(system.roots[i][c]);
        cost_left += std::max(load_left[c] + a, load_right[c]);
        cost_right += std::max(load_left[c], load_right[c] + a);
      }
      to_left = cost_left <= cost_right;
    }
    auto& loads = to_left ? load_left : load_right;
    for (std::size_t c = 0; c < system.ambient_dim; ++c) loads[c] += std::abs(system.roots[i][c]);
    (to_left ? balanced.left : balanced.right).push_back(i);
  }
  std::sort(balanced.left.begin(), balanced.left.end());
  std::sort(balanced.right.begin(), balanced.right.end());
  balanced.bounds = half_bounds(system, balanced.left, balanced.right);
  balanced.key_bits = key_bits(balanced.bounds);

  return balanced.key_bits < contiguous.key_bits ? balanced : contiguous;
}

CountResult count_mitm(const RootSystem& system, const CountOptions& options) {
  require_limit(system, options.limit_r ? options.limit_r : kDefaultMitmLimit,
                "meet in the middle");
  const MitmSplit split = plan_mitm_split(system);
  if (split.key_bits <= std::min(options.max_key_bits, 128u)) {
    return mitm_count_with(PackedCodec(system, split.bounds), system, split, options);
  }
  return mitm_count_with(VectorCodec(system), system, split, options);
}

std::optional<SignVector> find_witness_mitm(const RootSystem& system, const CountOptions& options) {
  require_limit(system, options.limit_r ? options.limit_r : kDefaultMitmLimit,
                "witness search");
  const MitmSplit split = plan_mitm_split(system);
  if (split.key_bits <= std::min(options.max_key_bits, 128u)) {
    return mitm_witness_with(PackedCodec(system, split.bounds), system, split, options);
  }
  return mitm_witness_with(VectorCodec(system), system, split, options);
}

}  // namespace rootspin
