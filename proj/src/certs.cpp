#include "rootspin/certs.hpp"

#include <map>
#include <stdexcept>

#include "rootspin/errors.hpp"

namespace rootspin {

namespace {

// Coordinates -> canonical position.
class RootIndex {
 public:
  explicit RootIndex(const RootSystem& system) {
    for (std::size_t i = 0; i < system.size(); ++i) positions_.emplace(system.roots[i], i);
  }

  std::size_t at(const IntVector& root) const {
    auto it = positions_.find(root);
    if (it == positions_.end()) throw std::logic_error("certificate term is not a positive root");
    return it->second;
  }

 private:
  std::map<IntVector, std::size_t> positions_;
};

// Root vectors in scaled coordinates; indices are 1-based like l_1..l_m.
class Lambda {
 public:
  Lambda(std::size_t dim, std::int64_t scale) : dim_(dim), scale_(scale) {}

  IntVector e(std::size_t i, std::int64_t c = 1) const {
    IntVector v(dim_, 0);
    v[i - 1] = c * scale_;
    return v;
  }
  IntVector diff(std::size_t i, std::size_t j) const { return add(e(i), e(j), -1); }
  IntVector sum(std::size_t i, std::size_t j) const { return add(e(i), e(j), 1); }
  IntVector triple(std::size_t i, std::size_t j, std::size_t k) const {
    return add(sum(i, j), e(k), 1);
  }
  IntVector all(std::int64_t c = 1) const { return IntVector(dim_, c * scale_); }
  IntVector half(int s2, int s3, int s4) const {
    // (1/2)(l1 + s2 l2 + s3 l3 + s4 l4); only meaningful for scale 2
    return {scale_ / 2, s2 * scale_ / 2, s3 * scale_ / 2, s4 * scale_ / 2};
  }

  static IntVector add(IntVector a, const IntVector& b, std::int64_t f) {
    for (std::size_t c = 0; c < a.size(); ++c) a[c] += f * b[c];
    return a;
  }

 private:
  std::size_t dim_;
  std::int64_t scale_;
};

class BlockWriter {
 public:
  BlockWriter(const RootIndex& index, std::string name) : index_(&index) {
    block_.name = std::move(name);
  }
  BlockWriter& add(int sign, const IntVector& root) {
    block_.terms.push_back({index_->at(root), sign});
    return *this;
  }
  CertificateBlock done() { return std::move(block_); }

 private:
  const RootIndex* index_;
  CertificateBlock block_;
};

// (-1)^j
int alt(std::size_t j) { return j % 2 == 0 ? 1 : -1; }

// A_{2k}: blocks S_1..S_{k-1} and T. `diff(i, j)` is the root l_i - l_j and
// `mu_plus(i)` the root l_i + mu; T only needs mu as a formal symbol, which
// lets E8 reuse these blocks with mu replaced by -l_8.
template <class Diff, class MuPlus>
void a_even_blocks(std::size_t k, const RootIndex& index, Diff diff, MuPlus mu_plus,
                   const std::string& prefix, std::vector<CertificateBlock>& out) {
  for (std::size_t l = 1; l < k; ++l) {
    BlockWriter b(index, prefix + "S_" + std::to_string(l));
    for (std::size_t j = 2 * l + 1; j <= 2 * k; ++j) b.add(alt(j), diff(2 * l, j));
    for (std::size_t j = 2 * l + 2; j <= 2 * k; ++j) b.add(-alt(j), diff(2 * l + 1, j));
    out.push_back(b.done());
  }
  BlockWriter t(index, prefix + "T");
  t.add(1, mu_plus(1));
  for (std::size_t j = 2; j <= 2 * k; ++j) {
    t.add(-alt(j), diff(1, j));
    t.add(-alt(j), mu_plus(j));
  }
  out.push_back(t.done());
}

std::vector<CertificateBlock> type_a(const RootSystem& system) {
  const auto n = system.ambient_dim;
  const Lambda L(n, 1);
  const RootIndex index(system);
  std::vector<CertificateBlock> blocks;
  a_even_blocks(
      n / 2, index, [&](std::size_t i, std::size_t j) { return L.diff(i, j); },
      [&](std::size_t i) { return Lambda::add(L.all(), L.e(i), 1); }, "", blocks);
  return blocks;
}

std::vector<CertificateBlock> type_c(const RootSystem& system) {
  const std::size_t n = system.ambient_dim;
  const std::size_t k = n / 4;
  const Lambda L(n, 1);
  const RootIndex index(system);
  std::vector<CertificateBlock> blocks;
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t a = 4 * l + 1, b = a + 1, c = a + 2, d = a + 3;
    BlockWriter w(index, "S'_" + std::to_string(l));
    w.add(1, L.diff(a, b)).add(1, L.sum(a, b));
    for (std::size_t j = 4 * l + 3; j <= n; ++j) w.add(1, L.sum(a, j)).add(-1, L.diff(a, j));
    w.add(1, L.diff(b, c)).add(1, L.sum(b, c));
    for (std::size_t j = 4 * l + 4; j <= n; ++j) w.add(-1, L.sum(b, j)).add(1, L.diff(b, j));
    for (std::size_t j = 4 * l + 4; j <= n; ++j) w.add(1, L.sum(c, j)).add(-1, L.diff(c, j));
    for (std::size_t j = 4 * l + 5; j <= n; ++j) w.add(-1, L.sum(d, j)).add(1, L.diff(d, j));
    w.add(-1, L.e(a, 2)).add(-1, L.e(b, 2)).add(-1, L.e(c, 2)).add(-1, L.e(d, 2));
    blocks.push_back(w.done());
  }
  if (n % 4 == 3) {
    const std::size_t p = 4 * k + 1, q = p + 1, s = p + 2;
    BlockWriter w(index, "T'");
    w.add(1, L.diff(p, q)).add(-1, L.diff(p, s)).add(1, L.diff(q, s));
    w.add(1, L.sum(p, q)).add(1, L.sum(p, s)).add(1, L.sum(q, s));
    w.add(-1, L.e(p, 2)).add(-1, L.e(q, 2)).add(-1, L.e(s, 2));
    blocks.push_back(w.done());
  }
  return blocks;
}

std::vector<CertificateBlock> type_d(const RootSystem& system) {
  const std::size_t n = system.ambient_dim;
  const std::size_t k = n / 4;
  const Lambda L(n, 1);
  const RootIndex index(system);
  std::vector<CertificateBlock> blocks;
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t a = 4 * l + 1, b = a + 1, c = a + 2, d = a + 3;
    BlockWriter w(index, "S''_" + std::to_string(l));
    for (std::size_t j = 4 * l + 2; j <= n; ++j) w.add(alt(j), L.diff(a, j)).add(-alt(j), L.sum(a, j));
    w.add(1, L.diff(b, c)).add(1, L.sum(b, c));
    for (std::size_t j = 4 * l + 4; j <= n; ++j) w.add(-alt(j), L.diff(b, j)).add(alt(j), L.sum(b, j));
    w.add(-1, L.diff(c, d)).add(-1, L.sum(c, d));
    for (std::size_t j = 4 * l + 5; j <= n; ++j) w.add(alt(j), L.diff(c, j)).add(-alt(j), L.sum(c, j));
    for (std::size_t j = 4 * l + 5; j <= n; ++j) w.add(-alt(j), L.diff(d, j)).add(alt(j), L.sum(d, j));
    blocks.push_back(w.done());
  }
  return blocks;
}

std::vector<CertificateBlock> type_e6(const RootSystem& system) {
  const Lambda L(6, 1);
  const RootIndex index(system);
  BlockWriter w(index, "E6");
  w.add(1, L.all());
  // l_i - l_j in lexicographic order
  const int diff_signs[] = {-1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1, -1, -1, -1, 1};
  std::size_t at = 0;
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t j = i + 1; j <= 6; ++j) w.add(diff_signs[at++], L.diff(i, j));
  }
  // l_i + l_j + l_k in lexicographic order
  const int triple_signs[] = {-1, -1, -1, -1, -1, 1, 1, 1, 1, -1,
                              1,  -1, 1,  1,  -1, -1, 1, 1, -1, -1};
  at = 0;
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t j = i + 1; j <= 6; ++j) {
      for (std::size_t k = j + 1; k <= 6; ++k) w.add(triple_signs[at++], L.triple(i, j, k));
    }
  }
  return {w.done()};
}

std::vector<CertificateBlock> type_f4(const RootSystem& system) {
  const Lambda L(4, 2);
  const RootIndex index(system);
  BlockWriter w(index, "F4");
  w.add(1, L.e(1)).add(-1, L.e(2)).add(-1, L.e(3)).add(-1, L.e(4));
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = i + 1; j <= 4; ++j) w.add(-1, L.diff(i, j));
  }
  w.add(-1, L.sum(1, 2)).add(1, L.sum(1, 3)).add(-1, L.sum(1, 4));
  w.add(1, L.sum(2, 3)).add(1, L.sum(2, 4)).add(-1, L.sum(3, 4));
  w.add(1, L.half(1, 1, 1)).add(-1, L.half(-1, 1, 1)).add(1, L.half(1, -1, 1));
  w.add(1, L.half(1, 1, -1)).add(1, L.half(-1, -1, 1)).add(1, L.half(-1, 1, -1));
  w.add(1, L.half(1, -1, -1)).add(1, L.half(-1, -1, -1));
  return {w.done()};
}

std::vector<CertificateBlock> type_e8(const RootSystem& system) {
  const Lambda L(8, 1);
  const RootIndex index(system);
  auto nu_plus = [&](std::size_t i) { return Lambda::add(L.all(), L.e(i), 1); };
  auto nu_minus = [&](std::size_t i, std::size_t j) {
    return Lambda::add(Lambda::add(L.all(), L.e(i), -1), L.e(j), -1);
  };
  std::vector<CertificateBlock> blocks;

  // sum of all triples = sum over pairs of (nu - l_i - l_j) = 21 nu
  BlockWriter nu21(index, "21nu");
  for (std::size_t i = 1; i <= 8; ++i) {
    for (std::size_t j = i + 1; j <= 8; ++j) {
      for (std::size_t k = j + 1; k <= 8; ++k) nu21.add(1, L.triple(i, j, k));
    }
  }
  for (std::size_t i = 1; i <= 8; ++i) {
    for (std::size_t j = i + 1; j <= 8; ++j) nu21.add(-1, nu_minus(i, j));
  }
  blocks.push_back(nu21.done());

  // sum_{j>=2} (-1)^j (l_1 - l_j) + sum_j (-1)^j (l_j + nu) = 0
  BlockWriter alternating(index, "alternating");
  for (std::size_t j = 2; j <= 8; ++j) alternating.add(alt(j), L.diff(1, j));
  for (std::size_t j = 1; j <= 8; ++j) alternating.add(alt(j), nu_plus(j));
  blocks.push_back(alternating.done());

  // {l_i - l_j : 2 <= i < j <= 8} is A6 shifted by one with mu -> -l_8.
  a_even_blocks(
      3, index, [&](std::size_t i, std::size_t j) { return L.diff(i + 1, j + 1); },
      [&](std::size_t i) { return L.diff(i + 1, 8); }, "A6:", blocks);
  return blocks;
}

CertificateBlock whole(const SignVector& eps, std::string name) {
  CertificateBlock block;
  block.name = std::move(name);
  for (std::size_t i = 0; i < eps.size(); ++i) block.terms.push_back({i, eps[i]});
  return block;
}

// Every sign vector generated by the blocks agrees with each block up to one
// global sign per block.
bool generated_by_blocks(const CertificateFamily& cert, const SignVector& eps) {
  for (const auto& block : cert.blocks) {
    int relative = 0;
    for (const auto& term : block.terms) {
      const int s = eps[term.root_index] * term.sign;
      if (relative == 0) relative = s;
      if (s != relative) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t CertificateFamily::root_count() const {
  std::size_t n = 0;
  for (const auto& block : blocks) n += block.terms.size();
  return n;
}

SignVector CertificateFamily::assemble(std::uint64_t flips) const {
  SignVector eps(root_count());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int f = ((flips >> k) & 1u) ? -1 : 1;
    for (const auto& term : blocks[k].terms) eps.set(term.root_index, f * term.sign);
  }
  return eps;
}

u128 CertificateFamily::certified_bound() const {
  return (u128{1} << blocks.size()) + 2 * static_cast<u128>(alternates.size());
}

std::optional<CertificateFamily> certificate(const FamilyRank& id) {
  require_admissible(id);
  if (lower_bound(id) == 0) return std::nullopt;

  const RootSystem system = positive_roots(id);
  CertificateFamily cert;
  cert.system_id = id;
  switch (id.family) {
    case Family::A: cert.blocks = type_a(system); break;
    case Family::C: cert.blocks = type_c(system); break;
    case Family::D: cert.blocks = type_d(system); break;
    case Family::E:
      cert.blocks = id.rank == 6 ? type_e6(system) : type_e8(system);
      break;
    case Family::F: cert.blocks = type_f4(system); break;
    case Family::G:
      cert.blocks.push_back(whole(SignVector({1, 1, 1, -1, -1, 1}), "G2"));
      cert.alternates.push_back(SignVector({1, 1, 1, 1, 1, -1}));
      break;
    case Family::B: return std::nullopt;
  }
  return cert;
}

Verification verify(const RootSystem& system, const CertificateFamily& cert) {
  if (!(cert.system_id == system.id)) {
    return {false, "certificate for " + to_string(cert.system_id) + " applied to " +
                       to_string(system.id)};
  }
  const std::size_t r = system.size();
  std::vector<bool> seen(r, false);
  for (const auto& block : cert.blocks) {
    if (block.terms.empty()) return {false, "empty block " + block.name};
    IntVector partial(system.ambient_dim, 0);
    for (const auto& term : block.terms) {
      if (term.root_index >= r) return {false, "root index out of range in " + block.name};
      if (term.sign != 1 && term.sign != -1) return {false, "bad sign in " + block.name};
      if (seen[term.root_index]) {
        return {false, "root " + std::to_string(term.root_index) + " used twice"};
      }
      seen[term.root_index] = true;
      const auto& root = system.roots[term.root_index];
      for (std::size_t c = 0; c < partial.size(); ++c) partial[c] += term.sign * root[c];
    }
    for (auto x : partial) {
      if (x != 0) return {false, "block " + block.name + " does not sum to zero"};
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!seen[i]) return {false, "root " + std::to_string(i) + " not covered by any block"};
  }
  for (std::size_t a = 0; a < cert.alternates.size(); ++a) {
    const SignVector& eps = cert.alternates[a];
    if (eps.size() != r) return {false, "alternate of wrong length"};
    for (auto x : signed_sum(system, eps)) {
      if (x != 0) return {false, "alternate " + std::to_string(a) + " does not sum to zero"};
    }
    if (generated_by_blocks(cert, eps)) {
      return {false, "alternate " + std::to_string(a) + " already generated by the blocks"};
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (cert.alternates[b] == eps || cert.alternates[b] == eps.negated()) {
        return {false, "duplicate alternate"};
      }
    }
  }
  return {true, "ok"};
}

u128 lower_bound(const FamilyRank& id) {
  require_admissible(id);
  const int n = id.rank;
  auto power = [](int exponent) {
    if (exponent >= 128) throw CountOverflow("lower bound exceeds 128 bits");
    return u128{1} << exponent;
  };
  switch (id.family) {
    case Family::A: return n % 2 == 0 ? power(n / 2) : 0;
    case Family::B: return 0;
    case Family::C: return (n % 4 == 0 || n % 4 == 3) ? power((n + 1) / 4) : 0;
    case Family::D: return (n % 4 == 0 || n % 4 == 1) ? power((n + 1) / 4) : 0;
    case Family::E: return n == 6 ? 13697920 : n == 7 ? 0 : 369600;
    case Family::F: return 34432;
    case Family::G: return 4;
  }
  return 0;
}

}  // namespace rootspin
