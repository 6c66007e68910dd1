#include "rootspin/rootsys.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "rootspin/errors.hpp"

namespace rootspin {

namespace {

// Unit vector builder over R^dim, 1-based indices as in the classical tables.
class Builder {
 public:
  Builder(std::size_t dim, std::int64_t scale) : dim_(dim), scale_(scale) {}

  IntVector zero() const { return IntVector(dim_, 0); }

  // coefficient * l_index, with index in 1..dim
  IntVector& add(IntVector& v, std::size_t index, std::int64_t coefficient) const {
    v[index - 1] += coefficient * scale_;
    return v;
  }

  IntVector all(std::int64_t coefficient) const {
    IntVector v(dim_, coefficient * scale_);
    return v;
  }

 private:
  std::size_t dim_;
  std::int64_t scale_;
};

void append_differences(std::vector<IntVector>& out, const Builder& b, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      IntVector v = b.zero();
      b.add(v, i, 1);
      b.add(v, j, -1);
      out.push_back(std::move(v));
    }
  }
}

void append_pair_sums(std::vector<IntVector>& out, const Builder& b, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      IntVector v = b.zero();
      b.add(v, i, 1);
      b.add(v, j, 1);
      out.push_back(std::move(v));
    }
  }
}

void append_singles(std::vector<IntVector>& out, const Builder& b, std::size_t n,
                    std::int64_t coefficient) {
  for (std::size_t i = 1; i <= n; ++i) {
    IntVector v = b.zero();
    b.add(v, i, coefficient);
    out.push_back(std::move(v));
  }
}

void append_triples(std::vector<IntVector>& out, const Builder& b, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        IntVector v = b.zero();
        b.add(v, i, 1);
        b.add(v, j, 1);
        b.add(v, k, 1);
        out.push_back(std::move(v));
      }
    }
  }
}

std::vector<IntVector> exceptional_e(std::size_t n) {
  Builder b(n, 1);
  std::vector<IntVector> roots;
  append_differences(roots, b, n);
  append_triples(roots, b, n);
  if (n == 6) {
    roots.push_back(b.all(1));
  } else if (n == 7) {
    for (std::size_t i = 1; i <= n; ++i) {
      IntVector v = b.all(1);
      b.add(v, i, -1);
      roots.push_back(std::move(v));
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      IntVector v = b.all(1);
      b.add(v, i, 1);
      roots.push_back(std::move(v));
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        IntVector v = b.all(1);
        b.add(v, i, -1);
        b.add(v, j, -1);
        roots.push_back(std::move(v));
      }
    }
  }
  return roots;
}

}  // namespace

Family parse_family(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      case 'E': return Family::E;
      case 'F': return Family::F;
      case 'G': return Family::G;
      default: break;
    }
  }
  throw InvalidRank("unknown family '" + text + "'");
}

char family_letter(Family family) { return static_cast<char>(family); }

std::string to_string(const FamilyRank& id) {
  return std::string(1, family_letter(id.family)) + std::to_string(id.rank);
}

bool is_admissible(const FamilyRank& id) {
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 3;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

void require_admissible(const FamilyRank& id) {
  if (!is_admissible(id)) {
    throw InvalidRank("rank out of range for family " + std::string(1, family_letter(id.family)) +
                      ": " + std::to_string(id.rank));
  }
}

std::size_t root_count(const FamilyRank& id) {
  require_admissible(id);
  const auto n = static_cast<std::size_t>(id.rank);
  switch (id.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootSystem positive_roots(const FamilyRank& id) {
  require_admissible(id);
  const auto n = static_cast<std::size_t>(id.rank);

  RootSystem system;
  system.id = id;
  system.ambient_dim = n;
  system.denominator = 1;
  auto& roots = system.roots;
  roots.reserve(root_count(id));

  switch (id.family) {
    case Family::A: {
      Builder b(n, 1);
      append_differences(roots, b, n);
      for (std::size_t i = 1; i <= n; ++i) {
        IntVector v = b.all(1);
        b.add(v, i, 1);
        roots.push_back(std::move(v));
      }
      break;
    }
    case Family::B: {
      Builder b(n, 1);
      append_differences(roots, b, n);
      append_pair_sums(roots, b, n);
      append_singles(roots, b, n, 1);
      break;
    }
    case Family::C: {
      Builder b(n, 1);
      append_differences(roots, b, n);
      append_pair_sums(roots, b, n);
      append_singles(roots, b, n, 2);
      break;
    }
    case Family::D: {
      Builder b(n, 1);
      append_differences(roots, b, n);
      append_pair_sums(roots, b, n);
      break;
    }
    case Family::E:
      roots = exceptional_e(n);
      break;
    case Family::F: {
      system.denominator = 2;
      Builder b(4, 2);
      append_differences(roots, b, 4);
      append_pair_sums(roots, b, 4);
      append_singles(roots, b, 4, 1);
      // (1/2)(l1 +- l2 +- l3 +- l4), + before - on each of l2, l3, l4
      for (int pattern = 0; pattern < 8; ++pattern) {
        IntVector v{1, 1, 1, 1};
        for (int k = 0; k < 3; ++k) {
          if (pattern & (4 >> k)) v[static_cast<std::size_t>(k) + 1] = -1;
        }
        roots.push_back(std::move(v));
      }
      break;
    }
    case Family::G:
      roots = {{1, 0}, {0, 1}, {-1, -1}, {1, -1}, {1, 2}, {2, 1}};
      break;
  }
  return system;
}

RootSystem RootSystem::subsystem(const std::vector<std::size_t>& indices) const {
  RootSystem sub;
  sub.id = id;
  sub.ambient_dim = ambient_dim;
  sub.denominator = denominator;
  sub.roots.reserve(indices.size());
  for (std::size_t index : indices) {
    if (index >= roots.size()) {
      throw IndexOutOfRange("root index " + std::to_string(index) + " out of range");
    }
    sub.roots.push_back(roots[index]);
  }
  return sub;
}

void write_root_list(std::ostream& out, const RootSystem& system) {
  out << family_letter(system.id.family) << ' ' << system.id.rank << ' ' << system.size() << ' '
      << system.ambient_dim << ' ' << system.denominator << '\n';
  for (const auto& root : system.roots) {
    for (std::size_t c = 0; c < root.size(); ++c) {
      if (c) out << ' ';
      out << root[c];
    }
    out << '\n';
  }
}

std::string format_root_list(const RootSystem& system) {
  std::ostringstream out;
  write_root_list(out, system);
  return out.str();
}

}  // namespace rootspin
