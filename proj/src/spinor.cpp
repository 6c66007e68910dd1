#include "rootspin/spinor.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "rootspin/errors.hpp"

namespace rootspin {

namespace {

void check_index(std::size_t j, const SpinorElement& eta) {
  if (j < 1 || j > eta.generators()) {
    throw IndexOutOfRange("generator index " + std::to_string(j) + " outside 1.." +
                          std::to_string(eta.generators()));
  }
}

// (-1)^(number of factors of m before y_j)
int koszul_sign(Monomial m, std::size_t j) {
  const Monomial below = (Monomial{1} << (j - 1)) - 1;
  return std::popcount(m & below) % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string Scalar::str() const {
  std::ostringstream out;
  out << '(' << a << ") + (" << b << ")i + (" << c << ")sqrt2 + (" << d << ")i*sqrt2";
  return out.str();
}

SpinorElement SpinorElement::monomial(std::size_t generators, Monomial m, Scalar coefficient) {
  SpinorElement eta(generators);
  eta.add(m, coefficient);
  return eta;
}

Scalar SpinorElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar{} : it->second;
}

void SpinorElement::add(Monomial m, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second = it->second + coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinorElement& SpinorElement::operator+=(const SpinorElement& other) {
  for (const auto& [m, s] : other.terms_) add(m, s);
  return *this;
}

SpinorElement& SpinorElement::operator-=(const SpinorElement& other) {
  for (const auto& [m, s] : other.terms_) add(m, -s);
  return *this;
}

SpinorElement SpinorElement::scaled(const Scalar& factor) const {
  SpinorElement out(generators_);
  for (const auto& [m, s] : terms_) out.add(m, s * factor);
  return out;
}

SpinorElement act_x(std::size_t j, const SpinorElement& eta) {
  check_index(j, eta);
  const Monomial bit = Monomial{1} << (j - 1);
  SpinorElement out(eta.generators());
  for (const auto& [m, s] : eta.terms()) {
    if (!(m & bit)) continue;
    out.add(m & ~bit, s * Scalar::i_sqrt2() * Scalar::real(koszul_sign(m, j)));
  }
  return out;
}

SpinorElement act_y(std::size_t j, const SpinorElement& eta) {
  check_index(j, eta);
  const Monomial bit = Monomial{1} << (j - 1);
  SpinorElement out(eta.generators());
  for (const auto& [m, s] : eta.terms()) {
    if (m & bit) continue;
    out.add(m | bit, s * Scalar::i_sqrt2() * Scalar::real(koszul_sign(m, j)));
  }
  return out;
}

SpinorElement act_e(std::size_t j, int axis, const SpinorElement& eta) {
  if (axis != 1 && axis != 2) throw IndexOutOfRange("axis must be 1 or 2");
  SpinorElement x = act_x(j, eta);
  const SpinorElement y = act_y(j, eta);
  if (axis == 1) {
    x += y;
    return x.scaled(Scalar::inv_sqrt2());
  }
  x -= y;
  return x.scaled(Scalar::imaginary(1) * Scalar::inv_sqrt2());
}

SpinorElement cartan_act(const RootSystem& system, const CartanElement& x,
                         const SpinorElement& eta) {
  if (x.size() != system.ambient_dim) {
    throw DimensionMismatch("Cartan element has " + std::to_string(x.size()) +
                            " coordinates, ambient dimension is " +
                            std::to_string(system.ambient_dim));
  }
  if (eta.generators() != system.size()) {
    throw DimensionMismatch("spinor over " + std::to_string(eta.generators()) +
                            " generators for " + std::to_string(system.size()) + " roots");
  }
  SpinorElement out(eta.generators());
  for (std::size_t j = 1; j <= system.size(); ++j) {
    const auto& root = system.roots[j - 1];
    Rational value = 0;
    for (std::size_t c = 0; c < root.size(); ++c) value += root[c] * x[c];
    value /= system.denominator;
    if (!value.numerator()) continue;
    out += act_e(j, 1, act_e(j, 2, eta)).scaled(Scalar::real(value / 2));
  }
  return out;
}

std::uint64_t invariant_dimension(const RootSystem& system, std::size_t limit_r,
                                  unsigned threads) {
  const std::size_t r = system.size();
  if (r > limit_r || r > 62) {
    throw ResourceLimit("oracle: r = " + std::to_string(r) + " exceeds limit " +
                        std::to_string(limit_r));
  }
  const std::size_t m = system.ambient_dim;
  std::vector<CartanElement> basis(m, CartanElement(m, 0));
  for (std::size_t k = 0; k < m; ++k) basis[k][k] = 1;

  const std::uint64_t monomials = std::uint64_t{1} << r;
  threads = detail::resolve_threads(threads);
  const std::size_t tasks = threads > 1 ? std::min<std::uint64_t>(monomials, 64) : 1;
  std::vector<std::uint64_t> partial(tasks, 0);
  detail::parallel_for(tasks, threads, [&](std::size_t task) {
    std::uint64_t kernel = 0;
    for (Monomial mono = task; mono < monomials; mono += tasks) {
      const SpinorElement eta = SpinorElement::monomial(r, mono);
      bool annihilated = true;
      for (const auto& x : basis) {
        const SpinorElement image = cartan_act(system, x, eta);
        for (const auto& [m2, s] : image.terms()) {
          if (m2 != mono) throw std::logic_error("Cartan action is not diagonal on monomials");
          if (!s.is_pure_imaginary()) {
            throw std::logic_error("Cartan eigenvalue is not purely imaginary: " + s.str());
          }
        }
        annihilated = annihilated && image.is_zero();
      }
      kernel += annihilated;
    }
    partial[task] = kernel;
  });
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace rootspin
