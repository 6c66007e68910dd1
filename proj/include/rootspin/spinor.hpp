#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rootspin/rootsys.hpp"

namespace rootspin {

using Rational = boost::rational<std::int64_t>;

// Exact element a + b i + c sqrt2 + d i sqrt2 of Q[i, sqrt2].
struct Scalar {
  Rational a{0}, b{0}, c{0}, d{0};

  static Scalar real(Rational x) { return {x, 0, 0, 0}; }
  static Scalar imaginary(Rational x) { return {0, x, 0, 0}; }
  static Scalar i_sqrt2() { return {0, 0, 0, 1}; }
  static Scalar inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

  // Rational == int recurses under C++20 rewritten comparisons; compare
  // numerators instead.
  bool is_zero() const { return !a.numerator() && !b.numerator() && !c.numerator() && !d.numerator(); }
  // Lies in Q[i], i.e. the sqrt2 parts vanish.
  bool is_gaussian() const { return !c.numerator() && !d.numerator(); }
  bool is_pure_imaginary() const { return !a.numerator() && is_gaussian(); }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Scalar operator-(const Scalar& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  // i^2 = -1, sqrt2^2 = 2
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    return {x.a * y.a - x.b * y.b + Rational(2) * (x.c * y.c - x.d * y.d),
            x.a * y.b + x.b * y.a + Rational(2) * (x.c * y.d + x.d * y.c),
            x.a * y.c + x.c * y.a - x.b * y.d - x.d * y.b,
            x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
  }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string str() const;
};

// Bit j-1 set <=> y_j is a factor; factors are kept in ascending order.
using Monomial = std::uint64_t;

// Element of the exterior algebra on y_1..y_r (r = generators), stored as a
// sparse map without zero coefficients.
class SpinorElement {
 public:
  explicit SpinorElement(std::size_t generators = 0) : generators_(generators) {}

  static SpinorElement monomial(std::size_t generators, Monomial m, Scalar coefficient = Scalar::real(1));

  std::size_t generators() const { return generators_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Monomial m) const;

  void add(Monomial m, const Scalar& coefficient);
  SpinorElement& operator+=(const SpinorElement& other);
  SpinorElement& operator-=(const SpinorElement& other);
  SpinorElement scaled(const Scalar& factor) const;

  friend bool operator==(const SpinorElement&, const SpinorElement&) = default;

 private:
  std::size_t generators_;
  std::map<Monomial, Scalar> terms_;
};

// x_j . eta = i sqrt2 (x_j contracted into eta); j is 1-based.
// Throws IndexOutOfRange.
SpinorElement act_x(std::size_t j, const SpinorElement& eta);
// y_j . eta = i sqrt2 (y_j wedge eta).
SpinorElement act_y(std::size_t j, const SpinorElement& eta);
// Real generators e_1 = (x_j + y_j)/sqrt2, e_2 = i (x_j - y_j)/sqrt2 for
// axis 1 and 2 respectively.
SpinorElement act_e(std::size_t j, int axis, const SpinorElement& eta);

// Coordinates of X against the dual basis of l_1..l_m; a_i(X) is the dot
// product with the unscaled root.
using CartanElement = std::vector<Rational>;

// (1/2) sum_j a_j(X) e^(j)_1 e^(j)_2 . eta. Throws DimensionMismatch.
SpinorElement cartan_act(const RootSystem& system, const CartanElement& x,
                         const SpinorElement& eta);

inline constexpr std::size_t kDefaultOracleLimit = 14;

// Dimension of the common kernel of the Cartan action on the 2^r-dimensional
// exterior algebra. Throws ResourceLimit past limit_r; std::logic_error if
// the action is found not to be diagonal with imaginary eigenvalues.
std::uint64_t invariant_dimension(const RootSystem& system,
                                  std::size_t limit_r = kDefaultOracleLimit,
                                  unsigned threads = 1);

}  // namespace rootspin
