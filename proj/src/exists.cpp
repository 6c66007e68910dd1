#include <algorithm>

#include "rootspin/certs.hpp"
#include "rootspin/errors.hpp"
#include "rootspin/sigsum.hpp"

namespace rootspin {

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// The canonical system for the id, when `system` is exactly that.
bool is_canonical(const RootSystem& system) {
  if (!is_admissible(system.id)) return false;
  const RootSystem canonical = positive_roots(system.id);
  return canonical.roots == system.roots && canonical.denominator == system.denominator;
}

}  // namespace

Existence exists_strong_dependence(const RootSystem& system, const CountOptions& options) {
  Existence result;
  result.obstruction = obstruction_2L(system);
  if (!result.obstruction.pass) {
    result.exists = false;
    result.evidence = Evidence::Obstruction;
    return result;
  }

  if (is_canonical(system)) {
    if (auto cert = certificate(system.id); cert && verify(system, *cert)) {
      SignVector witness = cert->assemble();
      if (is_zero(signed_sum(system, witness))) {
        result.exists = true;
        result.evidence = Evidence::Certificate;
        result.witness = std::move(witness);
        return result;
      }
    }
  }

  result.evidence = Evidence::Search;
  result.witness = find_witness_mitm(system, options);
  result.exists = result.witness.has_value();
  return result;
}

}  // namespace rootspin
