#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "steiner/moments.hpp"

namespace steiner {

struct PropertyResult {
  std::string property;
  std::size_t samples = 0;
  double worst = 0;      // worst residual observed for the property
  double threshold = 0;  // pass when worst <= threshold
  bool pass = false;
};

// Runs every structural property of the maps on freshly drawn samples:
// shift additivity and commutativity, closure, the closed-form identities,
// Jacobian consistency, the complex group laws modulo involution, the
// extension algebra and its affine image, and the geometric oracle. Each
// property draws from its own deterministic stream derived from seed, so
// results are reproducible and independent of property order.
std::vector<PropertyResult> run_property_suite(std::size_t samples,
                                               std::uint64_t seed,
                                               const Tolerances& tol = {});

}  // namespace steiner
