// Counting algebra morphisms of a finite presentation into Z_d by
// exhaustive search over the free-variable assignments.
#pragma once

#include <cordal/scalar.hpp>
#include <cordal/torus.hpp>

#include <cstdint>

namespace cordal {

// Number of assignments v_1..v_m in Z_d^m killing every relation after
// specializing coefficients at (l0, m0, g0). Refuses SearchTooLarge when
// d^m exceeds `search_cap`.
inline constexpr std::int64_t kAugSearchCap = 100000000;  // 10^8

std::int64_t count_augmentations(const Presentation& pres, const SpecParams& spec,
                                 int jobs = 0, std::int64_t search_cap = kAugSearchCap);
// single-threaded reference path
std::int64_t count_augmentations_serial(const Presentation& pres,
                                        const SpecParams& spec,
                                        std::int64_t search_cap = kAugSearchCap);

// True when the single assignment v_r -> 2*Gamma_0 (all r) kills every
// relation at lambda = mu = 1; it always should.
bool constant_augmentation_check(const Presentation& pres, std::int64_t d,
                                 std::int64_t g0);

}  // namespace cordal
