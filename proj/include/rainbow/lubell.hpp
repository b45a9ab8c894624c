#pragma once

// Lubell mass in exact rational arithmetic, and the max-partition of the
// maximal chains of 2^[n] with respect to a family.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/family.hpp"

namespace rainbow {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// sum over members F of 1 / C(n, |F|).
Rational lubell_mass(const SetFamily& family);

// Lubell mass of D_F(g) measured in the |g|-cube: sum over members H subset
// of g of 1 / C(|g|, |H|).
Rational lambda_below(const SetFamily& family, Mask g);

struct MaxPartitionClass {
  Mask top;
  // Maximal chains of 2^[n] whose largest member of the family is `top`.
  std::uint64_t chain_count;
};

// One class per member; chains meeting no member are left out. n <= 20.
std::vector<MaxPartitionClass> max_partition(const SetFamily& family);

// sum over classes of |C_F| / n! * lambda_below(F, F). Equal to the Lubell
// mass; kept separate so the two routes can be compared.
Rational lubell_by_max_partition(const SetFamily& family);

}  // namespace rainbow
