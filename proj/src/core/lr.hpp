#pragma once

#include "core/partition.hpp"

namespace schub {

// Littlewood-Richardson coefficient c^lambda_{mu,nu}, computed by counting
// semistandard fillings of lambda/mu with content nu whose reverse reading
// word is a ballot sequence. This is deliberately a separate code path from
// the sliding/rectification machinery so the two can cross-check each other.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schub
