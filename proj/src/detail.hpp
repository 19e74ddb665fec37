#pragma once

#include "turaev/braid.hpp"
#include "turaev/yang_baxter.hpp"

namespace turaev {

Complex integer_power(Complex base, long exp);

/// alpha^-writhe(b) * beta^-strands(b).
Complex scalar_prefactor(const EnhancedYB& e, const BraidWord& b);

}  // namespace turaev
