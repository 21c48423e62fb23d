#pragma once

#include "feyngraph/rational.hpp"

#include <vector>

namespace feyngraph {

// Exact rank by fraction-free (Bareiss) elimination. Row denominators are
// cleared first; all arithmetic stays in integers.
long rank_exact(std::vector<std::vector<Rational>> mat);

// Exact matrix product, for differential-squared checks.
std::vector<std::vector<Rational>> mat_mul(const std::vector<std::vector<Rational>>& a,
                                           const std::vector<std::vector<Rational>>& b);

bool mat_is_zero(const std::vector<std::vector<Rational>>& a);

} // namespace feyngraph
