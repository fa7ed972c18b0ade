#pragma once

// ln Gamma on (0, inf). Stirling series with recursion shift to x >= 12;
// Taylor expansions around the zeros at x = 1 and x = 2 keep the result
// accurate in the relative sense there too. Chosen over Lanczos because the
// same Stirling tail is reused for very large arguments in the series
// machinery, where the shift never triggers.

namespace focklab {

// ln Gamma(x), x > 0. Throws DomainError for x <= 0.
double log_gamma(double x);

} // namespace focklab
