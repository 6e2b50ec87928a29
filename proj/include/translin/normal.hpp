#pragma once

namespace translin {

double normal_pdf(double x) noexcept;
double normal_cdf(double x) noexcept;

/// K with Phi(K) = p for p in (0, 1). Wichura's AS241 rational
/// approximation followed by one Newton correction against erfc.
double normal_quantile(double p);

}  // namespace translin
