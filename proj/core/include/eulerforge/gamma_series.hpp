#pragma once

#include <vector>

#include "eulerforge/constants.hpp"
#include "eulerforge/series.hpp"

namespace eulerforge {

/// Gamma(1 + z) expands as exp(sum (-1)^k sigma_k z^k / k) and
/// Gamma(1/2 + z) as sqrt(pi) exp(sum (-1)^k tau_k z^k / k).
enum class GammaBase { one_plus, half_plus };

/// One Gamma factor of a theorem's closed form: Gamma(base + argument)^exponent,
/// argument a linear form in the parameters with zero constant term.
struct GammaFactor {
  int exponent = 1;  // +1 or -1
  GammaBase base = GammaBase::one_plus;
  LinearForm argument;
};

/// Expands a product of Gamma factors into a truncated series over ZetaPoly:
///   exp( sum_f exponent_f * sum_{k=1}^{N} (-1)^k rho_k / k * argument_f^k ),
/// where rho_k is sigma_k for Gamma(1+.) and tau_k for Gamma(1/2+.), already
/// normalized into the {gamma, ln2, zeta} basis. The half-shifted factors
/// must balance (equal +1/-1 counts) so the sqrt(pi) powers cancel; anything
/// else throws. The constant term of the result is 1.
TruncatedSeries<ZetaPoly> rhs_gamma_series(const std::vector<GammaFactor>& factors,
                                           int truncation_degree);

}  // namespace eulerforge
