#include "eulerforge/gamma_series.hpp"

#include <stdexcept>

namespace eulerforge {

TruncatedSeries<ZetaPoly> rhs_gamma_series(const std::vector<GammaFactor>& factors,
                                           int truncation_degree) {
  const int n = truncation_degree;
  int half_balance = 0;
  for (const auto& f : factors) {
    if (f.exponent != 1 && f.exponent != -1)
      throw std::invalid_argument("rhs_gamma_series: exponent must be +1 or -1");
    if (f.base == GammaBase::half_plus) half_balance += f.exponent;
  }
  if (half_balance != 0)
    throw std::invalid_argument("rhs_gamma_series: unbalanced half-shifted factors (sqrt(pi) survives)");

  TruncatedSeries<ZetaPoly> log_sum(n);
  for (const auto& f : factors) {
    if (f.argument.is_zero()) continue;  // Gamma(1) or the lone Gamma(1/2)
    TruncatedSeries<Rational> power = linear_series(f.argument, n);
    TruncatedSeries<Rational> arg = power;
    for (int k = 1; k <= n; ++k) {
      if (k > 1) power = power * arg;
      if (power.is_zero()) break;
      ZetaPoly rho = sigma_tau_normalize(
          f.base == GammaBase::one_plus ? SigmaTau::sigma : SigmaTau::tau, k);
      Rational scale = Rational((k % 2 == 0) ? 1 : -1, k) * Rational(f.exponent);
      // exponent * (-1)^k rho_k / k * argument^k
      for (const auto& [mono, coeff] : power.terms()) {
        ZetaPoly c = rho;
        c *= coeff * scale;
        log_sum.add_term(mono, c);
      }
    }
  }
  return log_sum.exp();
}

}  // namespace eulerforge
