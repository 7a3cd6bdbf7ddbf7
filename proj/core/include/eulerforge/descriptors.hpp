#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "eulerforge/bigfloat.hpp"
#include "eulerforge/gamma_series.hpp"
#include "eulerforge/harmonic.hpp"
#include "eulerforge/series.hpp"

namespace eulerforge {

/// The three summand weight patterns: C(2k,k)/4^k, 1/2^k, 3^k/C(2k,k).
enum class WeightFamily { w1, w2, w3 };

std::string weight_name(WeightFamily w);
WeightFamily parse_weight(std::string_view name);

/// One parameter of the substituted hypergeometric series, value
/// shift + linear(params).
struct HypergeometricParam {
  Rational shift;
  LinearForm linear;
};

struct RawHypergeometric {
  std::vector<HypergeometricParam> upper;
  std::vector<HypergeometricParam> lower;
  Rational argument;
};

/// Parameter region guard: requires offset + linear(params) > 0.
struct ConvergenceCondition {
  LinearForm linear;
  Rational offset;
};

/// A substituted summation theorem, frozen as data: the left side's summand
/// factorization (prefactor monomial, weight family, base denominator power,
/// finite products) and the right side's Gamma-factor list, plus the raw
/// hypergeometric parameters for the independent numeric oracle.
struct TheoremDescriptor {
  std::string name;
  Rational prefactor_coeff;
  Monomial prefactor;
  WeightFamily weight = WeightFamily::w1;
  int base_denom_exponent = 1;
  std::vector<ProductFactor> lhs_factors;
  std::vector<GammaFactor> rhs_factors;
  RawHypergeometric raw;
  std::vector<ConvergenceCondition> conditions;
};

/// The four built-in descriptors: "gauss", "watson", "bailey", "wang".
const TheoremDescriptor& descriptor(std::string_view name);
const std::vector<const TheoremDescriptor*>& all_descriptors();

using ParamValues = std::array<Rational, 4>;

/// Partial sum of the factorized summand:
///   1 + prefactor(params) * sum_{k=1}^{K} weight(k)/k^i0 * prod factors(k).
/// Throws std::domain_error if the convergence guard fails or a factor in a
/// denominator vanishes.
BigFloat descriptor_term_numeric(const TheoremDescriptor& d, const ParamValues& params,
                                 long max_terms, mpfr_prec_t precision_bits);

/// The same partial sum computed directly from Pochhammer ratios of the
/// substituted hypergeometric series -- an independent code path.
BigFloat raw_hypergeometric_numeric(const TheoremDescriptor& d, const ParamValues& params,
                                    long max_terms, mpfr_prec_t precision_bits);

/// Numeric value of the Gamma-factor product at a rational parameter point.
BigFloat gamma_ratio_numeric(const std::vector<GammaFactor>& factors, const ParamValues& params,
                             mpfr_prec_t precision_bits);

}  // namespace eulerforge
