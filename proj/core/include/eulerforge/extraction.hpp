#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eulerforge/constants.hpp"
#include "eulerforge/descriptors.hpp"
#include "eulerforge/harmonic.hpp"

namespace eulerforge {

/// One side of an identity: sum_k weight(k)/k^denom_exponent * poly(k).
struct SumExpression {
  WeightFamily weight = WeightFamily::w1;
  int denom_exponent = 1;
  HarmonicPoly poly;
};

struct ExtractionProvenance {
  std::string theorem;
  Monomial monomial;
};

struct CombinationProvenance {
  std::vector<std::pair<std::string, Rational>> parents;  // (parent id, coefficient)
  bool simplified = false;
  std::string tag;  // optional human label
};

using Provenance = std::variant<ExtractionProvenance, CombinationProvenance>;

struct IdentityStatus {
  enum class State { unverified, verified, failed };
  State state = State::unverified;
  std::string detail;  // achieved |diff| when verified, the diff when failed
};

/// A generated equation sum_k weight * poly / k^i = rhs, with provenance.
struct Identity {
  std::string id;
  SumExpression lhs;
  ZetaPoly rhs;
  Provenance provenance;
  IdentityStatus status;
};

/// Expands the descriptor's left side to total degree N and returns, per
/// monomial, the harmonic-polynomial coefficient together with the weight
/// family and base denominator exponent. Every returned monomial is divisible
/// by the prefactor; nothing else appears.
std::map<Monomial, SumExpression> expand_lhs(const TheoremDescriptor& d, int degree);

/// The descriptor's right side as a Gamma-factor series (constant term 1).
TruncatedSeries<ZetaPoly> expand_rhs(const TheoremDescriptor& d, int degree);

/// Equates coefficients monomial-by-monomial and emits one identity per
/// monomial, normalized by the rational content of the harmonic polynomial
/// with the sign fixed so the leading harmonic monomial is positive.
/// A monomial present on one side but not the other signals a descriptor bug
/// and throws std::logic_error, as does a surviving Euler-gamma term.
std::vector<Identity> extract_identities(const TheoremDescriptor& d, int degree);

/// Rational linear combination of identities sharing a weight family, over a
/// common denominator exponent. With simplify set, index-shifted H symbols
/// are eliminated first (H_{k-1}^(r) -> H_k^(r) - (1/k)^r); common 1/k powers
/// are then folded into the denominator exponent and the result is
/// content/sign normalized. A zero combination with nonzero right side
/// throws std::logic_error.
Identity combine(const std::vector<std::pair<const Identity*, Rational>>& parents, bool simplify,
                 const std::string& tag = "");

/// Folds common 1/k powers into the denominator exponent and divides both
/// sides by the signed rational content of the polynomial. No-op on zero.
void canonicalize(SumExpression& lhs, ZetaPoly& rhs);

/// Stable id for a combination: "combo:" + 64-bit FNV-1a over parents,
/// coefficients and the simplify flag.
std::string combination_id(const std::vector<std::pair<std::string, Rational>>& parents,
                           bool simplified);

}  // namespace eulerforge
