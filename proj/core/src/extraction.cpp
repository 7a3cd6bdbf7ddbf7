#include "eulerforge/extraction.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace eulerforge {

std::map<Monomial, SumExpression> expand_lhs(const TheoremDescriptor& d, int degree) {
  TruncatedSeries<HarmonicPoly> product =
      TruncatedSeries<HarmonicPoly>::constant(HarmonicPoly(Rational(1)), degree);
  for (const auto& f : d.lhs_factors) product = product * product_expansion(f, degree);
  product = product.shifted(d.prefactor, d.prefactor_coeff);

  std::map<Monomial, SumExpression> out;
  for (const auto& [mono, poly] : product.terms())
    out.emplace(mono, SumExpression{d.weight, d.base_denom_exponent, poly});
  return out;
}

TruncatedSeries<ZetaPoly> expand_rhs(const TheoremDescriptor& d, int degree) {
  return rhs_gamma_series(d.rhs_factors, degree);
}

void canonicalize(SumExpression& lhs, ZetaPoly& rhs) {
  if (lhs.poly.is_zero()) return;
  int p = lhs.poly.min_kinv_power();
  if (p > 0) {
    lhs.poly = lhs.poly.divided_by_kinv(p);
    lhs.denom_exponent += p;
  }
  Rational scale = lhs.poly.content();
  if (lhs.poly.leading_sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    Rational inv = scale.inverse();
    lhs.poly *= inv;
    rhs *= inv;
  }
}

std::vector<Identity> extract_identities(const TheoremDescriptor& d, int degree) {
  auto lhs_map = expand_lhs(d, degree);
  auto rhs_series = expand_rhs(d, degree);

  if (!(rhs_series.coeff(Monomial()) == ZetaPoly(Rational(1))))
    throw std::logic_error("extract_identities: right side constant term is not 1 for '" +
                           d.name + "'");
  for (const auto& [mono, coeff] : rhs_series.terms()) {
    if (mono.is_unit()) continue;
    if (coeff.depends_on_gamma())
      throw std::logic_error("extract_identities: Euler gamma survives in '" + d.name + ":" +
                             mono.str() + "'");
    if (lhs_map.find(mono) == lhs_map.end())
      throw std::logic_error("extract_identities: descriptor inconsistency for '" + d.name +
                             "': right side has " + mono.str() + " but left side does not");
  }

  std::vector<Identity> out;
  out.reserve(lhs_map.size());
  for (auto& [mono, expr] : lhs_map) {
    ZetaPoly rhs = rhs_series.coeff(mono);
    if (rhs.is_zero())
      throw std::logic_error("extract_identities: descriptor inconsistency for '" + d.name +
                             "': left side has " + mono.str() + " but right side does not");
    Identity identity;
    identity.lhs = expr;
    identity.rhs = std::move(rhs);
    canonicalize(identity.lhs, identity.rhs);
    identity.id = d.name + ":" + mono.str();
    identity.provenance = ExtractionProvenance{d.name, mono};
    out.push_back(std::move(identity));
  }
  return out;
}

std::string combination_id(const std::vector<std::pair<std::string, Rational>>& parents,
                           bool simplified) {
  std::string key;
  for (const auto& [id, coeff] : parents) key += id + "*" + coeff.str() + ";";
  if (simplified) key += "simplify";
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("combo:") + buf;
}

Identity combine(const std::vector<std::pair<const Identity*, Rational>>& parents, bool simplify,
                 const std::string& tag) {
  if (parents.empty()) throw std::invalid_argument("combine: no parents");
  const WeightFamily weight = parents.front().first->lhs.weight;
  int common_exponent = parents.front().first->lhs.denom_exponent;
  for (const auto& [p, coeff] : parents) {
    if (p->lhs.weight != weight)
      throw std::invalid_argument("combine: mixed weight families");
    common_exponent = std::max(common_exponent, p->lhs.denom_exponent);
  }

  HarmonicPoly poly;
  ZetaPoly rhs;
  for (const auto& [p, coeff] : parents) {
    HarmonicPoly scaled = p->lhs.poly;
    int gap = common_exponent - p->lhs.denom_exponent;
    if (gap > 0)
      scaled = scaled * HarmonicPoly::term(Rational(1),
                                           HarmonicMonomial::symbol(HarmonicSymbol::kinv(), gap));
    scaled *= coeff;
    poly += scaled;
    ZetaPoly r = p->rhs;
    r *= coeff;
    rhs += r;
  }
  if (simplify) poly = hpoly_shift_rewrite(poly);

  if (poly.is_zero() && !rhs.is_zero())
    throw std::logic_error("combine: zero left side with nonzero right side");

  Identity identity;
  identity.lhs = SumExpression{weight, common_exponent, std::move(poly)};
  identity.rhs = std::move(rhs);
  canonicalize(identity.lhs, identity.rhs);

  CombinationProvenance prov;
  for (const auto& [p, coeff] : parents) prov.parents.emplace_back(p->id, coeff);
  prov.simplified = simplify;
  prov.tag = tag;
  identity.id = combination_id(prov.parents, simplify);
  identity.provenance = std::move(prov);
  return identity;
}

}  // namespace eulerforge
