#include "eulerforge/series.hpp"

#include <cctype>

namespace eulerforge {

char param_name(ParamVar v) {
  switch (v) {
    case ParamVar::a: return 'a';
    case ParamVar::b: return 'b';
    case ParamVar::c: return 'c';
    case ParamVar::d: return 'd';
  }
  return '?';
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < kNumParams; ++i) {
    if (e_[i] == 0) continue;
    s += param_name(static_cast<ParamVar>(i));
    s += std::to_string(static_cast<int>(e_[i]));
  }
  return s;
}

Monomial Monomial::parse(std::string_view text) {
  Monomial m;
  size_t i = 0;
  while (i < text.size()) {
    char v = text[i++];
    int idx;
    switch (v) {
      case 'a': idx = 0; break;
      case 'b': idx = 1; break;
      case 'c': idx = 2; break;
      case 'd': idx = 3; break;
      default:
        throw std::invalid_argument("Monomial::parse: unknown variable in '" + std::string(text) + "'");
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("Monomial::parse: missing exponent in '" + std::string(text) + "'");
    int e = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      e = e * 10 + (text[i++] - '0');
    if (e <= 0 || e > 40)
      throw std::invalid_argument("Monomial::parse: bad exponent in '" + std::string(text) + "'");
    if (m.e_[idx] != 0)
      throw std::invalid_argument("Monomial::parse: repeated variable in '" + std::string(text) + "'");
    m.e_[idx] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::string LinearForm::str() const {
  std::string s;
  for (int i = 0; i < kNumParams; ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += c_[i].sign() > 0 ? " + " : " - ";
    else if (c_[i].sign() < 0) s += "-";
    Rational mag = c_[i].abs();
    if (!mag.is_one()) s += mag.str() + "*";
    s += param_name(static_cast<ParamVar>(i));
  }
  return s.empty() ? "0" : s;
}

TruncatedSeries<Rational> linear_series(const LinearForm& form, int truncation_degree) {
  TruncatedSeries<Rational> s(truncation_degree);
  for (int i = 0; i < kNumParams; ++i) {
    auto v = static_cast<ParamVar>(i);
    if (!form.coeff(v).is_zero()) s.add_term(Monomial::var(v), form.coeff(v));
  }
  return s;
}

}  // namespace eulerforge
