#include "dimdatum/character.hpp"

#include <stdexcept>

namespace dimdatum {

Rational CharacterElement::coeff(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Rational(0) : it->second;
}

void CharacterElement::add_term(const Weight& w, const Rational& c) {
  if ((int)w.size() != rank) throw std::invalid_argument("character term rank mismatch");
  auto it = terms.find(w);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

CharacterElement char_single(const Weight& w, const Rational& c) {
  CharacterElement e;
  e.rank = (int)w.size();
  if (!c.is_zero()) e.terms.emplace(w, c);
  return e;
}

CharacterElement char_zero(int rank) {
  CharacterElement e;
  e.rank = rank;
  return e;
}

CharacterElement cadd(const CharacterElement& a, const CharacterElement& b) {
  if (a.rank != b.rank) throw std::invalid_argument("character rank mismatch");
  CharacterElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, c);
  return r;
}

CharacterElement csub(const CharacterElement& a, const CharacterElement& b) {
  if (a.rank != b.rank) throw std::invalid_argument("character rank mismatch");
  CharacterElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, -c);
  return r;
}

CharacterElement cscale(const CharacterElement& a, const Rational& c) {
  CharacterElement r = char_zero(a.rank);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : a.terms) r.terms.emplace(w, cw * c);
  return r;
}

CharacterElement cmul(const CharacterElement& a, const CharacterElement& b) {
  if (a.rank != b.rank) throw std::invalid_argument("character rank mismatch");
  CharacterElement r = char_zero(a.rank);
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add_term(add(wa, wb), ca * cb);
  return r;
}

CharacterElement capply(const SignedPermutation& g, const CharacterElement& a) {
  CharacterElement r = char_zero(a.rank);
  for (const auto& [w, c] : a.terms) r.add_term(g.apply(w), c);
  return r;
}

CharacterElement caverage(const WeylSubgroup& W, const CharacterElement& a) {
  if (W.rank != a.rank) throw std::invalid_argument("character rank mismatch");
  CharacterElement sum = char_zero(a.rank);
  for (const auto& g : W.elements) sum = cadd(sum, capply(g, a));
  return cscale(sum, Rational(1, (long long)W.order()));
}

bool char_equal(const CharacterElement& a, const CharacterElement& b) {
  if (a.rank != b.rank) throw std::invalid_argument("char_equal: rank mismatch");
  return a.terms == b.terms;
}

bool dominant_integral_for(const RootSystem& phi, const Weight& lambda) {
  for (const auto& alpha : phi.positive) {
    long long nn = dot(alpha, alpha);
    long long num = 2 * dot(lambda, alpha);
    if (num % nn != 0 || num < 0) return false;
  }
  return true;
}

CharacterElement alternating_sum(const RootSystem& phi, const Weight& lambda) {
  if ((int)lambda.size() != phi.ambient) throw std::invalid_argument("alternating_sum: rank mismatch");
  if (!dominant_integral_for(phi, lambda))
    throw std::invalid_argument("alternating_sum: weight not dominant integral for the system");
  Weight d2 = delta2(phi);
  SignedWeyl W = weyl_group(phi);
  CharacterElement r = char_zero(phi.ambient);
  for (size_t i = 0; i < W.group.elements.size(); ++i) {
    Weight diff2 = sub(d2, W.group.elements[i].apply(d2));
    Weight diff(diff2.size());
    for (size_t k = 0; k < diff2.size(); ++k) {
      if (diff2[k] % 2 != 0) throw std::logic_error("alternating_sum: odd delta difference");
      diff[k] = diff2[k] / 2;
    }
    r.add_term(add(lambda, diff), Rational(W.sgn[i]));
  }
  return r;
}

CharacterElement averaged_character(const RootSystem& phi, const Weight& lambda,
                                    const WeylSubgroup& W) {
  if (W.rank != phi.ambient) throw std::invalid_argument("averaged_character: rank mismatch");
  for (const auto& alpha : phi.positive)
    if (!W.contains(reflection(alpha, phi.ambient)))
      throw std::invalid_argument("averaged_character: W does not contain the reflection in root " +
                                  weight_str(alpha));
  return caverage(W, alternating_sum(phi, lambda));
}

CharacterElement orbit_character(const Weight& lambda, const WeylSubgroup& W) {
  return caverage(W, char_single(lambda));
}

CharacterElement weyl_product(const RootSystem& phi) {
  CharacterElement prod = char_single(Weight(phi.ambient, 0));
  for (const auto& alpha : phi.roots)
    prod = cmul(prod, csub(char_single(Weight(phi.ambient, 0)), char_single(alpha)));
  size_t order = weyl_group(phi).group.order();
  return cscale(prod, Rational(1, (long long)order));
}

std::string char_text(const CharacterElement& a) {
  std::string s;
  for (const auto& [w, c] : a.terms) {
    if (!s.empty()) s += " ";
    s += c.str() + "*[" + weight_str(w) + "]";
  }
  return s.empty() ? "0" : s;
}

}  // namespace dimdatum
