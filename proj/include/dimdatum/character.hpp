#ifndef DIMDATUM_CHARACTER_HPP
#define DIMDATUM_CHARACTER_HPP

#include <map>
#include <string>

#include "dimdatum/rational.hpp"
#include "dimdatum/rootsystem.hpp"
#include "dimdatum/weight.hpp"

namespace dimdatum {

/// Element of the group algebra Q[Z^n]: finite sparse map from weights to
/// rational coefficients. Terms are kept in lexicographic coordinate order
/// so serialized forms are byte-stable. Zero coefficients are never stored.
struct CharacterElement {
  int rank = 0;
  std::map<Weight, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  Rational coeff(const Weight& w) const;
  void add_term(const Weight& w, const Rational& c);
};

CharacterElement char_single(const Weight& w, const Rational& c = Rational(1));
CharacterElement char_zero(int rank);

CharacterElement cadd(const CharacterElement& a, const CharacterElement& b);
CharacterElement csub(const CharacterElement& a, const CharacterElement& b);
CharacterElement cscale(const CharacterElement& a, const Rational& c);
/// Convolution product: [u][v] = [u+v], extended bilinearly.
CharacterElement cmul(const CharacterElement& a, const CharacterElement& b);
/// Group action: g . sum c_w [w] = sum c_w [g w].
CharacterElement capply(const SignedPermutation& g, const CharacterElement& a);
/// (1/|W|) sum_{g in W} g . a
CharacterElement caverage(const WeylSubgroup& W, const CharacterElement& a);

/// Exact coefficient-wise equality; throws on rank mismatch.
bool char_equal(const CharacterElement& a, const CharacterElement& b);

/// lambda dominant and integral for phi: 2(lambda,alpha)/(alpha,alpha) a
/// nonnegative integer for every positive root.
bool dominant_integral_for(const RootSystem& phi, const Weight& lambda);

/// sum_{w in W_phi} sgn(w) [lambda + delta - w delta]. Throws unless lambda
/// is dominant and integral for phi.
CharacterElement alternating_sum(const RootSystem& phi, const Weight& lambda);

/// (1/|W|) sum_{g in W} g(alternating_sum(phi, lambda)). W must contain all
/// reflections of phi.
CharacterElement averaged_character(const RootSystem& phi, const Weight& lambda,
                                    const WeylSubgroup& W);

/// (1/|W|) sum_{g in W} [g lambda].
CharacterElement orbit_character(const Weight& lambda, const WeylSubgroup& W);

/// (1/|W_phi|) prod_{alpha in phi} (1 - [alpha]).
CharacterElement weyl_product(const RootSystem& phi);

/// Canonical text form, one "coeff*[w]" per term in term order.
std::string char_text(const CharacterElement& a);

}  // namespace dimdatum

#endif
