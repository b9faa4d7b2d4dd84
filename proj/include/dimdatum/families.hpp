#ifndef DIMDATUM_FAMILIES_HPP
#define DIMDATUM_FAMILIES_HPP

#include <string>
#include <vector>

#include "dimdatum/character.hpp"
#include "dimdatum/polynomial.hpp"
#include "dimdatum/rootsystem.hpp"

namespace dimdatum {

/// The five determinant families attached to the classical sub-root systems
/// of BC_n. Bp is the sigma-twist of B.
enum class Family { A, B, Bp, C, D };

std::string family_name(Family f);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// n x n matrix of the family's entry formula at the weight
/// lambda = (a_1..a_n); indices i, j run 1..n:
///   A:  x_{|a_j+i-j|}
///   B:  x_{|a_j+i-j|} - x_{|a_j+2n+1-i-j|}
///   Bp: x_{|a_j+i-j|} + x_{|a_j+2n+1-i-j|}
///   C:  x_{|a_j+i-j|} - x_{|a_j+2n+2-i-j|}
///   D:  x_{|a_j+i-j|} + x_{|a_j+2n-i-j|}
PolyMatrix family_matrix(Family f, const Weight& lambda);

/// Determinant by Laplace expansion over column subsets.
Polynomial det_cofactor(const PolyMatrix& m);
/// Fraction-free Bareiss elimination with exact polynomial division.
Polynomial det_bareiss(const PolyMatrix& m);
/// Bareiss, with cofactor expansion for sizes <= 4.
Polynomial det_poly(const PolyMatrix& m);

/// Dominance condition of the family's root system:
///   A: a_1 >= ... >= a_n;  B/Bp/C: additionally a_n >= 0;
///   D: a_1 >= ... >= a_{n-1} >= |a_n|.
bool family_dominant(Family f, const Weight& lambda);

/// Family polynomial: the matrix determinant (half of it for D, which is
/// always integral). Throws on non-dominant weights. n = 0 gives 1.
Polynomial family_poly(Family f, const Weight& lambda);

/// The linear map E o j_n: [v] -> prod_i x_{|v_i|} with x_0 factors dropped,
/// extended to sparse characters. Symmetrization over W_{BC_n} is built into
/// the formula, so non-invariant inputs are handled as their averages.
Polynomial encode(const CharacterElement& u);

/// Classical realization backing each family (Bp shares B's system).
RootSystem family_system(Family f, int n);

/// Cross-check of the two routes to a family polynomial: the determinant
/// expansion against the encoded alternating Weyl sum (sigma-twisted for Bp).
bool verify_det_equals_weylsum(Family f, const Weight& lambda);

/// Admissibility for the odd/even product identities:
///   odd:  2m+1 coordinates, non-increasing, a_i + a_{2m+2-i} = 0 (i <= m);
///   even: 2m coordinates, non-increasing, a_i + a_{2m+1-i} = 0 (i <= m).
bool admissible_odd(const Weight& lambda);
bool admissible_even(const Weight& lambda);

/// Exact polynomial identity a_{2m+1} = c_m(a_1..a_m) d_{m+1}(a_1..a_{m+1})
/// resp. a_{2m} = b_m(a_1..a_m) b'_m(a_1..a_m). Throws on inadmissible input.
bool verify_factorization(bool odd, const Weight& lambda);

struct IrreducibilityOutcome {
  enum class Status { Proven, Inapplicable, Failed };
  Status status = Status::Inapplicable;
  std::string note;
  bool proven() const { return status == Status::Proven; }
};

/// Inductive irreducibility check for families B, Bp, C, D: split off the
/// top indeterminate u, p = u q + r with q the size-(n-1) instance, recurse
/// on q and test q does not divide r by exact division. Constants with
/// pre-substitution degree one count as the degree-one monomial in the
/// eliminated variable.
IrreducibilityOutcome verify_irreducible_inductive(Family f, const Weight& lambda);

}  // namespace dimdatum

#endif
