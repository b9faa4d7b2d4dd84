#ifndef DIMDATUM_AFFINE_HPP
#define DIMDATUM_AFFINE_HPP

#include <map>
#include <string>
#include <vector>

#include "dimdatum/character.hpp"
#include "dimdatum/rootsystem.hpp"
#include "dimdatum/weight.hpp"

namespace dimdatum {

/// Compact abelian group S with cyclic component group: X*(S) = Z^rank (+) Z/order.
struct GeneralizedTorus {
  int rank = 0;
  int order = 1;
};

/// Character of S: finite part on the identity component plus a torsion
/// residue mod the component order.
struct AffineWeight {
  Weight fin;
  int tor = 0;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.fin == b.fin && a.tor == b.tor;
  }
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (a.fin != b.fin) return a.fin < b.fin;
    return a.tor < b.tor;
  }
};

std::string affine_weight_str(const AffineWeight& a);

/// Multiplicity data over one reduced restricted root alpha':
/// m1 = |{beta : beta| = alpha'}|, m2 = |{beta : beta| = 2 alpha'}|,
/// m = m1 + 2 m2.
struct AffineRayData {
  Weight base;
  int m1 = 0, m2 = 0, m = 0;
};

struct AffineRootSystem {
  GeneralizedTorus torus;
  std::string label;
  std::vector<AffineWeight> roots;  // sorted
  std::vector<Weight> restricted;   // R', sorted unique finite parts
  std::vector<AffineRayData> rays;  // one per reduced alpha'

  bool has(const AffineWeight& a) const;
  const AffineRayData* ray(const Weight& alpha) const;
};

/// Builds the derived fields (restricted roots, per-ray multiplicities).
AffineRootSystem make_affine(GeneralizedTorus t, std::vector<AffineWeight> roots,
                             const std::string& label);

struct AffineValidation {
  bool ok = true;
  std::string first_violation;
};

/// Checks the affine root system axioms: restrictions inside the strong
/// integrality system of Z^rank, reflection closure, no doubled roots, and
/// the arithmetic-progression fiber shapes (with the divisibility
/// m1 | order they imply).
AffineValidation validate_affine(const AffineRootSystem& R);

/// Catalog entries. Torus order is m for kind 1 and 2m for kinds 2-4;
/// multiplicities scale with m (the fixed classical values are the m = 1
/// pattern):
///   1: (m Phi0, Phi0), phi0 one of A1, An, Bn, Cn, Dn (A1 realized as
///      {+-2 e1} in the rank-one weight lattice);
///   2: (m A_{2n}, BC_n), n >= 1;
///   3: (m A_{2n-1}, C_n), n >= 2;
///   4: (m D_n, B_{n-1}), n >= 4.
AffineRootSystem affine_catalog(int kind, int m, int n, const std::string& phi0 = "");

/// Selector syntax: "m*Phi0:Phi0@m=2,Phi0=A1", "m*A2n:BCn@m=1,n=1",
/// "m*A2n-1:Cn@m=2,n=2", "m*Dn:Bn-1@m=1,n=4".
AffineRootSystem parse_affine_selector(const std::string& selector);

/// Sparse rational combination of characters of S.
struct AffineCharacter {
  GeneralizedTorus torus;
  std::map<AffineWeight, Rational> terms;
  void add_term(const AffineWeight& w, const Rational& c);
};

std::string affine_char_text(const AffineCharacter& a);
bool affine_char_equal(const AffineCharacter& a, const AffineCharacter& b);

/// Automorphism of X*(S) of the signed-permutation-with-torsion shape:
/// (lam, t) -> (w lam, t + v . lam mod order).
struct AffineAut {
  SignedPermutation w;
  std::vector<int> v;

  AffineWeight apply(const AffineWeight& a, int order) const;
  AffineAut compose(const AffineAut& o, int order) const;  // this after o
  friend bool operator==(const AffineAut& a, const AffineAut& b) {
    return a.w == b.w && a.v == b.v;
  }
  friend bool operator<(const AffineAut& a, const AffineAut& b) {
    if (!(a.w == b.w)) return a.w < b.w;
    return a.v < b.v;
  }
};

AffineCharacter aff_apply(const AffineAut& g, const AffineCharacter& a);

/// Section of the restriction map over the reduced restricted roots,
/// determined by torsion choices on a simple system.
struct LiftingData {
  std::vector<Weight> simples;
  std::vector<int> simple_tor;
  std::map<Weight, int> section;  // reduced restricted root -> lift torsion
};

/// variant-th admissible lifting in a deterministic enumeration (variant 0
/// always exists for catalog entries; if fewer variants exist the last one
/// repeats). Throws when no admissible lifting exists.
LiftingData choose_lifting(const AffineRootSystem& R, int variant);

struct DeltaA {
  AffineWeight delta2;  // 2 delta_R
  AffineCharacter A;    // (1/|W_{R'}|) sum_w det(w) [delta - w delta]
  LiftingData lifting;
  size_t wr_order = 1;  // |W_{R'}|
};

DeltaA delta_and_A(const AffineRootSystem& R, int lifting_variant = 0);

/// Group generated by the reflections in all roots of R, as affine
/// automorphisms.
std::vector<AffineAut> affine_weyl_group(const AffineRootSystem& R);
/// Group generated by the reflections in the section lifts of the simple
/// roots (isomorphic to W_{R'}).
std::vector<AffineAut> section_weyl_group(const AffineRootSystem& R, const LiftingData& lifting);
/// All automorphisms (w, v): hyperoctahedral w times every torsion covector.
std::vector<AffineAut> full_affine_automorphisms(const AffineRootSystem& R);

/// F_{R,W} = (1/|W|) sum_{g in W} g . A_R. W must contain the reflections
/// in all roots of R.
AffineCharacter averaged_F(const AffineRootSystem& R, const std::vector<AffineAut>& W,
                           int lifting_variant = 0);

/// Density evaluation on the generating component S' = s~ S^0: a point is
/// theta in [0,1)^rank, and alpha(s) = exp(2 pi i (fin . theta + tor / order)).
class DensityEvaluator {
public:
  explicit DensityEvaluator(const AffineRootSystem& R, int lifting_variant = 0);

  /// (1/|W_{R'}|) prod_{alpha in R} (1 - alpha(s)).
  double product_form(const std::vector<double>& theta) const;
  /// sum_{tau in section Weyl group} (tau . A_R)(s).
  double character_form(const std::vector<double>& theta) const;
  /// Both forms; throws std::logic_error when they disagree beyond 1e-10.
  double at(const std::vector<double>& theta) const;

  const DeltaA& data() const { return da_; }
  const AffineRootSystem& system() const { return R_; }

private:
  AffineRootSystem R_;
  DeltaA da_;
  std::vector<AffineAut> section_;
};

/// max over rays of | prod_{beta in ray fiber} (1 - beta(s)) - (1 - alpha(s)^m) |
/// at one point; the fiber product law.
double fiber_product_error(const AffineRootSystem& R, const std::vector<double>& theta);

/// Trapezoid quadrature of |chi_d|^2 D (or chi_d1 conj(chi_d2) D for the
/// cross version) over the circle, using the connected rank-one catalog
/// entry; characters in the weight normalization with root 2 e1.
double weyl_integration_norm(int d, int N);
double weyl_integration_cross(int d1, int d2, int N);

/// Deterministic pseudo-random points in [0,1)^rank (64-bit Mersenne
/// twister, explicit 53-bit conversion; identical across platforms).
std::vector<std::vector<double>> seeded_points(int count, int rank, uint64_t seed);

/// Pairwise (tree) summation; deterministic order.
double pairwise_sum(const std::vector<double>& xs);

}  // namespace dimdatum

#endif
