#ifndef DIMDATUM_GROUPS_HPP
#define DIMDATUM_GROUPS_HPP

#include <string>
#include <vector>

#include "dimdatum/rational.hpp"
#include "dimdatum/rootsystem.hpp"
#include "dimdatum/weight.hpp"

namespace dimdatum {

/// One reductive factor of a subgroup: SU(n), U(n), Sp(n), SO(2k) or a
/// torus. Weights live in the factor's own coordinates (Z^n for SU(n)/U(n),
/// Z^n for Sp(n), Z^k for SO(2k), Z^r for a torus).
struct GroupFactor {
  enum class Kind { SU, U, Sp, SOEven, Torus };
  Kind kind;
  int n;  // SU(n)/U(n): n; Sp(n): n; SOEven: k of SO(2k); Torus: rank

  int weight_rank() const;
  std::string label() const;
  RootSystem roots() const;
  bool dominant(const Weight& hw) const;
  /// SU highest weights are shifted so the minimum coordinate is zero.
  Weight canonical(const Weight& hw) const;
};

/// Casimir eigenvalue (hw, hw + 2 delta) in the trace-form coordinates;
/// SU weights are projected to the sum-zero hyperplane first.
Rational casimir_eigenvalue(const GroupFactor& g, const Weight& hw);

long long factor_dimension(const GroupFactor& g, const Weight& hw);

/// Subgroup (or the ambient group itself) carrying a linear restriction
/// map from each factor's weight coordinates to the common torus Z^t.
struct EmbeddedGroup {
  std::string label;
  int torus_rank = 0;
  std::vector<GroupFactor> factors;
  /// restriction[f][i] = image of the factor f basis vector e_i in Z^t.
  std::vector<std::vector<Weight>> restriction;
  /// hw_coords[f] = torus coordinates that recover the factor's highest
  /// weight from a torus weight (used when peeling restricted characters).
  std::vector<std::vector<int>> hw_coords;
  /// When true, factor f's highest weight is the recovered coordinate list
  /// padded with zeros (the diagonal SU self-embedding on t = n/2 coords).
  std::vector<bool> pad_su;

  Weight restrict_weight(size_t f, const Weight& w) const;
  Weight factor_hw_from_torus(size_t f, const Weight& torus_weight) const;
  bool dominant_parts(const std::vector<Weight>& parts) const;
  std::string parts_label(const std::vector<Weight>& parts) const;
};

/// Parses "1,0,-1" (one factor) or "1;1,0" (factor parts split by ';').
std::vector<Weight> parse_hw_parts(const std::string& s);

/// The standing configuration: G = SU(4n+2) with the common torus
/// diag(a_1..a_{2n+1}, a_1^-1..a_{2n+1}^-1), H1 = U(2n+1) embedded as
/// {diag(A, conj A)}, H2 = Sp(n) x SO(2n+2) block-embedded so that its root
/// system is C_n on coordinates 1..n and D_{n+1} on n+1..2n+1.
struct PairConfig {
  int n = 1;
  EmbeddedGroup G, H1, H2;

  static PairConfig make(int n);
  /// a_1 >= ... >= a_{2n+1} with a_i + a_{2n+2-i} = 0 for i <= n.
  bool admissible_lambda(const Weight& lambda) const;
  /// H2 highest weight parts (a_1..a_n), (a_1..a_{n+1}).
  std::vector<Weight> h2_parts(const Weight& lambda) const;
};

/// G = SU(2) with torus diag(a, a^-1); subgroups: the maximal torus and the
/// group itself.
struct Su2Config {
  EmbeddedGroup G, torus, self;
  static Su2Config make();
};

}  // namespace dimdatum

#endif
