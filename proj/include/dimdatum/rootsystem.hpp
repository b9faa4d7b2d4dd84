#ifndef DIMDATUM_ROOTSYSTEM_HPP
#define DIMDATUM_ROOTSYSTEM_HPP

#include <string>
#include <vector>

#include "dimdatum/weight.hpp"

namespace dimdatum {

/// Root system embedded in an ambient lattice Z^ambient with the Euclidean
/// inner product. Positive roots follow the fixed convention: first nonzero
/// coordinate positive.
struct RootSystem {
  int ambient = 0;
  std::string label;
  std::vector<Weight> roots;     // sorted
  std::vector<Weight> positive;  // sorted

  bool empty() const { return roots.empty(); }
  bool has_root(const Weight& a) const;
};

enum class SystemKind { A, B, C, D, BC };

/// Classical realization on n consecutive coordinates starting at `offset`:
/// kind A with n coordinates gives A_{n-1} = {e_i - e_j}; B_n, C_n, D_n,
/// BC_n are the usual ones. Throws if offset + n > ambient.
RootSystem standard_system(SystemKind kind, int n, int ambient, int offset = 0);

/// Union of root systems in the same ambient lattice.
RootSystem union_system(const std::vector<RootSystem>& parts, const std::string& label = "");

/// Parses labels like "A2", "BC3", "C1+D2", "C1@0+D2@1". The number is the
/// rank (A2 occupies 3 coordinates). Factors without @offset are packed left
/// to right. ambient < 0 means "smallest that fits".
RootSystem parse_system_label(const std::string& label, int ambient = -1);

struct RootSystemValidation {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks the two root system conditions: reflection closure for every pair
/// of roots, and strong integrality of every root against the ambient
/// lattice. Collects human-readable diagnostics instead of throwing.
RootSystemValidation validate_root_system(const RootSystem& phi);

/// 2 * delta_Phi = sum of the positive roots. Kept doubled so that all
/// values stay in the lattice; consumers halve differences delta - w delta.
Weight delta2(const RootSystem& phi);

/// Reflection in a root, as a signed permutation of the ambient lattice.
/// Throws if the reflection is not a signed coordinate permutation (cannot
/// happen for the classical realizations).
SignedPermutation reflection(const Weight& alpha, int ambient);

/// Weyl group of a root system with the sign character det(w) attached to
/// each element (aligned with group.elements).
struct SignedWeyl {
  WeylSubgroup group;
  std::vector<int> sgn;
};

SignedWeyl weyl_group(const RootSystem& phi);

/// Coroot pairing 2(lambda, alpha) / (alpha, alpha); throws unless integral.
long long coroot_pairing(const Weight& lambda, const Weight& alpha);

}  // namespace dimdatum

#endif
