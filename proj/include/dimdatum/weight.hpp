#ifndef DIMDATUM_WEIGHT_HPP
#define DIMDATUM_WEIGHT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace dimdatum {

/// Integer weight in a fixed-rank lattice Z^n. Coordinates are the
/// coefficients of the standard basis e_1..e_n; the inner product is the
/// Euclidean one.
using Weight = std::vector<int>;

long long dot(const Weight& a, const Weight& b);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight neg(const Weight& a);
Weight scaled(const Weight& a, int c);
bool is_zero(const Weight& a);
std::string weight_str(const Weight& a);    // "1,0,-1"
Weight parse_weight(const std::string& s);  // inverse of weight_str

/// Element of the hyperoctahedral group {+-1}^n x S_n acting on Z^n.
/// Stored so that (w v)[i] = sign[i] * v[src[i]].
struct SignedPermutation {
  std::vector<int8_t> sign;
  std::vector<int> src;

  int rank() const { return (int)src.size(); }
  static SignedPermutation identity(int n);

  Weight apply(const Weight& v) const;
  SignedPermutation compose(const SignedPermutation& o) const;  // this after o
  SignedPermutation inverse() const;
  /// Determinant of the underlying orthogonal map: parity of the
  /// permutation times the product of signs.
  int det() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.src == b.src && a.sign == b.sign;
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.src != b.src) return a.src < b.src;
    return a.sign < b.sign;
  }
};

/// Finite subgroup of the hyperoctahedral group, materialized as the full
/// element list (closure of the generators).
struct WeylSubgroup {
  int rank = 0;
  std::vector<SignedPermutation> gens;
  std::vector<SignedPermutation> elements;  // sorted, deterministic

  size_t order() const { return elements.size(); }
  bool contains(const SignedPermutation& g) const;

  static WeylSubgroup closure(int rank, std::vector<SignedPermutation> gens);
};

/// Full W_{BC_n} = {+-1}^n x S_n, order 2^n n!.
WeylSubgroup hyperoctahedral_group(int n);

/// {w.lambda : w in W}.
std::set<Weight> orbit(const WeylSubgroup& W, const Weight& lambda);

/// Unique orbit representative under the full hyperoctahedral group:
/// absolute values sorted descending.
Weight dominant_representative(const Weight& lambda);

}  // namespace dimdatum

#endif
