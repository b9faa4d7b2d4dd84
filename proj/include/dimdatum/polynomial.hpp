#ifndef DIMDATUM_POLYNOMIAL_HPP
#define DIMDATUM_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimdatum/rational.hpp"

namespace dimdatum {

/// Monomial in the indeterminates x_1, x_2, ...: index list sorted
/// descending, one entry per factor. x_0 is identified with 1 and never
/// stored; the pre-substitution degree lives on the Polynomial.
struct Monomial {
  std::vector<uint16_t> idx;

  int degree() const { return (int)idx.size(); }
  bool is_one() const { return idx.empty(); }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.idx == b.idx; }
};

/// Canonical term order: total degree descending, then lexicographic on the
/// descending index lists. Compatible with monomial multiplication.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.idx.size() != b.idx.size()) return a.idx.size() > b.idx.size();
    return a.idx > b.idx;
  }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// Multiset quotient a / b, or nullopt when b is not contained in a.
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q in x_1, x_2, ... with x_0 = 1.
/// Each polynomial carries a pre-substitution degree counter: engaged with
/// value h when every term was built as a product of h generators x_k
/// (k >= 0, the eliminated x_0 factors included). Determinants of n x n
/// matrices of generators therefore report h = n, which is how the
/// homogeneity of the determinant families is checked.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;  // zero

  static Polynomial constant(const Rational& c);
  /// x_k; var(0) is the constant 1 with pre-degree 1.
  static Polynomial var(int k);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  const TermMap& terms() const { return terms_; }
  std::optional<int> pre_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Ring automorphism x_{2k+1} -> -x_{2k+1}.
  Polynomial apply_sigma() const;

  /// Largest indeterminate index appearing, or 0 for constants.
  int max_index() const;
  int degree_in(int k) const;
  /// Coefficient polynomial of x_k^e (terms with exactly e factors x_k,
  /// those factors removed).
  Polynomial coeff_of(int k, int e) const;

  /// Exact quotient f / g, or nullopt when g does not divide f.
  static std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);

  /// Canonical text form, e.g. "2*x1^2*x2 - x2^2 + 1".
  std::string text() const;

  void add_term(const Monomial& m, const Rational& c);
  void set_pre_degree(std::optional<int> h) { homo_ = h; }

private:
  TermMap terms_;
  std::optional<int> homo_ = 0;
};

}  // namespace dimdatum

#endif
