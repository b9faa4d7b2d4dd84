#include "dimdatum/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dimdatum {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::Bp: return "b'";
    case Family::C: return "c";
    case Family::D: return "d";
  }
  return "?";
}

PolyMatrix family_matrix(Family f, const Weight& lambda) {
  int n = (int)lambda.size();
  PolyMatrix m(n, std::vector<Polynomial>(n));
  auto x = [](long long k) { return Polynomial::var((int)std::llabs(k)); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      long long a = lambda[j - 1];
      Polynomial head = x(a + i - j);
      Polynomial entry;
      switch (f) {
        case Family::A: entry = head; break;
        case Family::B: entry = head - x(a + 2 * n + 1 - i - j); break;
        case Family::Bp: entry = head + x(a + 2 * n + 1 - i - j); break;
        case Family::C: entry = head - x(a + 2 * n + 2 - i - j); break;
        case Family::D: entry = head + x(a + 2 * n - i - j); break;
      }
      m[i - 1][j - 1] = entry;
    }
  }
  return m;
}

Polynomial det_cofactor(const PolyMatrix& m) {
  int n = (int)m.size();
  if (n == 0) return Polynomial::constant(Rational(1));
  // subset DP over columns: minors of the last k rows against each k-subset
  std::vector<Polynomial> cur(1, Polynomial::constant(Rational(1)));  // k = 0
  std::vector<uint32_t> cur_masks(1, 0);
  for (int k = 1; k <= n; ++k) {
    int row = n - k;
    std::vector<uint32_t> masks;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
      if (__builtin_popcount(mask) == k) masks.push_back(mask);
    std::vector<Polynomial> next(masks.size());
    std::map<uint32_t, size_t> prev_index;
    for (size_t t = 0; t < cur_masks.size(); ++t) prev_index[cur_masks[t]] = t;
    for (size_t t = 0; t < masks.size(); ++t) {
      uint32_t mask = masks[t];
      Polynomial acc;
      int pos = 0;
      for (int col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        const Polynomial& sub = cur[prev_index.at(mask & ~(1u << col))];
        Polynomial prod = m[row][col] * sub;
        acc = (pos % 2 == 0) ? acc + prod : acc - prod;
        ++pos;
      }
      next[t] = acc;
    }
    cur = std::move(next);
    cur_masks = std::move(masks);
  }
  return cur[0];
}

Polynomial det_bareiss(const PolyMatrix& input) {
  int n = (int)input.size();
  if (n == 0) return Polynomial::constant(Rational(1));
  PolyMatrix m = input;
  Polynomial prev = Polynomial::constant(Rational(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Polynomial();  // singular
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = Polynomial::try_divide(num, prev);
        if (!q) throw std::logic_error("det_bareiss: exact division failed");
        m[i][j] = *q;
      }
    }
    for (int i = k + 1; i < n; ++i) m[i][k] = Polynomial();
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Polynomial det_poly(const PolyMatrix& m) {
  return m.size() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

bool family_dominant(Family f, const Weight& lambda) {
  int n = (int)lambda.size();
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) {
      if (f == Family::D && i + 2 == n) continue;  // last pair checked below
      return false;
    }
  if (n == 0) return true;
  switch (f) {
    case Family::A: return true;
    case Family::B:
    case Family::Bp:
    case Family::C: return lambda[n - 1] >= 0;
    case Family::D:
      return n == 1 || lambda[n - 2] >= std::abs(lambda[n - 1]);
  }
  return false;
}

Polynomial family_poly(Family f, const Weight& lambda) {
  if (!family_dominant(f, lambda))
    throw std::invalid_argument("family_poly: weight " + weight_str(lambda) +
                                " not dominant for family " + family_name(f));
  Polynomial det = det_poly(family_matrix(f, lambda));
  if (f == Family::D) {
    Polynomial half = det.scaled(Rational(1, 2));
    return half;
  }
  return det;
}

Polynomial encode(const CharacterElement& u) {
  Polynomial p;
  p.set_pre_degree(u.rank);
  for (const auto& [w, c] : u.terms) {
    Monomial m;
    for (int v : w)
      if (v != 0) m.idx.push_back((uint16_t)std::abs(v));
    std::sort(m.idx.begin(), m.idx.end(), std::greater<uint16_t>());
    p.add_term(m, c);
  }
  return p;
}

RootSystem family_system(Family f, int n) {
  switch (f) {
    case Family::A: return standard_system(SystemKind::A, n, n);
    case Family::B:
    case Family::Bp: return standard_system(SystemKind::B, n, n);
    case Family::C: return standard_system(SystemKind::C, n, n);
    case Family::D: return standard_system(SystemKind::D, n, n);
  }
  throw std::invalid_argument("family_system: bad family");
}

bool verify_det_equals_weylsum(Family f, const Weight& lambda) {
  int n = (int)lambda.size();
  if (n == 0) return true;
  Polynomial via_det = family_poly(f, lambda);
  RootSystem phi = family_system(f, n);
  Polynomial via_sum = encode(alternating_sum(phi, lambda));
  if (f == Family::Bp) via_sum = via_sum.apply_sigma();
  return via_det == via_sum;
}

bool admissible_odd(const Weight& lambda) {
  int n = (int)lambda.size();
  if (n % 2 != 1) return false;
  int m = (n - 1) / 2;
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  for (int i = 1; i <= m; ++i)
    if (lambda[i - 1] + lambda[n - i] != 0) return false;
  return true;
}

bool admissible_even(const Weight& lambda) {
  int n = (int)lambda.size();
  if (n == 0 || n % 2 != 0) return false;
  int m = n / 2;
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  for (int i = 1; i <= m; ++i)
    if (lambda[i - 1] + lambda[n - i] != 0) return false;
  return true;
}

bool verify_factorization(bool odd, const Weight& lambda) {
  if (odd) {
    if (!admissible_odd(lambda)) throw std::invalid_argument("verify_factorization: inadmissible odd weight");
    int m = ((int)lambda.size() - 1) / 2;
    Weight lam1(lambda.begin(), lambda.begin() + m);
    Weight lam2(lambda.begin(), lambda.begin() + m + 1);
    Polynomial lhs = family_poly(Family::A, lambda);
    Polynomial rhs = family_poly(Family::C, lam1) * family_poly(Family::D, lam2);
    return lhs == rhs;
  }
  if (!admissible_even(lambda)) throw std::invalid_argument("verify_factorization: inadmissible even weight");
  int m = (int)lambda.size() / 2;
  Weight lam1(lambda.begin(), lambda.begin() + m);
  Polynomial lhs = family_poly(Family::A, lambda);
  Polynomial rhs = family_poly(Family::B, lam1) * family_poly(Family::Bp, lam1);
  return lhs == rhs;
}

namespace {

IrreducibilityOutcome irreducible_rec(Family f, const Weight& lambda) {
  using Status = IrreducibilityOutcome::Status;
  Polynomial p = family_poly(f, lambda);
  if (p.is_zero()) return {Status::Failed, "zero polynomial at " + weight_str(lambda)};
  if (p.is_constant()) {
    // pre-substitution the value is c * x0^h; degree one means x0 itself
    auto h = p.pre_degree();
    if (h && *h == 1) return {Status::Proven, ""};
    return {Status::Failed, "constant value at " + weight_str(lambda)};
  }
  int u = p.max_index();
  if (p.degree_in(u) != 1)
    return {Status::Inapplicable, "top indeterminate x" + std::to_string(u) + " not linear at " +
                                      weight_str(lambda)};
  Polynomial q = p.coeff_of(u, 1);
  Polynomial r = p - Polynomial::var(u) * q;
  if (q.is_constant()) return {Status::Proven, ""};  // unit leading coefficient
  if ((int)lambda.size() < 2) return {Status::Inapplicable, "no smaller instance"};
  Weight tail(lambda.begin() + 1, lambda.end());
  Polynomial qfam = family_poly(f, tail);
  if (q != qfam && q != -qfam)
    return {Status::Inapplicable, "top coefficient is not the smaller family instance at " +
                                      weight_str(lambda)};
  IrreducibilityOutcome sub = irreducible_rec(f, tail);
  if (sub.status != Status::Proven) return sub;
  if (Polynomial::try_divide(r, qfam))
    return {Status::Inapplicable, "smaller instance divides the remainder at " + weight_str(lambda)};
  return {Status::Proven, ""};
}

}  // namespace

IrreducibilityOutcome verify_irreducible_inductive(Family f, const Weight& lambda) {
  if (f == Family::A)
    return {IrreducibilityOutcome::Status::Inapplicable, "family a is not covered by the scheme"};
  return irreducible_rec(f, lambda);
}

}  // namespace dimdatum
