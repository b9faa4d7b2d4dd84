#include "dimdatum/affine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace dimdatum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool first_nonzero_positive(const Weight& a) {
  for (int v : a) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

int mod_order(long long t, int order) {
  long long r = t % order;
  if (r < 0) r += order;
  return (int)r;
}

/// Coroot covector of alpha as an integer vector: 2 alpha / (alpha, alpha).
Weight coroot_covector(const Weight& alpha) {
  long long nn = dot(alpha, alpha);
  Weight v(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) {
    long long num = 2LL * alpha[i];
    if (num % nn != 0) throw std::invalid_argument("coroot is not an integer covector");
    v[i] = (int)(num / nn);
  }
  return v;
}

/// Solves target = sum_i c_i simples[i] with integer c_i, exact elimination.
std::vector<long long> integer_combination(const std::vector<Weight>& simples, const Weight& target) {
  size_t rows = target.size(), cols = simples.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m[r][c] = Rational(simples[c][r]);
    m[r][cols] = Rational(target[r]);
  }
  size_t rank = 0;
  std::vector<int> pivot_col(rows, -1);
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t sel = rank;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    Rational inv = Rational(1) / m[rank][c];
    for (size_t k = c; k <= cols; ++k) m[rank][k] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col[rank] = (int)c;
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (!m[r][cols].is_zero()) throw std::logic_error("integer_combination: inconsistent system");
  std::vector<long long> out(cols, 0);
  for (size_t r = 0; r < rank; ++r) {
    if (!m[r][cols].is_integer())
      throw std::logic_error("integer_combination: non-integer coefficient");
    out[pivot_col[r]] = m[r][cols].num();
  }
  return out;
}

RootSystem restricted_system(const AffineRootSystem& R) {
  RootSystem phi;
  phi.ambient = R.torus.rank;
  phi.label = "R'";
  phi.roots = R.restricted;
  for (const auto& a : phi.roots)
    if (first_nonzero_positive(a)) phi.positive.push_back(a);
  return phi;
}

RootSystem reduced_restricted_system(const AffineRootSystem& R) {
  RootSystem phi;
  phi.ambient = R.torus.rank;
  phi.label = "R' reduced";
  for (const auto& rd : R.rays) phi.roots.push_back(rd.base);
  std::sort(phi.roots.begin(), phi.roots.end());
  for (const auto& a : phi.roots)
    if (first_nonzero_positive(a)) phi.positive.push_back(a);
  return phi;
}

}  // namespace

std::string affine_weight_str(const AffineWeight& a) {
  return weight_str(a.fin) + "|" + std::to_string(a.tor);
}

bool AffineRootSystem::has(const AffineWeight& a) const {
  return std::binary_search(roots.begin(), roots.end(), a);
}

const AffineRayData* AffineRootSystem::ray(const Weight& alpha) const {
  for (const auto& rd : rays)
    if (rd.base == alpha) return &rd;
  return nullptr;
}

AffineRootSystem make_affine(GeneralizedTorus t, std::vector<AffineWeight> roots,
                             const std::string& label) {
  AffineRootSystem R;
  R.torus = t;
  R.label = label;
  for (auto& a : roots) a.tor = mod_order(a.tor, t.order);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  R.roots = std::move(roots);
  std::set<Weight> restricted;
  for (const auto& a : R.roots) restricted.insert(a.fin);
  R.restricted.assign(restricted.begin(), restricted.end());
  for (const auto& alpha : R.restricted) {
    bool halvable = true;
    Weight half(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] % 2 != 0) {
        halvable = false;
        break;
      }
      half[i] = alpha[i] / 2;
    }
    if (halvable && restricted.count(half)) continue;  // non-reduced ray
    AffineRayData rd;
    rd.base = alpha;
    for (const auto& b : R.roots) {
      if (b.fin == alpha) ++rd.m1;
      if (b.fin == scaled(alpha, 2)) ++rd.m2;
    }
    rd.m = rd.m1 + 2 * rd.m2;
    R.rays.push_back(rd);
  }
  return R;
}

AffineValidation validate_affine(const AffineRootSystem& R) {
  AffineValidation res;
  auto fail = [&](const std::string& why) {
    if (res.ok) {
      res.ok = false;
      res.first_violation = why;
    }
  };
  int M = R.torus.order;
  // (1) restrictions lie in the strong-integrality system of Z^rank
  for (const auto& a : R.roots) {
    if (is_zero(a.fin)) {
      fail("axiom 1: zero restriction for " + affine_weight_str(a));
      return res;
    }
    long long nn = dot(a.fin, a.fin);
    for (int i = 0; i < R.torus.rank; ++i)
      if ((2LL * a.fin[i]) % nn != 0) {
        fail("axiom 1: strong integrality fails for " + affine_weight_str(a));
        return res;
      }
  }
  // (2) reflection closure
  for (const auto& a : R.roots) {
    Weight cov = coroot_covector(a.fin);
    for (const auto& b : R.roots) {
      long long pairing = dot(b.fin, cov);
      AffineWeight im;
      im.fin = sub(b.fin, scaled(a.fin, (int)pairing));
      im.tor = mod_order(b.tor - pairing * a.tor, M);
      if (!R.has(im)) {
        fail("axiom 2: reflection of " + affine_weight_str(b) + " in " + affine_weight_str(a) +
             " leaves the system");
        return res;
      }
    }
  }
  // (3) no doubled roots
  for (const auto& a : R.roots) {
    AffineWeight dbl{scaled(a.fin, 2), mod_order(2LL * a.tor, M)};
    if (R.has(dbl)) {
      fail("axiom 3: doubled root " + affine_weight_str(a));
      return res;
    }
  }
  // (4)/(5) fiber shapes over each reduced restricted root
  for (const auto& rd : R.rays) {
    std::set<int> t1, t2;
    for (const auto& b : R.roots) {
      if (b.fin == rd.base) t1.insert(b.tor);
      if (b.fin == scaled(rd.base, 2)) t2.insert(b.tor);
    }
    int f1 = (int)t1.size();
    if (f1 == 0 || M % f1 != 0) {
      fail("axiom 4: fiber size over " + weight_str(rd.base) + " does not divide the torus order");
      return res;
    }
    if (t2.empty()) {
      // axiom 4: coset of the order-f1 subgroup
      int step = M / f1;
      int base = *t1.begin();
      for (int k = 0; k < f1; ++k)
        if (!t1.count(mod_order(base + (long long)k * step, M))) {
          fail("axiom 4: fiber over " + weight_str(rd.base) + " is not an arithmetic progression");
          return res;
        }
    } else {
      // axiom 5: t1 a full coset of an even-order subgroup, t2 the odd layer
      int f2 = (int)t2.size();
      if (f1 != 2 * f2) {
        fail("axiom 5: fiber sizes over " + weight_str(rd.base) + " are not in ratio 2:1");
        return res;
      }
      int step = M / f1;
      int base = *t1.begin();
      bool shape = true;
      for (int k = 0; k < f1 && shape; ++k)
        if (!t1.count(mod_order(base + (long long)k * step, M))) shape = false;
      if (shape) {
        // delta must be a generator of the order-f1 subgroup; the doubled
        // layer sits on the odd multiples 2*base + (2k+1) delta
        bool found = false;
        for (int g = 0; g < f1 && !found; ++g) {
          if (std::gcd(g, f1) != 1) continue;
          int delta = mod_order((long long)g * step, M);
          bool all = true;
          for (int k = 0; k < f2 && all; ++k)
            if (!t2.count(mod_order(2LL * base + (2LL * k + 1) * delta, M))) all = false;
          if (all) found = true;
        }
        shape = found;
      }
      if (!shape) {
        fail("axiom 5: fiber over " + weight_str(rd.base) + " lacks the two-layer shape");
        return res;
      }
    }
  }
  return res;
}

namespace {

RootSystem phi0_realization(const std::string& phi0) {
  if (phi0 == "A1") {
    // SU(2) weight-lattice normalization: root 2 e1 in Z^1
    RootSystem phi = standard_system(SystemKind::C, 1, 1);
    phi.label = "A1";
    return phi;
  }
  return parse_system_label(phi0);
}

}  // namespace

AffineRootSystem affine_catalog(int kind, int m, int n, const std::string& phi0) {
  if (m < 1) throw std::invalid_argument("affine_catalog: m must be >= 1");
  std::vector<AffineWeight> roots;
  GeneralizedTorus t;
  std::string label;
  switch (kind) {
    case 1: {
      RootSystem base = phi0_realization(phi0);
      t.rank = base.ambient;
      t.order = m;
      for (const auto& a : base.roots)
        for (int k = 0; k < m; ++k) roots.push_back({a, k});
      label = "m*" + base.label + ":" + base.label + "@m=" + std::to_string(m);
      break;
    }
    case 2: {
      if (n < 1) throw std::invalid_argument("affine_catalog: kind 2 needs n >= 1");
      t.rank = n;
      t.order = 2 * m;
      RootSystem bc = standard_system(SystemKind::BC, n, n);
      for (const auto& a : bc.roots) {
        long long nn = dot(a, a);
        if (nn == 1) {  // short e_i: full fiber, doubled layer on odd torsion
          for (int k = 0; k < 2 * m; ++k) roots.push_back({a, k});
          for (int k = 0; k < m; ++k) roots.push_back({scaled(a, 2), 2 * k + 1});
        } else if (nn == 2) {  // middle e_i +- e_j: full fiber
          for (int k = 0; k < 2 * m; ++k) roots.push_back({a, k});
        }
      }
      label = "m*A2n:BCn@m=" + std::to_string(m) + ",n=" + std::to_string(n);
      break;
    }
    case 3: {
      if (n < 2) throw std::invalid_argument("affine_catalog: kind 3 needs n >= 2");
      t.rank = n;
      t.order = 2 * m;
      RootSystem c = standard_system(SystemKind::C, n, n);
      for (const auto& a : c.roots) {
        if (dot(a, a) == 2) {  // short: full fiber
          for (int k = 0; k < 2 * m; ++k) roots.push_back({a, k});
        } else {  // long 2 e_i: even torsion layer
          for (int k = 0; k < m; ++k) roots.push_back({a, 2 * k});
        }
      }
      label = "m*A2n-1:Cn@m=" + std::to_string(m) + ",n=" + std::to_string(n);
      break;
    }
    case 4: {
      if (n < 4) throw std::invalid_argument("affine_catalog: kind 4 needs n >= 4");
      t.rank = n - 1;
      t.order = 2 * m;
      RootSystem b = standard_system(SystemKind::B, n - 1, n - 1);
      for (const auto& a : b.roots) {
        if (dot(a, a) == 1) {  // short e_i: full fiber
          for (int k = 0; k < 2 * m; ++k) roots.push_back({a, k});
        } else {  // long e_i +- e_j: even torsion layer
          for (int k = 0; k < m; ++k) roots.push_back({a, 2 * k});
        }
      }
      label = "m*Dn:Bn-1@m=" + std::to_string(m) + ",n=" + std::to_string(n);
      break;
    }
    default:
      throw std::invalid_argument("affine_catalog: unsupported kind " + std::to_string(kind));
  }
  return make_affine(t, std::move(roots), label);
}

AffineRootSystem parse_affine_selector(const std::string& selector) {
  auto at = selector.find('@');
  if (at == std::string::npos) throw std::invalid_argument("affine selector needs @params: " + selector);
  std::string head = selector.substr(0, at);
  int kind;
  if (head == "m*Phi0:Phi0")
    kind = 1;
  else if (head == "m*A2n:BCn")
    kind = 2;
  else if (head == "m*A2n-1:Cn")
    kind = 3;
  else if (head == "m*Dn:Bn-1")
    kind = 4;
  else
    throw std::invalid_argument("unknown affine family: " + head);
  int m = 1, n = 0;
  std::string phi0;
  size_t pos = at + 1;
  while (pos < selector.size()) {
    size_t comma = selector.find(',', pos);
    std::string kv = selector.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad selector parameter: " + kv);
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "m")
      m = std::stoi(val);
    else if (key == "n")
      n = std::stoi(val);
    else if (key == "Phi0")
      phi0 = val;
    else
      throw std::invalid_argument("unknown selector key: " + key);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (kind == 1 && phi0.empty()) throw std::invalid_argument("kind 1 selector needs Phi0=");
  if (kind != 1 && n == 0) throw std::invalid_argument("selector needs n=");
  return affine_catalog(kind, m, n, phi0);
}

void AffineCharacter::add_term(const AffineWeight& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string affine_char_text(const AffineCharacter& a) {
  std::string s;
  for (const auto& [w, c] : a.terms) {
    if (!s.empty()) s += " ";
    s += c.str() + "*[" + affine_weight_str(w) + "]";
  }
  return s.empty() ? "0" : s;
}

bool affine_char_equal(const AffineCharacter& a, const AffineCharacter& b) {
  return a.terms == b.terms;
}

AffineWeight AffineAut::apply(const AffineWeight& a, int order) const {
  AffineWeight r;
  r.fin = w.apply(a.fin);
  long long shift = 0;
  for (size_t i = 0; i < a.fin.size(); ++i) shift += (long long)v[i] * a.fin[i];
  r.tor = mod_order(a.tor + shift, order);
  return r;
}

AffineAut AffineAut::compose(const AffineAut& o, int order) const {
  // (this o other)(x) = this(other(x)); torsion covector: o.v + this.v transported through o.w
  AffineAut r;
  r.w = w.compose(o.w);
  int n = (int)v.size();
  r.v.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    // coefficient of lam_j in v . (o.w lam): j = o.w.src[i] picks up o.w.sign[i] * v[i]
    r.v[o.w.src[i]] = mod_order(r.v[o.w.src[i]] + (long long)o.w.sign[i] * v[i], order);
  }
  for (int j = 0; j < n; ++j) r.v[j] = mod_order((long long)r.v[j] + o.v[j], order);
  return r;
}

AffineCharacter aff_apply(const AffineAut& g, const AffineCharacter& a) {
  AffineCharacter r;
  r.torus = a.torus;
  for (const auto& [w, c] : a.terms) r.add_term(g.apply(w, a.torus.order), c);
  return r;
}

namespace {

AffineAut affine_reflection(const AffineWeight& alpha, int rank, int order) {
  AffineAut g;
  g.w = reflection(alpha.fin, rank);
  Weight cov = coroot_covector(alpha.fin);
  g.v.resize(rank);
  for (int i = 0; i < rank; ++i) g.v[i] = mod_order(-(long long)alpha.tor * cov[i], order);
  return g;
}

std::vector<AffineAut> closure_auts(int rank, int order, std::vector<AffineAut> gens) {
  std::set<AffineAut> seen;
  std::deque<AffineAut> queue;
  AffineAut id{SignedPermutation::identity(rank), std::vector<int>(rank, 0)};
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    AffineAut g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      AffineAut h = s.compose(g, order);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return std::vector<AffineAut>(seen.begin(), seen.end());
}

}  // namespace

LiftingData choose_lifting(const AffineRootSystem& R, int variant) {
  RootSystem reduced = reduced_restricted_system(R);
  LiftingData data;
  data.simples = simple_roots(reduced);
  size_t t = data.simples.size();
  // candidate torsions per simple root
  std::vector<std::vector<int>> candidates(t);
  for (size_t i = 0; i < t; ++i) {
    for (const auto& b : R.roots)
      if (b.fin == data.simples[i]) candidates[i].push_back(b.tor);
    if (candidates[i].empty()) throw std::logic_error("choose_lifting: simple root has no lift");
  }
  // integer coordinates of every reduced root over the simples
  std::vector<std::pair<Weight, std::vector<long long>>> combos;
  for (const auto& rd : R.rays)
    combos.push_back({rd.base, integer_combination(data.simples, rd.base)});

  std::vector<LiftingData> admissible;
  std::vector<size_t> pick(t, 0);
  while (true) {
    LiftingData cand = data;
    cand.simple_tor.resize(t);
    for (size_t i = 0; i < t; ++i) cand.simple_tor[i] = candidates[i][pick[i]];
    bool ok = true;
    for (const auto& [alpha, coeffs] : combos) {
      long long tor = 0;
      for (size_t i = 0; i < t; ++i) tor += coeffs[i] * cand.simple_tor[i];
      AffineWeight lift{alpha, mod_order(tor, R.torus.order)};
      if (!R.has(lift)) {
        ok = false;
        break;
      }
      cand.section[alpha] = lift.tor;
    }
    if (ok) {
      admissible.push_back(cand);
      if ((int)admissible.size() > variant) break;
    }
    // next assignment
    size_t i = 0;
    while (i < t && ++pick[i] == candidates[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == t) break;
  }
  if (admissible.empty()) throw std::invalid_argument("choose_lifting: no admissible lifting set");
  if (variant < (int)admissible.size()) return admissible[variant];
  return admissible.back();
}

DeltaA delta_and_A(const AffineRootSystem& R, int lifting_variant) {
  DeltaA out;
  out.lifting = choose_lifting(R, lifting_variant);
  RootSystem reduced = reduced_restricted_system(R);
  SignedWeyl W = weyl_group(reduced);
  out.wr_order = W.group.order();

  int M = R.torus.order;
  out.delta2.fin = Weight(R.torus.rank, 0);
  out.delta2.tor = 0;
  for (const auto& rd : R.rays) {
    if (!first_nonzero_positive(rd.base)) continue;
    out.delta2.fin = add(out.delta2.fin, scaled(rd.base, rd.m));
    out.delta2.tor = mod_order(out.delta2.tor + (long long)rd.m * out.lifting.section.at(rd.base), M);
  }

  out.A.torus = R.torus;
  for (size_t e = 0; e < W.group.elements.size(); ++e) {
    const auto& w = W.group.elements[e];
    SignedPermutation winv = w.inverse();
    AffineWeight diff{Weight(R.torus.rank, 0), 0};
    for (const auto& rd : R.rays) {
      if (!first_nonzero_positive(rd.base)) continue;
      if (first_nonzero_positive(winv.apply(rd.base))) continue;  // stays positive
      diff.fin = add(diff.fin, scaled(rd.base, rd.m));
      diff.tor = mod_order(diff.tor + (long long)rd.m * out.lifting.section.at(rd.base), M);
    }
    out.A.add_term(diff, Rational(W.sgn[e], (long long)out.wr_order));
  }
  return out;
}

std::vector<AffineAut> affine_weyl_group(const AffineRootSystem& R) {
  std::vector<AffineAut> gens;
  for (const auto& a : R.roots) gens.push_back(affine_reflection(a, R.torus.rank, R.torus.order));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure_auts(R.torus.rank, R.torus.order, gens);
}

std::vector<AffineAut> section_weyl_group(const AffineRootSystem& R, const LiftingData& lifting) {
  std::vector<AffineAut> gens;
  for (size_t i = 0; i < lifting.simples.size(); ++i)
    gens.push_back(affine_reflection({lifting.simples[i], lifting.simple_tor[i]}, R.torus.rank,
                                     R.torus.order));
  return closure_auts(R.torus.rank, R.torus.order, gens);
}

std::vector<AffineAut> full_affine_automorphisms(const AffineRootSystem& R) {
  WeylSubgroup hyper = hyperoctahedral_group(R.torus.rank);
  std::vector<AffineAut> out;
  std::vector<int> v(R.torus.rank, 0);
  while (true) {
    for (const auto& w : hyper.elements) out.push_back({w, v});
    int i = 0;
    while (i < R.torus.rank && ++v[i] == R.torus.order) {
      v[i] = 0;
      ++i;
    }
    if (i == R.torus.rank) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineCharacter averaged_F(const AffineRootSystem& R, const std::vector<AffineAut>& W,
                           int lifting_variant) {
  std::set<AffineAut> members(W.begin(), W.end());
  for (const auto& a : R.roots)
    if (!members.count(affine_reflection(a, R.torus.rank, R.torus.order)))
      throw std::invalid_argument("averaged_F: W does not contain the reflection in " +
                                  affine_weight_str(a));
  DeltaA da = delta_and_A(R, lifting_variant);
  AffineCharacter sum;
  sum.torus = R.torus;
  for (const auto& g : W) {
    AffineCharacter img = aff_apply(g, da.A);
    for (const auto& [w, c] : img.terms) sum.add_term(w, c);
  }
  AffineCharacter out;
  out.torus = R.torus;
  for (const auto& [w, c] : sum.terms) out.add_term(w, c * Rational(1, (long long)W.size()));
  return out;
}

namespace {

std::complex<double> eval_char(const AffineWeight& a, const std::vector<double>& theta, int order) {
  double phase = (double)a.tor / (double)order;
  for (size_t i = 0; i < a.fin.size(); ++i) phase += a.fin[i] * theta[i];
  return std::polar(1.0, kTwoPi * phase);
}

}  // namespace

DensityEvaluator::DensityEvaluator(const AffineRootSystem& R, int lifting_variant)
    : R_(R), da_(delta_and_A(R, lifting_variant)), section_(section_weyl_group(R, da_.lifting)) {}

double DensityEvaluator::product_form(const std::vector<double>& theta) const {
  std::complex<double> prod(1.0, 0.0);
  for (const auto& a : R_.roots) prod *= (1.0 - eval_char(a, theta, R_.torus.order));
  prod /= (double)da_.wr_order;
  if (std::abs(prod.imag()) > 1e-8 * (1.0 + std::abs(prod.real())))
    throw std::logic_error("density product form has a non-real value");
  return prod.real();
}

double DensityEvaluator::character_form(const std::vector<double>& theta) const {
  std::complex<double> sum(0.0, 0.0);
  for (const auto& tau : section_) {
    for (const auto& [w, c] : da_.A.terms)
      sum += c.to_double() * eval_char(tau.apply(w, R_.torus.order), theta, R_.torus.order);
  }
  if (std::abs(sum.imag()) > 1e-8 * (1.0 + std::abs(sum.real())))
    throw std::logic_error("density character form has a non-real value");
  return sum.real();
}

double DensityEvaluator::at(const std::vector<double>& theta) const {
  double p = product_form(theta);
  double c = character_form(theta);
  double scale = std::max(1.0, std::max(std::abs(p), std::abs(c)));
  if (std::abs(p - c) > 1e-10 * scale)
    throw std::logic_error("density forms disagree beyond tolerance");
  return p;
}

double fiber_product_error(const AffineRootSystem& R, const std::vector<double>& theta) {
  double worst = 0.0;
  for (const auto& rd : R.rays) {
    std::complex<double> prod(1.0, 0.0);
    AffineWeight rep;
    bool have_rep = false;
    for (const auto& b : R.roots) {
      if (b.fin == rd.base) {
        if (!have_rep) {
          rep = b;
          have_rep = true;
        }
        prod *= (1.0 - eval_char(b, theta, R.torus.order));
      } else if (b.fin == scaled(rd.base, 2)) {
        prod *= (1.0 - eval_char(b, theta, R.torus.order));
      }
    }
    if (!have_rep) continue;
    std::complex<double> z = eval_char(rep, theta, R.torus.order);
    std::complex<double> zm(1.0, 0.0);
    for (int k = 0; k < rd.m; ++k) zm *= z;
    worst = std::max(worst, std::abs(prod - (1.0 - zm)));
  }
  return worst;
}

double pairwise_sum(const std::vector<double>& xs) {
  std::function<double(size_t, size_t)> rec = [&](size_t lo, size_t hi) -> double {
    if (hi - lo == 0) return 0.0;
    if (hi - lo == 1) return xs[lo];
    size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  return rec(0, xs.size());
}

namespace {

double integrate_su2(int d1, int d2, int N) {
  if (N < 64) throw std::invalid_argument("quadrature needs N >= 64");
  DensityEvaluator density(affine_catalog(1, 1, 0, "A1"));
  std::vector<double> samples(N);
  for (int k = 0; k < N; ++k) {
    double theta = (double)k / (double)N;
    auto chi = [&](int d) {
      std::complex<double> s(0.0, 0.0);
      for (int j = 0; j < d; ++j) s += std::polar(1.0, kTwoPi * (d - 1 - 2 * j) * theta);
      return s;
    };
    std::complex<double> f = chi(d1) * std::conj(chi(d2));
    samples[k] = f.real() * density.at({theta});
  }
  return pairwise_sum(samples) / (double)N;
}

}  // namespace

double weyl_integration_norm(int d, int N) { return integrate_su2(d, d, N); }

double weyl_integration_cross(int d1, int d2, int N) { return integrate_su2(d1, d2, N); }

std::vector<std::vector<double>> seeded_points(int count, int rank, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> pts(count, std::vector<double>(rank));
  for (auto& p : pts)
    for (auto& x : p) x = (double)(rng() >> 11) * 0x1.0p-53;
  return pts;
}

}  // namespace dimdatum
