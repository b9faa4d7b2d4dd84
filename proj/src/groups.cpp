#include "dimdatum/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dimdatum/freudenthal.hpp"

namespace dimdatum {

int GroupFactor::weight_rank() const { return n; }

std::string GroupFactor::label() const {
  switch (kind) {
    case Kind::SU: return "SU" + std::to_string(n);
    case Kind::U: return "U" + std::to_string(n);
    case Kind::Sp: return "Sp" + std::to_string(n);
    case Kind::SOEven: return "SO" + std::to_string(2 * n);
    case Kind::Torus: return "T" + std::to_string(n);
  }
  return "?";
}

RootSystem GroupFactor::roots() const {
  switch (kind) {
    case Kind::SU:
    case Kind::U:
      if (n >= 2) return standard_system(SystemKind::A, n, n);
      break;
    case Kind::Sp:
      return standard_system(SystemKind::C, n, n);
    case Kind::SOEven:
      if (n >= 2) return standard_system(SystemKind::D, n, n);
      break;
    case Kind::Torus:
      break;
  }
  RootSystem empty;
  empty.ambient = weight_rank();
  return empty;
}

bool GroupFactor::dominant(const Weight& hw) const {
  if ((int)hw.size() != weight_rank()) return false;
  switch (kind) {
    case Kind::SU:
    case Kind::U:
      for (int i = 0; i + 1 < n; ++i)
        if (hw[i] < hw[i + 1]) return false;
      return true;
    case Kind::Sp:
      for (int i = 0; i + 1 < n; ++i)
        if (hw[i] < hw[i + 1]) return false;
      return hw[n - 1] >= 0;
    case Kind::SOEven:
      for (int i = 0; i + 2 < n; ++i)
        if (hw[i] < hw[i + 1]) return false;
      return n < 2 || hw[n - 2] >= std::abs(hw[n - 1]);
    case Kind::Torus:
      return true;
  }
  return false;
}

Weight GroupFactor::canonical(const Weight& hw) const {
  if (kind != Kind::SU || hw.empty()) return hw;
  int mn = *std::min_element(hw.begin(), hw.end());
  Weight r(hw.size());
  for (size_t i = 0; i < hw.size(); ++i) r[i] = hw[i] - mn;
  return r;
}

Rational casimir_eigenvalue(const GroupFactor& g, const Weight& hw) {
  if (!g.dominant(hw)) throw std::invalid_argument("casimir_eigenvalue: non-dominant weight");
  Weight d2 = delta2(g.roots());
  if (g.kind == GroupFactor::Kind::SU) {
    // project to the sum-zero hyperplane: lam - (sum/n) * (1..1)
    long long s = std::accumulate(hw.begin(), hw.end(), 0LL);
    long long n = g.n;
    // (lam_p, lam_p) = (lam,lam) - s^2/n ; (lam_p, 2delta) = (lam, 2delta)
    Rational quad = Rational(dot(hw, hw)) - Rational(s * s, n);
    return quad + Rational(dot(hw, d2));
  }
  return Rational(dot(hw, hw) + dot(hw, d2));
}

long long factor_dimension(const GroupFactor& g, const Weight& hw) {
  if (g.kind == GroupFactor::Kind::Torus) return 1;
  RootSystem phi = g.roots();
  if (phi.roots.empty()) return 1;
  return weyl_dimension(phi, hw);
}

Weight EmbeddedGroup::restrict_weight(size_t f, const Weight& w) const {
  Weight out(torus_rank, 0);
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) out = add(out, scaled(restriction[f][i], w[i]));
  return out;
}

Weight EmbeddedGroup::factor_hw_from_torus(size_t f, const Weight& torus_weight) const {
  Weight hw;
  for (int c : hw_coords[f]) hw.push_back(torus_weight[c]);
  if (pad_su[f]) {
    hw.resize(factors[f].weight_rank(), 0);
    hw = factors[f].canonical(hw);
  }
  return hw;
}

bool EmbeddedGroup::dominant_parts(const std::vector<Weight>& parts) const {
  if (parts.size() != factors.size()) return false;
  for (size_t f = 0; f < factors.size(); ++f)
    if (!factors[f].dominant(parts[f])) return false;
  return true;
}

std::string EmbeddedGroup::parts_label(const std::vector<Weight>& parts) const {
  std::string s;
  for (size_t f = 0; f < parts.size(); ++f) {
    if (f) s += ";";
    s += weight_str(parts[f]);
  }
  return s;
}

std::vector<Weight> parse_hw_parts(const std::string& s) {
  std::vector<Weight> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t semi = s.find(';', pos);
    parts.push_back(parse_weight(s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return parts;
}

namespace {
Weight unit(int rank, int i, int c = 1) {
  Weight w(rank, 0);
  w[i] = c;
  return w;
}
}  // namespace

PairConfig PairConfig::make(int n) {
  PairConfig cfg;
  cfg.n = n;
  int t = 2 * n + 1;
  int N = 4 * n + 2;

  cfg.G.label = "SU" + std::to_string(N);
  cfg.G.torus_rank = t;
  cfg.G.factors = {GroupFactor{GroupFactor::Kind::SU, N}};
  cfg.G.restriction.resize(1);
  for (int i = 0; i < N; ++i)
    cfg.G.restriction[0].push_back(i < t ? unit(t, i, 1) : unit(t, i - t, -1));
  cfg.G.hw_coords = {{}};
  cfg.G.pad_su = {false};

  cfg.H1.label = "H1(U" + std::to_string(t) + ")";
  cfg.H1.torus_rank = t;
  cfg.H1.factors = {GroupFactor{GroupFactor::Kind::U, t}};
  cfg.H1.restriction.resize(1);
  for (int i = 0; i < t; ++i) cfg.H1.restriction[0].push_back(unit(t, i, 1));
  cfg.H1.hw_coords = {std::vector<int>()};
  for (int i = 0; i < t; ++i) cfg.H1.hw_coords[0].push_back(i);
  cfg.H1.pad_su = {false};

  cfg.H2.label = "H2(Sp" + std::to_string(n) + "xSO" + std::to_string(2 * n + 2) + ")";
  cfg.H2.torus_rank = t;
  cfg.H2.factors = {GroupFactor{GroupFactor::Kind::Sp, n},
                    GroupFactor{GroupFactor::Kind::SOEven, n + 1}};
  cfg.H2.restriction.resize(2);
  for (int i = 0; i < n; ++i) cfg.H2.restriction[0].push_back(unit(t, i, 1));
  for (int j = 0; j < n + 1; ++j) cfg.H2.restriction[1].push_back(unit(t, n + j, 1));
  cfg.H2.hw_coords.resize(2);
  for (int i = 0; i < n; ++i) cfg.H2.hw_coords[0].push_back(i);
  for (int j = 0; j < n + 1; ++j) cfg.H2.hw_coords[1].push_back(n + j);
  cfg.H2.pad_su = {false, false};
  return cfg;
}

bool PairConfig::admissible_lambda(const Weight& lambda) const {
  int t = 2 * n + 1;
  if ((int)lambda.size() != t) return false;
  for (int i = 0; i + 1 < t; ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  for (int i = 1; i <= n; ++i)
    if (lambda[i - 1] + lambda[t - i] != 0) return false;
  return true;
}

std::vector<Weight> PairConfig::h2_parts(const Weight& lambda) const {
  Weight lam1(lambda.begin(), lambda.begin() + n);
  Weight lam2(lambda.begin(), lambda.begin() + n + 1);
  return {lam1, lam2};
}

Su2Config Su2Config::make() {
  Su2Config cfg;
  cfg.G.label = "SU2";
  cfg.G.torus_rank = 1;
  cfg.G.factors = {GroupFactor{GroupFactor::Kind::SU, 2}};
  cfg.G.restriction = {{unit(1, 0, 1), unit(1, 0, -1)}};
  cfg.G.hw_coords = {{}};
  cfg.G.pad_su = {false};

  cfg.torus.label = "torus";
  cfg.torus.torus_rank = 1;
  cfg.torus.factors = {GroupFactor{GroupFactor::Kind::Torus, 1}};
  cfg.torus.restriction = {{unit(1, 0, 1)}};
  cfg.torus.hw_coords = {{0}};
  cfg.torus.pad_su = {false};

  cfg.self.label = "SU2";
  cfg.self.torus_rank = 1;
  cfg.self.factors = {GroupFactor{GroupFactor::Kind::SU, 2}};
  cfg.self.restriction = {{unit(1, 0, 1), unit(1, 0, -1)}};
  cfg.self.hw_coords = {{0}};
  cfg.self.pad_su = {true};
  return cfg;
}

}  // namespace dimdatum
