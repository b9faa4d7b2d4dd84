#include "dimdatum/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dimdatum {

namespace {

bool first_nonzero_positive(const Weight& a) {
  for (int v : a) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

Weight basis_vec(int ambient, int i, int c = 1) {
  Weight w(ambient, 0);
  w[i] = c;
  return w;
}

void finish(RootSystem& phi, std::set<Weight> roots) {
  phi.roots.assign(roots.begin(), roots.end());
  phi.positive.clear();
  for (const auto& r : phi.roots)
    if (first_nonzero_positive(r)) phi.positive.push_back(r);
}

}  // namespace

bool RootSystem::has_root(const Weight& a) const {
  return std::binary_search(roots.begin(), roots.end(), a);
}

RootSystem standard_system(SystemKind kind, int n, int ambient, int offset) {
  if (n < 1) throw std::invalid_argument("standard_system: n must be >= 1");
  if (offset < 0 || offset + n > ambient)
    throw std::invalid_argument("standard_system: offset + n exceeds ambient rank");
  std::set<Weight> roots;
  auto e = [&](int i, int c) { return basis_vec(ambient, offset + i, c); };
  switch (kind) {
    case SystemKind::A:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) roots.insert(sub(e(i, 1), e(j, 1)));
      break;
    case SystemKind::B:
    case SystemKind::C:
    case SystemKind::D:
    case SystemKind::BC:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) roots.insert(add(e(i, si), e(j, sj)));
      if (kind == SystemKind::B || kind == SystemKind::BC)
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1}) roots.insert(e(i, s));
      if (kind == SystemKind::C || kind == SystemKind::BC)
        for (int i = 0; i < n; ++i)
          for (int s : {2, -2}) roots.insert(e(i, s));
      break;
  }
  RootSystem phi;
  phi.ambient = ambient;
  finish(phi, std::move(roots));
  return phi;
}

RootSystem union_system(const std::vector<RootSystem>& parts, const std::string& label) {
  if (parts.empty()) throw std::invalid_argument("union_system: empty");
  RootSystem out;
  out.ambient = parts[0].ambient;
  out.label = label;
  std::set<Weight> roots;
  for (const auto& p : parts) {
    if (p.ambient != out.ambient) throw std::invalid_argument("union_system: ambient mismatch");
    roots.insert(p.roots.begin(), p.roots.end());
  }
  finish(out, std::move(roots));
  return out;
}

RootSystem parse_system_label(const std::string& label, int ambient) {
  struct Factor {
    SystemKind kind;
    int coords;
    int offset;  // -1 = pack
  };
  std::vector<Factor> factors;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t plus = label.find('+', pos);
    std::string piece = label.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    size_t at = piece.find('@');
    int offset = -1;
    if (at != std::string::npos) {
      offset = std::stoi(piece.substr(at + 1));
      piece = piece.substr(0, at);
    }
    size_t d = 0;
    while (d < piece.size() && !isdigit(piece[d])) ++d;
    if (d == 0 || d == piece.size()) throw std::invalid_argument("bad system label: " + label);
    std::string kind_str = piece.substr(0, d);
    int rank = std::stoi(piece.substr(d));
    Factor f;
    if (kind_str == "A") {
      f.kind = SystemKind::A;
      f.coords = rank + 1;  // A_r lives on r+1 coordinates
    } else if (kind_str == "B") {
      f.kind = SystemKind::B;
      f.coords = rank;
    } else if (kind_str == "C") {
      f.kind = SystemKind::C;
      f.coords = rank;
    } else if (kind_str == "D") {
      f.kind = SystemKind::D;
      f.coords = rank;
    } else if (kind_str == "BC") {
      f.kind = SystemKind::BC;
      f.coords = rank;
    } else {
      throw std::invalid_argument("unknown system kind: " + kind_str);
    }
    f.offset = offset;
    factors.push_back(f);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  int next = 0;
  int needed = 0;
  for (auto& f : factors) {
    if (f.offset < 0) f.offset = next;
    next = f.offset + f.coords;
    needed = std::max(needed, f.offset + f.coords);
  }
  if (ambient < 0) ambient = needed;
  std::vector<RootSystem> parts;
  for (const auto& f : factors) parts.push_back(standard_system(f.kind, f.coords, ambient, f.offset));
  RootSystem out = parts.size() == 1 ? parts[0] : union_system(parts);
  out.label = label;
  return out;
}

long long coroot_pairing(const Weight& lambda, const Weight& alpha) {
  long long nn = dot(alpha, alpha);
  if (nn == 0) throw std::invalid_argument("coroot_pairing: zero root");
  long long num = 2 * dot(lambda, alpha);
  if (num % nn != 0) throw std::invalid_argument("coroot_pairing: non-integral pairing");
  return num / nn;
}

RootSystemValidation validate_root_system(const RootSystem& phi) {
  RootSystemValidation res;
  for (const auto& alpha : phi.roots) {
    long long nn = dot(alpha, alpha);
    if (nn == 0) {
      res.ok = false;
      res.violations.push_back("zero root");
      continue;
    }
    // strong integrality against the ambient lattice basis
    for (int i = 0; i < phi.ambient; ++i) {
      long long num = 2LL * alpha[i];
      if (num % nn != 0) {
        res.ok = false;
        res.violations.push_back("strong integrality fails for root " + weight_str(alpha) +
                                 " against e" + std::to_string(i + 1));
        break;
      }
    }
    // reflection closure
    for (const auto& beta : phi.roots) {
      long long num = 2 * dot(beta, alpha);
      if (num % nn != 0) {
        res.ok = false;
        res.violations.push_back("non-integral reflection coefficient for pair " +
                                 weight_str(beta) + ", " + weight_str(alpha));
        continue;
      }
      Weight image = sub(beta, scaled(alpha, (int)(num / nn)));
      if (!phi.has_root(image)) {
        res.ok = false;
        res.violations.push_back("reflection closure fails for pair " + weight_str(beta) + ", " +
                                 weight_str(alpha));
      }
    }
  }
  // positive/negative partition
  for (const auto& r : phi.roots) {
    bool pos = std::binary_search(phi.positive.begin(), phi.positive.end(), r);
    bool negpos = std::binary_search(phi.positive.begin(), phi.positive.end(), neg(r));
    if (pos == negpos) {
      res.ok = false;
      res.violations.push_back("positive system does not split the pair +-" + weight_str(r));
    }
  }
  return res;
}

Weight delta2(const RootSystem& phi) {
  Weight s(phi.ambient, 0);
  for (const auto& r : phi.positive) s = add(s, r);
  return s;
}

SignedPermutation reflection(const Weight& alpha, int ambient) {
  SignedPermutation g;
  g.sign.assign(ambient, 0);
  g.src.assign(ambient, -1);
  std::vector<bool> used(ambient, false);
  for (int j = 0; j < ambient; ++j) {
    Weight image = sub(basis_vec(ambient, j), scaled(alpha, (int)coroot_pairing(basis_vec(ambient, j), alpha)));
    int where = -1;
    int sgn = 0;
    for (int i = 0; i < ambient; ++i) {
      if (image[i] == 0) continue;
      if (where >= 0 || (image[i] != 1 && image[i] != -1))
        throw std::invalid_argument("reflection is not a signed permutation for root " + weight_str(alpha));
      where = i;
      sgn = image[i];
    }
    if (where < 0 || used[where])
      throw std::invalid_argument("reflection is not a signed permutation for root " + weight_str(alpha));
    used[where] = true;
    g.src[where] = j;
    g.sign[where] = (int8_t)sgn;
  }
  return g;
}

SignedWeyl weyl_group(const RootSystem& phi) {
  std::set<SignedPermutation> gens;
  for (const auto& alpha : phi.positive) gens.insert(reflection(alpha, phi.ambient));
  SignedWeyl out;
  out.group = WeylSubgroup::closure(phi.ambient, std::vector<SignedPermutation>(gens.begin(), gens.end()));
  out.sgn.reserve(out.group.elements.size());
  for (const auto& g : out.group.elements) out.sgn.push_back(g.det());
  return out;
}

}  // namespace dimdatum
