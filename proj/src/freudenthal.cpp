#include "dimdatum/freudenthal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dimdatum {

std::vector<Weight> simple_roots(const RootSystem& phi) {
  std::set<Weight> pos(phi.positive.begin(), phi.positive.end());
  std::vector<Weight> out;
  for (const auto& a : phi.positive) {
    bool decomposable = false;
    for (const auto& b : phi.positive) {
      if (b == a) continue;
      Weight c = sub(a, b);
      if (pos.count(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

Weight dominant_in_orbit(const RootSystem& phi, const std::vector<Weight>& simples, Weight mu) {
  (void)phi;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : simples) {
      long long p = coroot_pairing(mu, a);
      if (p < 0) {
        mu = sub(mu, scaled(a, (int)p));
        moved = true;
      }
    }
  }
  return mu;
}

namespace {

bool is_dominant(const Weight& mu, const std::vector<Weight>& simples) {
  for (const auto& a : simples)
    if (2 * dot(mu, a) < 0) return false;
  return true;
}

long long norm2_shift(const Weight& mu, const Weight& d2) {
  // |2 mu + 2 delta|^2
  Weight v = add(scaled(mu, 2), d2);
  return dot(v, v);
}

}  // namespace

std::map<Weight, long long> dominant_multiplicities(const RootSystem& phi, const Weight& hw) {
  std::vector<Weight> simples = simple_roots(phi);
  if (!dominant_integral_for(phi, hw))
    throw std::invalid_argument("dominant_multiplicities: non-dominant highest weight " + weight_str(hw));
  Weight d2 = delta2(phi);
  long long top = norm2_shift(hw, d2);

  // all dominant weights below hw inside the shifted norm ball
  std::set<Weight> seen;
  std::deque<Weight> queue;
  std::vector<Weight> dominants;
  seen.insert(hw);
  queue.push_back(hw);
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    if (is_dominant(v, simples)) dominants.push_back(v);
    for (const auto& a : simples) {
      Weight u = sub(v, a);
      if (norm2_shift(u, d2) > top) continue;
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& x, const Weight& y) {
    long long nx = norm2_shift(x, d2), ny = norm2_shift(y, d2);
    if (nx != ny) return nx > ny;
    return x < y;
  });

  std::map<Weight, long long> mult;
  for (const auto& mu : dominants) {
    if (mu == hw) {
      mult[hw] = 1;
      continue;
    }
    long long denom = top - norm2_shift(mu, d2);
    if (denom <= 0) continue;  // only the orbit of hw sits on the shell
    long long num = 0;
    for (const auto& alpha : phi.positive) {
      for (int k = 1;; ++k) {
        Weight nu = add(mu, scaled(alpha, k));
        if (norm2_shift(nu, d2) > top) break;
        Weight dom = dominant_in_orbit(phi, simples, nu);
        auto it = mult.find(dom);
        if (it == mult.end() || it->second == 0) continue;
        num += it->second * dot(nu, alpha);
      }
    }
    long long m8 = 8 * num;
    if (m8 % denom != 0) throw std::logic_error("Freudenthal recursion: non-integral multiplicity");
    long long m = m8 / denom;
    if (m < 0) throw std::logic_error("Freudenthal recursion: negative multiplicity");
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

long long weyl_dimension(const RootSystem& phi, const Weight& hw) {
  Weight d2 = delta2(phi);
  Weight num_vec = add(scaled(hw, 2), d2);
  __int128 num = 1, den = 1;
  for (const auto& alpha : phi.positive) {
    num *= dot(num_vec, alpha);
    den *= dot(d2, alpha);
    __int128 a = num < 0 ? -num : num, b = den < 0 ? -den : den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  if (den != 1 && den != -1) throw std::logic_error("weyl_dimension: non-integral value");
  long long d = (long long)(num * den);
  if (d <= 0) throw std::logic_error("weyl_dimension: non-positive value");
  return d;
}

CharacterElement irrep_character(const RootSystem& phi, const Weight& hw) {
  auto mult = dominant_multiplicities(phi, hw);
  SignedWeyl W = weyl_group(phi);
  CharacterElement ch = char_zero(phi.ambient);
  long long total = 0;
  for (const auto& [mu, m] : mult) {
    auto orb = orbit(W.group, mu);
    for (const auto& nu : orb) ch.add_term(nu, Rational(m));
    total += m * (long long)orb.size();
  }
  if (total != weyl_dimension(phi, hw))
    throw std::logic_error("irrep_character: dimension cross-check failed for " + weight_str(hw));
  return ch;
}

}  // namespace dimdatum
