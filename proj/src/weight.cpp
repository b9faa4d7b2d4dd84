#include "dimdatum/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace dimdatum {

namespace {
void check_rank(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
}
}  // namespace

long long dot(const Weight& a, const Weight& b) {
  check_rank(a, b);
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
  return s;
}

Weight add(const Weight& a, const Weight& b) {
  check_rank(a, b);
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  check_rank(a, b);
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Weight scaled(const Weight& a, int c) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Weight& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

std::string weight_str(const Weight& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

Weight parse_weight(const std::string& s) {
  Weight w;
  if (s.empty()) return w;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string piece = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    int v = std::stoi(piece, &used);
    if (used != piece.size()) throw std::invalid_argument("bad weight coordinate: " + piece);
    w.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation g;
  g.sign.assign(n, 1);
  g.src.resize(n);
  for (int i = 0; i < n; ++i) g.src[i] = i;
  return g;
}

Weight SignedPermutation::apply(const Weight& v) const {
  if ((int)v.size() != rank()) throw std::invalid_argument("rank mismatch in group action");
  Weight r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = sign[i] * v[src[i]];
  return r;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch in composition");
  SignedPermutation r;
  int n = rank();
  r.sign.resize(n);
  r.src.resize(n);
  for (int i = 0; i < n; ++i) {
    r.src[i] = o.src[src[i]];
    r.sign[i] = (int8_t)(sign[i] * o.sign[src[i]]);
  }
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  int n = rank();
  r.sign.resize(n);
  r.src.resize(n);
  for (int i = 0; i < n; ++i) {
    r.src[src[i]] = i;
    r.sign[src[i]] = sign[i];
  }
  return r;
}

int SignedPermutation::det() const {
  int n = rank();
  int d = 1;
  for (int i = 0; i < n; ++i) d *= sign[i];
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = src[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) d = -d;
  }
  return d;
}

bool WeylSubgroup::contains(const SignedPermutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

WeylSubgroup WeylSubgroup::closure(int rank, std::vector<SignedPermutation> gens) {
  WeylSubgroup W;
  W.rank = rank;
  W.gens = std::move(gens);
  std::set<SignedPermutation> seen;
  std::deque<SignedPermutation> queue;
  seen.insert(SignedPermutation::identity(rank));
  queue.push_back(SignedPermutation::identity(rank));
  while (!queue.empty()) {
    SignedPermutation g = queue.front();
    queue.pop_front();
    for (const auto& s : W.gens) {
      SignedPermutation h = s.compose(g);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  W.elements.assign(seen.begin(), seen.end());
  return W;
}

WeylSubgroup hyperoctahedral_group(int n) {
  std::vector<SignedPermutation> gens;
  for (int i = 0; i + 1 < n; ++i) {
    SignedPermutation t = SignedPermutation::identity(n);
    std::swap(t.src[i], t.src[i + 1]);
    gens.push_back(t);
  }
  if (n >= 1) {
    SignedPermutation f = SignedPermutation::identity(n);
    f.sign[0] = -1;
    gens.push_back(f);
  }
  return WeylSubgroup::closure(n, gens);
}

std::set<Weight> orbit(const WeylSubgroup& W, const Weight& lambda) {
  if ((int)lambda.size() != W.rank) throw std::invalid_argument("orbit: rank mismatch");
  std::set<Weight> out;
  std::deque<Weight> queue;
  out.insert(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    for (const auto& g : W.gens) {
      Weight u = g.apply(v);
      if (out.insert(u).second) queue.push_back(u);
    }
  }
  return out;
}

Weight dominant_representative(const Weight& lambda) {
  Weight r(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) r[i] = std::abs(lambda[i]);
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

}  // namespace dimdatum
