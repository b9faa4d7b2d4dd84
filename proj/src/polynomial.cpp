#include "dimdatum/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dimdatum {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.idx.resize(a.idx.size() + b.idx.size());
  std::merge(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(), r.idx.begin(),
             std::greater<uint16_t>());
  return r;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0;
  for (size_t j = 0; j < b.idx.size(); ++j) {
    while (i < a.idx.size() && a.idx[i] > b.idx[j]) r.idx.push_back(a.idx[i++]);
    if (i >= a.idx.size() || a.idx[i] != b.idx[j]) return std::nullopt;
    ++i;
  }
  while (i < a.idx.size()) r.idx.push_back(a.idx[i++]);
  return r;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.homo_ = 0;
  if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
  return p;
}

Polynomial Polynomial::var(int k) {
  if (k < 0) throw std::invalid_argument("Polynomial::var: negative index");
  Polynomial p;
  p.homo_ = 1;
  Monomial m;
  if (k > 0) m.idx.push_back((uint16_t)k);
  p.terms_.emplace(m, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Polynomial::pre_degree() const { return homo_; }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {
std::optional<int> combine_add(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.pre_degree();
  if (b.is_zero()) return a.pre_degree();
  if (a.pre_degree() && b.pre_degree() && *a.pre_degree() == *b.pre_degree()) return a.pre_degree();
  return std::nullopt;
}
}  // namespace

Polynomial Polynomial::operator-() const {
  Polynomial r;
  r.homo_ = homo_;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.homo_ = combine_add(a, b);
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.homo_ = combine_add(a, b);
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.homo_ && b.homo_)
    r.homo_ = *a.homo_ + *b.homo_;
  else
    r.homo_ = std::nullopt;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  r.homo_ = homo_;
  if (c.is_zero()) return r;
  for (const auto& [m, cm] : terms_) r.terms_.emplace(m, cm * c);
  return r;
}

Polynomial Polynomial::apply_sigma() const {
  Polynomial r;
  r.homo_ = homo_;
  for (const auto& [m, c] : terms_) {
    int odd = 0;
    for (uint16_t k : m.idx)
      if (k % 2 == 1) ++odd;
    r.terms_.emplace(m, odd % 2 == 0 ? c : -c);
  }
  return r;
}

int Polynomial::max_index() const {
  int mx = 0;
  for (const auto& [m, c] : terms_)
    if (!m.idx.empty()) mx = std::max(mx, (int)m.idx.front());
  return mx;
}

int Polynomial::degree_in(int k) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, (int)std::count(m.idx.begin(), m.idx.end(), (uint16_t)k));
  return d;
}

Polynomial Polynomial::coeff_of(int k, int e) const {
  Polynomial r;
  if (homo_)
    r.homo_ = *homo_ - e;
  else
    r.homo_ = std::nullopt;
  for (const auto& [m, c] : terms_) {
    int cnt = (int)std::count(m.idx.begin(), m.idx.end(), (uint16_t)k);
    if (cnt != e) continue;
    Monomial q;
    for (uint16_t v : m.idx)
      if (v != (uint16_t)k) q.idx.push_back(v);
    r.terms_.emplace(q, c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("try_divide: division by zero polynomial");
  Polynomial q;
  if (f.homo_ && g.homo_)
    q.homo_ = *f.homo_ - *g.homo_;
  else
    q.homo_ = std::nullopt;
  Polynomial r = f;
  const auto& glead = *g.terms_.begin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.begin();
    auto m = mono_div(rlead.first, glead.first);
    if (!m) return std::nullopt;
    Rational c = rlead.second / glead.second;
    Polynomial t;
    t.homo_ = std::nullopt;
    t.terms_.emplace(*m, c);
    q.add_term(*m, c);
    r = r - t * g;
  }
  return q;
}

std::string Polynomial::text() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    first = false;
    std::string mono;
    size_t i = 0;
    std::vector<std::pair<int, int>> grouped;  // (index, exponent), ascending index
    while (i < m.idx.size()) {
      size_t j = i;
      while (j < m.idx.size() && m.idx[j] == m.idx[i]) ++j;
      grouped.push_back({(int)m.idx[i], (int)(j - i)});
      i = j;
    }
    std::reverse(grouped.begin(), grouped.end());
    for (size_t gi = 0; gi < grouped.size(); ++gi) {
      if (gi) mono += "*";
      mono += "x" + std::to_string(grouped[gi].first);
      if (grouped[gi].second > 1) mono += "^" + std::to_string(grouped[gi].second);
    }
    if (mono.empty()) {
      s += a.str();
    } else if (a == Rational(1)) {
      s += mono;
    } else {
      s += a.str() + "*" + mono;
    }
  }
  return s;
}

}  // namespace dimdatum
