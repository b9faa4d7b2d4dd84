#include "dimdatum/branching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "dimdatum/freudenthal.hpp"

namespace dimdatum {

using nlohmann::ordered_json;

CharacterElement factor_character(const GroupFactor& g, const Weight& hw, CharCache& cache) {
  if (!g.dominant(hw))
    throw std::invalid_argument("factor_character: non-dominant weight " + weight_str(hw) + " for " +
                                g.label());
  if (g.kind == GroupFactor::Kind::Torus) return char_single(hw);
  std::string label = g.label();
  if (auto hit = cache.get(label, hw)) return *hit;
  CharacterElement ch = irrep_character(g.roots(), hw);
  cache.put(label, hw, ch);
  return ch;
}

CharacterElement torus_character(const EmbeddedGroup& g, const std::vector<Weight>& parts,
                                 CharCache& cache) {
  if (parts.size() != g.factors.size())
    throw std::invalid_argument("torus_character: wrong number of factor weights");
  CharacterElement out = char_single(Weight(g.torus_rank, 0));
  for (size_t f = 0; f < g.factors.size(); ++f) {
    CharacterElement own = factor_character(g.factors[f], parts[f], cache);
    CharacterElement restricted = char_zero(g.torus_rank);
    for (const auto& [w, c] : own.terms) restricted.add_term(g.restrict_weight(f, w), c);
    out = cmul(out, restricted);
  }
  return out;
}

long long embedded_dimension(const EmbeddedGroup& g, const std::vector<Weight>& parts) {
  long long d = 1;
  for (size_t f = 0; f < g.factors.size(); ++f) d *= factor_dimension(g.factors[f], parts[f]);
  return d;
}

BranchDecomposition branch_all(const EmbeddedGroup& G, const Weight& rho, const EmbeddedGroup& H,
                               CharCache& cache) {
  if (G.torus_rank != H.torus_rank) throw std::invalid_argument("branch_all: torus rank mismatch");
  BranchDecomposition out;
  out.dim_rho = embedded_dimension(G, {rho});

  CharacterElement chi = torus_character(G, {rho}, cache);
  std::map<Weight, long long> work;
  for (const auto& [w, c] : chi.terms) {
    if (!c.is_integer()) throw std::logic_error("branch_all: non-integral character coefficient");
    work[w] = c.num();
  }

  long long covered = 0;
  while (!work.empty()) {
    auto top = std::prev(work.end());  // lexicographically largest weight
    Weight kappa = top->first;
    long long mult = top->second;
    if (mult == 0) {
      work.erase(top);
      continue;
    }
    if (mult < 0)
      throw std::logic_error("branch_all: negative coefficient " + std::to_string(mult) +
                             " at weight " + weight_str(kappa));
    std::vector<Weight> parts;
    for (size_t f = 0; f < H.factors.size(); ++f) parts.push_back(H.factor_hw_from_torus(f, kappa));
    if (!H.dominant_parts(parts))
      throw std::logic_error("branch_all: peeled weight " + weight_str(kappa) +
                             " is not dominant for " + H.label);

    CharacterElement tau_chi = torus_character(H, parts, cache);
    for (const auto& [w, c] : tau_chi.terms) {
      long long delta = mult * c.num();
      auto it = work.find(w);
      long long next = (it == work.end() ? 0 : it->second) - delta;
      if (next == 0) {
        if (it != work.end()) work.erase(it);
      } else if (it == work.end()) {
        work.emplace(w, next);
      } else {
        it->second = next;
      }
    }
    out.constituents.push_back({parts, mult});
    covered += mult * embedded_dimension(H, parts);
  }
  out.conservation_ok = (covered == out.dim_rho);
  return out;
}

long long branch_multiplicity(const EmbeddedGroup& G, const Weight& rho, const EmbeddedGroup& H,
                              const std::vector<Weight>& tau, CharCache& cache) {
  if (tau.size() != H.factors.size())
    throw std::invalid_argument("branch_multiplicity: wrong number of factor weights");
  BranchDecomposition dec = branch_all(G, rho, H, cache);
  if (!dec.conservation_ok) throw std::logic_error("branch_multiplicity: dimension conservation failed");
  for (const auto& [parts, m] : dec.constituents)
    if (parts == tau) return m;
  return 0;
}

std::vector<Weight> su_irreps_below(int N, const Rational& cutoff) {
  if (!(Rational(0) < cutoff)) throw std::invalid_argument("su_irreps_below: cutoff must be positive");
  GroupFactor g{GroupFactor::Kind::SU, N};
  std::vector<Weight> out;
  Weight fund_coeffs(N - 1, 0);
  // hw(k) = sum_i k_i (e_1 + ... + e_i); monotone Casimir allows pruning
  std::function<void(int)> rec = [&](int pos) {
    Weight hw(N, 0);
    for (int i = 0; i < N - 1; ++i)
      for (int j = 0; j <= i; ++j) hw[j] += fund_coeffs[i];
    if (casimir_eigenvalue(g, hw) > cutoff) return;
    if (pos == N - 1) {
      out.push_back(hw);
      return;
    }
    for (int v = 0;; ++v) {
      fund_coeffs[pos] = v;
      Weight probe(N, 0);
      for (int i = 0; i <= pos; ++i)
        for (int j = 0; j <= i; ++j) probe[j] += fund_coeffs[i];
      if (casimir_eigenvalue(g, probe) > cutoff) {
        fund_coeffs[pos] = 0;
        return;
      }
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    Rational cx = casimir_eigenvalue(g, x), cy = casimir_eigenvalue(g, y);
    if (cx != cy) return cx < cy;
    return x < y;
  });
  return out;
}

std::vector<std::pair<Weight, long long>> tau_dimension_datum(const EmbeddedGroup& G,
                                                              const EmbeddedGroup& H,
                                                              const std::vector<Weight>& tau,
                                                              const Rational& cutoff,
                                                              CharCache& cache) {
  if (G.factors.size() != 1 || G.factors[0].kind != GroupFactor::Kind::SU)
    throw std::invalid_argument("tau_dimension_datum: ambient group must be a single SU factor");
  std::vector<std::pair<Weight, long long>> out;
  for (const auto& rho : su_irreps_below(G.factors[0].n, cutoff))
    out.push_back({rho, branch_multiplicity(G, rho, H, tau, cache)});
  return out;
}

Spectrum bundle_spectrum(const EmbeddedGroup& G, const EmbeddedGroup& H,
                         const std::vector<Weight>& tau, const Rational& cutoff, CharCache& cache) {
  if (G.factors.size() != 1 || G.factors[0].kind != GroupFactor::Kind::SU)
    throw std::invalid_argument("bundle_spectrum: ambient group must be a single SU factor");
  std::map<Rational, long long> acc;
  for (const auto& rho : su_irreps_below(G.factors[0].n, cutoff)) {
    long long m = branch_multiplicity(G, rho, H, tau, cache);
    if (m == 0) continue;
    Rational ev = casimir_eigenvalue(G.factors[0], rho);
    acc[ev] += m * factor_dimension(G.factors[0], rho);
  }
  Spectrum s;
  s.cutoff = cutoff;
  for (const auto& [ev, m] : acc) s.entries.push_back({ev, m});
  return s;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b) {
  if (a.cutoff != b.cutoff) throw std::invalid_argument("spectra_equal: cutoff mismatch");
  return a.entries == b.entries;
}

std::string spectrum_json(const Spectrum& s) {
  ordered_json j;
  j["schema_version"] = 1;
  j["cutoff"] = s.cutoff.str();
  ordered_json rows = ordered_json::array();
  for (const auto& [ev, m] : s.entries) rows.push_back(ordered_json::array({ev.str(), m}));
  j["entries"] = rows;
  return j.dump(1) + "\n";
}

Spectrum spectrum_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Spectrum s;
  s.cutoff = Rational::parse(j.at("cutoff").get<std::string>());
  for (const auto& row : j.at("entries"))
    s.entries.push_back({Rational::parse(row[0].get<std::string>()), row[1].get<long long>()});
  return s;
}

}  // namespace dimdatum
