#ifndef DIMDATUM_BRANCHING_HPP
#define DIMDATUM_BRANCHING_HPP

#include <string>
#include <vector>

#include "dimdatum/cache.hpp"
#include "dimdatum/character.hpp"
#include "dimdatum/groups.hpp"
#include "dimdatum/rational.hpp"

namespace dimdatum {

/// Character of one factor irrep in the factor's own coordinates, via the
/// Freudenthal recursion (memoized through the cache).
CharacterElement factor_character(const GroupFactor& g, const Weight& hw, CharCache& cache);

/// Character of an embedded-group irrep pushed onto the common torus:
/// product over factors of the restricted factor characters.
CharacterElement torus_character(const EmbeddedGroup& g, const std::vector<Weight>& parts,
                                 CharCache& cache);

long long embedded_dimension(const EmbeddedGroup& g, const std::vector<Weight>& parts);

/// Full decomposition of rho|_H by peeling highest weights off the
/// restricted character.
struct BranchDecomposition {
  std::vector<std::pair<std::vector<Weight>, long long>> constituents;
  long long dim_rho = 0;
  bool conservation_ok = false;
};

BranchDecomposition branch_all(const EmbeddedGroup& G, const Weight& rho,
                               const EmbeddedGroup& H, CharCache& cache);

/// dim Hom_H(tau, rho|_H).
long long branch_multiplicity(const EmbeddedGroup& G, const Weight& rho, const EmbeddedGroup& H,
                              const std::vector<Weight>& tau, CharCache& cache);

/// Dominant SU(N) highest weights (canonical, last coordinate zero) with
/// Casimir at most the cutoff, sorted by (Casimir, weight).
std::vector<Weight> su_irreps_below(int N, const Rational& cutoff);

/// The tau-dimension datum restricted to Casimir <= cutoff: one entry per
/// irrep of G, in enumeration order.
std::vector<std::pair<Weight, long long>> tau_dimension_datum(const EmbeddedGroup& G,
                                                              const EmbeddedGroup& H,
                                                              const std::vector<Weight>& tau,
                                                              const Rational& cutoff,
                                                              CharCache& cache);

/// Multiset of Laplace eigenvalues with multiplicities, below a cutoff.
struct Spectrum {
  Rational cutoff;
  std::vector<std::pair<Rational, long long>> entries;  // ascending eigenvalue
};

Spectrum bundle_spectrum(const EmbeddedGroup& G, const EmbeddedGroup& H,
                         const std::vector<Weight>& tau, const Rational& cutoff, CharCache& cache);

/// Exact multiset equality; throws on cutoff mismatch.
bool spectra_equal(const Spectrum& a, const Spectrum& b);

std::string spectrum_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

}  // namespace dimdatum

#endif
