#ifndef DIMDATUM_FREUDENTHAL_HPP
#define DIMDATUM_FREUDENTHAL_HPP

#include <map>

#include "dimdatum/character.hpp"
#include "dimdatum/rootsystem.hpp"

namespace dimdatum {

/// Positive roots that are not sums of two positive roots.
std::vector<Weight> simple_roots(const RootSystem& phi);

/// Dominant representative of mu under the Weyl group of phi, by repeated
/// reflection in simple roots.
Weight dominant_in_orbit(const RootSystem& phi, const std::vector<Weight>& simples, Weight mu);

/// Inner multiplicities of the irreducible highest-weight module: map from
/// dominant weights to multiplicities, by the Freudenthal recursion.
std::map<Weight, long long> dominant_multiplicities(const RootSystem& phi, const Weight& hw);

/// Dimension by the Weyl dimension formula.
long long weyl_dimension(const RootSystem& phi, const Weight& hw);

/// Full character on the ambient lattice (orbit-spread inner
/// multiplicities). Cross-checked against the dimension formula; throws on
/// disagreement.
CharacterElement irrep_character(const RootSystem& phi, const Weight& hw);

}  // namespace dimdatum

#endif
