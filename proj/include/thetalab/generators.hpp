#pragma once

#include <string>
#include <vector>

#include "thetalab/complex.hpp"

namespace thetalab {

/// The full simplex 2^V; EMPTY for no labels.
SimplicialComplex simplex(const std::vector<std::string>& labels);
/// Boundary of 2^V: all proper subsets. VOID for no labels, EMPTY for one.
SimplicialComplex boundary_simplex(const std::vector<std::string>& labels);
/// Boundary of the n-dimensional cross-polytope on vertices "+i", "-i".
SimplicialComplex cross_polytope_boundary(int n);
/// Path with k edges on vertices "0".."k".
SimplicialComplex path(int k);
/// Cycle on k >= 3 vertices "0".."k-1".
SimplicialComplex cycle(int k);

/// Two tetrahedra {a,b,c,d}, {b,c,d,e} sharing a triangle, each stellarly
/// subdivided at its facet (apexes u, v). Interior vertex property holds, but
/// the boundary is not induced because {b,c,d} is interior.
SimplicialComplex twin_stellar_ball();

/// Boundaries of two octahedra glued along a triangle {a,b,c}, coned over u1
/// and u2 respectively. A flag 3-ball with 11 vertices whose boundary is not
/// induced.
SimplicialComplex glued_octahedra_ball();

/// Convenience: labels "a", "b", ... for small examples.
std::vector<std::string> letters(int count);

}  // namespace thetalab
