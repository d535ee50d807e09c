#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "thetalab/complex.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

struct NamedTriangulation {
    std::string name;
    Triangulation triangulation;
    bool antiprism = false;
};

/// splitmix64 mixing of (seed, stream, index); streams split this way give
/// the same instances whether generated serially or in parallel.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

enum class InstanceClass { sphere, ball, cohen_macaulay, flag_sphere, flag_ball };
std::string to_string(InstanceClass c);

/// Deterministic stream of random complexes of one class. Balls and
/// Cohen-Macaulay complexes grow by shelling steps followed by stellar moves;
/// spheres are stellar moves on a simplex boundary; flag spheres are edge
/// subdivisions of a cross-polytope boundary; flag balls delete a vertex from
/// a flag sphere. Every instance is re-verified homologically.
class InstanceGenerator {
public:
    /// Throws PreconditionError unless 1 <= dim <= 3 and the vertex budget
    /// (at most 12) leaves room for the starting complex.
    InstanceGenerator(std::uint64_t seed, InstanceClass cls, int dim, int vertex_budget = 12);

    /// The index-th instance of the stream.
    [[nodiscard]] NamedComplex generate(std::uint64_t index) const;
    NamedComplex next() { return generate(counter_++); }

private:
    std::uint64_t seed_;
    InstanceClass cls_;
    int dim_;
    int budget_;
    std::uint64_t counter_ = 0;
};

/// A random (outer, inner) pair of balls of equal dimension with inner a
/// subcomplex of outer; both have the interior vertex property.
std::pair<NamedComplex, NamedComplex> nested_balls(std::uint64_t seed, std::uint64_t index, int dim,
                                                   int vertex_budget = 12);

/// Bases of the fixed corpus up to dimension max_dim: simplices, simplex
/// boundaries, the octahedron, paths, cycles, cones and the two example balls.
std::vector<NamedComplex> corpus_bases(int max_dim);

/// identity, sd, antiprism, stellar on a facet, edgewise r = 2, 3 and one
/// composition, for one base.
std::vector<NamedTriangulation> corpus_triangulations(const NamedComplex& base);

}  // namespace thetalab
