#pragma once

#include <array>
#include <map>
#include <vector>

#include "icp/complex.hpp"

namespace icp {

struct GeneratedComplex {
  CellComplex complex;
  int center = 0;
  // grid coordinates per vertex, filled by z2_lattice only
  std::vector<std::array<int, 2>> grid;
};

// Hop ball of the square lattice: vertices (m,n) with |m|+|n| <= radius,
// square faces wherever all four corners exist. Weight theta on every edge.
GeneratedComplex z2_lattice(int radius, double theta);

// Patch of the degree-6 hexagonal tessellation (hexagonal 2-cells, six around
// each interior vertex; hyperbolic combinatorics). `layers` coronas of
// hexagons are grown around a central hexagon.
GeneratedComplex hex_lattice(int layers, double theta);

// 1-skeleton of the cube / dodecahedron with a constant edge weight.
GeneratedComplex cube_complex(double theta);
GeneratedComplex dodecahedron_complex(double theta);

// Dispatch by name: "z2_lattice", "hex_lattice", "cube", "dodecahedron".
// `size` is the radius / layer count where applicable.
GeneratedComplex generate_named(const std::string& name, int size,
                                double theta);

}  // namespace icp
