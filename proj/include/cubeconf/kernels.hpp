#pragma once

// Data-parallel kernels. Each *_serial function is the reference the tests
// hold the *_parallel variant against; both must return identical output.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubeconf/complex.hpp"
#include "cubeconf/topology.hpp"

namespace cubeconf::kernels {

/// Per-dimension flat factor tables (stride n), canonically ordered.
using CellTable = std::vector<std::vector<FactorCode>>;

CellTable enumerate_cells_serial(const Graph& g, int n, Mode mode, std::size_t budget);
CellTable enumerate_cells_parallel(const Graph& g, int n, Mode mode, std::size_t budget);

std::vector<std::vector<Face>> compute_faces(const Graph& g, int n, Mode mode,
                                             const CellTable& cells, Execution execution);

/// Binary search in a canonically ordered flat table.
std::optional<std::size_t> find_cell(std::span<const FactorCode> table, int n,
                                     std::span<const FactorCode> codes);

/// Link of every 0-cell, built from the corner structure of all cells.
std::vector<LinkComplex> vertex_links(const CubeComplex& c, Execution execution);

FlagVerdict flag_check_serial(const CubeComplex& c);
FlagVerdict flag_check_parallel(const CubeComplex& c);

}  // namespace cubeconf::kernels
