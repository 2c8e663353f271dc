#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeconf/complex.hpp"

namespace cubeconf {

enum class Field { rational, f2 };

struct BettiVector {
  Field field = Field::rational;
  std::vector<std::int64_t> values;  // b_0 .. b_top
};

/// b_d = f_d - rank(d) - rank(d+1). The rational field needs a labeled
/// complex; the two-element field works in both modes.
BettiVector betti_numbers(const CubeComplex& c, Field field,
                          Execution execution = Execution::parallel);

struct SurfaceWitness {
  int dim;
  std::size_t cell;
  std::string reason;
};

struct SurfaceReport {
  bool is_pure_2d = false;
  bool is_closed_surface = false;
  std::optional<bool> orientable;  // decided only for closed surfaces
  bool connected = false;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> crosscaps;  // closed, connected, non-orientable: 2 - chi
  std::int64_t chi = 0;
  std::optional<SurfaceWitness> failure_witness;
};

SurfaceReport surface_classify(const CubeComplex& c);

/// Link of a 0-cell. Vertices are the incident 1-cells (by index); each
/// cell of dimension k+1 with the base as a corner contributes the
/// k-simplex of its 1-cells at that corner. Simplices of size >= 2 only,
/// each sorted; duplicates are kept (cube complexes may have parallel
/// squares).
struct LinkComplex {
  std::size_t base = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> simplices;
};

LinkComplex vertex_link(const CubeComplex& c, std::size_t vertex);

/// Empty optional when flag; otherwise a set of pairwise-adjacent link
/// vertices that spans no simplex.
std::optional<std::vector<std::size_t>> non_flag_clique(const LinkComplex& link);

struct FlagWitness {
  std::size_t base;
  std::vector<std::size_t> clique;
};

struct FlagVerdict {
  bool flag = true;
  std::optional<FlagWitness> witness;  // lowest failing base
};

/// Gromov's link condition at every 0-cell.
FlagVerdict flag_link_check(const CubeComplex& c, Execution execution = Execution::parallel);

struct BouquetRank {
  std::int64_t labeled;
  std::int64_t unlabeled;
};

/// Petal count P = 1 + (nk - 2n - k + 1)(n+k-2)!/(k-1)! of the bouquet that
/// n labeled robots on the k-prong star are homotopic to, and the
/// unlabeled count with the second term divided by n!.
BouquetRank bouquet_rank(int n, int k);

struct DualityReport {
  int n = 0;
  int dual_n = 0;
  std::vector<std::int64_t> f_vector;
  std::vector<std::int64_t> dual_f_vector;
  std::int64_t chi = 0;
  std::int64_t dual_chi = 0;
  bool equal_chi = false;
};

/// Unlabeled complexes for n tokens and for |V| - n holes, side by side.
DualityReport duality_compare(const Graph& g, int n, const BuildOptions& options = {});

struct AnalyzeOptions {
  Field field = Field::rational;
  bool surface = false;
  bool npc = false;
  Execution execution = Execution::parallel;
};

struct TopologyReport {
  std::vector<std::int64_t> f_vector;
  std::int64_t chi = 0;
  std::size_t components = 0;
  BettiVector betti;
  std::optional<SurfaceReport> surface;
  std::optional<FlagVerdict> npc;
};

TopologyReport analyze(const CubeComplex& c, const AnalyzeOptions& options);

}  // namespace cubeconf
