#include "cubeconf/topology.hpp"

#include <string>

#include "cubeconf/error.hpp"

namespace cubeconf {

BettiVector betti_numbers(const CubeComplex& c, Field field, Execution execution) {
  if (field == Field::rational && c.mode() != Mode::labeled) {
    throw Error(ErrorKind::invalid_argument,
                "rational Betti numbers need a labeled complex; use the two-element field");
  }
  BettiVector betti;
  betti.field = field;
  const int top = c.top_dimension();
  if (top < 0) return betti;

  // ranks[d] = rank of the boundary from d-cells; ranks[0] = ranks[top+1] = 0.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  const bool parallel = execution == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int d = 1; d <= top; ++d) {
    const auto m = field == Field::rational ? boundary_matrix(c, d) : boundary_matrix_f2(c, d);
    ranks[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(
        field == Field::rational ? rank_rational(m) : rank_f2(m));
  }
  for (int d = 0; d <= top; ++d) {
    const auto idx = static_cast<std::size_t>(d);
    betti.values.push_back(static_cast<std::int64_t>(c.cell_count(d)) - ranks[idx] - ranks[idx + 1]);
  }
  return betti;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::invalid_argument, "bouquet rank overflows 64-bit integers");
  }
  return out;
}

}  // namespace

BouquetRank bouquet_rank(int n, int k) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "bouquet rank needs n >= 1");
  if (k < 3) throw Error(ErrorKind::invalid_argument, "bouquet rank needs k >= 3 prongs");

  const std::int64_t coefficient = std::int64_t{n} * k - 2 * std::int64_t{n} - k + 1;
  std::int64_t falling = 1;  // (n+k-2)! / (k-1)!
  for (std::int64_t i = k; i <= n + k - 2; ++i) falling = checked_mul(falling, i);
  const std::int64_t term = checked_mul(coefficient, falling);

  std::int64_t n_factorial = 1;
  for (std::int64_t i = 2; i <= n; ++i) n_factorial = checked_mul(n_factorial, i);
  if (term % n_factorial != 0) {
    throw Error(ErrorKind::invalid_argument, "unlabeled bouquet term is not integral");
  }
  return BouquetRank{1 + term, 1 + term / n_factorial};
}

DualityReport duality_compare(const Graph& g, int n, const BuildOptions& options) {
  const int vertices = static_cast<int>(g.vertex_count());
  if (n < 1 || n >= vertices) {
    throw Error(ErrorKind::invalid_argument,
                "duality comparison needs 1 <= n < |V| = " + std::to_string(vertices));
  }
  auto shared = std::make_shared<const Graph>(g);
  const auto tokens = build(shared, n, Mode::unlabeled, options);
  const auto holes = build(shared, vertices - n, Mode::unlabeled, options);

  DualityReport report;
  report.n = n;
  report.dual_n = vertices - n;
  report.f_vector = f_vector(tokens);
  report.dual_f_vector = f_vector(holes);
  report.chi = euler_characteristic(tokens);
  report.dual_chi = euler_characteristic(holes);
  report.equal_chi = report.chi == report.dual_chi;
  return report;
}

TopologyReport analyze(const CubeComplex& c, const AnalyzeOptions& options) {
  TopologyReport report;
  report.f_vector = f_vector(c);
  report.chi = euler_characteristic(c);
  report.components = connected_components(c).count;
  report.betti = betti_numbers(c, options.field, options.execution);
  if (options.surface) report.surface = surface_classify(c);
  if (options.npc) report.npc = flag_link_check(c, options.execution);
  return report;
}

}  // namespace cubeconf
