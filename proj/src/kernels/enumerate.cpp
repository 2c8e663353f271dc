#include <algorithm>
#include <array>
#include <atomic>

#include "cubeconf/error.hpp"
#include "cubeconf/kernels.hpp"

namespace cubeconf::kernels {
namespace {

struct ClosureTable {
  FactorCode vertex_count;
  std::vector<std::array<VertexId, 2>> closure;  // second slot -1 for vertices

  explicit ClosureTable(const Graph& g)
      : vertex_count(static_cast<FactorCode>(g.vertex_count())) {
    closure.reserve(g.vertex_count() + g.edge_count());
    for (const Vertex& v : g.vertices()) closure.push_back({v.id, -1});
    for (const Edge& e : g.edges()) closure.push_back({e.u, e.v});
  }

  FactorCode size() const { return static_cast<FactorCode>(closure.size()); }
};

// Depth-first extension of a factor prefix. Iterating codes in ascending
// order at every slot emits tuples in lexicographic order.
class Enumerator {
 public:
  Enumerator(const ClosureTable& table, int n, Mode mode, std::size_t budget,
             std::atomic<std::size_t>& emitted, std::atomic<bool>& aborted)
      : table_(table), n_(n), mode_(mode), budget_(budget), emitted_(emitted),
        aborted_(aborted), used_(static_cast<std::size_t>(table.vertex_count), 0),
        out_(static_cast<std::size_t>(n) + 1) {
    prefix_.reserve(static_cast<std::size_t>(n));
  }

  void run_from(FactorCode first) {
    if (!take(first)) return;
    extend();
    release(first);
  }

  void run_all() { extend(); }

  CellTable take_output() { return std::move(out_); }

 private:
  bool take(FactorCode code) {
    const auto& cl = table_.closure[static_cast<std::size_t>(code)];
    if (used_[static_cast<std::size_t>(cl[0])]) return false;
    if (cl[1] >= 0 && used_[static_cast<std::size_t>(cl[1])]) return false;
    used_[static_cast<std::size_t>(cl[0])] = 1;
    if (cl[1] >= 0) used_[static_cast<std::size_t>(cl[1])] = 1;
    prefix_.push_back(code);
    return true;
  }

  void release(FactorCode code) {
    const auto& cl = table_.closure[static_cast<std::size_t>(code)];
    used_[static_cast<std::size_t>(cl[0])] = 0;
    if (cl[1] >= 0) used_[static_cast<std::size_t>(cl[1])] = 0;
    prefix_.pop_back();
  }

  void emit() {
    if (emitted_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      aborted_.store(true, std::memory_order_relaxed);
      return;
    }
    const auto dim = std::count_if(prefix_.begin(), prefix_.end(),
                                   [&](FactorCode c) { return c >= table_.vertex_count; });
    auto& bucket = out_[static_cast<std::size_t>(dim)];
    bucket.insert(bucket.end(), prefix_.begin(), prefix_.end());
  }

  void extend() {
    if (aborted_.load(std::memory_order_relaxed)) return;
    if (static_cast<int>(prefix_.size()) == n_) {
      emit();
      return;
    }
    const FactorCode start =
        (mode_ == Mode::unlabeled && !prefix_.empty()) ? prefix_.back() + 1 : 0;
    for (FactorCode code = start; code < table_.size(); ++code) {
      if (!take(code)) continue;
      extend();
      release(code);
    }
  }

  const ClosureTable& table_;
  int n_;
  Mode mode_;
  std::size_t budget_;
  std::atomic<std::size_t>& emitted_;
  std::atomic<bool>& aborted_;
  std::vector<char> used_;
  std::vector<FactorCode> prefix_;
  CellTable out_;
};

[[noreturn]] void throw_budget(std::size_t budget) {
  throw Error(ErrorKind::budget_exceeded,
              "cell budget of " + std::to_string(budget) + " exceeded");
}

}  // namespace

CellTable enumerate_cells_serial(const Graph& g, int n, Mode mode, std::size_t budget) {
  const ClosureTable table(g);
  std::atomic<std::size_t> emitted{0};
  std::atomic<bool> aborted{false};
  Enumerator enumerator(table, n, mode, budget, emitted, aborted);
  enumerator.run_all();
  if (aborted) throw_budget(budget);
  return enumerator.take_output();
}

CellTable enumerate_cells_parallel(const Graph& g, int n, Mode mode, std::size_t budget) {
  const ClosureTable table(g);
  const FactorCode roots = table.size();
  std::vector<CellTable> chunks(static_cast<std::size_t>(roots));
  std::atomic<std::size_t> emitted{0};
  std::atomic<bool> aborted{false};

#pragma omp parallel for schedule(dynamic)
  for (FactorCode first = 0; first < roots; ++first) {
    Enumerator enumerator(table, n, mode, budget, emitted, aborted);
    enumerator.run_from(first);
    chunks[static_cast<std::size_t>(first)] = enumerator.take_output();
  }
  if (aborted) throw_budget(budget);

  // Chunks are disjoint lexicographic ranges keyed by the first factor.
  CellTable out(static_cast<std::size_t>(n) + 1);
  for (std::size_t d = 0; d < out.size(); ++d) {
    std::size_t total = 0;
    for (const auto& chunk : chunks) total += chunk[d].size();
    out[d].reserve(total);
    for (const auto& chunk : chunks) out[d].insert(out[d].end(), chunk[d].begin(), chunk[d].end());
  }
  return out;
}

std::optional<std::size_t> find_cell(std::span<const FactorCode> table, int n,
                                     std::span<const FactorCode> codes) {
  const std::size_t stride = static_cast<std::size_t>(n);
  std::size_t lo = 0;
  std::size_t hi = stride == 0 ? 0 : table.size() / stride;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto row = table.subspan(mid * stride, stride);
    const auto cmp = std::lexicographical_compare_three_way(row.begin(), row.end(),
                                                            codes.begin(), codes.end());
    if (cmp == 0) return mid;
    if (cmp < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Face>> compute_faces(const Graph& g, int n, Mode mode,
                                             const CellTable& cells, Execution execution) {
  const FactorCode vertex_count = static_cast<FactorCode>(g.vertex_count());
  const std::size_t stride = static_cast<std::size_t>(n);
  std::vector<std::vector<Face>> faces(cells.size());

  for (std::size_t d = 1; d < cells.size(); ++d) {
    const std::size_t count = stride == 0 ? 0 : cells[d].size() / stride;
    faces[d].resize(count * 2 * d);
    const auto& lower = cells[d - 1];
    const bool parallel = execution == Execution::parallel;
    bool missing = false;

#pragma omp parallel for schedule(static) if (parallel) reduction(|| : missing)
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<FactorCode> work(stride);
      const FactorCode* row = cells[d].data() + i * stride;
      Face* out = faces[d].data() + i * 2 * d;
      int k = 0;
      for (std::size_t pos = 0; pos < stride; ++pos) {
        if (row[pos] < vertex_count) continue;
        ++k;
        const Edge& edge = g.edge(row[pos] - vertex_count);
        for (Endpoint end : {Endpoint::tail, Endpoint::head}) {
          std::copy(row, row + stride, work.begin());
          work[pos] = end == Endpoint::tail ? edge.tail() : edge.head();
          if (mode == Mode::unlabeled) std::sort(work.begin(), work.end());
          auto target = find_cell(lower, n, work);
          if (!target) {
            missing = true;
            continue;
          }
          const bool odd = (k % 2) == 1;
          const std::int8_t sign = (end == Endpoint::head) == odd ? 1 : -1;
          *out++ = Face{static_cast<std::int32_t>(pos), end, sign, *target};
        }
      }
    }
    if (missing) {
      throw Error(ErrorKind::invalid_argument, "face of a cell is missing from the complex");
    }
  }
  return faces;
}

}  // namespace cubeconf::kernels
