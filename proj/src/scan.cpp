#include <omp.h>

#include "statgeo/analysis.hpp"

namespace statgeo {

namespace {

ScanResult empty_result(const PotentialModel& model, const ScanGrid& grid,
                        std::span<const double> alphas) {
  if (grid.axes.size() != model.dimension()) {
    throw std::invalid_argument("scan: grid has " + std::to_string(grid.axes.size()) +
                                " axes but the model has dimension " +
                                std::to_string(model.dimension()));
  }
  for (const auto& axis : grid.axes) {
    if (axis.count < 1) throw std::invalid_argument("scan: axis '" + axis.name + "' needs count >= 1");
  }
  ScanResult result;
  result.coordinate_names = model.coordinate_names();
  result.alphas.assign(alphas.begin(), alphas.end());
  result.rows.resize(grid.size());
  return result;
}

}  // namespace

ScanResult scan_serial(const PotentialModel& model, const ScanGrid& grid,
                       std::span<const double> alphas) {
  ScanResult result = empty_result(model, grid, alphas);
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    result.rows[r] = scan_point(model, grid.point(r), alphas);
  }
  return result;
}

ScanResult scan(const PotentialModel& model, const ScanGrid& grid, std::span<const double> alphas,
                int threads) {
  ScanResult result = empty_result(model, grid, alphas);
  const auto rows = static_cast<long>(result.rows.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  // Rows are independent and written to their own slot, so the order of
  // completion does not affect the output.
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads)
  for (long r = 0; r < rows; ++r) {
    result.rows[r] = scan_point(model, grid.point(static_cast<std::size_t>(r)), alphas);
  }
  return result;
}

}  // namespace statgeo
