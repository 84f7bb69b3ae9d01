// Compares the OpenMP kernels against their serial reference
// implementations: same results required, wall time reported.

#include <chrono>
#include <cstdio>

#include "weyl/geometry.hpp"
#include "weyl/orbitspace.hpp"

using namespace weyl;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s %s\n", "kernel", "serial", "parallel", "speedup",
              "identical");

  {
    RasterWindow w;
    auto t0 = std::chrono::steady_clock::now();
    RasterGrid serial = region_raster_serial(Family::C, 2, w, 400, 400);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    RasterGrid parallel = region_raster(Family::C, 2, w, 400, 400);
    double tp = ms_since(t0);
    bool same = serial.verdicts == parallel.verdicts && serial.ranks == parallel.ranks;
    std::printf("%-34s %8.1fms %8.1fms %7.2fx %s\n", "raster C2 400x400", ts, tp, ts / tp,
                same ? "yes" : "NO");
  }

  {
    RasterWindow w;
    auto t0 = std::chrono::steady_clock::now();
    RasterGrid serial = region_raster_serial(Family::B, 3, w, 120, 120, 0, 1, {0, 0, 0.2});
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    RasterGrid parallel = region_raster(Family::B, 3, w, 120, 120, 0, 1, {0, 0, 0.2});
    double tp = ms_since(t0);
    bool same = serial.verdicts == parallel.verdicts && serial.ranks == parallel.ranks;
    std::printf("%-34s %8.1fms %8.1fms %7.2fx %s\n", "raster B3 slice 120x120", ts, tp,
                ts / tp, same ? "yes" : "NO");
  }

  {
    const RootSystemData& d = family_context(Family::A, 2).d;
    auto t0 = std::chrono::steady_clock::now();
    OrthoResult serial = orthogonality_mc_serial(d, {1, 0}, {1, 0}, 2000000, 42);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    OrthoResult parallel = orthogonality_mc(d, {1, 0}, {1, 0}, 2000000, 42);
    double tp = ms_since(t0);
    bool same = serial.estimate == parallel.estimate && serial.stderr_est == parallel.stderr_est;
    std::printf("%-34s %8.1fms %8.1fms %7.2fx %s\n", "orthogonality MC A2 2e6", ts, tp,
                ts / tp, same ? "yes" : "NO");
  }

  {
    const RootSystemData& d = family_context(Family::C, 3).d;
    auto t0 = std::chrono::steady_clock::now();
    OrthoResult serial = orthogonality_mc_serial(d, {1, 1, 1}, {1, 1, 1}, 500000, 7, true);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    OrthoResult parallel = orthogonality_mc(d, {1, 1, 1}, {1, 1, 1}, 500000, 7, true);
    double tp = ms_since(t0);
    bool same = serial.estimate == parallel.estimate && serial.stderr_est == parallel.stderr_est;
    std::printf("%-34s %8.1fms %8.1fms %7.2fx %s\n", "orthogonality MC C3 sine 5e5", ts, tp,
                ts / tp, same ? "yes" : "NO");
  }

  return 0;
}
