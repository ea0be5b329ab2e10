// Benchmark: OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "furst/fverify.hpp"
#include "furst/incidence.hpp"
#include "furst/xscheme.hpp"

using namespace furst;

namespace {

template <typename F>
double time_ms(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-38s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name, serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel paths fall back to serial\n");
#endif

  {
    // Radon transform of a non-homogeneous point scheme: the per-direction
    // loop enumerates the whole parallel class.
    Field F = Field::create(5);
    Ring R = Ring::standard(F, 3);
    SplitMix64 rng(5150);
    auto pts = all_points(F, 3);
    std::vector<std::vector<FElem>> subset;
    for (const auto& p : pts)
      if (rng.below(4) == 0) subset.push_back(p);
    Scheme S = scheme_from_points(subset, R);
    RadonTable ser, par;
    double t_ser = time_ms([&] { ser = radon_transform_serial(S, 1); });
    double t_par = time_ms([&] { par = radon_transform(S, 1); });
    if (ser.richness != par.richness) {
      std::printf("MISMATCH in radon kernel!\n");
      return 1;
    }
    report("radon k=1, random points in F_5^3", t_ser, t_par);
  }

  {
    // Generic-rank grid sweep on a large fat-point chart matrix.
    Field F = Field::create(3);
    Scheme S = make_fat_point(F, 4, 3);
    ChartMatrix M = build_chart_matrix(S, 1, Chart::make(4, 1, {0, 1, 2}));
    long r_ser = 0, r_par = 0;
    double t_ser = time_ms([&] { r_ser = generic_rank_on_chart_serial(M); });
    double t_par = time_ms([&] { r_par = generic_rank_on_chart(M); });
    if (r_ser != r_par) {
      std::printf("MISMATCH in grid-sweep kernel!\n");
      return 1;
    }
    report("generic rank sweep, N=35 chart", t_ser, t_par);
  }

  {
    // Exhaustive Furstenberg search over the subsets of F_2^2.
    Field F = Field::create(2);
    SearchResult a;
    double t = time_ms([&] { a = search_furstenberg_sets(F, 2, 1, 2, SearchMode::Exhaustive); });
    std::printf("%-38s %9.1f ms (minimum %ld, %lld subsets)\n", "exhaustive search q=2 n=2", t,
                a.size, static_cast<long long>(a.examined));
  }

  return 0;
}
