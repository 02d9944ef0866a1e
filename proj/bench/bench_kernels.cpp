// Compares the OpenMP batch kernels against their serial reference
// implementations on generated workloads.

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "extform/batch.hpp"
#include "extform/rng.hpp"

using namespace extform;

namespace {

std::vector<ExteriorForm> random_profile_workload(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ExteriorForm> forms;
  forms.reserve(count);
  for (int i = 0; i < count; ++i) {
    int n = static_cast<int>(rng.uniform(4, 6));
    int p = static_cast<int>(rng.uniform(1, n));
    // pull back through a random map so the coefficients carry real weight
    forms.push_back(pullback(rng.form(n, p, 6), rng.invertible(n, 18)));
  }
  return forms;
}

std::vector<ExteriorForm> random_classify_workload(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ExteriorForm> forms;
  forms.reserve(count);
  const auto types = {ThreeFormType::ComplexStable, ThreeFormType::Degenerate3,
                      ThreeFormType::RealStable, ThreeFormType::OneDivisor,
                      ThreeFormType::Decomposable};
  while (static_cast<int>(forms.size()) < count)
    for (ThreeFormType t : types) {
      if (static_cast<int>(forms.size()) >= count) break;
      forms.push_back(pullback(canonical_3form(t), rng.invertible(6)));
    }
  return forms;
}

template <typename F>
double time_of(F&& f) {
  double t0 = omp_get_wtime();
  f();
  return omp_get_wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 2000;
  std::printf("threads: %d, workload: %d\n", omp_get_max_threads(), count);

  {
    auto forms = random_profile_workload(count, 7);
    std::vector<FormProfile> a, b;
    double ts = time_of([&] { a = profile_many_serial(forms); });
    double tp = time_of([&] { b = profile_many(forms); });
    bool same = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      same = same && a[i].rank == b[i].rank && a[i].kernel == b[i].kernel;
    std::printf("profile:  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                ts, tp, ts / tp, same ? "match" : "MISMATCH");
  }
  {
    auto forms = random_classify_workload(count / 4, 11);
    std::vector<ThreeFormType> a, b;
    double ts = time_of([&] { a = classify_types_many_serial(forms); });
    double tp = time_of([&] { b = classify_types_many(forms); });
    std::printf("classify: serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
  }
  {
    // Row-reduction kernel on a mid-size dense rational matrix.
    Rng rng(23);
    Mat m(160, 200);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.rational(20, 1);
    Mat a = m, b = m;
    double ts = time_of([&] { a.rref_inplace_serial(); });
    double tp = time_of([&] { b.rref_inplace(); });
    std::printf("rref:     serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
  }
  return 0;
}
