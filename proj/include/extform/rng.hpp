#pragma once

#include <cstdint>

#include "extform/form.hpp"
#include "extform/matrix.hpp"

namespace extform {

// Deterministic, platform-independent generator (splitmix64) so seeded
// checks reproduce bit-for-bit everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 9, long max_den = 4) {
    long num = uniform(-max_num, max_num);
    long den = uniform(1, max_den);
    return rat(num, den);
  }

  Rational nonzero_rational(long max_num = 9, long max_den = 4) {
    Rational q = rational(max_num, max_den);
    while (is_zero(q)) q = rational(max_num, max_den);
    return q;
  }

  ExteriorForm form(int dim, int degree, int terms,
                    Variance v = Variance::Form) {
    ExteriorForm f(dim, degree, v);
    for (int t = 0; t < terms; ++t) {
      IndexSet I;
      std::vector<int> pool;
      for (int k = 1; k <= dim; ++k) pool.push_back(k);
      for (int k = 0; k < degree; ++k) {
        std::size_t pick = next() % pool.size();
        I.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
      f.add(I, rational());
    }
    return f;
  }

  ExteriorForm nonzero_form(int dim, int degree, int terms,
                            Variance v = Variance::Form) {
    ExteriorForm f = form(dim, degree, terms, v);
    while (f.is_zero()) f = form(dim, degree, terms, v);
    return f;
  }

  // Invertible rational matrix, built as a product of elementary operations
  // so the inverse stays well-conditioned in exact arithmetic.
  Mat invertible(int n, int ops = 12) {
    Mat m = Mat::identity(n);
    for (int t = 0; t < ops; ++t) {
      int i = static_cast<int>(next() % n);
      int j = static_cast<int>(next() % n);
      if (i == j) {
        Rational f = rat(uniform(0, 1) ? 1 : -1, uniform(1, 2));
        for (int c = 0; c < n; ++c) m.at(i, c) *= f;
      } else {
        Rational f = rational(3, 2);
        for (int c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
      }
    }
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace extform
