// Times the serial reference row reduction against the OpenMP kernel on
// random dense matrices and checks the outputs are identical entry for entry.

#include <chrono>
#include <cstdio>
#include <random>

#include "syz/linalg.hpp"

using namespace syz;

namespace {

template <class F>
Mat<F> random_matrix(const F& k, std::size_t r, std::size_t c,
                     std::mt19937_64& rng) {
  Mat<F> m(r, c, k.zero());
  std::uniform_int_distribution<long> d(-9, 9);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = k.from_int(d(rng));
  return m;
}

template <class F>
bool same(const F& k, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    if (!k.is_zero(k.sub(a.a[i], b.a[i]))) return false;
  return true;
}

// Rational entries grow long during elimination, so the sizes stay modest
// there; the prime field runs the sizes where the parallel kernel pays off.
template <class F>
int run(const char* field_name, const F& k, const std::vector<std::size_t>& sizes) {
  std::printf("field %s\n", field_name);
  for (std::size_t n : sizes) {
    std::mt19937_64 rng(n);
    auto m = random_matrix(k, n, n + n / 2, rng);

    auto t0 = std::chrono::steady_clock::now();
    auto s = rref_serial(k, m);
    auto t1 = std::chrono::steady_clock::now();
    auto p = rref_parallel(k, m);
    auto t2 = std::chrono::steady_clock::now();

    if (s.rank != p.rank || s.pivots != p.pivots ||
        !same(k, s.reduced, p.reduced)) {
      std::printf("  %zux%zu MISMATCH between serial and parallel\n", n,
                  n + n / 2);
      return 1;
    }
    auto ms = [](auto a, auto b) {
      return std::chrono::duration<double, std::milli>(b - a).count();
    };
    double ts = ms(t0, t1), tp = ms(t1, t2);
    std::printf("  %4zux%-4zu rank %3zu  serial %8.2f ms  parallel %8.2f ms  x%.2f\n",
                n, n + n / 2, s.rank, ts, tp, ts / tp);
  }
  return 0;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
#ifdef _OPENMP
  std::printf("openmp enabled\n");
#else
  std::printf("openmp disabled, parallel kernel falls back to serial\n");
#endif
  if (int rc = run("Q", Rationals{}, {24, 48, 72})) return rc;
  if (int rc = run("F_32003", PrimeField(32003), {64, 128, 256, 384})) return rc;
  std::printf("outputs identical on all cases\n");
  return 0;
}
