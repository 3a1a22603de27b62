// Benchmark comparing the serial reference search against the OpenMP
// frontier expansion, plus the parallel Dehn-profile sweep. Both code paths
// must return identical results; this target reports the speed difference.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgt/json_io.hpp"
#include "cgt/oracles.hpp"

using namespace cgt;
using Clock = std::chrono::steady_clock;

namespace {

double timed(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel numbers equal serial\n";
#endif

  Presentation g2 = make_G(2);
  OracleOptions serial, parallel;
  serial.parallel = ParallelMode::Serial;
  parallel.parallel = ParallelMode::Parallel;

  std::cout << "\nmin_area(G(2), w_m)\n";
  std::cout << "m  cost  serial_s  parallel_s  identical_witness\n";
  for (int m = 2; m <= 3; ++m) {
    SearchCaps caps;
    caps.max_word_length = m == 3 ? 22 : 18;
    caps.max_cost = 20;
    caps.max_states = 20'000'000;
    std::optional<AreaResult> rs, rp;
    double ts = timed([&] { rs = min_area(g2, w_word(m), caps, serial); });
    double tp = timed([&] { rp = min_area(g2, w_word(m), caps, parallel); });
    bool same = rs && rp && rs->cost == rp->cost && rs->witness == rp->witness;
    std::cout << m << "  " << (rs ? rs->cost : -1) << "  " << ts << "  " << tp << "  "
              << (same ? "yes" : "NO") << "\n";
  }

  std::cout << "\ndehn_profile(G(2), length <= 8)\n";
  SearchCaps caps;
  caps.max_word_length = 16;
  caps.max_cost = 12;
  caps.max_states = 4'000'000;
  std::vector<DehnProfileRow> prof_s, prof_p;
  double ts = timed([&] { prof_s = dehn_profile(g2, 8, caps, serial); });
  double tp = timed([&] { prof_p = dehn_profile(g2, 8, caps, parallel); });
  bool same = prof_s.size() == prof_p.size();
  for (std::size_t i = 0; same && i < prof_s.size(); ++i) {
    same = prof_s[i].max_area == prof_p[i].max_area && prof_s[i].exact == prof_p[i].exact;
  }
  std::cout << "serial_s=" << ts << "  parallel_s=" << tp << "  identical_rows="
            << (same ? "yes" : "NO") << "\n";
  return same ? 0 : 1;
}
