// Compares the serial and OpenMP assessment paths on synthetic catalogs.
//
//   tvra_bench [threat-count] [repetitions]

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tvra/analysis.hpp"

namespace {

tvra::Catalog synthetic_catalog(int threat_count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  tvra::Catalog c;
  c.name = "synthetic";
  c.version = 1;
  c.interfaces.push_back({"A", false, "synthetic interface", {}, {}});

  std::uniform_int_distribution<int> time_d(0, tvra::kTimeLevels - 1);
  std::uniform_int_distribution<int> exp_d(0, tvra::kExpertiseLevels - 1);
  std::uniform_int_distribution<int> knw_d(0, tvra::kKnowledgeLevels - 1);
  std::uniform_int_distribution<int> opp_d(0, tvra::kOpportunityLevels - 2);  // skip None
  std::uniform_int_distribution<int> eqp_d(0, tvra::kEquipmentLevels - 1);
  std::uniform_int_distribution<int> impact_d(1, 3);

  c.threats.reserve(threat_count);
  for (int i = 0; i < threat_count; ++i) {
    tvra::Threat t;
    t.id = "t" + std::to_string(i);
    t.name = "synthetic threat";
    t.category = tvra::ThreatCategory::Logical;
    t.actions = {"synthetic action"};
    t.interfaces = {{"A", false, std::nullopt}};
    t.objective = "synthetic objective";
    t.impact = static_cast<tvra::Impact>(impact_d(rng));
    t.potential = tvra::AttackPotential{
        static_cast<tvra::TimeLevel>(time_d(rng)),
        static_cast<tvra::ExpertiseLevel>(exp_d(rng)),
        static_cast<tvra::KnowledgeLevel>(knw_d(rng)),
        static_cast<tvra::OpportunityLevel>(opp_d(rng)),
        static_cast<tvra::EquipmentLevel>(eqp_d(rng)),
    };
    c.threats.push_back(std::move(t));
  }
  return c;
}

template <typename F>
double time_ms(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

uint64_t checksum(const std::vector<tvra::Assessment>& a) {
  uint64_t h = 1469598103934665603ULL;
  for (const auto& as : a) {
    h ^= static_cast<uint64_t>(as.risk_value);
    h *= 1099511628211ULL;
    h ^= static_cast<uint64_t>(as.points.value_or(-1) + 1);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  int threat_count = argc > 1 ? std::atoi(argv[1]) : 2000000;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  if (threat_count <= 0 || reps <= 0) {
    std::cerr << "usage: tvra_bench [threat-count] [repetitions]\n";
    return 2;
  }

  auto catalog = synthetic_catalog(threat_count, 42);

  std::vector<tvra::Assessment> serial_out, parallel_out;
  double serial_ms = time_ms([&] { serial_out = tvra::assess_catalog_serial(catalog); }, reps);
  double parallel_ms = time_ms([&] { parallel_out = tvra::assess_catalog(catalog); }, reps);

  bool identical = serial_out == parallel_out;

#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif

  std::cout << "threats:    " << threat_count << "\n";
  std::cout << "threads:    " << threads << "\n";
  std::cout << "serial:     " << serial_ms << " ms\n";
  std::cout << "parallel:   " << parallel_ms << " ms\n";
  std::cout << "speedup:    " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0) << "x\n";
  std::cout << "checksum:   " << checksum(serial_out) << "\n";
  std::cout << "identical:  " << (identical ? "yes" : "NO") << "\n";
  return identical ? 0 : 1;
}
