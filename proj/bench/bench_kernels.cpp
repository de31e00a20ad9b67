// Serial vs OpenMP timings of the three enumeration kernels.  Arg 0 is the
// serial reference, arg 1 the parallel path.
#include <benchmark/benchmark.h>

#include "hallforge/kernels.hpp"
#include "hallforge/orbit.hpp"
#include "hallforge/repcat.hpp"

using namespace hallforge;

namespace {

Exec exec_arg(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

const RepCategory& two_loop() {
  static RepCategory rc(Quiver({"1"}, {{0, 0}, {0, 0}}), 2);
  return rc;
}

const RepCategory& kronecker() {
  static RepCategory rc(Quiver({"1", "2"}, {{0, 1}, {0, 1}}), 2);
  return rc;
}

// every nilpotent pair of 3x3 matrices over F_2, up to conjugacy
void BM_OrbitTable(benchmark::State& s) {
  const RepCategory& rc = two_loop();
  for (auto _ : s) {
    OrbitTable t = build_orbit_table(rc.presentation(), rc.field(), {3}, [&](const Rep& r) { return rc.is_valid(r); },
                                     exec_arg(s));
    benchmark::DoNotOptimize(t.classes.size());
  }
}

// extensions of S_1^3 by S_2^3 on the Kronecker quiver, tallied by middle term
void BM_TallyExtensions(benchmark::State& s) {
  const RepCategory& rc = kronecker();
  Rep x = rc.semisimple({3, 0}), z = rc.semisimple({0, 3});
  ExtensionSpace ext = extension_space(rc.presentation(), rc.field(), x, z);
  rc.classify(rc.semisimple({3, 3}));  // build the orbit table outside the loop
  std::function<IsoClass(const Rep&)> key = [&](const Rep& r) { return rc.classify(r); };
  for (auto _ : s) {
    auto tally = tally_extensions<IsoClass>(ext, rc.field(), 24, exec_arg(s), key);
    benchmark::DoNotOptimize(tally.size());
  }
}

// 3-dimensional subrepresentations of S^6 for the two-loop quiver
void BM_CountSubobjects(benchmark::State& s) {
  const RepCategory& rc = two_loop();
  Rep y = rc.semisimple({6});
  SubobjectEnumerator en(rc.presentation(), rc.field(), y, {3});
  for (auto _ : s) {
    auto n = count_subobjects(en, exec_arg(s), [](const Rep&, const Rep&) { return true; });
    benchmark::DoNotOptimize(n);
  }
}

}  // namespace

BENCHMARK(BM_OrbitTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TallyExtensions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountSubobjects)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
