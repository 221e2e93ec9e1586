#include <benchmark/benchmark.h>

#include <random>

#include "spinorlab/dirac_harmonic.hpp"

using namespace spinorlab;

namespace {

Spinor seed_spinor(int dim) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Spinor s(dim);
    for (int i = 0; i < dim; ++i) s[i] = Complex{d(gen), d(gen)};
    return s;
}

void bm_build_gamma(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_gamma(m));
}
BENCHMARK(bm_build_gamma)->Arg(4)->Arg(6)->Arg(8);

void bm_clifford_mul(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto rep = build_gamma(m);
    const Spinor psi = seed_spinor(rep->dim_spinor());
    Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(m, 0.3, 1.1);
    for (auto _ : state) benchmark::DoNotOptimize(clifford_mul(*rep, v, psi));
}
BENCHMARK(bm_clifford_mul)->Arg(3)->Arg(5)->Arg(8);

void bm_killing_transport_eval(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto rep = build_gamma(m);
    const Chart chart = Chart::hyperbolic_halfspace(m, -4.0 / (m + 2));
    Point x0 = Point::Zero(m);
    x0[m - 1] = 1.0;
    const SpinorField field =
        killing_transport(chart, rep, kI / std::sqrt(m + 2.0), x0, seed_spinor(rep->dim_spinor()));
    Point x = x0;
    x[0] = 0.3;
    x[m - 1] = 1.2;
    for (auto _ : state) benchmark::DoNotOptimize(field.value(x));
}
BENCHMARK(bm_killing_transport_eval)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_twisted_dirac_direct(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto rep = build_gamma(m);
    const KillingSpinorPair pair = construct_theorem2_pair(m, seed_spinor(rep->dim_spinor()), rep);
    const TwistedField field = build_phi(pair.psi, pair.phi, pair.imm);
    Point x = pair.basepoint;
    x[0] = 0.25;
    for (auto _ : state) benchmark::DoNotOptimize(twisted_dirac_direct(field, x));
}
BENCHMARK(bm_twisted_dirac_direct)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_v_phi_direct(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto rep = build_gamma(m);
    const ImmersionPtr imm = umbilic_hyperbolic(m, -4.0 / (m + 2));
    const Chart& chart = imm->intrinsic_chart();
    const TwistedField field = build_phi(SpinorField::constant(chart, rep, seed_spinor(rep->dim_spinor())),
                                         SpinorField::constant(chart, rep, seed_spinor(rep->dim_spinor())), imm);
    Point x = Point::Zero(m);
    x[m - 1] = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(v_phi_direct(field, x));
}
BENCHMARK(bm_v_phi_direct)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
