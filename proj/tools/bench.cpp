// Compares the serial reference kernels against the OpenMP ones: same
// results, wall-clock side by side.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "workbench/catalog.hpp"
#include "workbench/strategy.hpp"

using namespace workbench;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// random two-prover strategy with a shared measurement family
EntangledStrategy random_strategy(std::size_t d, std::size_t questions, std::size_t answers,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    EntangledStrategy s;
    s.provers = 2;
    s.dim = d;
    std::vector<cplx> amps(d * d);
    double nrm = 0.0;
    for (auto& v : amps) v = cplx(g(rng), g(rng));
    for (const auto& v : amps) nrm += std::norm(v);
    for (auto& v : amps) v = v / std::sqrt(nrm);
    s.state = StateVector(std::move(amps));
    std::vector<std::vector<ComplexMatrix>> fam;
    for (std::size_t q = 0; q < questions; ++q) {
        ComplexMatrix h(d, d);
        for (auto& v : h.data()) v = cplx(g(rng), g(rng));
        h = 0.5 * (h + h.adjoint());
        const ComplexMatrix u = hermitian_eig(h).vectors;
        std::vector<ComplexMatrix> pvm(answers, ComplexMatrix(d, d));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    pvm[k % answers](r, c) += u(r, k) * std::conj(u(c, k));
        fam.push_back(std::move(pvm));
    }
    s.measurements = {fam, fam};
    return s;
}

GameSpec random_game(std::size_t questions, std::size_t answers, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bit(0, 1);
    GameSpec g;
    g.provers = 2;
    g.questions = questions;
    g.answers = answers;
    g.pi.assign(g.q_tuples(), Rational(1, static_cast<std::int64_t>(g.q_tuples())));
    g.predicate.resize(g.q_tuples() * g.a_tuples());
    for (auto& v : g.predicate) v = static_cast<std::uint8_t>(bit(rng));
    for (std::size_t q = 0; q < g.q_tuples(); ++q) g.set_accept(q, 0, true);
    return g;
}

}  // namespace

int main() {
    std::printf("%-28s %12s %12s %8s %12s\n", "kernel", "serial (s)", "parallel (s)",
                "speedup", "max |diff|");

    {
        const GameSpec g = random_game(6, 6, 1);
        const double t0 = now();
        const GameValueReport a = classical_value_serial(g);
        const double t1 = now();
        const GameValueReport b = classical_value(g);
        const double t2 = now();
        std::printf("%-28s %12.3f %12.3f %8.2f %12.3g\n", "classical_value 6q/6a", t1 - t0,
                    t2 - t1, (t1 - t0) / (t2 - t1),
                    std::abs((a.value - b.value).to_double()));
    }
    {
        const GameSpec g = random_game(8, 4, 2);
        const EntangledStrategy s = random_strategy(12, 8, 4, 3);
        const double t0 = now();
        const OutcomeDistribution a = outcome_distribution_serial(s, g);
        const double t1 = now();
        const OutcomeDistribution b = outcome_distribution(s, g);
        const double t2 = now();
        double diff = 0.0;
        for (std::size_t i = 0; i < a.p.size(); ++i)
            diff = std::max(diff, std::abs(a.p[i] - b.p[i]));
        std::printf("%-28s %12.3f %12.3f %8.2f %12.3g\n", "outcome_distribution d=12", t1 - t0,
                    t2 - t1, (t1 - t0) / (t2 - t1), diff);
    }
    return 0;
}
