// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// if any checked criterion fails. Tolerances and runtime budgets are pinned
// here so regressions in either accuracy or speed surface immediately.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "workbench/catalog.hpp"
#include "workbench/commutator.hpp"
#include "workbench/rounding.hpp"

using namespace workbench;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int g_failures = 0;

void report(int criterion, bool ok, double seconds, double budget, const std::string& note) {
    const bool in_budget = seconds < budget;
    if (!(ok && in_budget)) ++g_failures;
    std::printf("criterion %2d: %s  (%.1f s / budget %.0f s)  %s\n", criterion,
                ok ? (in_budget ? "pass" : "FAIL (over budget)") : "FAIL", seconds, budget,
                note.c_str());
}

GameSpec all_accepting(std::size_t provers, std::size_t questions, std::size_t answers) {
    GameSpec g;
    g.provers = provers;
    g.questions = questions;
    g.answers = answers;
    g.pi.assign(g.q_tuples(), Rational(1, static_cast<std::int64_t>(g.q_tuples())));
    g.predicate.assign(g.q_tuples() * g.a_tuples(), 1);
    return g;
}

// uniform question pairs, predicate invariant under simultaneous swap
GameSpec random_symmetric_game(std::size_t questions, std::size_t answers,
                               std::mt19937_64& rng) {
    GameSpec g = all_accepting(2, questions, answers);
    std::uniform_int_distribution<int> bit(0, 1);
    for (std::size_t q = 0; q < questions; ++q)
        for (std::size_t q2 = q; q2 < questions; ++q2)
            for (std::size_t a = 0; a < answers; ++a)
                for (std::size_t a2 = 0; a2 < answers; ++a2) {
                    const bool v = bit(rng) != 0;
                    g.set_accept(q * questions + q2, a * answers + a2, v);
                    g.set_accept(q2 * questions + q, a2 * answers + a, v);
                }
    // keep every question pair winnable so values stay comparable
    for (std::size_t qi = 0; qi < g.q_tuples(); ++qi) g.set_accept(qi, 0, true);
    return g;
}

EntangledStrategy random_strategy(std::size_t provers, std::size_t dim, std::size_t questions,
                                  std::size_t answers, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    EntangledStrategy s;
    s.provers = provers;
    s.dim = dim;
    std::vector<cplx> amps(pow_sz(dim, provers));
    double n2 = 0.0;
    for (auto& v : amps) {
        v = cplx(gauss(rng), gauss(rng));
        n2 += std::norm(v);
    }
    for (auto& v : amps) v /= std::sqrt(n2);
    s.state = StateVector(std::move(amps));
    s.measurements.resize(provers);
    for (std::size_t p = 0; p < provers; ++p) {
        s.measurements[p].resize(questions);
        for (std::size_t q = 0; q < questions; ++q) {
            ComplexMatrix h(dim, dim);
            for (auto& v : h.data()) v = cplx(gauss(rng), gauss(rng));
            h = 0.5 * (h + h.adjoint());
            ComplexMatrix u = hermitian_eig(h).vectors;
            s.measurements[p][q].assign(answers, ComplexMatrix(dim, dim));
            for (std::size_t m = 0; m < dim; ++m) {
                const std::size_t a = m % answers;
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j)
                        s.measurements[p][q][a](i, j) += u(i, m) * std::conj(u(j, m));
            }
        }
    }
    return s;
}

// shared measurement family, exchange-symmetric state: eligible for the
// closed-form swap evaluation
EntangledStrategy random_symmetric_strategy(std::size_t dim, std::size_t questions,
                                            std::size_t answers, std::mt19937_64& rng) {
    EntangledStrategy s = random_strategy(2, dim, questions, answers, rng);
    s.measurements[1] = s.measurements[0];
    std::vector<cplx> amps(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const cplx v = s.state.amplitudes[i * dim + j];
            amps[i * dim + j] = v;
            amps[j * dim + i] = v;
        }
    const double nrm = std::sqrt(vec_norm_sq(amps));
    for (auto& v : amps) v /= nrm;
    s.state = StateVector(std::move(amps));
    return s;
}

// identical diagonal families on a Schmidt-diagonal state: everything
// commutes, so the interference test passes exactly
EntangledStrategy diagonal_strategy(const std::vector<std::vector<std::size_t>>& partition,
                                    std::size_t answers, const std::vector<double>& weights) {
    const std::size_t d = weights.size();
    EntangledStrategy s;
    s.provers = 2;
    s.dim = d;
    std::vector<cplx> amps(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) amps[i * d + i] = std::sqrt(weights[i]);
    s.state = StateVector(std::move(amps));
    s.measurements.resize(2);
    for (std::size_t p = 0; p < 2; ++p)
        for (const auto& labels : partition) {
            std::vector<ComplexMatrix> fam(answers, ComplexMatrix(d, d));
            for (std::size_t i = 0; i < d; ++i) fam[labels[i]](i, i) = 1.0;
            s.measurements[p].push_back(fam);
        }
    return s;
}

// fold a per-prover witness of the base game into the role-tagged alphabet
DeterministicStrategy merge_witness(const DeterministicStrategy& w, std::size_t q) {
    std::vector<std::size_t> t(2 * q);
    for (std::size_t j = 0; j < q; ++j) t[j] = w.answer[0][j];
    for (std::size_t j = 0; j < q; ++j) t[q + j] = w.answer[1][j];
    return DeterministicStrategy{{t, t}};
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- criterion 1: reference grid-game values -------------------------------
void criterion_1() {
    const double t0 = now();
    const CatalogEntry ms = magic_square();
    const GameValueReport rep = classical_value(*ms.game);
    const bool exact = rep.value == Rational(17, 18);
    const double ent = entangled_value_of(*ms.entangled_strategy, *ms.game);
    const bool perfect = close(ent, 1.0, 1e-9);
    std::ostringstream note;
    note << "classical " << rep.value.num() << "/" << rep.value.den() << ", entangled " << ent;
    report(1, exact && perfect, now() - t0, 10.0, note.str());
}

// ---- criterion 2: honest classical players in the swap game ----------------
void criterion_2() {
    const double t0 = now();
    bool ok = true;
    std::ostringstream note;
    for (const std::string& name : {std::string("chsh"), std::string("magic_square")}) {
        const GameSpec base = *catalog_get(name).game;
        const GameValueReport rep = classical_value(base);
        const GameSpec g = symmetrize(base);
        const EntangledStrategy e = embed_classical(merge_witness(rep.witness, base.questions),
                                                    g.questions, g.answers);
        const SwapGameEval ev = eval_swap_game(g, e);
        const double floor = rep.value.to_double() / 2.0 + 0.5 - 1e-9;
        const bool pass = ev.total >= floor && close(ev.quantum_test_prob, 1.0, 1e-10);
        ok = ok && pass;
        note << name << " total " << ev.total << " quantum " << ev.quantum_test_prob << "; ";
    }
    report(2, ok, now() - t0, 10.0, note.str());
}

// ---- criterion 3: closed-form swap value vs gate-level replay --------------
void criterion_3() {
    const double t0 = now();
    std::mt19937_64 rng(301);
    std::size_t checked = 0;
    double worst = 0.0;
    for (std::size_t trial = 0; trial < 50; ++trial) {
        const std::size_t questions = 2 + trial % 2;  // 2 or 3
        const std::size_t d = 1 + trial % 2;
        const GameSpec g = random_symmetric_game(questions, 2, rng);
        EntangledStrategy s;
        if (d == 1) {
            std::uniform_int_distribution<std::size_t> pick(0, 1);
            std::vector<std::size_t> map(questions);
            for (auto& a : map) a = pick(rng);
            s = embed_classical(DeterministicStrategy{{map, map}}, questions, 2);
        } else {
            s = random_symmetric_strategy(d, questions, 2, rng);
        }
        const SwapGameEval a = eval_swap_game(g, s);
        const SwapGameEval b = circuit_oracle_swap(g, s);
        worst = std::max(worst, std::abs(a.total - b.total));
        worst = std::max(worst, std::abs(a.classical_test_prob - b.classical_test_prob));
        worst = std::max(worst, std::abs(a.quantum_test_prob - b.quantum_test_prob));
        ++checked;
    }
    std::ostringstream note;
    note << checked << " strategies, max disagreement " << worst;
    report(3, checked >= 50 && worst <= 1e-8, now() - t0, 120.0, note.str());
}

// ---- criterion 4: perfect swap-game strategies round perfectly -------------
void criterion_4() {
    const double t0 = now();
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::uniform_int_distribution<std::size_t> bit(0, 1);
    bool ok = true;
    std::size_t perfect = 0;
    double worst_rounded = 1.0;
    for (std::size_t trial = 0; trial < 20; ++trial) {
        const std::size_t d = 4, questions = 3;
        std::vector<std::vector<std::size_t>> partition(questions,
                                                        std::vector<std::size_t>(d));
        for (auto& labels : partition)
            for (auto& l : labels) l = bit(rng);
        std::vector<double> w(d);
        double tot = 0.0;
        for (auto& x : w) {
            x = unif(rng);
            tot += x;
        }
        for (auto& x : w) x /= tot;
        const EntangledStrategy s = diagonal_strategy(partition, 2, w);

        // accept exactly the support of the strategy's answer distribution
        GameSpec g = all_accepting(2, questions, 2);
        const OutcomeDistribution o = outcome_distribution(s, g);
        for (std::size_t qi = 0; qi < g.q_tuples(); ++qi)
            for (std::size_t ai = 0; ai < g.a_tuples(); ++ai)
                g.set_accept(qi, ai, o.at(qi, ai) > 1e-12);

        const SwapGameEval ev = eval_swap_game(g, s);
        if (1.0 - ev.total > 1e-10) continue;  // only near-perfect strategies are in scope
        ++perfect;
        const SequentialDistribution dist =
            sequential_distribution(s, marginal(g.pi, g.questions, 2, 0));
        dist.validate();
        const double rv = rounded_value(g, dist);
        worst_rounded = std::min(worst_rounded, rv);
        ok = ok && rv >= 1.0 - 1e-6;
    }
    std::ostringstream note;
    note << perfect << " perfect strategies, lowest rounded value " << worst_rounded;
    report(4, ok && perfect >= 20, now() - t0, 120.0, note.str());
}

// ---- criterion 5: every inequality certificate holds, three transforms -----
void criterion_5() {
    const double t0 = now();
    std::size_t total = 0, failures = 0;

    // swap transform: 100 random symmetric strategies on random symmetric games
    {
        std::mt19937_64 rng(501);
        for (std::size_t trial = 0; trial < 100; ++trial) {
            const std::size_t questions = 2 + trial % 2;
            const std::size_t d = 1 + (trial / 2) % 2;
            const GameSpec g = random_symmetric_game(questions, 2, rng);
            const EntangledStrategy s = random_symmetric_strategy(d, questions, 2, rng);
            const SwapGameEval ev = eval_swap_game(g, s);
            for (const BoundCertificate& c : certify_swap(g, s, ev)) {
                ++total;
                if (!c.holds) ++failures;
            }
        }
    }
    // three-prover fold: symmetrized tripartite strategies
    {
        std::mt19937_64 rng(502);
        for (std::size_t trial = 0; trial < 100; ++trial) {
            const std::size_t questions = 2 + trial % 2;
            const std::size_t d = 1 + (trial / 2) % 2;
            const GameSpec base = random_symmetric_game(questions, 2, rng);
            const ThreeProverDescriptor t = build_three_prover_game(base);
            const EntangledStrategy s = symmetrize_strategy(
                random_strategy(3, d, t.game3.questions, t.game3.answers, rng), 3);
            const ThreeProverEval ev = eval_three_prover(t, s);
            for (const BoundCertificate& c : certify_three_prover(t, s, ev)) {
                ++total;
                if (!c.holds) ++failures;
            }
        }
    }
    // multi-round fold: rounds 1..3
    {
        std::mt19937_64 rng(503);
        for (std::size_t trial = 0; trial < 100; ++trial) {
            const std::size_t r = 1 + trial % 3;
            const std::size_t d = 1 + (trial / 3) % 2;
            const MultiRoundDescriptor t =
                build_oneround_from_multiround(*toy_multiround(r).multiround);
            const EntangledStrategy s =
                random_strategy(2, d, t.game.questions, t.game.answers, rng);
            const MultiRoundTransformEval ev = eval_multiround_transform(t, s);
            for (const BoundCertificate& c : certify_multiround(t, s, ev)) {
                ++total;
                if (!c.holds) ++failures;
            }
        }
    }
    std::ostringstream note;
    note << total << " certificates across 300 strategies, " << failures << " failures";
    report(5, failures == 0 && total > 0, now() - t0, 600.0, note.str());
}

// ---- criterion 6: near-certain measurements disturb little -----------------
void criterion_6() {
    const double t0 = now();
    std::mt19937_64 rng(601);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::size_t checked = 0, violations = 0;
    double worst_margin = 1e9;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + trial % 7;  // 2..8
        ComplexMatrix gmat(dim, dim);
        for (auto& v : gmat.data()) v = cplx(gauss(rng), gauss(rng));
        ComplexMatrix rho = gmat * gmat.adjoint();
        rho = (1.0 / rho.trace()) * rho;
        ComplexMatrix h(dim, dim);
        for (auto& v : h.data()) v = cplx(gauss(rng), gauss(rng));
        h = 0.5 * (h + h.adjoint());
        const ComplexMatrix u = hermitian_eig(h).vectors;
        std::vector<double> eig(dim);
        for (auto& e : eig) e = unif(rng);
        const ComplexMatrix x = u * ComplexMatrix::diagonal(eig) * u.adjoint();
        const GentleMeasurementResult r = gentle_measurement_bound(rho, x);
        const double overlap = (x * rho).trace().real();
        const double bound = 3.0 * std::sqrt(std::max(0.0, 1.0 - overlap));
        worst_margin = std::min(worst_margin, bound - r.distance);
        if (r.distance > bound + 1e-9) ++violations;
        ++checked;
    }
    std::ostringstream note;
    note << checked << " pairs, " << violations << " violations, tightest margin "
         << worst_margin;
    report(6, checked >= 1000 && violations == 0, now() - t0, 60.0, note.str());
}

// ---- criterion 7: answer distributions are distributions -------------------
void criterion_7() {
    const double t0 = now();
    std::mt19937_64 rng(701);
    std::size_t checked = 0;
    double worst = 0.0;
    for (std::size_t trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t questions = 2 + trial % 2, answers = 2;
        const EntangledStrategy s = random_strategy(2, d, questions, answers, rng);

        const OutcomeDistribution o =
            outcome_distribution(s, all_accepting(2, questions, answers));
        for (std::size_t qi = 0; qi < pow_sz(questions, 2); ++qi) {
            double sum = 0.0;
            for (std::size_t ai = 0; ai < pow_sz(answers, 2); ++ai) sum += o.at(qi, ai);
            worst = std::max(worst, std::abs(sum - 1.0));
            ++checked;
        }

        std::vector<Rational> pi(questions, Rational(1, static_cast<std::int64_t>(questions)));
        const SequentialDistribution sd = sequential_distribution(s, pi);
        sd.validate();
        double sum = 0.0;
        for (double v : sd.table) sum += v;
        worst = std::max(worst, std::abs(sum - 1.0));
        ++checked;

        const EntangledStrategy s3 =
            symmetrize_strategy(random_strategy(3, d, questions, answers, rng), 3);
        const SequentialDistribution bd = sequential_distribution_bilateral(s3, pi);
        bd.validate();
        sum = 0.0;
        for (double v : bd.table) sum += v;
        worst = std::max(worst, std::abs(sum - 1.0));
        ++checked;
    }
    std::ostringstream note;
    note << checked << " distributions, worst |sum - 1| = " << worst;
    report(7, worst <= 1e-8, now() - t0, 60.0, note.str());
}

// ---- criterion 8: alternating search reaches the documented floors ---------
void criterion_8() {
    const double t0 = now();
    const SeesawResult chsh_res = seesaw(*chsh().game, 2, 20, 50, 801);
    const SeesawResult ms_res = seesaw(*magic_square().game, 4, 20, 100, 802);
    std::ostringstream note;
    note << "binary parity game d=2: " << chsh_res.value << ", grid game d=4: "
         << ms_res.value;
    report(8, chsh_res.value >= 0.853 && ms_res.value >= 0.99, now() - t0, 120.0, note.str());
}

// ---- criterion 9: commuting-approximation lab is sound ---------------------
void criterion_9() {
    const double t0 = now();
    std::mt19937_64 rng(901);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> bit(0, 1);
    bool ok = true;
    double worst_comm = 0.0, worst_delta = 0.0;
    // non-commuting random families: output must still commute exactly
    for (std::size_t trial = 0; trial < 12; ++trial) {
        const std::size_t d = 2 + 2 * (trial % 2);  // 2 or 4
        const std::size_t n = 2 + trial % 2;
        std::vector<Projector> fam;
        for (std::size_t k = 0; k < n; ++k) {
            ComplexMatrix h(d, d);
            for (auto& v : h.data()) v = cplx(gauss(rng), gauss(rng));
            h = 0.5 * (h + h.adjoint());
            const ComplexMatrix u = hermitian_eig(h).vectors;
            ComplexMatrix p(d, d);
            for (std::size_t m = 0; m < d / 2; ++m)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        p(i, j) += u(i, m) * std::conj(u(j, m));
            fam.emplace_back(0.5 * (p + p.adjoint()));
        }
        const CommutingApproximation out = nearest_commuting_family(fam);
        const double eps = commutation_profile(out.family).epsilon_max;
        worst_comm = std::max(worst_comm, eps);
        ok = ok && eps <= 1e-8;
    }
    // already-commuting families: zero movement required
    for (std::size_t trial = 0; trial < 12; ++trial) {
        const std::size_t d = 3 + trial % 3;
        std::vector<Projector> fam;
        for (std::size_t k = 0; k < 3; ++k) {
            ComplexMatrix p(d, d);
            for (std::size_t i = 0; i < d; ++i) p(i, i) = bit(rng);
            fam.emplace_back(std::move(p));
        }
        const CommutingApproximation out = nearest_commuting_family(fam);
        worst_delta = std::max(worst_delta, out.delta);
        ok = ok && out.delta <= 1e-9;
    }
    // the scan only reports data points; it never decides the open question
    const std::vector<ScanRow> rows = delta_vs_epsilon_scan(3, 4, 0.05, 5, 903);
    ok = ok && rows.size() == 5;
    std::ostringstream note;
    note << "worst residual commutator " << worst_comm << ", worst delta on commuting input "
         << worst_delta << ", scan rows " << rows.size() << " (observational only)";
    report(9, ok, now() - t0, 120.0, note.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf(
        "criterion 10: informational — the asymptotic hardness statements are complexity\n"
        "              results with no finite witness; this suite instead verifies every\n"
        "              inequality their proofs rely on at small dimension (criteria 1-9).\n");
    if (g_failures != 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all checked criteria pass\n");
    return 0;
}
