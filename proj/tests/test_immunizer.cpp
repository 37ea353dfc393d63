#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "workbench/catalog.hpp"
#include "workbench/immunizer.hpp"

using namespace workbench;

namespace {

GameSpec all_accepting(std::size_t provers, std::size_t questions, std::size_t answers) {
    GameSpec g;
    g.provers = provers;
    g.questions = questions;
    g.answers = answers;
    g.pi.assign(g.q_tuples(), Rational(1, static_cast<std::int64_t>(g.q_tuples())));
    g.predicate.assign(g.q_tuples() * g.a_tuples(), 1);
    return g;
}

// swap-asymmetric game: accept iff the first prover echoes the other's question
GameSpec asymmetric_game() {
    GameSpec g = all_accepting(2, 2, 2);
    for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t qp = 0; qp < 2; ++qp)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    g.set_accept(q * 2 + qp, a * 2 + b, a == qp);
    return g;
}

// role-merged symmetric witness for a symmetrized game: question j < Q plays
// the first prover's map, j >= Q the second prover's
DeterministicStrategy merge_witness(const DeterministicStrategy& w, std::size_t q) {
    std::vector<std::size_t> t(2 * q);
    for (std::size_t j = 0; j < q; ++j) t[j] = w.answer[0][j];
    for (std::size_t j = 0; j < q; ++j) t[q + j] = w.answer[1][j];
    return DeterministicStrategy{{t, t}};
}

EntangledStrategy random_strategy(std::size_t provers, std::size_t dim, std::size_t questions,
                                  std::size_t answers, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    EntangledStrategy s;
    s.provers = provers;
    s.dim = dim;
    std::vector<cplx> amps(pow_sz(dim, provers));
    double n2 = 0.0;
    for (auto& v : amps) {
        v = cplx(g(rng), g(rng));
        n2 += std::norm(v);
    }
    for (auto& v : amps) v /= std::sqrt(n2);
    s.state = StateVector(std::move(amps));
    s.measurements.resize(provers);
    for (std::size_t p = 0; p < provers; ++p) {
        s.measurements[p].resize(questions);
        for (std::size_t q = 0; q < questions; ++q) {
            ComplexMatrix h(dim, dim);
            for (auto& v : h.data()) v = cplx(g(rng), g(rng));
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

}  // namespace

TEST_CASE("build_swap_game: descriptor tables and preconditions") {
    GameSpec g = symmetrize(*chsh().game);
    SwapGameDescriptor d = build_swap_game(g);
    CHECK(d.marginal_pi == std::vector<Rational>(4, Rational(1, 4)));
    for (const Rational& r : d.quantum_pi) CHECK(r == Rational(1, 16));
    CHECK(d.classical_pi == g.pi);

    CHECK_FALSE(asymmetric_game().symmetric());
    CHECK_THROWS_AS(build_swap_game(asymmetric_game()), std::invalid_argument);

    GameSpec dead = all_accepting(2, 2, 2);  // question 1 never asked
    dead.pi = {Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(build_swap_game(dead), std::invalid_argument);
}

TEST_CASE("embedded symmetric classical strategies always pass the interference test") {
    GameSpec g = symmetrize(*chsh().game);
    GameValueReport rep = classical_value(g);
    DeterministicStrategy sym = merge_witness(classical_value(*chsh().game).witness, 2);
    CHECK(replay(g, sym) == rep.value);  // the merged witness is still optimal

    EntangledStrategy e = embed_classical(sym, g.questions, g.answers);
    SwapGameEval ev = eval_swap_game(g, e);
    CHECK(ev.quantum_test_prob == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev.classical_test_prob == doctest::Approx(rep.value.to_double()).epsilon(1e-10));
    CHECK(ev.total >= rep.value.to_double() / 2.0 + 0.5 - 1e-9);
}

TEST_CASE("the grid game's own witness passes the swap transform honestly") {
    CatalogEntry ms = magic_square();
    EntangledStrategy e = embed_classical(*ms.classical_strategy, 6, 8);
    SwapGameEval ev = eval_swap_game(*ms.game, e);
    CHECK(ev.quantum_test_prob == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(ev.total >= (17.0 / 18.0) / 2.0 + 0.5 - 1e-9);
}

TEST_CASE("closed form matches the literal circuit on symmetric strategies") {
    GameSpec g = symmetrize(all_accepting(2, 2, 2));
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 6; ++trial) {
        EntangledStrategy s =
            symmetrize_strategy(random_strategy(2, 2, g.questions, g.answers, rng), 2);
        SwapGameEval a = eval_swap_game(g, s);
        SwapGameEval b = circuit_oracle_swap(g, s);
        CHECK(a.classical_test_prob == doctest::Approx(b.classical_test_prob).epsilon(1e-8));
        CHECK(a.quantum_test_prob == doctest::Approx(b.quantum_test_prob).epsilon(1e-8));
        CHECK(a.total <= 1.0 + 1e-9);
        CHECK(b.total <= 1.0 + 1e-9);
    }
}

TEST_CASE("circuit oracle also accepts asymmetric strategies and enforces its cap") {
    GameSpec g = symmetrize(*chsh().game);
    std::mt19937_64 rng(52);
    EntangledStrategy s = random_strategy(2, 2, g.questions, g.answers, rng);
    CHECK_THROWS_AS(eval_swap_game(g, s), std::invalid_argument);  // closed form refuses
    SwapGameEval b = circuit_oracle_swap(g, s);
    CHECK(b.quantum_test_prob >= -1e-12);
    CHECK(b.quantum_test_prob <= 1.0 + 1e-9);
    CHECK_THROWS_AS(circuit_oracle_swap(g, s, 100), BudgetExceeded);
}

TEST_CASE("closed form matches the circuit exactly for scalar strategies") {
    GameSpec g = symmetrize(*chsh().game);
    DeterministicStrategy sym = merge_witness(classical_value(*chsh().game).witness, 2);
    EntangledStrategy e = embed_classical(sym, g.questions, g.answers);
    SwapGameEval a = eval_swap_game(g, e);
    SwapGameEval b = circuit_oracle_swap(g, e);
    CHECK(a.classical_test_prob == doctest::Approx(b.classical_test_prob).epsilon(1e-12));
    CHECK(a.quantum_test_prob == doctest::Approx(b.quantum_test_prob).epsilon(1e-12));
}

TEST_CASE("three-prover fold preserves the classical value on brute-forceable games") {
    GameSpec g = symmetrize(*chsh().game);
    ThreeProverDescriptor t = build_three_prover_game(g);
    t.game3.validate();
    CHECK(classical_value(t.game3).value == Rational(3, 4));

    ThreeProverDescriptor ta = build_three_prover_game(all_accepting(2, 2, 2));
    CHECK(classical_value(ta.game3).value == Rational(1));

    CHECK_THROWS_AS(build_three_prover_game(asymmetric_game()), std::invalid_argument);
}

TEST_CASE("three-prover fold of the grid game: witness embeds at 17/18") {
    CatalogEntry ms = magic_square();
    ThreeProverDescriptor t = build_three_prover_game(*ms.game);
    const auto& w = ms.classical_strategy->answer[0];
    std::vector<std::size_t> folded(12);
    for (std::size_t j = 0; j < 6; ++j) folded[j] = folded[6 + j] = w[j];
    DeterministicStrategy d3{{folded, folded, folded}};
    CHECK(replay(t.game3, d3) == Rational(17, 18));
}

TEST_CASE("eval_three_prover: embedded clones are perfectly consistent") {
    GameSpec g = symmetrize(*chsh().game);
    ThreeProverDescriptor t = build_three_prover_game(g);
    DeterministicStrategy sym = merge_witness(classical_value(*chsh().game).witness, 2);
    // fold the role-tagged map onto game3's doubled question alphabet
    std::vector<std::size_t> folded(t.game3.questions);
    for (std::size_t j = 0; j < t.game3.questions; ++j)
        folded[j] = sym.answer[0][j % g.questions];
    DeterministicStrategy d3{{folded, folded, folded}};
    EntangledStrategy e = embed_classical(d3, t.game3.questions, t.game3.answers);
    ThreeProverEval ev = eval_three_prover(t, e);
    for (double p2 : ev.pi2_of_q) CHECK(p2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev.pi2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev.pi1 == doctest::Approx(replay(g, sym).to_double()).epsilon(1e-12));
    CHECK(ev.acceptance == doctest::Approx(ev.pi1).epsilon(1e-12));
}

TEST_CASE("eval_three_prover matches the outcome-distribution oracle") {
    GameSpec g = symmetrize(all_accepting(2, 2, 2));
    ThreeProverDescriptor t = build_three_prover_game(g);
    std::mt19937_64 rng(53);
    EntangledStrategy s =
        symmetrize_strategy(random_strategy(3, 2, t.game3.questions, t.game3.answers, rng), 3);
    ThreeProverEval ev = eval_three_prover(t, s);

    OutcomeDistribution d = outcome_distribution(s, t.game3);
    const std::size_t Q = g.questions, A = g.answers;
    double pi1 = 0.0;
    std::vector<double> pi2q(Q, 0.0);
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t qp = 0; qp < Q; ++qp) {
            const double w = g.pi[q * Q + qp].to_double();
            const std::size_t qt = encode_tuple({q, Q + qp, Q + qp}, t.game3.questions);
            for (std::size_t a = 0; a < A; ++a)
                for (std::size_t b = 0; b < A; ++b) {
                    double pab = 0.0;
                    for (std::size_t c = 0; c < A; ++c)
                        pab += d.at(qt, encode_tuple({a, b, c}, A));
                    if (w > 0.0 && g.accepts(q * Q + qp, a * A + b)) pi1 += w * pab;
                }
        }
    for (std::size_t q = 0; q < Q; ++q) {
        // consistency of the two clones, first prover marginalized
        const std::size_t qt = encode_tuple({0, Q + q, Q + q}, t.game3.questions);
        for (std::size_t a = 0; a < A; ++a)
            for (std::size_t b = 0; b < A; ++b)
                for (std::size_t c = 0; c < A; ++c)
                    if (b == c) pi2q[q] += d.at(qt, encode_tuple({a, b, c}, A));
    }
    CHECK(ev.pi1 == doctest::Approx(pi1).epsilon(1e-9));
    for (std::size_t q = 0; q < Q; ++q)
        CHECK(ev.pi2_of_q[q] == doctest::Approx(pi2q[q]).epsilon(1e-9));
    CHECK(ev.acceptance == doctest::Approx(entangled_value_of(s, t.game3)).epsilon(1e-12));
}

TEST_CASE("multi-round fold: structure and exact value preservation") {
    CatalogEntry toy = toy_multiround(2);
    MultiRoundDescriptor t = build_oneround_from_multiround(*toy.multiround);
    t.game.validate();
    CHECK(t.game.questions == 6);  // max(2^2 full tuples, 2 + 4 prefixed)
    CHECK(t.game.answers == 4);
    // the full-tuple prover may condition early answers on later questions,
    // so the fold's value can strictly exceed the sequential optimum
    CHECK(classical_value(t.game).value >= multiround_value(*toy.multiround).value);
    CHECK(classical_value(t.game).value == Rational(3, 4));

    MultiRoundGameSpec all;
    all.rounds = 2;
    all.questions = 2;
    all.answers = 2;
    all.pi.assign(4, Rational(1, 4));
    all.predicate.assign(16, 1);
    MultiRoundDescriptor ta = build_oneround_from_multiround(all);
    CHECK(classical_value(ta.game).value == Rational(1));

    CHECK_THROWS_AS(build_oneround_from_multiround(*toy.multiround, 10), BudgetExceeded);
}

TEST_CASE("multi-round fold at r=1 is a consistency-augmented copy") {
    CatalogEntry toy = toy_multiround(1);
    MultiRoundDescriptor t = build_oneround_from_multiround(*toy.multiround);
    CHECK(t.game.questions == 2);
    CHECK(classical_value(t.game).value == *toy.documented_classical_value);
}

TEST_CASE("eval_multiround_transform: honest strategy is consistent at every index") {
    CatalogEntry toy = toy_multiround(2);
    MultiRoundDescriptor t = build_oneround_from_multiround(*toy.multiround);
    MultiRoundValueReport rep = multiround_value(*toy.multiround);

    // fold the adaptive witness into per-prover maps
    const std::size_t Q = 2, A = 2, r = 2;
    std::vector<std::size_t> alice(t.game.questions, 0), bob(t.game.questions, 0);
    for (std::size_t qf = 0; qf < pow_sz(Q, r); ++qf) {
        const auto qs = decode_tuple(qf, Q, r);
        std::size_t qpre = 0, apre = 0;
        for (std::size_t k = 0; k < r; ++k) {
            qpre = qpre * Q + qs[k];
            apre = apre * A + rep.witness.answer[k][qpre * pow_sz(A, k) + apre];
            bob[t.prefix_offset[k] + qpre] = apre;
        }
        alice[qf] = apre;
    }
    EntangledStrategy e =
        embed_classical(DeterministicStrategy{{alice, bob}}, t.game.questions, t.game.answers);
    MultiRoundTransformEval ev = eval_multiround_transform(t, e);
    for (double p2 : ev.pi2_of_k) CHECK(p2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev.total == doctest::Approx(rep.value.to_double()).epsilon(1e-12));
}

TEST_CASE("eval_multiround_transform: independent fixed-string responder counted exactly") {
    CatalogEntry toy = toy_multiround(2);
    MultiRoundDescriptor t = build_oneround_from_multiround(*toy.multiround);
    // first prover honest for the all-ones transcript; second answers 0 always
    std::vector<std::size_t> alice(t.game.questions, 3), bob(t.game.questions, 0);
    EntangledStrategy e =
        embed_classical(DeterministicStrategy{{alice, bob}}, t.game.questions, t.game.answers);
    MultiRoundTransformEval ev = eval_multiround_transform(t, e);
    // prefix of the constant-1 answers never matches the constant-0 string
    CHECK(ev.pi2_of_k[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ev.pi2_of_k[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("eval_multiround_transform total equals the folded-game replay") {
    CatalogEntry toy = toy_multiround(2);
    MultiRoundDescriptor t = build_oneround_from_multiround(*toy.multiround);
    std::mt19937_64 rng(54);
    EntangledStrategy s = random_strategy(2, 2, t.game.questions, t.game.answers, rng);
    MultiRoundTransformEval ev = eval_multiround_transform(t, s);
    CHECK(ev.total == doctest::Approx(entangled_value_of(s, t.game)).epsilon(1e-9));
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(ev.pi1_of_k[k] >= -1e-12);
        CHECK(ev.pi1_of_k[k] <= 1.0 + 1e-9);
        CHECK(ev.pi2_of_k[k] >= -1e-12);
        CHECK(ev.pi2_of_k[k] <= 1.0 + 1e-9);
    }
}
