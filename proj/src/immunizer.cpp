#include "workbench/immunizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace workbench {

namespace {

// Re <Psi| (x)_p ops[p] |Psi> with identity on unlisted slots.
double sandwich(const EntangledStrategy& s,
                const std::vector<std::pair<std::size_t, const ComplexMatrix*>>& ops) {
    std::vector<cplx> phi = s.state.amplitudes;
    for (const auto& [slot, op] : ops) apply_local(phi, *op, slot, s.provers, s.dim);
    cplx ip = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        ip += std::conj(s.state.amplitudes[i]) * phi[i];
    return ip.real();
}

void require_symmetric_game(const GameSpec& g, const char* who) {
    if (g.provers != 2) throw std::invalid_argument(std::string(who) + ": requires 2 provers");
    g.validate();
    if (!g.symmetric())
        throw std::invalid_argument(std::string(who) +
                                    ": game must be symmetric; apply symmetrize first");
}

}  // namespace

SwapGameDescriptor build_swap_game(const GameSpec& g) {
    require_symmetric_game(g, "build_swap_game");
    SwapGameDescriptor d;
    d.marginal_pi = marginal(g.pi, g.questions, 2, 0);
    for (const Rational& r : d.marginal_pi)
        if (!(r > Rational(0)))
            throw std::invalid_argument(
                "build_swap_game: every question needs positive marginal probability");
    d.classical_pi = g.pi;
    d.quantum_pi.resize(g.q_tuples());
    for (std::size_t q = 0; q < g.questions; ++q)
        for (std::size_t qp = 0; qp < g.questions; ++qp)
            d.quantum_pi[q * g.questions + qp] = d.marginal_pi[q] * d.marginal_pi[qp];
    d.game = g;
    return d;
}

SwapGameEval eval_swap_game(const GameSpec& g, const EntangledStrategy& s) {
    require_symmetric_game(g, "eval_swap_game");
    s.validate();
    if (s.provers != 2 || s.questions() != g.questions || s.answers() != g.answers)
        throw std::invalid_argument("eval_swap_game: strategy/game mismatch");
    if (!s.symmetric())
        throw std::invalid_argument(
            "eval_swap_game: closed form needs a symmetric strategy; use symmetrize_strategy");

    const std::vector<Rational> m = marginal(g.pi, g.questions, 2, 0);
    SwapGameEval e;
    double mismatch = 0.0;
    for (std::size_t q = 0; q < g.questions; ++q)
        for (std::size_t qp = 0; qp < g.questions; ++qp) {
            const double wc = g.pi[q * g.questions + qp].to_double();
            const double wq = (m[q] * m[qp]).to_double();
            for (std::size_t a = 0; a < g.answers; ++a)
                for (std::size_t ap = 0; ap < g.answers; ++ap) {
                    std::vector<cplx> u = s.state.amplitudes;
                    apply_local(u, s.measurements[0][q][a], 0, 2, s.dim);
                    apply_local(u, s.measurements[0][qp][ap], 1, 2, s.dim);
                    if (wc > 0.0 && g.accepts(q * g.questions + qp, a * g.answers + ap))
                        e.classical_test_prob += wc * vec_norm_sq(u);
                    if (wq > 0.0) {
                        std::vector<cplx> v = s.state.amplitudes;
                        apply_local(v, s.measurements[0][qp][ap], 0, 2, s.dim);
                        apply_local(v, s.measurements[0][q][a], 1, 2, s.dim);
                        for (std::size_t i = 0; i < u.size(); ++i) v[i] -= u[i];
                        mismatch += wq * 0.25 * vec_norm_sq(v);
                    }
                }
        }
    e.quantum_test_prob = 1.0 - mismatch;
    e.total = 0.5 * (e.classical_test_prob + e.quantum_test_prob);
    return e;
}

SwapGameEval circuit_oracle_swap(const GameSpec& g, const EntangledStrategy& s,
                                 std::size_t dim_cap) {
    if (g.provers != 2) throw std::invalid_argument("circuit_oracle_swap: requires 2 provers");
    g.validate();
    s.validate();
    if (s.provers != 2 || s.questions() != g.questions || s.answers() != g.answers)
        throw std::invalid_argument("circuit_oracle_swap: strategy/game mismatch");

    const std::size_t Q = g.questions, A = g.answers, d = s.dim;
    const std::size_t total = 2 * Q * A * Q * A * d * d;
    if (total > dim_cap)
        throw BudgetExceeded("circuit_oracle_swap: simulated dimension " +
                                 std::to_string(total) + " exceeds cap " +
                                 std::to_string(dim_cap),
                             total);

    // register layout (c, qa, aa, qb, ab, x, y), row-major strides
    const std::size_t sy = 1, sx = d, sab = d * d, sqb = A * sab, saa = Q * sqb, sqa = A * saa,
                      sc = Q * sqa;
    const std::vector<Rational> mar = marginal(g.pi, g.questions, 2, 0);

    double classical = 0.0, quantum = 0.0;
    std::vector<cplx> cur(total), nxt(total);
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t qp = 0; qp < Q; ++qp) {
            // classical test: measure both and check the predicate
            const double wc = g.pi[q * Q + qp].to_double();
            if (wc > 0.0)
                for (std::size_t a = 0; a < A; ++a)
                    for (std::size_t ap = 0; ap < A; ++ap) {
                        if (!g.accepts(q * Q + qp, a * A + ap)) continue;
                        std::vector<cplx> u = s.state.amplitudes;
                        apply_local(u, s.measurements[0][q][a], 0, 2, d);
                        apply_local(u, s.measurements[1][qp][ap], 1, 2, d);
                        classical += wc * vec_norm_sq(u);
                    }

            const double wq = (mar[q] * mar[qp]).to_double();
            if (wq <= 0.0) continue;

            // prepare (|0,q,0,q',0> + |1,q',0,q,0>)/sqrt(2) (x) |Psi>
            std::fill(cur.begin(), cur.end(), cplx(0.0, 0.0));
            const double r = 1.0 / std::sqrt(2.0);
            for (std::size_t x = 0; x < d; ++x)
                for (std::size_t y = 0; y < d; ++y) {
                    const cplx amp = r * s.state.amplitudes[x * d + y];
                    cur[0 * sc + q * sqa + qp * sqb + x * sx + y * sy] += amp;
                    cur[1 * sc + qp * sqa + q * sqb + x * sx + y * sy] += amp;
                }

            // answer isometries: |q,0,psi> -> |q> sum_a |a> W_q^a |psi>
            std::fill(nxt.begin(), nxt.end(), cplx(0.0, 0.0));
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t qa = 0; qa < Q; ++qa)
                    for (std::size_t qb = 0; qb < Q; ++qb)
                        for (std::size_t x = 0; x < d; ++x)
                            for (std::size_t y = 0; y < d; ++y) {
                                const cplx amp = cur[c * sc + qa * sqa + qb * sqb + x * sx + y];
                                if (amp == cplx(0.0, 0.0)) continue;
                                for (std::size_t a = 0; a < A; ++a) {
                                    const ComplexMatrix& w = s.measurements[0][qa][a];
                                    for (std::size_t xp = 0; xp < d; ++xp) {
                                        const cplx wamp = w(xp, x) * amp;
                                        if (wamp == cplx(0.0, 0.0)) continue;
                                        nxt[c * sc + qa * sqa + a * saa + qb * sqb + xp * sx +
                                            y] += wamp;
                                    }
                                }
                            }
            cur.swap(nxt);
            std::fill(nxt.begin(), nxt.end(), cplx(0.0, 0.0));
            for (std::size_t i = 0; i < total; ++i) {
                const cplx amp = cur[i];
                if (amp == cplx(0.0, 0.0)) continue;
                const std::size_t qb = (i / sqb) % Q;
                const std::size_t y = i % d;
                const std::size_t base = i - y * sy;
                for (std::size_t ap = 0; ap < A; ++ap) {
                    const ComplexMatrix& w = s.measurements[1][qb][ap];
                    for (std::size_t yp = 0; yp < d; ++yp) {
                        const cplx wamp = w(yp, y) * amp;
                        if (wamp != cplx(0.0, 0.0)) nxt[base + ap * sab + yp * sy] += wamp;
                    }
                }
            }
            cur.swap(nxt);

            // controlled-SWAP of the two message registers, then Hadamard
            std::fill(nxt.begin(), nxt.end(), cplx(0.0, 0.0));
            for (std::size_t i = 0; i < total; ++i) {
                const cplx amp = cur[i];
                if (amp == cplx(0.0, 0.0)) continue;
                std::size_t j = i;
                if (i / sc == 1) {
                    const std::size_t qa = (i / sqa) % Q, aa = (i / saa) % A;
                    const std::size_t qb = (i / sqb) % Q, ab = (i / sab) % A;
                    j = i - qa * sqa - aa * saa - qb * sqb - ab * sab + qb * sqa + ab * saa +
                        qa * sqb + aa * sab;
                }
                nxt[j] += amp;
            }
            cur.swap(nxt);
            for (std::size_t i = 0; i < sc; ++i) {
                const cplx a0 = cur[i], a1 = cur[i + sc];
                cur[i] = r * (a0 + a1);
                cur[i + sc] = r * (a0 - a1);
            }

            // accept: control "+", question registers read back (q, q')
            double acc = 0.0;
            for (std::size_t aa = 0; aa < A; ++aa)
                for (std::size_t ab = 0; ab < A; ++ab)
                    for (std::size_t x = 0; x < d; ++x)
                        for (std::size_t y = 0; y < d; ++y)
                            acc += std::norm(cur[q * sqa + aa * saa + qp * sqb + ab * sab +
                                                 x * sx + y]);
            quantum += wq * acc;
        }

    SwapGameEval e;
    e.classical_test_prob = classical;
    e.quantum_test_prob = quantum;
    e.total = 0.5 * (classical + quantum);
    return e;
}

ThreeProverDescriptor build_three_prover_game(const GameSpec& g) {
    require_symmetric_game(g, "build_three_prover_game");
    const std::size_t Q = g.questions, A = g.answers;
    GameSpec g3;
    g3.provers = 3;
    g3.questions = 2 * Q;
    g3.answers = A;
    g3.pi.assign(g3.q_tuples(), Rational(0));
    g3.predicate.assign(g3.q_tuples() * g3.a_tuples(), 0);

    const Rational third(1, 3);
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t qp = 0; qp < Q; ++qp) {
            const Rational w = g.pi[q * Q + qp] * third;
            if (!(w > Rational(0))) continue;
            const std::size_t lone = q, clone = Q + qp;
            const std::size_t tuples[3] = {
                encode_tuple({lone, clone, clone}, g3.questions),
                encode_tuple({clone, lone, clone}, g3.questions),
                encode_tuple({clone, clone, lone}, g3.questions)};
            for (int arr = 0; arr < 3; ++arr) {
                g3.pi[tuples[arr]] += w;
                for (std::size_t a = 0; a < A; ++a)
                    for (std::size_t b = 0; b < A; ++b) {
                        if (!g.accepts(q * Q + qp, a * A + b)) continue;
                        std::vector<std::size_t> as(3, b);
                        as[arr] = a;
                        g3.set_accept(tuples[arr], encode_tuple(as, A), true);
                    }
            }
        }
    return ThreeProverDescriptor{g, std::move(g3)};
}

ThreeProverEval eval_three_prover(const ThreeProverDescriptor& t, const EntangledStrategy& s) {
    s.validate();
    const GameSpec& g = t.base;
    if (s.provers != 3 || s.questions() != t.game3.questions || s.answers() != g.answers)
        throw std::invalid_argument("eval_three_prover: strategy/game mismatch");
    if (!s.symmetric())
        throw std::invalid_argument(
            "eval_three_prover: needs a symmetric strategy; use symmetrize_strategy");

    const std::size_t Q = g.questions, A = g.answers;
    ThreeProverEval e;
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t qp = 0; qp < Q; ++qp) {
            const double w = g.pi[q * Q + qp].to_double();
            if (w <= 0.0) continue;
            for (std::size_t a = 0; a < A; ++a)
                for (std::size_t b = 0; b < A; ++b) {
                    if (!g.accepts(q * Q + qp, a * A + b)) continue;
                    e.pi1 += w * sandwich(s, {{0, &s.measurements[0][q][a]},
                                              {1, &s.measurements[0][Q + qp][b]}});
                }
        }

    const std::vector<Rational> m = marginal(g.pi, Q, 2, 0);
    e.pi2_of_q.assign(Q, 0.0);
    for (std::size_t q = 0; q < Q; ++q) {
        for (std::size_t a = 0; a < A; ++a)
            e.pi2_of_q[q] += sandwich(s, {{1, &s.measurements[0][Q + q][a]},
                                          {2, &s.measurements[0][Q + q][a]}});
        e.pi2 += m[q].to_double() * e.pi2_of_q[q];
    }
    e.acceptance = entangled_value_of(s, t.game3);
    return e;
}

MultiRoundDescriptor build_oneround_from_multiround(const MultiRoundGameSpec& m,
                                                    std::size_t budget) {
    m.validate();
    const std::size_t r = m.rounds, Q = m.questions, A = m.answers;
    MultiRoundDescriptor d;
    d.base = m;
    d.prefix_offset.resize(r);
    std::size_t off = 0;
    for (std::size_t k = 1; k <= r; ++k) {
        d.prefix_offset[k - 1] = off;
        off += pow_sz(Q, k);
    }
    const std::size_t qa = pow_sz(Q, r);           // first prover's alphabet
    const std::size_t questions = std::max(qa, off);  // shared alphabet size
    const std::size_t answers = pow_sz(A, r);

    const std::size_t cells = questions * questions * answers * answers;
    if (cells > budget)
        throw BudgetExceeded("build_oneround_from_multiround: table of " +
                                 std::to_string(cells) + " cells exceeds budget " +
                                 std::to_string(budget),
                             cells);

    GameSpec g;
    g.provers = 2;
    g.questions = questions;
    g.answers = answers;
    g.pi.assign(g.q_tuples(), Rational(0));
    g.predicate.assign(g.q_tuples() * g.a_tuples(), 0);
    const Rational inv_r(1, static_cast<std::int64_t>(r));
    for (std::size_t qf = 0; qf < qa; ++qf) {
        if (!(m.pi[qf] > Rational(0))) continue;
        for (std::size_t k = 1; k <= r; ++k) {
            const std::size_t prefix = qf / pow_sz(Q, r - k);
            const std::size_t bq = d.prefix_offset[k - 1] + prefix;
            const std::size_t q_idx = qf * questions + bq;
            g.pi[q_idx] += m.pi[qf] * inv_r;
            const std::size_t apow = pow_sz(A, r - k);
            for (std::size_t a = 0; a < answers; ++a) {
                if (!m.accepts(qf, a)) continue;
                g.set_accept(q_idx, a * answers + a / apow, true);
            }
        }
    }
    d.game = std::move(g);
    return d;
}

MultiRoundTransformEval eval_multiround_transform(const MultiRoundDescriptor& t,
                                                  const EntangledStrategy& s) {
    s.validate();
    const MultiRoundGameSpec& m = t.base;
    const std::size_t r = m.rounds, Q = m.questions, A = m.answers;
    if (s.provers != 2 || s.questions() != t.game.questions || s.answers() != t.game.answers)
        throw std::invalid_argument("eval_multiround_transform: strategy/game mismatch");

    MultiRoundTransformEval e;
    e.pi1_of_k.assign(r, 0.0);
    e.pi2_of_k.assign(r, 0.0);
    const std::size_t qa = pow_sz(Q, r), answers = pow_sz(A, r);
    for (std::size_t qf = 0; qf < qa; ++qf) {
        const double w = m.pi[qf].to_double();
        if (w <= 0.0) continue;
        for (std::size_t k = 1; k <= r; ++k) {
            const std::size_t bq = t.prefix_offset[k - 1] + qf / pow_sz(Q, r - k);
            const std::size_t apow = pow_sz(A, r - k);
            double pi1 = 0.0, pi2 = 0.0, joint = 0.0;
            for (std::size_t a = 0; a < answers; ++a) {
                const double consistent =
                    sandwich(s, {{0, &s.measurements[0][qf][a]},
                                 {1, &s.measurements[1][bq][a / apow]}});
                pi2 += consistent;
                if (m.accepts(qf, a)) {
                    pi1 += sandwich(s, {{0, &s.measurements[0][qf][a]}});
                    joint += consistent;
                }
            }
            e.pi1_of_k[k - 1] += w * pi1;
            e.pi2_of_k[k - 1] += w * pi2;
            e.total += w * joint / static_cast<double>(r);
        }
    }
    return e;
}

}  // namespace workbench
