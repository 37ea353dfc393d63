#include "workbench/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace workbench {

void EntangledStrategy::validate() const {
    if (provers == 0 || dim == 0) throw std::invalid_argument("EntangledStrategy: empty");
    if (state.dim != pow_sz(dim, provers))
        throw std::invalid_argument("EntangledStrategy: state dimension mismatch");
    if (std::abs(state.norm() - 1.0) > kStructTol)
        throw std::invalid_argument("EntangledStrategy: state not normalized");
    if (measurements.size() != provers)
        throw std::invalid_argument("EntangledStrategy: measurement table size");
    const std::size_t nq = questions(), na = answers();
    if (nq == 0 || na == 0) throw std::invalid_argument("EntangledStrategy: empty alphabets");
    for (const auto& per_prover : measurements) {
        if (per_prover.size() != nq)
            throw std::invalid_argument("EntangledStrategy: ragged question axis");
        for (const auto& pvm : per_prover) {
            if (pvm.size() != na)
                throw std::invalid_argument("EntangledStrategy: ragged answer axis");
            ComplexMatrix sum(dim, dim);
            for (const ComplexMatrix& w : pvm) {
                if (w.rows() != dim || w.cols() != dim)
                    throw std::invalid_argument("EntangledStrategy: projector shape");
                sum = sum + w;
            }
            if (ComplexMatrix::max_abs_diff(sum, ComplexMatrix::identity(dim)) > kStructTol)
                throw std::invalid_argument("EntangledStrategy: PVM does not sum to identity");
            for (std::size_t a = 0; a < na; ++a)
                for (std::size_t b = 0; b < na; ++b) {
                    ComplexMatrix prod = pvm[a] * pvm[b];
                    const ComplexMatrix& expect = (a == b) ? pvm[a] : ComplexMatrix(dim, dim);
                    if (ComplexMatrix::max_abs_diff(prod, expect) > kEigTol)
                        throw std::invalid_argument(
                            "EntangledStrategy: projectors not orthogonal/idempotent");
                }
        }
    }
}

bool EntangledStrategy::symmetric(double tol) const {
    for (std::size_t p = 1; p < provers; ++p)
        for (std::size_t q = 0; q < questions(); ++q)
            for (std::size_t a = 0; a < answers(); ++a)
                if (ComplexMatrix::max_abs_diff(measurements[p][q][a], measurements[0][q][a]) >
                    tol)
                    return false;
    // invariance under every adjacent prover transposition
    for (std::size_t p = 0; p + 1 < provers; ++p) {
        for (std::size_t idx = 0; idx < state.dim; ++idx) {
            auto t = decode_tuple(idx, dim, provers);
            std::swap(t[p], t[p + 1]);
            const std::size_t swapped = encode_tuple(t, dim);
            if (std::abs(state.amplitudes[idx] - state.amplitudes[swapped]) > tol) return false;
        }
    }
    return true;
}

namespace {

void check_compat(const EntangledStrategy& s, const GameSpec& g) {
    if (s.provers != g.provers || s.questions() != g.questions || s.answers() != g.answers)
        throw std::invalid_argument("strategy/game alphabet mismatch");
}

// Fills out[q_idx * A^N .. +A^N) with || (x)_p W^{a_p}_{q_p} |Psi> ||^2.
void distribution_row(const EntangledStrategy& s, std::size_t q_idx, double* out) {
    const std::size_t na = pow_sz(s.answers(), s.provers);
    const auto qs = decode_tuple(q_idx, s.questions(), s.provers);
    // depth-first over provers, reusing measured prefixes
    std::vector<std::vector<cplx>> stack(s.provers + 1);
    stack[0] = s.state.amplitudes;
    std::vector<std::size_t> a(s.provers, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == s.provers) {
            std::size_t a_idx = 0;
            for (std::size_t p = 0; p < s.provers; ++p) a_idx = a_idx * s.answers() + a[p];
            out[a_idx] = vec_norm_sq(stack[s.provers]);
            // backtrack to the deepest prover with answers left
            while (depth > 0 && a[depth - 1] + 1 == s.answers()) a[--depth] = 0;
            if (depth == 0) break;
            ++a[depth - 1];
            --depth;
        }
        stack[depth + 1] = stack[depth];
        apply_local(stack[depth + 1], s.measurements[depth][qs[depth]][a[depth]], depth,
                    s.provers, s.dim);
        ++depth;
    }
    (void)na;
}

OutcomeDistribution distribution_impl(const EntangledStrategy& s, const GameSpec& g,
                                      bool parallel) {
    s.validate();
    check_compat(s, g);
    OutcomeDistribution d;
    d.provers = g.provers;
    d.questions = g.questions;
    d.answers = g.answers;
    const std::size_t nq = g.q_tuples(), na = g.a_tuples();
    d.p.assign(nq * na, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long q = 0; q < static_cast<long long>(nq); ++q)
        distribution_row(s, static_cast<std::size_t>(q), d.p.data() + q * na);
    return d;
}

}  // namespace

OutcomeDistribution outcome_distribution(const EntangledStrategy& s, const GameSpec& g) {
    return distribution_impl(s, g, true);
}

OutcomeDistribution outcome_distribution_serial(const EntangledStrategy& s, const GameSpec& g) {
    return distribution_impl(s, g, false);
}

double entangled_value_of(const EntangledStrategy& s, const GameSpec& g) {
    s.validate();
    check_compat(s, g);
    const std::size_t na = g.a_tuples();
    std::vector<double> row(na);
    double v = 0.0;
    for (std::size_t q = 0; q < g.q_tuples(); ++q) {
        if (!(g.pi[q] > Rational(0))) continue;
        distribution_row(s, q, row.data());
        double acc = 0.0;
        for (std::size_t a = 0; a < na; ++a)
            if (g.accepts(q, a)) acc += row[a];
        v += g.pi[q].to_double() * acc;
    }
    return v;
}

EntangledStrategy embed_classical(const DeterministicStrategy& s, std::size_t questions,
                                  std::size_t answers) {
    EntangledStrategy e;
    e.provers = s.answer.size();
    e.dim = 1;
    e.state = StateVector({cplx(1.0, 0.0)});
    e.measurements.resize(e.provers);
    ComplexMatrix one(1, 1), zero(1, 1);
    one(0, 0) = 1.0;
    for (std::size_t p = 0; p < e.provers; ++p) {
        e.measurements[p].resize(questions);
        for (std::size_t q = 0; q < questions; ++q) {
            e.measurements[p][q].assign(answers, zero);
            e.measurements[p][q][s.answer[p].at(q)] = one;
        }
    }
    return e;
}

EntangledStrategy symmetrize_strategy(const EntangledStrategy& s, std::size_t k) {
    s.validate();
    if (k == 0 || k > s.provers) throw std::invalid_argument("symmetrize_strategy: bad k");
    const std::size_t n = s.provers, d = s.dim, dp = k * d;

    EntangledStrategy out;
    out.provers = n;
    out.dim = dp;

    // role register: |j> tells a prover to impersonate original prover j
    std::vector<cplx> amps(pow_sz(dp, n), cplx(0.0, 0.0));
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    const double w = 1.0 / std::sqrt(fact);
    do {
        for (std::size_t x = 0; x < s.state.dim; ++x) {
            const cplx c = s.state.amplitudes[x];
            if (c == cplx(0.0, 0.0)) continue;
            const auto xs = decode_tuple(x, d, n);
            std::size_t idx = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t reg = (i < k) ? perm[i] : 0;
                const std::size_t share = (i < k) ? xs[perm[i]] : xs[i];
                idx = idx * dp + (reg * d + share);
            }
            amps[idx] += w * c;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.state = StateVector(std::move(amps));

    // shared family for the first k provers: controlled on the role register
    const std::size_t nq = s.questions(), na = s.answers();
    out.measurements.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        out.measurements[p].resize(nq);
        for (std::size_t q = 0; q < nq; ++q) {
            out.measurements[p][q].resize(na);
            for (std::size_t a = 0; a < na; ++a) {
                ComplexMatrix m(dp, dp);
                for (std::size_t j = 0; j < k; ++j) {
                    const ComplexMatrix& blk =
                        (p < k) ? s.measurements[j][q][a] : s.measurements[p][q][a];
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t c = 0; c < d; ++c) m(j * d + r, j * d + c) = blk(r, c);
                }
                out.measurements[p][q][a] = std::move(m);
            }
        }
    }
    out.validate();
    return out;
}

namespace {

ComplexMatrix haar_unitary(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix u(n, n);
    for (auto& v : u.data()) v = cplx(g(rng), g(rng));
    // Gram-Schmidt on columns
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t j2 = 0; j2 < j; ++j2) {
            cplx ip = 0.0;
            for (std::size_t i = 0; i < n; ++i) ip += std::conj(u(i, j2)) * u(i, j);
            for (std::size_t i = 0; i < n; ++i) u(i, j) -= ip * u(i, j2);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(u(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) u(i, j) /= nrm;
    }
    return u;
}

std::vector<ComplexMatrix> random_pvm(std::size_t d, std::size_t answers,
                                      std::mt19937_64& rng) {
    ComplexMatrix u = haar_unitary(d, rng);
    std::vector<ComplexMatrix> pvm(answers, ComplexMatrix(d, d));
    std::uniform_int_distribution<std::size_t> pick(0, answers - 1);
    for (std::size_t m = 0; m < d; ++m) {
        // random answer per basis vector: covers every rank pattern, not just
        // the first min(d, answers) answers
        const std::size_t a = d >= answers ? m % answers : pick(rng);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) pvm[a](i, j) += u(i, m) * std::conj(u(j, m));
    }
    return pvm;
}

ComplexMatrix game_operator(const GameSpec& g, const EntangledStrategy& s) {
    const std::size_t dn = pow_sz(s.dim, s.provers);
    ComplexMatrix r(dn, dn);
    for (std::size_t q = 0; q < g.q_tuples(); ++q) {
        const double w = g.pi[q].to_double();
        if (w <= 0.0) continue;
        const auto qs = decode_tuple(q, g.questions, g.provers);
        for (std::size_t a = 0; a < g.a_tuples(); ++a) {
            if (!g.accepts(q, a)) continue;
            const auto as = decode_tuple(a, g.answers, g.provers);
            ComplexMatrix t = s.measurements[0][qs[0]][as[0]];
            for (std::size_t p = 1; p < g.provers; ++p)
                t = tensor(t, s.measurements[p][qs[p]][as[p]]);
            r = r + w * t;
        }
    }
    return r;
}

// Effective operators M[q][a] for prover p: value = sum_{q,a} Tr(W^a_q M[q][a]).
std::vector<std::vector<ComplexMatrix>> effective_operators(const GameSpec& g,
                                                            const EntangledStrategy& s,
                                                            std::size_t p) {
    std::vector<std::vector<ComplexMatrix>> m(
        g.questions, std::vector<ComplexMatrix>(g.answers, ComplexMatrix(s.dim, s.dim)));
    const std::vector<std::size_t> dims(s.provers, s.dim);
    for (std::size_t q = 0; q < g.q_tuples(); ++q) {
        const double w = g.pi[q].to_double();
        if (w <= 0.0) continue;
        const auto qs = decode_tuple(q, g.questions, g.provers);
        // enumerate the other provers' answers; prover p's answer handled per slot
        const std::size_t others = pow_sz(g.answers, g.provers - 1);
        for (std::size_t oa = 0; oa < others; ++oa) {
            auto rest = decode_tuple(oa, g.answers, g.provers - 1);
            std::vector<cplx> phi = s.state.amplitudes;
            std::vector<std::size_t> as(g.provers, 0);
            std::size_t r = 0;
            for (std::size_t pp = 0; pp < g.provers; ++pp) {
                if (pp == p) continue;
                as[pp] = rest[r++];
                apply_local(phi, s.measurements[pp][qs[pp]][as[pp]], pp, s.provers, s.dim);
            }
            ComplexMatrix rho(phi.size(), phi.size());
            for (std::size_t i = 0; i < phi.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j)
                    rho(i, j) = phi[i] * std::conj(phi[j]);
            ComplexMatrix red = partial_trace(rho, dims, {p});
            for (std::size_t a = 0; a < g.answers; ++a) {
                as[p] = a;
                if (g.accepts(q, encode_tuple(as, g.answers))) m[qs[p]][a] = m[qs[p]][a] + w * red;
            }
        }
    }
    return m;
}

double pvm_score(const std::vector<ComplexMatrix>& pvm,
                 const std::vector<ComplexMatrix>& herm) {
    double total = 0.0;
    for (std::size_t a = 0; a < pvm.size(); ++a) total += (pvm[a] * herm[a]).trace().real();
    return total;
}

// Exact re-split of each two-answer block inside its own joint subspace:
// monotone, so sweeping pairs until fixed point only improves the objective.
void pairwise_refine(std::vector<ComplexMatrix>& pvm, const std::vector<ComplexMatrix>& herm,
                     std::size_t d) {
    const std::size_t na = pvm.size();
    for (int sweep = 0; sweep < 32; ++sweep) {
        bool changed = false;
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = a + 1; b < na; ++b) {
                EigenDecomposition sub = hermitian_eig(pvm[a] + pvm[b]);
                std::vector<std::size_t> cols;
                for (std::size_t k = 0; k < d; ++k)
                    if (sub.values[k] > 0.5) cols.push_back(k);
                if (cols.empty()) continue;
                const std::size_t r = cols.size();
                ComplexMatrix diff(r, r);
                const ComplexMatrix gap = herm[a] - herm[b];
                for (std::size_t x = 0; x < r; ++x)
                    for (std::size_t y = 0; y < r; ++y) {
                        cplx t = 0.0;
                        for (std::size_t i = 0; i < d; ++i)
                            for (std::size_t j = 0; j < d; ++j)
                                t += std::conj(sub.vectors(i, cols[x])) * gap(i, j) *
                                     sub.vectors(j, cols[y]);
                        diff(x, y) = t;
                    }
                diff = 0.5 * (diff + diff.adjoint());
                EigenDecomposition split = hermitian_eig(diff);
                ComplexMatrix wa(d, d), wb(d, d);
                for (std::size_t k = 0; k < r; ++k) {
                    ComplexMatrix& w = split.values[k] > 0.0 ? wa : wb;
                    std::vector<cplx> vec(d, cplx(0.0, 0.0));
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t x = 0; x < r; ++x)
                            vec[i] += sub.vectors(i, cols[x]) * split.vectors(x, k);
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j) w(i, j) += vec[i] * std::conj(vec[j]);
                }
                const double before = (pvm[a] * herm[a]).trace().real() +
                                      (pvm[b] * herm[b]).trace().real();
                const double after =
                    (wa * herm[a]).trace().real() + (wb * herm[b]).trace().real();
                if (after > before + 1e-12) {
                    pvm[a] = 0.5 * (wa + wa.adjoint());
                    pvm[b] = 0.5 * (wb + wb.adjoint());
                    changed = true;
                }
            }
        if (!changed) break;
    }
}

// Best PVM for the linear objective: exact positive-eigenspace split for two
// answers; otherwise joint eigenbasis + argmax assignment followed by exact
// pairwise re-splitting, raced against a refinement of the current PVM.
std::vector<ComplexMatrix> optimal_pvm(const std::vector<ComplexMatrix>& m, std::size_t d,
                                       const std::vector<ComplexMatrix>& current) {
    const std::size_t na = m.size();
    std::vector<ComplexMatrix> pvm(na, ComplexMatrix(d, d));
    auto add_outer = [&](std::size_t a, const ComplexMatrix& basis, std::size_t col) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                pvm[a](i, j) += basis(i, col) * std::conj(basis(j, col));
    };
    std::vector<ComplexMatrix> herm;
    herm.reserve(na);
    for (const ComplexMatrix& x : m) herm.push_back(0.5 * (x + x.adjoint()));
    if (na == 2) {
        EigenDecomposition e = hermitian_eig(herm[0] - herm[1]);
        for (std::size_t k = 0; k < d; ++k) add_outer(e.values[k] > 0.0 ? 0 : 1, e.vectors, k);
    } else {
        ComplexMatrix v = joint_diagonalizer(herm);
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t best = 0;
            double best_score = -1e300;
            for (std::size_t a = 0; a < na; ++a) {
                cplx score = 0.0;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        score += std::conj(v(i, k)) * herm[a](i, j) * v(j, k);
                if (score.real() > best_score + 1e-15) {
                    best_score = score.real();
                    best = a;
                }
            }
            add_outer(best, v, k);
        }
        pairwise_refine(pvm, herm, d);
        std::vector<ComplexMatrix> from_current = current;
        pairwise_refine(from_current, herm, d);
        if (pvm_score(from_current, herm) > pvm_score(pvm, herm)) pvm = std::move(from_current);
    }
    for (auto& w : pvm) w = 0.5 * (w + w.adjoint());
    return pvm;
}

// small unitary as an exact product of Givens rotations with N(0, scale) angles
ComplexMatrix small_unitary(std::size_t d, double scale, std::mt19937_64& rng) {
    std::normal_distribution<double> nrm(0.0, 1.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * 3.14159265358979323846);
    ComplexMatrix u = ComplexMatrix::identity(d);
    for (std::size_t p = 0; p + 1 < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
            const double c = std::cos(scale * nrm(rng));
            const cplx sgn = std::polar(std::sqrt(1.0 - c * c), ph(rng));
            for (std::size_t j = 0; j < d; ++j) {
                const cplx up = u(p, j), uq = u(q, j);
                u(p, j) = c * up - std::conj(sgn) * uq;
                u(q, j) = sgn * up + c * uq;
            }
        }
    return u;
}

// Restart seeded on the game's self-consistent answers: rank-1 blocks on a
// random shuffle of the answers a with V(a,a|q,q) accepted, the second prover
// mirrored as the transpose, and a maximally entangled state. On consistency
// games this starts every same-question test at success probability 1, which
// reaches basins the fully random initialization practically never finds.
void structured_init(const GameSpec& g, EntangledStrategy& s, std::mt19937_64& rng) {
    const std::size_t d = s.dim;
    for (std::size_t q = 0; q < g.questions; ++q) {
        std::vector<std::size_t> labels;
        if (g.pi[q * g.questions + q] > Rational(0))
            for (std::size_t a = 0; a < g.answers; ++a)
                if (g.accepts(q * g.questions + q, a * g.answers + a)) labels.push_back(a);
        if (labels.empty())
            for (std::size_t a = 0; a < g.answers; ++a) labels.push_back(a);
        std::shuffle(labels.begin(), labels.end(), rng);
        const ComplexMatrix u = haar_unitary(d, rng);
        s.measurements[0][q].assign(g.answers, ComplexMatrix(d, d));
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t a = labels[k % labels.size()];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    s.measurements[0][q][a](i, j) += u(i, k) * std::conj(u(j, k));
        }
        for (std::size_t a = 0; a < g.answers; ++a)
            s.measurements[1][q][a] = s.measurements[0][q][a].transpose();
    }
    std::vector<cplx> mes(d * d, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < d; ++k) mes[k * d + k] = 1.0 / std::sqrt(double(d));
    s.state = StateVector(std::move(mes));
}

SeesawResult seesaw_restart(const GameSpec& g, std::size_t d, std::size_t iters,
                            std::uint64_t seed, bool structured) {
    std::mt19937_64 rng(seed);
    EntangledStrategy s;
    s.provers = g.provers;
    s.dim = d;
    s.measurements.resize(g.provers);
    for (std::size_t p = 0; p < g.provers; ++p) {
        s.measurements[p].resize(g.questions);
        for (std::size_t q = 0; q < g.questions; ++q)
            s.measurements[p][q] = random_pvm(d, g.answers, rng);
    }
    if (structured && g.provers == 2) {
        structured_init(g, s, rng);
    } else {
        EigenDecomposition e = hermitian_eig(game_operator(g, s));
        std::vector<cplx> top(e.values.size());
        for (std::size_t i = 0; i < top.size(); ++i) top[i] = e.vectors(i, top.size() - 1);
        s.state = StateVector(std::move(top));
    }
    double value = entangled_value_of(s, g);
    SeesawResult best{s, value};

    // basin hopping: alternate to convergence, record, then kick the converged
    // point with small unitary conjugations (exactly PVM-preserving) and repeat
    // until the iteration budget is spent
    for (std::size_t it = 0; it < iters;) {
        bool improved = false;
        ++it;
        for (std::size_t p = 0; p < g.provers; ++p) {
            auto m = effective_operators(g, s, p);
            EntangledStrategy cand = s;
            for (std::size_t q = 0; q < g.questions; ++q)
                cand.measurements[p][q] = optimal_pvm(m[q], d, s.measurements[p][q]);
            const double cv = entangled_value_of(cand, g);
            if (cv > value + 1e-15) {
                s = std::move(cand);
                value = cv;
                improved = true;
            }
        }
        {
            EigenDecomposition e = hermitian_eig(game_operator(g, s));
            std::vector<cplx> top(e.values.size());
            for (std::size_t i = 0; i < top.size(); ++i) top[i] = e.vectors(i, top.size() - 1);
            EntangledStrategy cand = s;
            cand.state = StateVector(std::move(top));
            const double cv = entangled_value_of(cand, g);
            if (cv > value + 1e-15) {
                s = std::move(cand);
                value = cv;
                improved = true;
            }
        }
        if (!improved) {
            if (value > best.value) best = SeesawResult{s, value};
            if (it >= iters) break;
            s = best.strategy;
            std::uniform_real_distribution<double> kick(0.05, 0.5);
            for (std::size_t p = 0; p < g.provers; ++p)
                for (std::size_t q = 0; q < g.questions; ++q) {
                    const ComplexMatrix u = small_unitary(d, kick(rng), rng);
                    for (auto& w : s.measurements[p][q]) {
                        w = u * w * u.adjoint();
                        w = 0.5 * (w + w.adjoint());
                    }
                }
            value = entangled_value_of(s, g);
        }
    }
    if (value > best.value) best = SeesawResult{std::move(s), value};
    return best;
}

}  // namespace

SeesawResult seesaw(const GameSpec& g, std::size_t dims, std::size_t restarts,
                    std::size_t iters, std::uint64_t seed) {
    g.validate();
    if (g.provers != 2 && g.provers != 3)
        throw std::invalid_argument("seesaw: supports 2 or 3 provers");
    if (dims == 0 || restarts == 0) throw std::invalid_argument("seesaw: empty search");

    std::vector<SeesawResult> results(restarts);
#pragma omp parallel for schedule(dynamic)
    for (long long r = 0; r < static_cast<long long>(restarts); ++r)
        results[r] =
            seesaw_restart(g, dims, iters, seed + static_cast<std::uint64_t>(r), r % 2 == 1);

    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r)
        if (results[r].value > results[best].value) best = r;
    return std::move(results[best]);
}

}  // namespace workbench
