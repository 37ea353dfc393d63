#include "workbench/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace workbench {

std::size_t pow_sz(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > SIZE_MAX / base) throw std::overflow_error("pow_sz overflow");
        r *= base;
    }
    return r;
}

std::vector<std::size_t> decode_tuple(std::size_t idx, std::size_t base, std::size_t n) {
    std::vector<std::size_t> t(n);
    for (std::size_t i = n; i-- > 0;) {
        t[i] = idx % base;
        idx /= base;
    }
    return t;
}

std::size_t encode_tuple(const std::vector<std::size_t>& t, std::size_t base) {
    std::size_t idx = 0;
    for (std::size_t d : t) idx = idx * base + d;
    return idx;
}

namespace {

// Exact integer view of pi: numerators over one common denominator.
struct IntPi {
    std::vector<std::int64_t> num;
    std::int64_t den;
};

IntPi common_denominator(const std::vector<Rational>& pi) {
    __int128 l = 1;
    for (const Rational& r : pi) {
        const std::int64_t d = r.den();
        const std::int64_t g = std::gcd(static_cast<std::int64_t>(l % d), d);
        const __int128 next = l / g * static_cast<__int128>(d);
        if (next > INT64_MAX) throw std::overflow_error("pi denominators too large");
        l = next;
    }
    IntPi out;
    out.den = static_cast<std::int64_t>(l);
    out.num.reserve(pi.size());
    for (const Rational& r : pi) out.num.push_back(r.num() * (out.den / r.den()));
    return out;
}

}  // namespace

std::vector<std::size_t> GameSpec::validate() const {
    if (provers == 0 || questions == 0 || answers == 0)
        throw std::invalid_argument("GameSpec: empty alphabets");
    if (pi.size() != q_tuples()) throw std::invalid_argument("GameSpec: pi table size");
    if (predicate.size() != q_tuples() * a_tuples())
        throw std::invalid_argument("GameSpec: predicate table size");
    Rational sum(0);
    for (const Rational& r : pi) {
        if (r < Rational(0)) throw std::invalid_argument("GameSpec: negative pi entry");
        sum += r;
    }
    if (sum != Rational(1)) throw std::invalid_argument("GameSpec: pi does not sum to 1");

    std::vector<std::size_t> unsat;
    for (std::size_t q = 0; q < q_tuples(); ++q) {
        if (!(pi[q] > Rational(0))) continue;
        bool any = false;
        for (std::size_t a = 0; a < a_tuples() && !any; ++a) any = accepts(q, a);
        if (!any) unsat.push_back(q);
    }
    return unsat;
}

bool GameSpec::symmetric() const {
    if (provers != 2) return false;
    for (std::size_t x = 0; x < questions; ++x)
        for (std::size_t y = 0; y < questions; ++y) {
            const std::size_t qxy = x * questions + y;
            const std::size_t qyx = y * questions + x;
            if (pi[qxy] != pi[qyx]) return false;
            if (!(pi[qxy] > Rational(0))) continue;
            for (std::size_t a = 0; a < answers; ++a)
                for (std::size_t b = 0; b < answers; ++b)
                    if (accepts(qxy, a * answers + b) != accepts(qyx, b * answers + a))
                        return false;
        }
    return true;
}

void MultiRoundGameSpec::validate() const {
    if (rounds == 0 || questions == 0 || answers == 0)
        throw std::invalid_argument("MultiRoundGameSpec: empty alphabets");
    if (pi.size() != q_tuples()) throw std::invalid_argument("MultiRoundGameSpec: pi table size");
    if (predicate.size() != q_tuples() * a_tuples())
        throw std::invalid_argument("MultiRoundGameSpec: predicate table size");
    Rational sum(0);
    for (const Rational& r : pi) sum += r;
    if (sum != Rational(1)) throw std::invalid_argument("MultiRoundGameSpec: pi does not sum to 1");
}

Rational replay(const GameSpec& g, const DeterministicStrategy& s) {
    if (s.answer.size() != g.provers) throw std::invalid_argument("replay: wrong prover count");
    Rational v(0);
    for (std::size_t q = 0; q < g.q_tuples(); ++q) {
        if (!(g.pi[q] > Rational(0))) continue;
        const auto qs = decode_tuple(q, g.questions, g.provers);
        std::vector<std::size_t> as(g.provers);
        for (std::size_t p = 0; p < g.provers; ++p) as[p] = s.answer[p].at(qs[p]);
        if (g.accepts(q, encode_tuple(as, g.answers))) v += g.pi[q];
    }
    return v;
}

namespace {

// Best response of the last prover given the others' maps, as an integer
// numerator over ipi.den. Optionally records the witness map.
std::int64_t best_last_response(const GameSpec& g, const IntPi& ipi,
                                const std::vector<std::vector<std::size_t>>& outer,
                                std::vector<std::size_t>* witness_map) {
    const std::size_t n = g.provers;
    const std::size_t rest_tuples = pow_sz(g.questions, n - 1);
    std::int64_t total = 0;
    if (witness_map) witness_map->assign(g.questions, 0);
    std::vector<std::size_t> as(n);
    for (std::size_t qlast = 0; qlast < g.questions; ++qlast) {
        std::int64_t best = INT64_MIN;
        std::size_t best_a = 0;
        for (std::size_t alast = 0; alast < g.answers; ++alast) {
            std::int64_t acc = 0;
            for (std::size_t qr = 0; qr < rest_tuples; ++qr) {
                const std::size_t q_idx = qr * g.questions + qlast;
                const std::int64_t w = ipi.num[q_idx];
                if (w == 0) continue;
                auto qrest = decode_tuple(qr, g.questions, n - 1);
                for (std::size_t p = 0; p + 1 < n; ++p) as[p] = outer[p][qrest[p]];
                as[n - 1] = alast;
                if (g.accepts(q_idx, encode_tuple(as, g.answers))) acc += w;
            }
            if (acc > best) {
                best = acc;
                best_a = alast;
            }
        }
        total += best;
        if (witness_map) (*witness_map)[qlast] = best_a;
    }
    return total;
}

GameValueReport finish_report(const GameSpec& g, const IntPi& ipi, std::size_t best_outer) {
    const std::size_t n = g.provers;
    DeterministicStrategy s;
    s.answer.resize(n);
    std::vector<std::vector<std::size_t>> outer(n - 1);
    auto digits = decode_tuple(best_outer, g.answers, (n - 1) * g.questions);
    for (std::size_t p = 0; p + 1 < n; ++p)
        outer[p] = std::vector<std::size_t>(digits.begin() + p * g.questions,
                                            digits.begin() + (p + 1) * g.questions);
    std::vector<std::size_t> last;
    std::int64_t num = best_last_response(g, ipi, outer, &last);
    GameValueReport rep;
    rep.value = Rational(num, ipi.den);
    for (std::size_t p = 0; p + 1 < n; ++p) s.answer[p] = outer[p];
    s.answer[n - 1] = last;
    rep.witness = std::move(s);
    return rep;
}

std::size_t outer_count(const GameSpec& g, std::size_t budget) {
    const std::size_t count = pow_sz(g.answers, (g.provers - 1) * g.questions);
    if (count > budget)
        throw BudgetExceeded("classical_value: enumeration of " + std::to_string(count) +
                                 " strategy tuples exceeds budget " + std::to_string(budget),
                             count);
    return count;
}

}  // namespace

GameValueReport classical_value_serial(const GameSpec& g, std::size_t budget) {
    g.validate();
    const IntPi ipi = common_denominator(g.pi);
    if (g.provers == 1) {
        std::vector<std::vector<std::size_t>> none;
        std::vector<std::size_t> map;
        std::int64_t num = best_last_response(g, ipi, none, &map);
        GameValueReport rep;
        rep.value = Rational(num, ipi.den);
        rep.witness.answer = {map};
        return rep;
    }
    const std::size_t count = outer_count(g, budget);
    const std::size_t n = g.provers;
    std::int64_t best = INT64_MIN;
    std::size_t best_outer = 0;
    std::vector<std::vector<std::size_t>> outer(n - 1, std::vector<std::size_t>(g.questions));
    for (std::size_t s = 0; s < count; ++s) {
        auto digits = decode_tuple(s, g.answers, (n - 1) * g.questions);
        for (std::size_t p = 0; p + 1 < n; ++p)
            std::copy(digits.begin() + p * g.questions, digits.begin() + (p + 1) * g.questions,
                      outer[p].begin());
        const std::int64_t v = best_last_response(g, ipi, outer, nullptr);
        if (v > best) {
            best = v;
            best_outer = s;
        }
    }
    return finish_report(g, ipi, best_outer);
}

GameValueReport classical_value(const GameSpec& g, std::size_t budget) {
    g.validate();
    if (g.provers == 1) return classical_value_serial(g, budget);
    const IntPi ipi = common_denominator(g.pi);
    const std::size_t count = outer_count(g, budget);
    const std::size_t n = g.provers;

    std::int64_t best = INT64_MIN;
    std::size_t best_outer = 0;
#pragma omp parallel
    {
        std::int64_t local_best = INT64_MIN;
        std::size_t local_outer = 0;
        std::vector<std::vector<std::size_t>> outer(n - 1, std::vector<std::size_t>(g.questions));
#pragma omp for schedule(static)
        for (long long s = 0; s < static_cast<long long>(count); ++s) {
            auto digits = decode_tuple(static_cast<std::size_t>(s), g.answers,
                                       (n - 1) * g.questions);
            for (std::size_t p = 0; p + 1 < n; ++p)
                std::copy(digits.begin() + p * g.questions,
                          digits.begin() + (p + 1) * g.questions, outer[p].begin());
            const std::int64_t v = best_last_response(g, ipi, outer, nullptr);
            if (v > local_best ||
                (v == local_best && static_cast<std::size_t>(s) < local_outer)) {
                local_best = v;
                local_outer = static_cast<std::size_t>(s);
            }
        }
#pragma omp critical
        {
            if (local_best > best || (local_best == best && local_outer < best_outer)) {
                best = local_best;
                best_outer = local_outer;
            }
        }
    }
    return finish_report(g, ipi, best_outer);
}

GameSpec symmetrize(const GameSpec& g) {
    if (g.provers != 2) throw std::invalid_argument("symmetrize: requires N = 2");
    g.validate();
    const std::size_t Q = g.questions, A = g.answers;
    GameSpec out;
    out.provers = 2;
    out.questions = 2 * Q;
    out.answers = A;
    out.pi.assign(out.q_tuples(), Rational(0));
    out.predicate.assign(out.q_tuples() * out.a_tuples(), 0);
    const Rational half(1, 2);
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t qp = 0; qp < Q; ++qp) {
            const Rational w = g.pi[q * Q + qp] * half;
            // role 0 question q to prover 1, role 1 question q' to prover 2
            out.pi[q * out.questions + (Q + qp)] += w;
            // swapped
            out.pi[(Q + qp) * out.questions + q] += w;
        }
    for (std::size_t x = 0; x < out.questions; ++x)
        for (std::size_t y = 0; y < out.questions; ++y) {
            const bool x0 = x < Q, y0 = y < Q;
            if (x0 == y0) continue;  // same role: pi is 0, predicate stays false
            const std::size_t q = x0 ? x : y;
            const std::size_t qp = x0 ? y - Q : x - Q;
            const std::size_t base = q * Q + qp;
            for (std::size_t a = 0; a < A; ++a)
                for (std::size_t b = 0; b < A; ++b) {
                    const bool acc = x0 ? g.accepts(base, a * A + b) : g.accepts(base, b * A + a);
                    out.set_accept(x * out.questions + y, a * A + b, acc);
                }
        }
    return out;
}

std::vector<Rational> marginal(const std::vector<Rational>& pi, std::size_t questions,
                               std::size_t provers, std::size_t prover) {
    if (pi.size() != pow_sz(questions, provers)) throw std::invalid_argument("marginal: pi size");
    if (prover >= provers) throw std::invalid_argument("marginal: bad prover index");
    std::vector<Rational> m(questions, Rational(0));
    for (std::size_t q = 0; q < pi.size(); ++q)
        m[decode_tuple(q, questions, provers)[prover]] += pi[q];
    return m;
}

namespace {

// Unnormalized backward induction: node value after k completed rounds.
std::int64_t mr_node(const MultiRoundGameSpec& m, const IntPi& ipi, std::size_t k,
                     std::size_t q_idx, std::size_t a_idx, MultiRoundWitness& w) {
    if (k == m.rounds) {
        const std::int64_t p = ipi.num[q_idx];
        return (p != 0 && m.accepts(q_idx, a_idx)) ? p : 0;
    }
    std::int64_t sum = 0;
    const std::size_t apow = pow_sz(m.answers, k);
    for (std::size_t q = 0; q < m.questions; ++q) {
        const std::size_t q_next = q_idx * m.questions + q;
        std::int64_t best = INT64_MIN;
        std::size_t best_a = 0;
        for (std::size_t a = 0; a < m.answers; ++a) {
            const std::int64_t v = mr_node(m, ipi, k + 1, q_next, a_idx * m.answers + a, w);
            if (v > best) {
                best = v;
                best_a = a;
            }
        }
        w.answer[k][q_next * apow + a_idx] = best_a;
        sum += best;
    }
    return sum;
}

}  // namespace

MultiRoundValueReport multiround_value(const MultiRoundGameSpec& m, std::size_t budget) {
    m.validate();
    const std::size_t nodes = pow_sz(m.questions * m.answers, m.rounds);
    if (nodes > budget)
        throw BudgetExceeded("multiround_value: " + std::to_string(nodes) +
                                 " tree nodes exceed budget " + std::to_string(budget),
                             nodes);
    const IntPi ipi = common_denominator(m.pi);
    MultiRoundValueReport rep;
    rep.witness.answer.resize(m.rounds);
    for (std::size_t k = 0; k < m.rounds; ++k)
        rep.witness.answer[k].assign(pow_sz(m.questions, k + 1) * pow_sz(m.answers, k), 0);
    const std::int64_t num = mr_node(m, ipi, 0, 0, 0, rep.witness);
    rep.value = Rational(num, ipi.den);
    return rep;
}

Rational replay_multiround(const MultiRoundGameSpec& m, const MultiRoundWitness& w) {
    Rational v(0);
    for (std::size_t q = 0; q < m.q_tuples(); ++q) {
        if (!(m.pi[q] > Rational(0))) continue;
        const auto qs = decode_tuple(q, m.questions, m.rounds);
        std::size_t qpre = 0, apre = 0;
        for (std::size_t k = 0; k < m.rounds; ++k) {
            qpre = qpre * m.questions + qs[k];
            const std::size_t a = w.answer[k].at(qpre * pow_sz(m.answers, k) + apre);
            apre = apre * m.answers + a;
        }
        if (m.accepts(q, apre)) v += m.pi[q];
    }
    return v;
}

}  // namespace workbench
