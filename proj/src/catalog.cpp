#include "workbench/catalog.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace workbench {

namespace {

std::vector<ComplexMatrix> binary_pvm(const ComplexMatrix& observable) {
    ComplexMatrix id = ComplexMatrix::identity(observable.rows());
    return {0.5 * (id + observable), 0.5 * (id - observable)};
}

}  // namespace

CatalogEntry chsh() {
    GameSpec g;
    g.provers = 2;
    g.questions = 2;
    g.answers = 2;
    g.pi.assign(4, Rational(1, 4));
    g.predicate.assign(16, 0);
    for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t qp = 0; qp < 2; ++qp)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    g.set_accept(q * 2 + qp, a * 2 + b, ((a ^ b) == (q & qp)));

    ComplexMatrix z = ComplexMatrix::diagonal({1.0, -1.0});
    ComplexMatrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    EntangledStrategy s;
    s.provers = 2;
    s.dim = 2;
    s.state = StateVector({r, 0.0, 0.0, r});
    s.measurements = {{binary_pvm(z), binary_pvm(x)},
                      {binary_pvm(r * (z + x)), binary_pvm(r * (z - x))}};

    CatalogEntry e;
    e.name = "chsh";
    e.game = std::move(g);
    e.classical_strategy = DeterministicStrategy{{{0, 0}, {0, 0}}};
    e.entangled_strategy = std::move(s);
    e.documented_classical_value = Rational(3, 4);
    e.documented_entangled_value = std::cos(M_PI / 8.0) * std::cos(M_PI / 8.0);
    return e;
}

CatalogEntry magic_square() {
    // questions 0..2 are rows, 3..5 are columns; answer bit t is the cell at
    // position t along the line (rows run over columns and vice versa)
    auto is_row = [](std::size_t q) { return q < 3; };
    auto bit = [](std::size_t a, std::size_t t) { return (a >> t) & 1u; };
    auto parity_ok = [&](std::size_t q, std::size_t a) {
        return (std::popcount(static_cast<unsigned>(a)) % 2u) == (is_row(q) ? 0u : 1u);
    };

    GameSpec g;
    g.provers = 2;
    g.questions = 6;
    g.answers = 8;
    g.pi.assign(36, Rational(1, 36));
    g.predicate.assign(36 * 64, 0);
    for (std::size_t q = 0; q < 6; ++q)
        for (std::size_t qp = 0; qp < 6; ++qp)
            for (std::size_t a = 0; a < 8; ++a)
                for (std::size_t ap = 0; ap < 8; ++ap) {
                    bool ok = parity_ok(q, a) && parity_ok(qp, ap);
                    if (ok && q == qp) ok = (a == ap);
                    if (ok && is_row(q) != is_row(qp)) {
                        const std::size_t row_a = is_row(q) ? a : ap;
                        const std::size_t col_a = is_row(q) ? ap : a;
                        const std::size_t i = is_row(q) ? q : qp;      // row index
                        const std::size_t j = (is_row(q) ? qp : q) - 3;  // column index
                        ok = (bit(row_a, j) == bit(col_a, i));
                    }
                    g.set_accept(q * 6 + qp, a * 8 + ap, ok);
                }

    // near-consistent grid: all-zero rows except row 2 = (0,1,1); column 0
    // fixes its parity by flipping cell (0,0), the only intersection mismatch
    DeterministicStrategy det{{{0, 0, 6, 1, 4, 4}, {0, 0, 6, 1, 4, 4}}};

    // grid of pairwise-commuting-within-lines observables on two qubits:
    // rows multiply to +Id, columns to -Id
    ComplexMatrix id2 = ComplexMatrix::identity(2);
    ComplexMatrix z = ComplexMatrix::diagonal({1.0, -1.0});
    ComplexMatrix x(2, 2), y(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    y(0, 1) = cplx(0.0, -1.0);
    y(1, 0) = cplx(0.0, 1.0);
    ComplexMatrix obs[3][3] = {
        {tensor(z, id2), tensor(id2, z), tensor(z, z)},
        {tensor(id2, x), tensor(x, id2), tensor(x, x)},
        {cplx(-1.0) * tensor(z, x), cplx(-1.0) * tensor(x, z), tensor(y, y)}};

    EntangledStrategy s;
    s.provers = 2;
    s.dim = 4;
    std::vector<cplx> amps(16, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < 4; ++i) amps[i * 4 + i] = 0.5;
    s.state = StateVector(std::move(amps));
    ComplexMatrix id4 = ComplexMatrix::identity(4);
    std::vector<std::vector<ComplexMatrix>> family(6);
    for (std::size_t q = 0; q < 6; ++q) {
        family[q].resize(8);
        for (std::size_t a = 0; a < 8; ++a) {
            ComplexMatrix p = id4;
            for (std::size_t t = 0; t < 3; ++t) {
                const ComplexMatrix& o = is_row(q) ? obs[q][t] : obs[t][q - 3];
                const double sign = bit(a, t) ? -1.0 : 1.0;
                p = p * (0.5 * (id4 + sign * o));
            }
            family[q][a] = 0.5 * (p + p.adjoint());
        }
    }
    s.measurements = {family, family};

    CatalogEntry e;
    e.name = "magic_square";
    e.game = std::move(g);
    e.classical_strategy = std::move(det);
    e.entangled_strategy = std::move(s);
    e.documented_classical_value = Rational(17, 18);
    e.documented_entangled_value = 1.0;
    return e;
}

CatalogEntry odd_cycle(std::size_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd_cycle: n must be odd and >= 3");
    GameSpec g;
    g.provers = 2;
    g.questions = n;
    g.answers = 2;
    g.pi.assign(n * n, Rational(0));
    g.predicate.assign(n * n * 4, 0);
    const Rational w(1, static_cast<std::int64_t>(2 * n));
    for (std::size_t v = 0; v < n; ++v) {
        g.pi[v * n + v] = w;
        g.pi[v * n + (v + 1) % n] = w;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                g.set_accept(v * n + v, a * 2 + b, a == b);
                g.set_accept(v * n + (v + 1) % n, a * 2 + b, a != b);
            }
    }
    CatalogEntry e;
    e.name = "odd_cycle_" + std::to_string(n);
    e.game = std::move(g);
    // alternate colors around the cycle; the wrap-around edge is the one loss
    DeterministicStrategy det;
    det.answer.assign(2, std::vector<std::size_t>(n));
    for (std::size_t v = 0; v < n; ++v) det.answer[0][v] = det.answer[1][v] = v % 2;
    e.classical_strategy = std::move(det);
    e.documented_classical_value =
        Rational(static_cast<std::int64_t>(2 * n - 1), static_cast<std::int64_t>(2 * n));
    return e;
}

CatalogEntry toy_multiround(std::size_t r) {
    if (r < 1 || r > 4) throw std::invalid_argument("toy_multiround: r must be in 1..4");
    MultiRoundGameSpec m;
    m.rounds = r;
    m.questions = 2;
    m.answers = 2;
    m.pi.assign(m.q_tuples(), Rational(1, static_cast<std::int64_t>(m.q_tuples())));
    m.predicate.assign(m.q_tuples() * m.a_tuples(), 0);
    for (std::size_t q = 0; q < m.q_tuples(); ++q) {
        const auto qs = decode_tuple(q, 2, r);
        for (std::size_t a = 0; a < m.a_tuples(); ++a) {
            const auto as = decode_tuple(a, 2, r);
            bool ok = true;
            for (std::size_t k = 0; k < r && ok; ++k)
                ok = (as[k] == qs[std::min(k + 1, r - 1)]);
            m.predicate[q * m.a_tuples() + a] = ok ? 1 : 0;
        }
    }
    CatalogEntry e;
    e.name = "toy_multiround_" + std::to_string(r);
    e.documented_classical_value = multiround_value(m).value;
    e.multiround = std::move(m);
    return e;
}

std::vector<std::string> catalog_names() {
    return {"chsh",           "magic_square",     "odd_cycle_3",      "odd_cycle_5",
            "toy_multiround_1", "toy_multiround_2", "toy_multiround_3"};
}

CatalogEntry catalog_get(const std::string& name) {
    if (name == "chsh") return chsh();
    if (name == "magic_square") return magic_square();
    const std::string oc = "odd_cycle_", tm = "toy_multiround_";
    if (name.rfind(oc, 0) == 0) return odd_cycle(std::stoul(name.substr(oc.size())));
    if (name.rfind(tm, 0) == 0) return toy_multiround(std::stoul(name.substr(tm.size())));
    throw std::invalid_argument("catalog: unknown entry '" + name + "'");
}

}  // namespace workbench
