#include "workbench/json_io.hpp"

#include <stdexcept>

namespace workbench {

namespace {

using nlohmann::json;

json pi_to_json(const std::vector<Rational>& pi) {
    json out = json::array();
    for (const Rational& r : pi) out.push_back(r.str());
    return out;
}

std::vector<Rational> pi_from_json(const json& j, std::size_t expect) {
    if (!j.is_array() || j.size() != expect)
        throw std::invalid_argument("game json: pi must list " + std::to_string(expect) +
                                    " entries");
    std::vector<Rational> pi;
    pi.reserve(expect);
    for (const json& v : j) pi.push_back(Rational::parse(v.get<std::string>()));
    return pi;
}

json predicate_to_json(const std::vector<std::uint8_t>& pred, std::size_t q_tuples,
                       std::size_t questions, std::size_t answers, std::size_t slots) {
    json out = json::array();
    const std::size_t a_tuples = pred.size() / q_tuples;
    for (std::size_t qi = 0; qi < q_tuples; ++qi)
        for (std::size_t ai = 0; ai < a_tuples; ++ai)
            if (pred[qi * a_tuples + ai])
                out.push_back(json::array(
                    {decode_tuple(qi, questions, slots), decode_tuple(ai, answers, slots)}));
    return out;
}

std::vector<std::uint8_t> predicate_from_json(const json& j, std::size_t q_tuples,
                                              std::size_t a_tuples, std::size_t questions,
                                              std::size_t answers, std::size_t slots) {
    std::vector<std::uint8_t> pred(q_tuples * a_tuples, 0);
    if (!j.is_array()) throw std::invalid_argument("game json: predicate must be an array");
    for (const json& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("game json: predicate entries are [qs, as] pairs");
        const auto qs = pair[0].get<std::vector<std::size_t>>();
        const auto as = pair[1].get<std::vector<std::size_t>>();
        if (qs.size() != slots || as.size() != slots)
            throw std::invalid_argument("game json: predicate tuple length mismatch");
        for (std::size_t q : qs)
            if (q >= questions) throw std::invalid_argument("game json: question out of range");
        for (std::size_t a : as)
            if (a >= answers) throw std::invalid_argument("game json: answer out of range");
        pred[encode_tuple(qs, questions) * a_tuples + encode_tuple(as, answers)] = 1;
    }
    return pred;
}

json matrix_to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (const cplx& v : m.data()) {
        out.push_back(v.real());
        out.push_back(v.imag());
    }
    return out;
}

ComplexMatrix matrix_from_json(const json& j, std::size_t d) {
    if (!j.is_array() || j.size() != 2 * d * d)
        throw std::invalid_argument("strategy json: matrix must have " +
                                    std::to_string(2 * d * d) + " re/im entries");
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d * d; ++i)
        m.data()[i] = cplx(j[2 * i].get<double>(), j[2 * i + 1].get<double>());
    return m;
}

}  // namespace

json to_json(const GameSpec& g) {
    return json{{"provers", g.provers},
                {"questions", g.questions},
                {"answers", g.answers},
                {"pi", pi_to_json(g.pi)},
                {"predicate",
                 predicate_to_json(g.predicate, g.q_tuples(), g.questions, g.answers,
                                   g.provers)}};
}

GameSpec game_from_json(const json& j) {
    GameSpec g;
    g.provers = j.at("provers").get<std::size_t>();
    g.questions = j.at("questions").get<std::size_t>();
    g.answers = j.at("answers").get<std::size_t>();
    g.pi = pi_from_json(j.at("pi"), g.q_tuples());
    g.predicate = predicate_from_json(j.at("predicate"), g.q_tuples(), g.a_tuples(),
                                      g.questions, g.answers, g.provers);
    g.validate();
    return g;
}

json to_json(const MultiRoundGameSpec& m) {
    return json{{"rounds", m.rounds},
                {"questions", m.questions},
                {"answers", m.answers},
                {"pi", pi_to_json(m.pi)},
                {"predicate",
                 predicate_to_json(m.predicate, m.q_tuples(), m.questions, m.answers,
                                   m.rounds)}};
}

MultiRoundGameSpec multiround_from_json(const json& j) {
    MultiRoundGameSpec m;
    m.rounds = j.at("rounds").get<std::size_t>();
    m.questions = j.at("questions").get<std::size_t>();
    m.answers = j.at("answers").get<std::size_t>();
    m.pi = pi_from_json(j.at("pi"), m.q_tuples());
    m.predicate = predicate_from_json(j.at("predicate"), m.q_tuples(), m.a_tuples(),
                                      m.questions, m.answers, m.rounds);
    m.validate();
    return m;
}

json to_json(const EntangledStrategy& s) {
    json state = json::array();
    for (const cplx& v : s.state.amplitudes) {
        state.push_back(v.real());
        state.push_back(v.imag());
    }
    json meas = json::array();
    for (const auto& per_prover : s.measurements) {
        json jq = json::array();
        for (const auto& per_question : per_prover) {
            json ja = json::array();
            for (const ComplexMatrix& m : per_question) ja.push_back(matrix_to_json(m));
            jq.push_back(std::move(ja));
        }
        meas.push_back(std::move(jq));
    }
    return json{{"dims", std::vector<std::size_t>(s.provers, s.dim)},
                {"state", std::move(state)},
                {"measurements", std::move(meas)}};
}

EntangledStrategy strategy_from_json(const json& j) {
    EntangledStrategy s;
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.empty()) throw std::invalid_argument("strategy json: dims empty");
    for (std::size_t d : dims)
        if (d != dims[0])
            throw std::invalid_argument("strategy json: all provers share one dimension");
    s.provers = dims.size();
    s.dim = dims[0];

    const json& jst = j.at("state");
    const std::size_t full = pow_sz(s.dim, s.provers);
    if (!jst.is_array() || jst.size() != 2 * full)
        throw std::invalid_argument("strategy json: state must have " +
                                    std::to_string(2 * full) + " re/im entries");
    std::vector<cplx> amps(full);
    for (std::size_t i = 0; i < full; ++i)
        amps[i] = cplx(jst[2 * i].get<double>(), jst[2 * i + 1].get<double>());
    s.state = StateVector(std::move(amps));

    const json& jm = j.at("measurements");
    if (!jm.is_array() || jm.size() != s.provers)
        throw std::invalid_argument("strategy json: one measurement family per prover");
    s.measurements.resize(s.provers);
    for (std::size_t p = 0; p < s.provers; ++p) {
        for (const json& jq : jm[p]) {
            std::vector<ComplexMatrix> fam;
            for (const json& ja : jq) fam.push_back(matrix_from_json(ja, s.dim));
            s.measurements[p].push_back(std::move(fam));
        }
    }
    s.validate();
    return s;
}

json to_json(const SwapGameDescriptor& d) {
    return json{{"game", to_json(d.game)},
                {"classical_pi", pi_to_json(d.classical_pi)},
                {"marginal_pi", pi_to_json(d.marginal_pi)},
                {"quantum_pi", pi_to_json(d.quantum_pi)}};
}

SwapGameDescriptor swap_descriptor_from_json(const json& j) {
    SwapGameDescriptor d;
    d.game = game_from_json(j.at("game"));
    d.classical_pi = pi_from_json(j.at("classical_pi"), d.game.q_tuples());
    d.marginal_pi = pi_from_json(j.at("marginal_pi"), d.game.questions);
    d.quantum_pi = pi_from_json(j.at("quantum_pi"), d.game.q_tuples());
    return d;
}

json to_json(const ThreeProverDescriptor& d) {
    return json{{"base", to_json(d.base)}, {"game3", to_json(d.game3)}};
}

ThreeProverDescriptor three_prover_descriptor_from_json(const json& j) {
    return ThreeProverDescriptor{game_from_json(j.at("base")), game_from_json(j.at("game3"))};
}

json to_json(const MultiRoundDescriptor& d) {
    return json{{"base", to_json(d.base)},
                {"game", to_json(d.game)},
                {"prefix_offset", d.prefix_offset}};
}

MultiRoundDescriptor multiround_descriptor_from_json(const json& j) {
    MultiRoundDescriptor d;
    d.base = multiround_from_json(j.at("base"));
    d.game = game_from_json(j.at("game"));
    d.prefix_offset = j.at("prefix_offset").get<std::vector<std::size_t>>();
    if (d.prefix_offset.size() != d.base.rounds)
        throw std::invalid_argument("descriptor json: prefix_offset length mismatch");
    return d;
}

json to_json(const BoundCertificate& c, std::uint64_t seed) {
    return json{{"lemma", to_string(c.lemma)}, {"detail", c.detail}, {"epsilon", c.epsilon},
                {"lhs", c.lhs},               {"rhs", c.rhs},       {"holds", c.holds},
                {"seed", seed}};
}

}  // namespace workbench
