#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "workbench/rational.hpp"

namespace workbench {

std::size_t pow_sz(std::size_t base, std::size_t exp);

/// Decode a flat index into a tuple of `n` digits in base `base`,
/// most-significant digit first.
std::vector<std::size_t> decode_tuple(std::size_t idx, std::size_t base, std::size_t n);
std::size_t encode_tuple(const std::vector<std::size_t>& t, std::size_t base);

/// Explicit N-prover one-round game G(N, pi, V).
struct GameSpec {
    std::size_t provers = 0;    // N
    std::size_t questions = 0;  // |Q| per prover
    std::size_t answers = 0;    // |A| per prover
    std::vector<Rational> pi;   // size Q^N, row-major over question tuples
    std::vector<std::uint8_t> predicate;  // size Q^N * A^N, index q_idx * A^N + a_idx

    std::size_t q_tuples() const { return pow_sz(questions, provers); }
    std::size_t a_tuples() const { return pow_sz(answers, provers); }

    bool accepts(std::size_t q_idx, std::size_t a_idx) const {
        return predicate[q_idx * a_tuples() + a_idx] != 0;
    }
    void set_accept(std::size_t q_idx, std::size_t a_idx, bool v) {
        predicate[q_idx * a_tuples() + a_idx] = v ? 1 : 0;
    }

    /// Throws if pi does not sum to exactly 1 or table sizes are wrong.
    /// Returns the question tuples with pi > 0 that have no accepting answer.
    std::vector<std::size_t> validate() const;

    bool symmetric() const;  // N=2: pi and V invariant under simultaneous swap
};

/// One-player r-round non-adaptive game G(1, pi_r, V_r).
struct MultiRoundGameSpec {
    std::size_t rounds = 0;
    std::size_t questions = 0;
    std::size_t answers = 0;
    std::vector<Rational> pi;             // size Q^r, flattened question tuples
    std::vector<std::uint8_t> predicate;  // size Q^r * A^r

    std::size_t q_tuples() const { return pow_sz(questions, rounds); }
    std::size_t a_tuples() const { return pow_sz(answers, rounds); }
    bool accepts(std::size_t q_idx, std::size_t a_idx) const {
        return predicate[q_idx * a_tuples() + a_idx] != 0;
    }
    void validate() const;
};

/// Per prover, a total map question -> answer.
struct DeterministicStrategy {
    std::vector<std::vector<std::size_t>> answer;  // [prover][question]
};

struct GameValueReport {
    Rational value;
    DeterministicStrategy witness;
};

/// Adaptive witness for a multi-round game: answer in round k may depend on
/// questions q_1..q_{k+1} and earlier answers.
struct MultiRoundWitness {
    // answer[k][qpre * A^k + apre], qpre over Q^{k+1}, apre over A^k
    std::vector<std::vector<std::size_t>> answer;
};

struct MultiRoundValueReport {
    Rational value;
    MultiRoundWitness witness;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::size_t required)
        : std::runtime_error(what), required_enumeration(required) {}
    std::size_t required_enumeration;
};

/// Exact winning probability of a deterministic strategy, in rationals.
Rational replay(const GameSpec& g, const DeterministicStrategy& s);

/// Exact maximum over deterministic strategy tuples. The innermost prover is
/// optimized per question in closed form; the remaining N-1 strategy maps are
/// enumerated, and that enumeration count is charged against the budget.
GameValueReport classical_value(const GameSpec& g, std::size_t budget = 100000000);
GameValueReport classical_value_serial(const GameSpec& g, std::size_t budget = 100000000);

/// Role-tagged symmetrization: same value, twice as many questions,
/// pi' and V' symmetric under simultaneous swap of question-answer pairs.
/// New question j encodes (role, q): j < Q is role 0, j >= Q is role 1.
GameSpec symmetrize(const GameSpec& g);

/// Exact marginal distribution of one prover's question.
std::vector<Rational> marginal(const std::vector<Rational>& pi, std::size_t questions,
                               std::size_t provers, std::size_t prover = 0);

Rational replay_multiround(const MultiRoundGameSpec& m, const MultiRoundWitness& w);

/// Exact optimum over adaptive deterministic strategies via backward
/// induction over the question tree.
MultiRoundValueReport multiround_value(const MultiRoundGameSpec& m,
                                       std::size_t budget = 100000000);

}  // namespace workbench
