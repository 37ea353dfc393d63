#pragma once

#include <vector>

#include "workbench/game.hpp"
#include "workbench/strategy.hpp"

namespace workbench {

/// Swap-transformed game: with probability 1/2 the verifier plays the
/// underlying game classically (pairs drawn from pi(q,q')); with probability
/// 1/2 it sends the questions in superposition (drawn from the product of the
/// marginals) and runs a controlled-SWAP interference test on the answers.
struct SwapGameDescriptor {
    GameSpec game;                       // underlying symmetric game
    std::vector<Rational> classical_pi;  // pi(q,q'), size Q^2
    std::vector<Rational> marginal_pi;   // pi(q), size Q
    std::vector<Rational> quantum_pi;    // pi(q) pi(q'), size Q^2
};

struct SwapGameEval {
    double classical_test_prob = 0.0;
    double quantum_test_prob = 0.0;
    double total = 0.0;  // equal-weight mix of the two tests
};

/// Requires a symmetric two-prover game in which every question has positive
/// marginal probability.
SwapGameDescriptor build_swap_game(const GameSpec& g);

/// Closed-form evaluation; requires a symmetric strategy (shared measurement
/// family, exchange-symmetric state), under which the question registers
/// measure back correctly and the interference term reduces to commutators.
SwapGameEval eval_swap_game(const GameSpec& g, const EntangledStrategy& s);

/// Gate-by-gate replay of the interference test: answer isometries, the
/// controlled-SWAP on question+answer registers, a Hadamard on the control,
/// acceptance read off the final state (control "+" and matching questions).
/// No symmetry requirement; this is the reference value for the closed form.
SwapGameEval circuit_oracle_swap(const GameSpec& g, const EntangledStrategy& s,
                                 std::size_t dim_cap = (std::size_t{1} << 22));

/// Three-prover fold of a symmetric two-prover game. Questions are
/// role-tagged: j < Q plays the lone prover's question j, j >= Q plays
/// question j-Q for the two clones, whose answers must agree. The lone
/// prover's position is drawn uniformly inside the question distribution.
struct ThreeProverDescriptor {
    GameSpec base;   // the symmetric two-prover game
    GameSpec game3;  // the folded three-prover game
};

struct ThreeProverEval {
    double pi1 = 0.0;  // classical-test success of the first arrangement
    double pi2 = 0.0;  // clone-consistency, marginal-weighted
    std::vector<double> pi2_of_q;
    double acceptance = 0.0;  // overall value on the folded game
};

ThreeProverDescriptor build_three_prover_game(const GameSpec& g);

/// Requires a symmetric tripartite strategy over the role-tagged alphabet.
ThreeProverEval eval_three_prover(const ThreeProverDescriptor& t, const EntangledStrategy& s);

/// Two-prover fold of a multi-round game. The first prover receives the full
/// question tuple; the second receives a uniformly random round index k and
/// the length-k prefix, and must reproduce the first k answers.
struct MultiRoundDescriptor {
    MultiRoundGameSpec base;
    GameSpec game;  // the folded two-prover game
    // second prover's question encoding: offset[k-1] + flattened prefix
    std::vector<std::size_t> prefix_offset;  // size rounds
};

struct MultiRoundTransformEval {
    std::vector<double> pi1_of_k;  // classical-test success when k is drawn
    std::vector<double> pi2_of_k;  // prefix-consistency when k is drawn
    double total = 0.0;
};

MultiRoundDescriptor build_oneround_from_multiround(const MultiRoundGameSpec& m,
                                                    std::size_t budget = 100000000);

MultiRoundTransformEval eval_multiround_transform(const MultiRoundDescriptor& t,
                                                  const EntangledStrategy& s);

}  // namespace workbench
