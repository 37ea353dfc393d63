#pragma once

#include <cstdint>
#include <vector>

#include "workbench/game.hpp"
#include "workbench/linalg.hpp"

namespace workbench {

/// Shared pure state plus, per prover and question, a projective measurement
/// with one projector per answer. All provers share one local dimension.
struct EntangledStrategy {
    std::size_t provers = 0;
    std::size_t dim = 0;  // local dimension d; state lives in dim^provers
    StateVector state;
    // measurements[prover][question][answer], each dim x dim
    std::vector<std::vector<std::vector<ComplexMatrix>>> measurements;

    std::size_t questions() const { return measurements.empty() ? 0 : measurements[0].size(); }
    std::size_t answers() const {
        return questions() == 0 ? 0 : measurements[0][0].size();
    }

    /// Enforces sizes, state normalization, and the PVM invariants:
    /// sum_a W_q^a = Id within 1e-9, W_q^a W_q^a' = delta W_q^a within 1e-8.
    void validate() const;

    /// Measurement families identical across provers and state invariant
    /// under swapping the first two provers (within tol).
    bool symmetric(double tol = kEigTol) const;
};

/// Conditional answer distribution p(a-tuple | q-tuple).
struct OutcomeDistribution {
    std::size_t provers = 0, questions = 0, answers = 0;
    std::vector<double> p;  // index q_idx * A^N + a_idx

    double at(std::size_t q_idx, std::size_t a_idx) const {
        return p[q_idx * pow_sz(answers, provers) + a_idx];
    }
};

/// p(a|q) = || (W1 x ... x WN) |Psi> ||^2 for every question/answer tuple.
OutcomeDistribution outcome_distribution(const EntangledStrategy& s, const GameSpec& g);
OutcomeDistribution outcome_distribution_serial(const EntangledStrategy& s, const GameSpec& g);

/// sum_q pi(q) sum_a p(a|q) V(a|q).
double entangled_value_of(const EntangledStrategy& s, const GameSpec& g);

/// d=1 embedding: scalar state, indicator projectors reproducing s exactly.
EntangledStrategy embed_classical(const DeterministicStrategy& s, std::size_t questions,
                                  std::size_t answers);

/// Symmetrization over the first k provers: every prover gets a k-valued
/// register telling it which original prover to impersonate; the shared state
/// superposes all k! role assignments with weight 1/sqrt(k!). The output has
/// identical measurement families on the first k provers and the same value
/// on any game that is symmetric in those provers.
EntangledStrategy symmetrize_strategy(const EntangledStrategy& s, std::size_t k);

struct SeesawResult {
    EntangledStrategy strategy;
    double value = 0.0;
};

/// Alternating lower-bound search: state update = top eigenvector of the game
/// operator; measurement update = joint eigenbasis of the effective operators
/// with answers assigned by argmax, accepted only if the value improves.
/// Deterministic for fixed (seed, restarts, iters); restarts run in parallel.
SeesawResult seesaw(const GameSpec& g, std::size_t dims, std::size_t restarts,
                    std::size_t iters, std::uint64_t seed);

}  // namespace workbench
