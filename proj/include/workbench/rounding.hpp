#pragma once

#include <string>
#include <vector>

#include "workbench/game.hpp"
#include "workbench/immunizer.hpp"
#include "workbench/strategy.hpp"

namespace workbench {

// Certificates hold when lhs <= rhs + kCertSlack.
inline constexpr double kCertSlack = 1e-8;

/// Joint distribution over full answer lists obtained by measuring one share
/// of the state with every question's projector family in sequence, heaviest
/// question first (ties broken by ascending question index). In the bilateral
/// form two shares are measured, producing a pair of lists.
struct SequentialDistribution {
    std::vector<std::size_t> question_order;  // question ids, non-increasing weight
    std::size_t answers = 0;
    bool bilateral = false;
    // size A^n; entry at encode_tuple(list) where list[i] answers
    // question_order[i]. Bilateral: size A^2n, index list_idx * A^n + list_idx'.
    std::vector<double> table;

    std::size_t lists() const { return pow_sz(answers, question_order.size()); }
    /// Sums to 1 within 1e-8, no entry below -1e-12.
    void validate() const;
};

enum class LemmaId {
    SwapCommute1,      // interference-test commutator mass <= 24 eps
    SwapCommute2,      // one-sided displacement mass <= 216 eps
    SwapDelta,         // Delta(p_class, p_q) <= 70 |Q| eps^{1/4}
    Gentle,            // near-certain measurements disturb little
    ThreeProverDelta,  // Delta(p_class, p_q) <= 12 |Q| sqrt(eps)
    MultiRoundDelta,   // Delta(p_class, p_q) <= 7 r sqrt(eps)
};

const char* to_string(LemmaId id);

/// One machine-checked inequality: both sides evaluated from first principles
/// on a concrete strategy. A failing certificate signals an implementation
/// bug, since every certified inequality is a theorem.
struct BoundCertificate {
    LemmaId lemma = LemmaId::Gentle;
    std::string detail;  // which instance of the inequality
    double epsilon = 0.0;  // measured as 1 - overall acceptance
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;  // lhs <= rhs + kCertSlack
};

/// D(a_1..a_n) = ||(W_{q_n}^{a_n} ... W_{q_1}^{a_1} (x) Id)|Psi>||^2 for a
/// two-prover strategy, questions ordered by non-increasing pi. When the
/// strategy's measurement index differs from the question id (e.g. role-tagged
/// alphabets), measurement_ids[q] supplies the index; empty means identity.
SequentialDistribution sequential_distribution(const EntangledStrategy& s,
                                               const std::vector<Rational>& pi,
                                               const std::vector<std::size_t>& measurement_ids = {});

/// Bilateral variant for a symmetric tripartite strategy: the first two
/// shares are each measured through the whole sequence, the third is traced
/// out. D(list, list') = ||seq (x) seq' (x) Id |Psi>||^2.
SequentialDistribution sequential_distribution_bilateral(
    const EntangledStrategy& s, const std::vector<Rational>& pi,
    const std::vector<std::size_t>& measurement_ids = {});

/// Pairwise conditional marginals p(a,a'|q,q') of answering from one sampled
/// list (unilateral) or from the two lists of a sampled pair (bilateral).
OutcomeDistribution pair_marginals(const SequentialDistribution& d);

/// Value of the shared-randomness classical strategy that samples a list from
/// D and answers each question from it.
double rounded_value(const GameSpec& g, const SequentialDistribution& d);

/// sum_q pi(q-tuple) sum_a |p1(a|q) - p2(a|q)|.
double statistical_distance(const OutcomeDistribution& p1, const OutcomeDistribution& p2,
                            const std::vector<Rational>& pi);

/// Certificates for a symmetric strategy played through the swap transform,
/// with eps = 1 - eval.total:
///   [0] pairwise commutator mass over the product question distribution <= 24 eps
///   [1] one-sided displacement mass <= 216 eps
///   [2] Delta(p_class, p_q) <= 70 |Q| eps^{1/4}
std::vector<BoundCertificate> certify_swap(const GameSpec& g, const EntangledStrategy& s,
                                           const SwapGameEval& eval);

/// Certificates for a symmetric tripartite strategy on the three-prover fold,
/// with eps = 1 - eval.acceptance:
///   per question q: ||(M_q (x) Id)(rho_AB) - rho_AB||_1 <= 6 sqrt(1 - pi2(q))
///   per ordered pair (i,j): hybrid disturbance of the first i-1 / j-1
///     measurement rounds <= 6 (sum_{i'<i} + sum_{j'<j}) sqrt(1 - pi2(q'))
///   Delta(p_class, p_q) <= 12 |Q| sqrt(eps)
std::vector<BoundCertificate> certify_three_prover(const ThreeProverDescriptor& t,
                                                   const EntangledStrategy& s,
                                                   const ThreeProverEval& eval);

/// Classical strategy extracted from a strategy for the folded multi-round
/// game: the prover sequentially applies the second prover's prefix
/// measurements, answering from the measured transcript and aborting (losing)
/// whenever a later measurement contradicts an answer already given.
struct MultiRoundRounding {
    // p_class[q_idx][a_idx] over Q^r question tuples and A^r answer tuples
    std::vector<std::vector<double>> p_class;
    std::vector<double> abort_mass;  // per question tuple; 1 - sum_a p_class
    double value = 0.0;              // sum pi_r sum p_class * V_r
};

MultiRoundRounding round_multiround(const MultiRoundDescriptor& t, const EntangledStrategy& s);

/// Certificates for the multi-round fold, with eps = 1 - eval.total. Per
/// round index k, three prefix-consistency disturbance bounds
/// (3 sqrt(1-pi2(k)), 3 sqrt(1-pi2(k)), and the prefix-refinement trace
/// difference <= 1-pi2(k)), then the final
/// Delta(p_class, p_q at k=r) <= 7 r sqrt(eps).
std::vector<BoundCertificate> certify_multiround(const MultiRoundDescriptor& t,
                                                 const EntangledStrategy& s,
                                                 const MultiRoundTransformEval& eval);

}  // namespace workbench
