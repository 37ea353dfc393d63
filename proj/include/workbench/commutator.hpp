#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "workbench/linalg.hpp"

namespace workbench {

/// Pairwise almost-commutation measurements of a projector family:
/// table[i][j] = (1/d) ||W_i W_j - W_j W_i||_F^2.
struct CommutationProfile {
    std::size_t dimension = 0;
    std::vector<std::vector<double>> table;  // symmetric, zero diagonal
    double epsilon_max = 0.0;                // largest table entry
};

/// Exact pairwise profile. With verify_entangled_overlap set, cross-checks
/// the maximally-entangled-state identity ||W (x) W' |Phi>||^2 =
/// (1/d) ||W W'||_F^2 for every pair and throws logic_error past 1e-9.
CommutationProfile commutation_profile(const std::vector<Projector>& family,
                                       bool verify_entangled_overlap = false);

/// An exactly-commuting projector family near the input, with the distance
/// it had to move.
struct CommutingApproximation {
    std::vector<Projector> family;  // pairwise commutators vanish within 1e-8
    double delta = 0.0;             // max_i (1/d) ||W_i - ~W_i||_F^2
};

/// Heuristic search: joint approximate diagonalization of the family, then
/// per-matrix thresholding of the diagonal at 1/2 in the common basis (ties
/// within 1e-12 round down). Always returns a valid commuting family; the
/// reported delta is an observation, not a proven optimum.
CommutingApproximation nearest_commuting_family(const std::vector<Projector>& family,
                                                std::size_t sweeps = 100);

/// One sample of the empirical (epsilon, delta) relationship.
struct ScanRow {
    double epsilon_max = 0.0;
    double delta = 0.0;
    std::size_t n = 0;  // family size
    std::size_t d = 0;  // dimension
    double scale = 0.0;
    std::uint64_t seed = 0;
};

/// Draws commuting families, perturbs each projector by an independent
/// rotation of the given scale, and records measured epsilon_max against the
/// delta found by nearest_commuting_family. Purely observational: emits the
/// scatter without judging whether delta stays small as epsilon shrinks.
/// Deterministic per (seed, sample index); samples run in parallel.
std::vector<ScanRow> delta_vs_epsilon_scan(std::size_t n, std::size_t d, double scale,
                                           std::size_t samples, std::uint64_t seed);

/// CSV with header epsilon_max,delta,n,d,scale,seed.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace workbench
