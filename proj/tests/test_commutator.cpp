#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "workbench/commutator.hpp"

using namespace workbench;

namespace {

Projector diag_projector(const std::vector<double>& pattern) {
    return Projector(ComplexMatrix::diagonal(pattern));
}

// projector onto (cos t, sin t) in d=2
Projector angle_projector(double t) {
    ComplexMatrix m(2, 2);
    const double c = std::cos(t), s = std::sin(t);
    m(0, 0) = c * c;
    m(0, 1) = c * s;
    m(1, 0) = c * s;
    m(1, 1) = s * s;
    return Projector(m);
}

double max_pairwise_commutator(const std::vector<Projector>& fam) {
    double worst = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            worst = std::max(worst, frobenius_norm(fam[i].matrix * fam[j].matrix -
                                                   fam[j].matrix * fam[i].matrix));
    return worst;
}

}  // namespace

TEST_CASE("profile of a commuting diagonal family is identically zero") {
    std::vector<Projector> fam = {diag_projector({1, 1, 0, 0}), diag_projector({1, 0, 1, 0}),
                                  diag_projector({1, 1, 1, 1}),  // identity commutes with all
                                  diag_projector({0, 0, 0, 0})};
    CommutationProfile p = commutation_profile(fam, true);
    CHECK(p.dimension == 4);
    CHECK(p.epsilon_max == 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(p.table[i][j] == 0.0);
}

TEST_CASE("profile of a rotated projector pair matches the hand-expanded commutator") {
    // [P(0), P(t)] has squared Frobenius norm 2 cos^2 t sin^2 t
    for (double t : {0.2, 0.5, 3.14159265358979323846 / 4.0, 1.1}) {
        std::vector<Projector> fam = {angle_projector(0.0), angle_projector(t)};
        CommutationProfile p = commutation_profile(fam, true);
        const double expect = std::cos(t) * std::cos(t) * std::sin(t) * std::sin(t);
        CHECK(p.table[0][1] == doctest::Approx(expect).epsilon(1e-12));
        CHECK(p.table[1][0] == doctest::Approx(expect).epsilon(1e-12));
        CHECK(p.table[0][0] == 0.0);
        CHECK(p.epsilon_max == doctest::Approx(expect).epsilon(1e-12));
    }
    // the 45-degree pair in closed form: (1/2)||[W1,W2]||_F^2 = 1/4
    CommutationProfile q = commutation_profile(
        {angle_projector(0.0), angle_projector(3.14159265358979323846 / 4.0)});
    CHECK(q.epsilon_max == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("profile rejects mixed dimensions") {
    CHECK_THROWS_AS(
        commutation_profile({diag_projector({1, 0}), diag_projector({1, 0, 0})}),
        std::invalid_argument);
}

TEST_CASE("nearest commuting family is a fixed point on commuting input") {
    std::vector<Projector> fam = {diag_projector({1, 1, 0, 0}), diag_projector({1, 0, 1, 0})};
    CommutingApproximation a = nearest_commuting_family(fam);
    CHECK(a.delta <= 1e-9);
    CHECK(max_pairwise_commutator(a.family) <= 1e-8);
    for (std::size_t i = 0; i < fam.size(); ++i)
        CHECK(ComplexMatrix::max_abs_diff(a.family[i].matrix, fam[i].matrix) <= 1e-8);
}

TEST_CASE("nearest commuting family always outputs exact commutation") {
    std::mt19937_64 rng(91);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        // three loosely related projectors in d=4 from random eigenbases
        std::vector<Projector> fam;
        for (int m = 0; m < 3; ++m) {
            ComplexMatrix h(4, 4);
            for (auto& v : h.data()) v = cplx(g(rng), g(rng));
            h = 0.5 * (h + h.adjoint());
            ComplexMatrix u = hermitian_eig(h).vectors;
            ComplexMatrix w(4, 4);
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t r = 0; r < 4; ++r)
                    for (std::size_t c = 0; c < 4; ++c) w(r, c) += u(r, k) * std::conj(u(c, k));
            fam.emplace_back(std::move(w), 1e-6);
        }
        CommutingApproximation a = nearest_commuting_family(fam);
        CHECK(max_pairwise_commutator(a.family) <= 1e-8);
        for (const Projector& p : a.family) CHECK(is_projector_matrix(p.matrix, 1e-8));
        // idempotent: the output is its own nearest commuting family
        CHECK(nearest_commuting_family(a.family).delta <= 1e-9);
    }
}

TEST_CASE("small rotations give small profile entries and small recovered delta") {
    // scan over rotation angles of a d=2 pair; report-only, no conjecture claim
    for (double t : {0.01, 0.05, 0.1, 0.2}) {
        std::vector<Projector> fam = {angle_projector(0.0), angle_projector(t)};
        CommutationProfile p = commutation_profile(fam);
        CommutingApproximation a = nearest_commuting_family(fam);
        CHECK(max_pairwise_commutator(a.family) <= 1e-8);
        // the pair is within t of an exactly-commuting pair, so delta = O(t^2)
        CHECK(a.delta <= 4.0 * t * t + 1e-9);
        CHECK(p.epsilon_max <= t * t + 1e-9);
    }
}

TEST_CASE("scan: zero perturbation scale gives all-zero columns") {
    std::vector<ScanRow> rows = delta_vs_epsilon_scan(3, 4, 0.0, 8, 17);
    REQUIRE(rows.size() == 8);
    for (const ScanRow& r : rows) {
        CHECK(r.epsilon_max <= 1e-12);
        CHECK(r.delta <= 1e-12);
        CHECK(r.n == 3);
        CHECK(r.d == 4);
        CHECK(r.seed == 17);
    }
}

TEST_CASE("scan: deterministic per seed and nonzero under perturbation") {
    std::vector<ScanRow> a = delta_vs_epsilon_scan(2, 3, 0.05, 6, 23);
    std::vector<ScanRow> b = delta_vs_epsilon_scan(2, 3, 0.05, 6, 23);
    REQUIRE(a.size() == 6);
    double eps_total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].epsilon_max == b[i].epsilon_max);
        CHECK(a[i].delta == b[i].delta);
        CHECK(a[i].epsilon_max >= 0.0);
        CHECK(a[i].delta >= 0.0);
        eps_total += a[i].epsilon_max;
    }
    CHECK(eps_total > 0.0);
    CHECK(scan_csv(a) == scan_csv(b));
    CHECK(scan_csv(a).rfind("epsilon_max,delta,n,d,scale,seed\n", 0) == 0);
}
