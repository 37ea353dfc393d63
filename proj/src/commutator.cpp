#include "workbench/commutator.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace workbench {

namespace {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

// left-multiply u by an exact Givens rotation on rows (p, q)
void rotate_rows(ComplexMatrix& u, std::size_t p, std::size_t q, double theta, double phi) {
    const double c = std::cos(theta);
    const cplx s = std::polar(std::sin(theta), phi);
    for (std::size_t j = 0; j < u.cols(); ++j) {
        const cplx up = u(p, j), uq = u(q, j);
        u(p, j) = c * up - std::conj(s) * uq;
        u(q, j) = s * up + c * uq;
    }
}

// exactly unitary by construction (product of Givens rotations)
ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    ComplexMatrix u = ComplexMatrix::identity(d);
    for (std::size_t p = 0; p + 1 < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) rotate_rows(u, p, q, ang(rng), ang(rng));
    return u;
}

// small random rotation: every Givens angle drawn at the given scale
ComplexMatrix random_rotation(std::size_t d, double scale, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    std::normal_distribution<double> nrm(0.0, 1.0);
    ComplexMatrix u = ComplexMatrix::identity(d);
    for (std::size_t p = 0; p + 1 < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) rotate_rows(u, p, q, scale * nrm(rng), ang(rng));
    return u;
}

}  // namespace

CommutationProfile commutation_profile(const std::vector<Projector>& family,
                                       bool verify_entangled_overlap) {
    if (family.empty()) throw std::invalid_argument("commutation_profile: empty family");
    const std::size_t d = family[0].matrix.rows();
    for (const Projector& p : family)
        if (p.matrix.rows() != d)
            throw std::invalid_argument("commutation_profile: mixed dimensions");

    const std::size_t n = family.size();
    CommutationProfile prof;
    prof.dimension = d;
    prof.table.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double f = frobenius_norm(commutator(family[i].matrix, family[j].matrix));
            prof.table[i][j] = prof.table[j][i] = f * f / static_cast<double>(d);
            prof.epsilon_max = std::max(prof.epsilon_max, prof.table[i][j]);
        }

    if (verify_entangled_overlap) {
        // |Phi> = sum_k |kk> / sqrt(d); the overlap of two measurements on it
        // is a Frobenius inner product (transpose is a no-op for real families)
        std::vector<cplx> phi(d * d, cplx(0.0, 0.0));
        for (std::size_t k = 0; k < d; ++k) phi[k * d + k] = 1.0 / std::sqrt(double(d));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<cplx> v = apply(tensor(family[i].matrix, family[j].matrix), phi);
                const double fr = frobenius_norm(family[i].matrix * family[j].matrix.transpose());
                if (std::abs(vec_norm_sq(v) - fr * fr / static_cast<double>(d)) > 1e-9)
                    throw std::logic_error(
                        "commutation_profile: entangled-overlap identity violated");
            }
    }
    return prof;
}

CommutingApproximation nearest_commuting_family(const std::vector<Projector>& family,
                                                std::size_t sweeps) {
    if (family.empty()) throw std::invalid_argument("nearest_commuting_family: empty family");
    const std::size_t d = family[0].matrix.rows(), n = family.size();
    std::vector<ComplexMatrix> mats;
    mats.reserve(n);
    for (const Projector& p : family) {
        if (p.matrix.rows() != d)
            throw std::invalid_argument("nearest_commuting_family: mixed dimensions");
        mats.push_back(p.matrix);
    }

    const ComplexMatrix v = joint_diagonalizer(mats, sweeps);
    CommutingApproximation out;
    out.family.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix rotated = v.adjoint() * mats[i] * v;
        ComplexMatrix approx(d, d);
        // shared eigenbasis, diagonal thresholded at 1/2 (ties round down)
        for (std::size_t k = 0; k < d; ++k) {
            if (rotated(k, k).real() <= 0.5 + 1e-12) continue;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) approx(r, c) += v(r, k) * std::conj(v(c, k));
        }
        const double f = frobenius_norm(mats[i] - approx);
        out.delta = std::max(out.delta, f * f / static_cast<double>(d));
        out.family.emplace_back(std::move(approx));
    }
    return out;
}

std::vector<ScanRow> delta_vs_epsilon_scan(std::size_t n, std::size_t d, double scale,
                                           std::size_t samples, std::uint64_t seed) {
    if (n == 0 || d == 0) throw std::invalid_argument("delta_vs_epsilon_scan: empty ensemble");
    std::vector<ScanRow> rows(samples);
    const long long count = static_cast<long long>(samples);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1));
        std::uniform_int_distribution<int> bit(0, 1);
        const ComplexMatrix u = random_unitary(d, rng);
        std::vector<Projector> family;
        family.reserve(n);
        for (std::size_t m = 0; m < n; ++m) {
            // commuting base: a random binary pattern in a shared eigenbasis
            ComplexMatrix w(d, d);
            for (std::size_t k = 0; k < d; ++k) {
                if (!bit(rng)) continue;
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c) w(r, c) += u(r, k) * std::conj(u(c, k));
            }
            if (scale != 0.0) {
                const ComplexMatrix rot = random_rotation(d, scale, rng);
                w = rot * w * rot.adjoint();
            }
            family.emplace_back(std::move(w));
        }
        ScanRow row;
        row.epsilon_max = commutation_profile(family).epsilon_max;
        row.delta = nearest_commuting_family(family).delta;
        row.n = n;
        row.d = d;
        row.scale = scale;
        row.seed = seed;
        rows[static_cast<std::size_t>(i)] = row;
    }
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "epsilon_max,delta,n,d,scale,seed\n";
    char buf[160];
    for (const ScanRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%zu,%zu,%.17g,%llu\n", r.epsilon_max,
                      r.delta, r.n, r.d, r.scale,
                      static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

}  // namespace workbench
