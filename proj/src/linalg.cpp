#include "workbench/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace workbench {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.a_.size(); ++k) m = std::max(m, std::abs(a.a_[k] - b.a_[k]));
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    ComplexMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    ComplexMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    ComplexMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (cplx& v : c.a_) v *= s;
    return c;
}

StateVector::StateVector(std::vector<cplx> amps) : dim(amps.size()), amplitudes(std::move(amps)) {
    if (std::abs(norm() - 1.0) > kStructTol)
        throw std::invalid_argument("StateVector: not normalized");
}

double StateVector::norm() const { return std::sqrt(vec_norm_sq(amplitudes)); }

ComplexMatrix StateVector::density_matrix() const {
    ComplexMatrix rho(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rho(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return rho;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.square()) return false;
    return ComplexMatrix::max_abs_diff(a, a.adjoint()) <= tol;
}

bool is_projector_matrix(const ComplexMatrix& a, double tol) {
    if (!is_hermitian(a, tol)) return false;
    return ComplexMatrix::max_abs_diff(a * a, a) <= tol;
}

Projector::Projector(ComplexMatrix m, double tol) : matrix(std::move(m)) {
    if (!matrix.square()) throw std::invalid_argument("Projector: matrix not square");
    if (!is_hermitian(matrix, tol)) throw std::invalid_argument("Projector: not Hermitian");
    if (ComplexMatrix::max_abs_diff(matrix * matrix, matrix) > tol)
        throw std::invalid_argument("Projector: not idempotent");
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

std::vector<cplx> tensor(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
    return c;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

double trace_norm(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("trace_norm: matrix not square");
    const std::size_t n = a.rows();
    // Hermitian dilation [[0, A], [A^dag, 0]] has eigenvalues +-sigma_i.
    ComplexMatrix h(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            h(i, n + j) = a(i, j);
            h(n + j, i) = std::conj(a(i, j));
        }
    EigenDecomposition e = hermitian_eig(h);
    double s = 0.0;
    for (double v : e.values) s += std::abs(v);
    return 0.5 * s;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (!is_hermitian(a, kStructTol * std::max(1.0, a.max_abs())))
        throw std::invalid_argument("hermitian_eig: matrix not Hermitian");
    const std::size_t n = a.rows();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(w(i, j));
        return std::sqrt(2.0 * s);
    };

    const double scale = std::max(1.0, frobenius_norm(a));
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-13 * scale; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = w(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx u = apq / mag;  // phase of the pivot
                const double app = w(p, p).real();
                const double aqq = w(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const cplx su = s * u;
                const cplx sub = s * std::conj(u);
                // right-multiply by J
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx wkp = w(k, p), wkq = w(k, q);
                    w(k, p) = c * wkp - sub * wkq;
                    w(k, q) = su * wkp + c * wkq;
                }
                // left-multiply by J^dag
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx wpk = w(p, k), wqk = w(q, k);
                    w(p, k) = c * wpk - su * wqk;
                    w(q, k) = sub * wpk + c * wqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sub * vkq;
                    v(k, q) = su * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = w(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix joint_diagonalizer(const std::vector<ComplexMatrix>& mats,
                                 std::size_t max_sweeps) {
    if (mats.empty()) throw std::invalid_argument("joint_diagonalizer: empty family");
    const std::size_t n = mats.front().rows();
    for (const ComplexMatrix& m : mats)
        if (!m.square() || m.rows() != n)
            throw std::invalid_argument("joint_diagonalizer: dimension mismatch");
        else if (!is_hermitian(m, kStructTol * std::max(1.0, m.max_abs())))
            throw std::invalid_argument("joint_diagonalizer: matrix not Hermitian");

    std::vector<ComplexMatrix> w = mats;
    ComplexMatrix v = ComplexMatrix::identity(n);

    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double largest = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                // Cardoso-Souloumiac pair update: the optimal plane rotation
                // comes from the top eigenvector of a 3x3 Gram matrix of
                // (a_pp - a_qq, 2 Re a_pq, 2 Im a_pq) across the family.
                ComplexMatrix g(3, 3);
                for (const ComplexMatrix& a : w) {
                    const double h0 = (a(p, p) - a(q, q)).real();
                    const double h1 = 2.0 * a(p, q).real();
                    const double h2 = 2.0 * a(p, q).imag();
                    const double h[3] = {h0, h1, h2};
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) g(i, j) += h[i] * h[j];
                }
                EigenDecomposition eg = hermitian_eig(g);
                double x = eg.vectors(0, 2).real();
                double y = eg.vectors(1, 2).real();
                double z = eg.vectors(2, 2).real();
                if (x < 0.0) { x = -x; y = -y; z = -z; }
                const double r = std::sqrt(x * x + y * y + z * z);
                if (r <= 1e-300) continue;
                const double c = std::sqrt((x + r) / (2.0 * r));
                if (c <= 1e-300) continue;
                const cplx s = cplx(y, -z) / (2.0 * r * c);
                if (std::abs(s) <= 1e-13) continue;
                largest = std::max(largest, std::abs(s));
                // A <- R^dag A R, R(p,p)=c, R(p,q)=-conj(s), R(q,p)=s, R(q,q)=c
                for (ComplexMatrix& a : w) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx akp = a(k, p), akq = a(k, q);
                        a(k, p) = c * akp + s * akq;
                        a(k, q) = -std::conj(s) * akp + c * akq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx apk = a(p, k), aqk = a(q, k);
                        a(p, k) = c * apk + std::conj(s) * aqk;
                        a(q, k) = -s * apk + c * aqk;
                    }
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * vkq;
                    v(k, q) = -std::conj(s) * vkp + c * vkq;
                }
            }
        if (largest <= 1e-13) break;
    }
    return v;
}

ComplexMatrix partial_trace(const ComplexMatrix& dm, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (!dm.square() || dm.rows() != total)
        throw std::invalid_argument("partial_trace: dimension mismatch");
    for (std::size_t k : keep)
        if (k >= dims.size()) throw std::invalid_argument("partial_trace: bad subsystem index");

    std::vector<bool> kept(dims.size(), false);
    for (std::size_t k : keep) kept[k] = true;

    std::size_t dk = 1, dt = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) (kept[i] ? dk : dt) *= dims[i];

    // strides of each subsystem in the flat index
    std::vector<std::size_t> stride(dims.size());
    {
        std::size_t s = 1;
        for (std::size_t i = dims.size(); i-- > 0;) {
            stride[i] = s;
            s *= dims[i];
        }
    }

    // enumerate kept / traced multi-indices
    auto enumerate = [&](bool want_kept) {
        std::vector<std::size_t> offsets{0};
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (kept[i] != want_kept) continue;
            std::vector<std::size_t> next;
            next.reserve(offsets.size() * dims[i]);
            for (std::size_t o : offsets)
                for (std::size_t x = 0; x < dims[i]; ++x) next.push_back(o + x * stride[i]);
            offsets = std::move(next);
        }
        return offsets;
    };
    const std::vector<std::size_t> kept_off = enumerate(true);
    const std::vector<std::size_t> traced_off = enumerate(false);

    ComplexMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cplx s = 0.0;
            for (std::size_t t : traced_off) s += dm(kept_off[i] + t, kept_off[j] + t);
            out(i, j) = s;
        }
    return out;
}

Projector nearest_projector(const ComplexMatrix& h) {
    if (!is_hermitian(h, kStructTol * std::max(1.0, h.max_abs())))
        throw std::invalid_argument("nearest_projector: input not Hermitian");
    EigenDecomposition e = hermitian_eig(h);
    const std::size_t n = h.rows();
    ComplexMatrix p(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (e.values[k] <= 0.5 + 1e-12) continue;  // ties round down
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = e.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) p(i, j) += vik * std::conj(e.vectors(j, k));
        }
    }
    // symmetrize away eigensolver residual
    p = 0.5 * (p + p.adjoint());
    return Projector(std::move(p));
}

GentleMeasurementResult gentle_measurement_bound(const ComplexMatrix& rho,
                                                 const ComplexMatrix& x) {
    if (!rho.square() || !x.square() || rho.rows() != x.rows())
        throw std::invalid_argument("gentle_measurement_bound: dimension mismatch");
    if (!is_hermitian(rho, 1e-8) || std::abs(rho.trace().real() - 1.0) > 1e-8)
        throw std::invalid_argument("gentle_measurement_bound: rho is not a density matrix");
    EigenDecomposition ex = hermitian_eig(x);
    for (double v : ex.values)
        if (v < -kStructTol || v > 1.0 + kStructTol)
            throw std::invalid_argument("gentle_measurement_bound: X not within [0, Id]");

    const std::size_t n = x.rows();
    ComplexMatrix sqrtx(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sqrt(std::clamp(ex.values[k], 0.0, 1.0));
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = ex.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) sqrtx(i, j) += s * vik * std::conj(ex.vectors(j, k));
        }
    }
    GentleMeasurementResult r;
    r.distance = trace_norm(rho - sqrtx * rho * sqrtx);
    r.bound = 3.0 * std::sqrt(std::max(0.0, 1.0 - (x * rho).trace().real()));
    if (r.distance > r.bound + kEigTol)
        throw std::logic_error("gentle_measurement_bound: lemma violated (implementation bug)");
    return r;
}

std::vector<cplx> apply(const ComplexMatrix& m, const std::vector<cplx>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<cplx> out(m.rows(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

double vec_norm_sq(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return s;
}

void apply_local(std::vector<cplx>& state, const ComplexMatrix& op, std::size_t slot,
                 std::size_t n_slots, std::size_t d) {
    if (op.rows() != d || op.cols() != d) throw std::invalid_argument("apply_local: op shape");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_slots; ++i) total *= d;
    if (state.size() != total) throw std::invalid_argument("apply_local: state size");
    std::size_t stride = 1;
    for (std::size_t i = slot + 1; i < n_slots; ++i) stride *= d;

    std::vector<cplx> tmp(d);
    const std::size_t block = stride * d;
    for (std::size_t base = 0; base < total; base += block)
        for (std::size_t low = 0; low < stride; ++low) {
            for (std::size_t k = 0; k < d; ++k) tmp[k] = state[base + low + k * stride];
            for (std::size_t i = 0; i < d; ++i) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < d; ++k) s += op(i, k) * tmp[k];
                state[base + low + i * stride] = s;
            }
        }
}

}  // namespace workbench
