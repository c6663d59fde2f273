#include "ctqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ctqw {
namespace {

constexpr int kMaxSweeps = 100;

// One cyclic Jacobi sweep over the strict upper triangle of a (row-major,
// full storage), accumulating rotations into v (row-major).
void jacobi_sweep(std::vector<double>& a, std::vector<double>& v, int n) {
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double apq = a[static_cast<size_t>(p) * n + q];
            if (apq == 0.0) continue;
            const double app = a[static_cast<size_t>(p) * n + p];
            const double aqq = a[static_cast<size_t>(q) * n + q];
            const double theta = 0.5 * (aqq - app) / apq;
            const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(theta) + std::hypot(1.0, theta));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            for (int k = 0; k < n; ++k) {
                const double akp = a[static_cast<size_t>(k) * n + p];
                const double akq = a[static_cast<size_t>(k) * n + q];
                a[static_cast<size_t>(k) * n + p] = c * akp - s * akq;
                a[static_cast<size_t>(k) * n + q] = s * akp + c * akq;
            }
            for (int k = 0; k < n; ++k) {
                const double apk = a[static_cast<size_t>(p) * n + k];
                const double aqk = a[static_cast<size_t>(q) * n + k];
                a[static_cast<size_t>(p) * n + k] = c * apk - s * aqk;
                a[static_cast<size_t>(q) * n + k] = s * apk + c * aqk;
            }
            for (int k = 0; k < n; ++k) {
                const double vkp = v[static_cast<size_t>(k) * n + p];
                const double vkq = v[static_cast<size_t>(k) * n + q];
                v[static_cast<size_t>(k) * n + p] = c * vkp - s * vkq;
                v[static_cast<size_t>(k) * n + q] = s * vkp + c * vkq;
            }
        }
    }
}

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = a[static_cast<size_t>(i) * n + j];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

}  // namespace

double SpectralDecomposition::spectral_scale() const {
    double s = 0.0;
    for (double l : eigenvalues) s = std::max(s, std::abs(l));
    return s;
}

SpectralDecomposition symmetric_eigen(const SymmetricMatrix& m, Generator tag) {
    const int n = m.size();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double stop = 1e-15 * std::max(1.0, frob);

    int sweep = 0;
    while (off_diagonal_norm(a, n) > stop) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("symmetric_eigen: no convergence after " +
                                     std::to_string(kMaxSweeps) + " sweeps (n=" +
                                     std::to_string(n) + ")");
        jacobi_sweep(a, v, n);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x) * n + x] < a[static_cast<size_t>(y) * n + y];
    });

    SpectralDecomposition dec;
    dec.n = n;
    dec.tag = tag;
    dec.eigenvalues.resize(n);
    dec.phase_eigenvalues.resize(n);
    dec.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        for (int i = 0; i < n; ++i)
            dec.vectors[static_cast<size_t>(k) * n + i] = v[static_cast<size_t>(i) * n + src];

        // Rayleigh quotient in long double against the exact input matrix:
        // quadratically insensitive to eigenvector error, which is what makes
        // phases at t ~ 1e12 land within tolerance.
        long double num = 0.0L, den = 0.0L;
        for (int i = 0; i < n; ++i) {
            const long double xi = dec.vectors[static_cast<size_t>(k) * n + i];
            long double row = 0.0L;
            for (int j = 0; j < n; ++j)
                row += static_cast<long double>(m(i, j)) *
                       static_cast<long double>(dec.vectors[static_cast<size_t>(k) * n + j]);
            num += xi * row;
            den += xi * xi;
        }
        dec.phase_eigenvalues[k] = num / den;
        dec.eigenvalues[k] = a[static_cast<size_t>(src) * n + src];
    }
    return dec;
}

SpectralDecomposition decompose(const Graph& g, Generator tag) {
    return symmetric_eigen(tag == Generator::Laplacian ? laplacian(g) : adjacency_matrix(g),
                           tag);
}

WalkState evolve(const SpectralDecomposition& dec, int start, double t) {
    const int n = dec.n;
    if (start < 0 || start >= n)
        throw std::invalid_argument("evolve: start vertex " + std::to_string(start) +
                                    " out of range");
    WalkState state;
    state.time = t;
    state.amplitudes.assign(n, {0.0, 0.0});
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (int k = 0; k < n; ++k) {
        const long double phase =
            std::fmod(dec.phase_eigenvalues[k] * static_cast<long double>(t), two_pi);
        const std::complex<double> w(static_cast<double>(std::cos(phase)),
                                     static_cast<double>(std::sin(phase)));
        const std::complex<double> coeff = w * dec.vec(k, start);
        for (int v = 0; v < n; ++v) state.amplitudes[v] += coeff * dec.vec(k, v);
    }
    return state;
}

std::vector<double> probabilities(const WalkState& s) {
    std::vector<double> p(s.amplitudes.size());
    for (size_t v = 0; v < p.size(); ++v) p[v] = std::norm(s.amplitudes[v]);
    return p;
}

MixingMatrix mixing_matrix(const SpectralDecomposition& dec, double t) {
    MixingMatrix m;
    m.time = t;
    m.n = dec.n;
    m.entries.resize(static_cast<size_t>(dec.n) * dec.n);
    for (int b = 0; b < dec.n; ++b) {
        const std::vector<double> col = probabilities(evolve(dec, b, t));
        for (int a = 0; a < dec.n; ++a) m.entries[static_cast<size_t>(a) * dec.n + b] = col[a];
    }
    return m;
}

}  // namespace ctqw
