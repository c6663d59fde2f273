#pragma once

#include <complex>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

enum class Generator { Laplacian, Adjacency };

inline const char* generator_name(Generator g) {
    return g == Generator::Laplacian ? "L" : "A";
}

// Default numeric tolerances; operations take them as parameters so callers
// can override, these are the single source the tests pin against.
namespace defaults {
inline constexpr double kProbabilityTol = 1e-10;
inline constexpr double kOrthonormalityTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-10;
inline constexpr double kDropTol = 1e-12;
}  // namespace defaults

// Eigenvalues ascending with matching orthonormal eigenvector columns.
// phase_eigenvalues carry extra precision (long-double Rayleigh quotients of
// the integer input matrix) so that lambda*t stays meaningful at t ~ 1e12.
struct SpectralDecomposition {
    int n = 0;
    Generator tag = Generator::Laplacian;
    std::vector<double> eigenvalues;
    std::vector<long double> phase_eigenvalues;
    std::vector<double> vectors;  // column-major: vectors[k * n + v] = psi_k(v)

    double vec(int k, int v) const { return vectors[static_cast<size_t>(k) * n + v]; }
    double spectral_scale() const;
};

// Cyclic Jacobi; throws std::runtime_error if 100 sweeps do not converge
// (not expected for n <= 32).
SpectralDecomposition symmetric_eigen(const SymmetricMatrix& m, Generator tag);

// Convenience: decompose L or A of a graph.
SpectralDecomposition decompose(const Graph& g, Generator tag);

struct WalkState {
    double time = 0.0;
    std::vector<std::complex<double>> amplitudes;
};

// psi(t) = sum_k e^{i lambda_k t} psi_k(start) psi_k, evaluated in spectral
// form with phases reduced mod 2pi in long double, so accuracy is uniform in
// t instead of drifting at large times.
WalkState evolve(const SpectralDecomposition& dec, int start, double t);

std::vector<double> probabilities(const WalkState& s);

// M_ab(t) = |<a|U(t)|b>|^2; column b is the distribution of a walk started
// at b, measured at time t.
struct MixingMatrix {
    double time = 0.0;
    int n = 0;
    std::vector<double> entries;  // row-major

    double at(int a, int b) const { return entries[static_cast<size_t>(a) * n + b]; }
};

MixingMatrix mixing_matrix(const SpectralDecomposition& dec, double t);

}  // namespace ctqw
