#pragma once

#include <vector>

#include "ctqw/spectral.hpp"

namespace ctqw {

// Finite expansion p_v(t) = sum_d C_d cos(d t) of the probability at target
// v for a walk started at s; the gaps d are eigenvalue differences. Equal
// signatures certify equal probabilities at every time. Coefficients are
// built from eigenspace projectors, so degenerate eigenvector bases do not
// matter.
struct CosineSignature {
    Generator tag = Generator::Laplacian;
    int start = 0;
    int target = 0;
    std::vector<std::pair<double, double>> terms;  // (gap ascending, coefficient); gap 0 first
    // true when two gaps that were numerically distinct (beyond eigensolver
    // noise) still fell within cluster_tol and got merged
    bool merged_gaps = false;

    double constant() const { return terms.empty() ? 0.0 : terms.front().second; }
    double evaluate(double t) const;
};

struct SignatureConfig {
    double cluster_tol = 0.0;  // <= 0: 1e-8 * max(1, spectral scale)
    double drop_tol = defaults::kDropTol;
};

CosineSignature cosine_signature(const SpectralDecomposition& dec, int s, int v,
                                 const SignatureConfig& cfg = {});

// Gap-aligned coefficient comparison: gaps within cluster_tol pair up, gaps
// missing from one side pair with coefficient zero.
bool signatures_equal(const CosineSignature& x, const CosineSignature& y, double coeff_tol,
                      double cluster_tol);

}  // namespace ctqw
