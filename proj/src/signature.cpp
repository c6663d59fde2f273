#include "ctqw/signature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ctqw {
namespace {

// gaps closer than this are treated as numerically identical (eigensolver
// noise), not as a suspicious collision
double noise_tol(double scale) { return 1e-12 * std::max(1.0, scale); }

}  // namespace

double CosineSignature::evaluate(double t) const {
    double p = 0.0;
    for (const auto& [gap, coeff] : terms) p += coeff * std::cos(gap * t);
    return p;
}

CosineSignature cosine_signature(const SpectralDecomposition& dec, int s, int v,
                                 const SignatureConfig& cfg) {
    const int n = dec.n;
    if (s < 0 || s >= n || v < 0 || v >= n)
        throw std::invalid_argument("cosine_signature: vertex out of range");
    const double scale = dec.spectral_scale();
    const double cluster_tol =
        cfg.cluster_tol > 0.0 ? cfg.cluster_tol : 1e-8 * std::max(1.0, scale);

    // cluster eigenvalues, then one projector coefficient per cluster
    std::vector<double> cluster_mean;
    std::vector<double> proj;
    int k = 0;
    while (k < n) {
        int j = k;
        double sum = 0.0, p = 0.0;
        while (j < n && (j == k || dec.eigenvalues[j] - dec.eigenvalues[j - 1] <= cluster_tol)) {
            sum += dec.eigenvalues[j];
            p += dec.vec(j, v) * dec.vec(j, s);
            ++j;
        }
        cluster_mean.push_back(sum / (j - k));
        proj.push_back(p);
        k = j;
    }
    const int nc = static_cast<int>(proj.size());

    CosineSignature sig;
    sig.tag = dec.tag;
    sig.start = s;
    sig.target = v;

    double c0 = 0.0;
    for (double p : proj) c0 += p * p;

    std::vector<std::pair<double, double>> raw;  // (gap, coefficient)
    for (int a = 0; a < nc; ++a)
        for (int b = a + 1; b < nc; ++b)
            raw.emplace_back(cluster_mean[b] - cluster_mean[a], 2.0 * proj[a] * proj[b]);
    std::sort(raw.begin(), raw.end());

    sig.terms.emplace_back(0.0, c0);
    const double noise = noise_tol(scale);
    size_t i = 0;
    while (i < raw.size()) {
        size_t j = i;
        double coeff = 0.0, gap_sum = 0.0;
        while (j < raw.size() && raw[j].first - raw[i].first <= cluster_tol) {
            if (raw[j].first - raw[i].first > noise) sig.merged_gaps = true;
            coeff += raw[j].second;
            gap_sum += raw[j].first;
            ++j;
        }
        const double gap = gap_sum / (j - i);
        if (std::abs(coeff) >= cfg.drop_tol) sig.terms.emplace_back(gap, coeff);
        i = j;
    }
    return sig;
}

bool signatures_equal(const CosineSignature& x, const CosineSignature& y, double coeff_tol,
                      double cluster_tol) {
    size_t i = 0, j = 0;
    while (i < x.terms.size() || j < y.terms.size()) {
        const bool xv = i < x.terms.size();
        const bool yv = j < y.terms.size();
        if (xv && yv && std::abs(x.terms[i].first - y.terms[j].first) <= cluster_tol) {
            if (std::abs(x.terms[i].second - y.terms[j].second) > coeff_tol) return false;
            ++i;
            ++j;
        } else if (xv && (!yv || x.terms[i].first < y.terms[j].first)) {
            if (std::abs(x.terms[i].second) > coeff_tol) return false;  // unmatched gap
            ++i;
        } else {
            if (std::abs(y.terms[j].second) > coeff_tol) return false;
            ++j;
        }
    }
    return true;
}

}  // namespace ctqw
