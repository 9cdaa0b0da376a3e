#pragma once

#include <numbers>

#include "helwave/fourier.hpp"

namespace helwave {

// ---------------------------------------------------------------------------
// Littlewood-Paley (Meyer) filter pair.
//
// The scaling filter is built as phi_hat(k) = sqrt(g(k) g(-k)) from a
// one-sided partition profile g with g = 1 below 1/3, g = 0 above 2/3 and
// the exact complement identity g(k) + g(1-k) = 1, which makes
// sum_j phi_hat(k+j)^2 = 1 hold to rounding. The profile uses the smooth
// polynomial ramp nu(t) = t^4(35 - 84t + 70t^2 - 20t^3), so the filter is
// C^inf with an exact flat top: phi_hat = 1 on [-1/3,1/3], 0 beyond 2/3,
// and phi_hat(1/2)^2 = 1/2 exactly (nu(1/2) = 1/2).
// ---------------------------------------------------------------------------

namespace detail {
inline double meyer_ramp(double t) {
    return t * t * t * t * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
}
}  // namespace detail

/// One-sided partition profile: 1 for k <= 1/3, 0 for k >= 2/3, and
/// g(k) + g(1-k) = 1 on the transition band.
inline double meyer_window(double k) {
    if (k <= 1.0 / 3.0) return 1.0;
    if (k >= 2.0 / 3.0) return 0.0;
    const double c = std::cos(std::numbers::pi / 2.0 * detail::meyer_ramp(3.0 * k - 1.0));
    return c * c;
}

/// Scaling filter phi_hat(k) = sqrt(g(k) g(-k)); even, in [0,1], supported
/// on |k| < 2/3 with flat top on |k| <= 1/3.
inline double meyer_phi_hat(double k) {
    return std::sqrt(meyer_window(k) * meyer_window(-k));
}

/// |psi_hat(k)| = sqrt(phi_hat(k/2)^2 - phi_hat(k)^2); supported on
/// 1/3 <= |k| <= 4/3. Rounding can push the radicand a hair below zero
/// (magnitude < 1e-15); it is clamped.
inline double meyer_psi_hat_mag(double k) {
    const double a = meyer_phi_hat(0.5 * k);
    const double b = meyer_phi_hat(k);
    const double rad = a * a - b * b;
    return rad > 0.0 ? std::sqrt(rad) : 0.0;
}

/// Wavelet filter psi_hat(k) = |psi_hat(k)| exp(-i pi k). The phase centers
/// the mother wavelet at x = 1/2, making it real and even about that point.
inline cplx meyer_psi_hat(double k) {
    const double m = meyer_psi_hat_mag(k);
    if (m == 0.0) return {};
    const double p = std::numbers::pi * k;
    return {m * std::cos(p), -m * std::sin(p)};
}

/// Max over samples of |sum_j phi_hat(k+j)^2 - 1| (j over a window that
/// covers the compact support after reducing k mod 1).
inline double partition_check(const std::vector<double>& samples) {
    double worst = 0;
    for (double k : samples) {
        const double kk = k - std::floor(k);
        double s = 0;
        for (int j = -2; j <= 2; ++j) {
            const double p = meyer_phi_hat(kk + j);
            s += p * p;
        }
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Dyadic wavelet system on the periodic cube.
// ---------------------------------------------------------------------------

/// Index of one 3-D wavelet: level j >= 0, species eps in 1..7 whose bits
/// (xi, eta, zeta) = (eps&1, eps>>1&1, eps>>2&1) select the wavelet filter
/// (bit 1) or the scaling filter (bit 0) per axis, and a lattice location
/// in {0..2^j-1}^3.
struct WaveletIndex {
    int j = 0;
    int eps = 1;
    std::array<int, 3> loc{0, 0, 0};

    bool operator==(const WaveletIndex&) const = default;
};

/// Largest admissible level for an n-grid: every level-j wavelet spectrum
/// must fit inside the retained band, i.e. 2^{j+2}/3 <= n/2 - 1.
/// Returns -1 when no level fits.
inline int max_level(int n) {
    check_grid_size(n);
    int j = -1;
    while ((std::int64_t(4) << (j + 1)) <= std::int64_t(3) * (n / 2 - 1)) ++j;
    return j;
}

inline void check_level(int j, int n) {
    if (j < 0 || j > max_level(n))
        throw std::invalid_argument("wavelet level " + std::to_string(j) +
                                    " not admissible on grid n=" + std::to_string(n) +
                                    " (max " + std::to_string(max_level(n)) + ")");
}

inline void check_index(const WaveletIndex& idx, int n) {
    check_level(idx.j, n);
    if (idx.eps < 1 || idx.eps > 7)
        throw std::invalid_argument("wavelet species must be 1..7");
    const int m = 1 << idx.j;
    for (int a = 0; a < 3; ++a)
        if (idx.loc[a] < 0 || idx.loc[a] >= m)
            throw std::invalid_argument("wavelet location out of range for level");
}

namespace detail {

/// Nonzero integer-k samples of one axis filter at level j, including the
/// 2^{-j/2} normalization but not the location phase.
/// bit 0: |k| <= floor(2^{j+1}/3);  bit 1: floor(2^j/3) < |k| <= floor(2^{j+2}/3).
inline std::vector<std::pair<int, cplx>> axis_filter(int bit, int j) {
    const double scale = std::pow(2.0, -0.5 * j);
    const double inv = 1.0 / double(1 << j);
    std::vector<std::pair<int, cplx>> out;
    if (bit == 0) {
        const int lim = int((std::int64_t(2) << j) / 3);
        out.reserve(2 * lim + 1);
        for (int k = -lim; k <= lim; ++k) {
            const double v = meyer_phi_hat(k * inv);
            if (v != 0.0) out.emplace_back(k, cplx(scale * v, 0.0));
        }
    } else {
        const int hi = int((std::int64_t(4) << j) / 3);
        const int lo = int((std::int64_t(1) << j) / 3);
        out.reserve(2 * (hi - lo) + 2);
        for (int a = -hi; a <= hi; ++a) {
            if (std::abs(a) <= lo) continue;
            const cplx v = meyer_psi_hat(a * inv);
            if (v != 0.0) out.emplace_back(a, scale * v);
        }
    }
    return out;
}

inline int fold(int k, int m) {
    int r = k % m;
    return r < 0 ? r + m : r;
}

}  // namespace detail

/// Fourier coefficients of the periodified 3-D wavelet: at integer k,
/// coeff(k) = prod_a 2^{-j/2} g_a(k_a/2^j) exp(-2 pi i k_a l_a / 2^j),
/// where g_a is the scaling or wavelet filter per species bit. Unit l2 norm.
inline SpectralScalar wavelet_fourier_coeffs(const WaveletIndex& idx, int n) {
    check_index(idx, n);
    SpectralScalar out(n);
    const double m = double(1 << idx.j);
    std::array<std::vector<std::pair<int, cplx>>, 3> filt;
    for (int a = 0; a < 3; ++a) {
        filt[a] = detail::axis_filter((idx.eps >> a) & 1, idx.j);
        const double ph = -2.0 * std::numbers::pi * idx.loc[a] / m;
        for (auto& [k, v] : filt[a]) v *= cplx(std::cos(ph * k), std::sin(ph * k));
    }
    for (const auto& [kz, wz] : filt[2])
        for (const auto& [ky, wy] : filt[1]) {
            const cplx wyz = wy * wz;
            for (const auto& [kx, wx] : filt[0]) out.at(kx, ky, kz) = wx * wyz;
        }
    return out;
}

/// Scalar wavelet coefficients through level jmax plus the mean (constant
/// channel). Coefficient cubes are stored densely per (level, species),
/// x-fastest in the location.
struct WaveletCoeffs {
    int n = 0;
    int jmax = -1;
    cplx mean{};
    std::vector<std::array<std::vector<cplx>, 7>> levels;
    double residual_energy = 0;  ///< input energy not captured by the system
    bool lossy = false;          ///< residual_energy above tolerance

    WaveletCoeffs() = default;
    WaveletCoeffs(int n_, int jmax_) : n(n_), jmax(jmax_), levels(jmax_ + 1) {
        check_level(jmax_, n_);
        for (int j = 0; j <= jmax_; ++j) {
            const std::size_t m3 = std::size_t(1) << (3 * j);
            for (auto& cube : levels[j]) cube.assign(m3, cplx{});
        }
    }

    std::size_t loc_index(const WaveletIndex& idx) const {
        const std::size_t m = std::size_t(1) << idx.j;
        return idx.loc[0] + m * (idx.loc[1] + m * idx.loc[2]);
    }
    cplx& at(const WaveletIndex& idx) { return levels[idx.j][idx.eps - 1][loc_index(idx)]; }
    cplx at(const WaveletIndex& idx) const {
        return levels[idx.j][idx.eps - 1][loc_index(idx)];
    }

    /// Number of wavelet coefficients (excludes the mean): sum_j 7*8^j.
    std::size_t wavelet_count() const {
        std::size_t c = 0;
        for (const auto& lvl : levels)
            for (const auto& cube : lvl) c += cube.size();
        return c;
    }
    /// Including the mean; equals 8^{jmax+1}.
    std::size_t count() const { return wavelet_count() + 1; }

    double coeff_energy() const {
        long double s = 0;
        for (const auto& lvl : levels)
            for (const auto& cube : lvl)
                for (const cplx& v : cube) s += std::norm(v);
        return double(s);
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int j = 0; j <= jmax; ++j) {
            const int m = 1 << j;
            for (int eps = 1; eps <= 7; ++eps) {
                std::size_t i = 0;
                for (int lz = 0; lz < m; ++lz)
                    for (int ly = 0; ly < m; ++ly)
                        for (int lx = 0; lx < m; ++lx, ++i)
                            fn(WaveletIndex{j, eps, {lx, ly, lz}},
                               levels[j][eps - 1][i]);
            }
        }
    }
};

/// Wavelet analysis in the Fourier domain. coefficient(idx) equals the
/// spectral inner product <wavelet_fourier_coeffs(idx), F> (conjugate-linear
/// in the first slot); mean = F(0). Realized by folding the weighted
/// spectrum onto a 2^j cube per (level, species) and one small DFT, so the
/// whole transform costs O(n^3) filter products plus O(8^j log) per level.
/// Input energy the system cannot represent is reported as
/// residual_energy / lossy rather than raised as an error.
inline WaveletCoeffs analyze(const SpectralScalar& F, int jmax) {
    check_level(jmax, F.n);
    WaveletCoeffs out(F.n, jmax);
    out.mean = F.at(0, 0, 0);
    std::vector<cplx> cube;
    for (int j = 0; j <= jmax; ++j) {
        const int m = 1 << j;
        const std::size_t m3 = std::size_t(m) * m * m;
        const auto filt0 = detail::axis_filter(0, j);
        const auto filt1 = detail::axis_filter(1, j);
        for (int eps = 1; eps <= 7; ++eps) {
            const auto& fx = (eps & 1) ? filt1 : filt0;
            const auto& fy = (eps & 2) ? filt1 : filt0;
            const auto& fz = (eps & 4) ? filt1 : filt0;
            cube.assign(m3, cplx{});
            for (const auto& [kz, wz] : fz) {
                const std::size_t oz = std::size_t(detail::fold(kz, m)) * m * m;
                for (const auto& [ky, wy] : fy) {
                    const cplx wyz = std::conj(wy * wz);
                    const std::size_t oyz = oz + std::size_t(detail::fold(ky, m)) * m;
                    for (const auto& [kx, wx] : fx)
                        cube[oyz + detail::fold(kx, m)] +=
                            std::conj(wx) * wyz * F.at(kx, ky, kz);
                }
            }
            if (m == 1) {
                out.levels[j][eps - 1][0] = cube[0];
            } else {
                detail::FftEngine::instance().transform(cube, m, FFTW_BACKWARD);
                out.levels[j][eps - 1] = cube;
            }
        }
    }
    const double total = l2_norm2(F);
    const double captured = std::norm(out.mean) + out.coeff_energy();
    out.residual_energy = std::max(0.0, total - captured);
    out.lossy = out.residual_energy > 1e-12 * std::max(1.0, total);
    return out;
}

/// Inverse of analyze on the coefficient side: the linear combination of
/// wavelet spectra plus the mean at k = 0.
inline SpectralScalar synthesize(const WaveletCoeffs& C) {
    check_level(C.jmax, C.n);
    SpectralScalar out(C.n);
    out.at(0, 0, 0) = C.mean;
    std::vector<cplx> cube;
    for (int j = 0; j <= C.jmax; ++j) {
        const int m = 1 << j;
        const auto filt0 = detail::axis_filter(0, j);
        const auto filt1 = detail::axis_filter(1, j);
        for (int eps = 1; eps <= 7; ++eps) {
            cube = C.levels[j][eps - 1];
            if (m > 1) detail::FftEngine::instance().transform(cube, m, FFTW_FORWARD);
            const auto& fx = (eps & 1) ? filt1 : filt0;
            const auto& fy = (eps & 2) ? filt1 : filt0;
            const auto& fz = (eps & 4) ? filt1 : filt0;
            for (const auto& [kz, wz] : fz) {
                const std::size_t oz = std::size_t(detail::fold(kz, m)) * m * m;
                for (const auto& [ky, wy] : fy) {
                    const cplx wyz = wy * wz;
                    const std::size_t oyz = oz + std::size_t(detail::fold(ky, m)) * m;
                    for (const auto& [kx, wx] : fx)
                        out.at(kx, ky, kz) += wx * wyz * cube[oyz + detail::fold(kx, m)];
                }
            }
        }
    }
    return out;
}

}  // namespace helwave
