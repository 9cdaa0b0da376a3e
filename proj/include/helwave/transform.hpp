#pragma once

#include "helwave/hodge.hpp"
#include "helwave/meyer.hpp"

namespace helwave {

/// Full invertible representation of a vector field: one zero-mean scalar
/// wavelet expansion per helical channel plus the uniform (harmonic) vector.
/// Total coefficient count is 3*(8^{jmax+1} - 1) + 3.
struct HelicalWaveletCoeffs {
    int n = 0;
    int jmax = -1;
    WaveletCoeffs plus, minus, zero;  ///< means pinned to 0 (zero-mean system)
    Vec3 harmonic;
    double residual_energy = 0;
    bool lossy = false;

    HelicalWaveletCoeffs() = default;
    HelicalWaveletCoeffs(int n_, int jmax_)
        : n(n_), jmax(jmax_), plus(n_, jmax_), minus(n_, jmax_), zero(n_, jmax_) {}

    WaveletCoeffs& channel(Polarity s) {
        return s == Polarity::SigmaPlus ? plus : (s == Polarity::SigmaMinus ? minus : zero);
    }
    const WaveletCoeffs& channel(Polarity s) const {
        return s == Polarity::SigmaPlus ? plus : (s == Polarity::SigmaMinus ? minus : zero);
    }

    std::size_t count() const { return plus.wavelet_count() * 3 + 3; }

    double coeff_energy() const {
        return plus.coeff_energy() + minus.coeff_energy() + zero.coeff_energy() +
               harmonic.dot(harmonic);
    }
};

/// Forward transform of a real vector field: FFT, helical split, then one
/// scalar wavelet analysis per channel (the scalar inverse-transform step
/// and the wavelet expansion are fused in the Fourier domain). The
/// coefficient at (idx, s) is the inner product of the pulled-up wavelet
/// with the field. Spectral content the system cannot represent is
/// reported via residual_energy / lossy.
inline HelicalWaveletCoeffs forward(const GridVectorField& u, int jmax) {
    check_level(jmax, u.n);
    const SpectralVector U = fft_vector(u);
    const HelicalCoeffs H = decompose(U);
    HelicalWaveletCoeffs out(u.n, jmax);
    for (Polarity s : kAllPolarities) {
        WaveletCoeffs& c = out.channel(s);
        c = analyze(H.channel(s), jmax);
        c.mean = 0.0;  // channels are zero at k=0 by construction
    }
    out.harmonic = H.harmonic.real();
    out.residual_energy =
        out.plus.residual_energy + out.minus.residual_energy + out.zero.residual_energy;
    const double total = l2_norm2(U);
    out.lossy = out.residual_energy > 1e-12 * std::max(1.0, total);
    return out;
}

/// Inverse transform: synthesize each channel, pull up, add the harmonic
/// vector, and return to the grid.
inline GridVectorField inverse(const HelicalWaveletCoeffs& C, double* max_imag = nullptr) {
    HelicalCoeffs H(C.n);
    H.plus = synthesize(C.plus);
    H.minus = synthesize(C.minus);
    H.zero = synthesize(C.zero);
    H.plus.at(0, 0, 0) = H.minus.at(0, 0, 0) = H.zero.at(0, 0, 0) = 0.0;
    H.harmonic = CVec3(C.harmonic);
    return ifft_vector(assemble(H), max_imag);
}

/// One vector-valued basis function: the helical pull-up of a periodified
/// wavelet, synthesized on the grid. Real, unit L2 norm; divergence-free
/// for the solenoidal channels, curl-free for the dilatational one.
inline GridVectorField synth_basis_function(const WaveletIndex& idx, Polarity s, int n,
                                            double* max_imag = nullptr) {
    const SpectralScalar w = wavelet_fourier_coeffs(idx, n);
    return ifft_vector(pull_up(w, s), max_imag);
}

/// Spectrum of the periodified 3-D scaling function at level j, location l:
/// prod_a 2^{-j/2} phi_hat(k_a/2^j) exp(-2 pi i k_a l_a / 2^j).
inline SpectralScalar scaling_fourier_coeffs(int j, const std::array<int, 3>& loc, int n) {
    check_level(j, n);
    SpectralScalar out(n);
    const double m = double(1 << j);
    std::array<std::vector<std::pair<int, cplx>>, 3> filt;
    for (int a = 0; a < 3; ++a) {
        filt[a] = detail::axis_filter(0, j);
        const double ph = -2.0 * std::numbers::pi * loc[a] / m;
        for (auto& [k, v] : filt[a]) v *= cplx(std::cos(ph * k), std::sin(ph * k));
    }
    for (const auto& [kz, wz] : filt[2])
        for (const auto& [ky, wy] : filt[1]) {
            const cplx wyz = wy * wz;
            for (const auto& [kx, wx] : filt[0]) out.at(kx, ky, kz) = wx * wyz;
        }
    return out;
}

/// Solenoidal/dilatational scaling function: the uniform term
/// phi_hat_j(0) h(0,s) plus the pull-up of the zero-mean part of the
/// level-j scaling function. The real part is returned (the uniform triad
/// is complex); its translates over the level-j lattice all have the same
/// inner product with any constant field.
inline GridVectorField solenoidal_scaling_function(int j, const std::array<int, 3>& loc,
                                                   Polarity s, int n,
                                                   double* max_imag = nullptr) {
    SpectralScalar phi = scaling_fourier_coeffs(j, loc, n);
    const cplx mean = phi.at(0, 0, 0);
    phi.at(0, 0, 0) = 0.0;
    GridVectorField f = ifft_vector(pull_up(phi, s), max_imag);
    const Vec3 uniform = (uniform_triad(s) * mean).real();
    for (std::size_t i = 0; i < f.x.v.size(); ++i) {
        f.x.v[i] += uniform.x;
        f.y.v[i] += uniform.y;
        f.z.v[i] += uniform.z;
    }
    return f;
}

}  // namespace helwave
