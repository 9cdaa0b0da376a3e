#pragma once

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

#include "helwave/types.hpp"

namespace helwave {

namespace detail {

/// Serialized FFTW backend. Plans are created once per grid size with
/// FFTW_ESTIMATE (deterministic) and executed in-place on an internal
/// buffer, so caller data never has to satisfy FFTW alignment rules.
class FftEngine {
  public:
    static FftEngine& instance() {
        static FftEngine e;
        return e;
    }

    /// In-place unnormalized 3-D transform of an n^3 cube, x-fastest storage.
    /// sign = FFTW_FORWARD sums exp(-2 pi i k.x/n); FFTW_BACKWARD the conjugate.
    void transform(std::vector<cplx>& data, int n, int sign) {
        const std::size_t count = std::size_t(n) * n * n;
        if (data.size() != count) throw std::invalid_argument("FftEngine: bad cube size");
        std::lock_guard<std::mutex> lock(mutex_);
        Entry& e = entry(n);
        std::copy(data.begin(), data.end(), reinterpret_cast<cplx*>(e.buf));
        fftw_execute(sign == FFTW_FORWARD ? e.fwd : e.bwd);
        std::copy(reinterpret_cast<cplx*>(e.buf), reinterpret_cast<cplx*>(e.buf) + count,
                  data.begin());
    }

    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

  private:
    struct Entry {
        fftw_complex* buf = nullptr;
        fftw_plan fwd = nullptr, bwd = nullptr;
    };

    FftEngine() = default;
    ~FftEngine() {
        for (auto& [n, e] : entries_) {
            fftw_destroy_plan(e.fwd);
            fftw_destroy_plan(e.bwd);
            fftw_free(e.buf);
        }
    }

    Entry& entry(int n) {
        auto it = entries_.find(n);
        if (it != entries_.end()) return it->second;
        Entry e;
        const std::size_t count = std::size_t(n) * n * n;
        e.buf = fftw_alloc_complex(count);
        if (!e.buf) throw std::bad_alloc();
        // cube is symmetric in n; the last FFTW dimension is the fastest,
        // matching x-fastest storage
        e.fwd = fftw_plan_dft_3d(n, n, n, e.buf, e.buf, FFTW_FORWARD, FFTW_ESTIMATE);
        e.bwd = fftw_plan_dft_3d(n, n, n, e.buf, e.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!e.fwd || !e.bwd) throw std::runtime_error("FftEngine: planning failed");
        return entries_.emplace(n, e).first->second;
    }

    std::mutex mutex_;
    std::map<int, Entry> entries_;
};

}  // namespace detail

/// Pin the Nyquist planes (storage index n/2 on any axis) to zero. These
/// modes cannot carry Hermitian-symmetric arbitrary amplitudes on a real
/// grid, and dropping them keeps the curl eigenrelations exact.
inline void zero_nyquist(SpectralScalar& f) {
    const int n = f.n, h = f.n / 2;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            f.c[std::size_t(h) + std::size_t(n) * (std::size_t(a) + std::size_t(n) * b)] = 0.0;
            f.c[std::size_t(a) + std::size_t(n) * (std::size_t(h) + std::size_t(n) * b)] = 0.0;
            f.c[std::size_t(a) + std::size_t(n) * (std::size_t(b) + std::size_t(n) * h)] = 0.0;
        }
}

/// Forward transform: coeffs(k) = (1/n^3) sum_x f(x) exp(-2 pi i k.x), i.e. the
/// coefficients of the Fourier series f(x) = sum_k coeffs(k) exp(+2 pi i k.x).
inline SpectralScalar fft_scalar(const GridScalarField& f) {
    check_grid_size(f.n);
    SpectralScalar out(f.n);
    for (std::size_t i = 0; i < f.v.size(); ++i) out.c[i] = f.v[i];
    detail::FftEngine::instance().transform(out.c, f.n, FFTW_FORWARD);
    const double scale = 1.0 / double(f.size());
    for (cplx& v : out.c) v *= scale;
    zero_nyquist(out);
    out.real_origin = true;
    return out;
}

/// Inverse transform onto the real grid. The imaginary residue of the
/// complex synthesis (zero up to rounding for Hermitian input) is reported
/// through max_imag when requested.
inline GridScalarField ifft_scalar(const SpectralScalar& f, double* max_imag = nullptr) {
    check_grid_size(f.n);
    std::vector<cplx> work = f.c;
    detail::FftEngine::instance().transform(work, f.n, FFTW_BACKWARD);
    GridScalarField out(f.n);
    double mi = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
        out.v[i] = work[i].real();
        mi = std::max(mi, std::abs(work[i].imag()));
    }
    if (max_imag) *max_imag = mi;
    return out;
}

/// Full complex synthesis sum_k coeffs(k) exp(+2 pi i k.x) on the grid.
inline std::vector<cplx> ifft_complex(const SpectralScalar& f) {
    std::vector<cplx> work = f.c;
    detail::FftEngine::instance().transform(work, f.n, FFTW_BACKWARD);
    return work;
}

inline SpectralVector fft_vector(const GridVectorField& u) {
    SpectralVector out(u.n);
    out.x = fft_scalar(u.x);
    out.y = fft_scalar(u.y);
    out.z = fft_scalar(u.z);
    return out;
}

inline GridVectorField ifft_vector(const SpectralVector& U, double* max_imag = nullptr) {
    GridVectorField out(U.n);
    double mx = 0, my = 0, mz = 0;
    out.x = ifft_scalar(U.x, &mx);
    out.y = ifft_scalar(U.y, &my);
    out.z = ifft_scalar(U.z, &mz);
    if (max_imag) *max_imag = std::max({mx, my, mz});
    return out;
}

/// div u in spectral form: 2 pi i k . U(k) per mode.
inline SpectralScalar spectral_divergence(const SpectralVector& U) {
    SpectralScalar out(U.n);
    const double twopi = 2.0 * std::numbers::pi;
    for_each_mode(U.n, [&](const Wavevector& k, std::size_t i) {
        const cplx d = double(k.x) * U.x.c[i] + double(k.y) * U.y.c[i] + double(k.z) * U.z.c[i];
        out.c[i] = cplx(0.0, twopi) * d;
    });
    out.real_origin = U.real_origin();
    return out;
}

/// curl u in spectral form: 2 pi i k x U(k) per mode.
inline SpectralVector spectral_curl(const SpectralVector& U) {
    SpectralVector out(U.n);
    const double twopi = 2.0 * std::numbers::pi;
    for_each_mode(U.n, [&](const Wavevector& k, std::size_t i) {
        const cplx ux = U.x.c[i], uy = U.y.c[i], uz = U.z.c[i];
        const cplx cx = double(k.y) * uz - double(k.z) * uy;
        const cplx cy = double(k.z) * ux - double(k.x) * uz;
        const cplx cz = double(k.x) * uy - double(k.y) * ux;
        out.x.c[i] = cplx(0.0, twopi) * cx;
        out.y.c[i] = cplx(0.0, twopi) * cy;
        out.z.c[i] = cplx(0.0, twopi) * cz;
    });
    out.set_real_origin(U.real_origin());
    return out;
}

/// sqrt( sum_k (1+|k|^2)^{r/2} |f(k)|^2 ).
inline double sobolev_norm(const SpectralScalar& f, SobolevOrder order) {
    long double s = 0;
    for_each_mode(f.n, [&](const Wavevector& k, std::size_t i) {
        const double a = std::norm(f.c[i]);
        if (a == 0.0) return;
        s += (long double)(std::pow(1.0 + double(k.norm2()), order.r / 2.0)) * a;
    });
    return std::sqrt(double(s));
}

/// Parity (point reflection through the origin): for real-origin fields the
/// spectrum of u(-x) is the conjugated spectrum.
inline SpectralScalar parity(const SpectralScalar& f) {
    SpectralScalar out = f;
    for (cplx& v : out.c) v = std::conj(v);
    return out;
}

inline SpectralVector parity(const SpectralVector& u) {
    SpectralVector out = u;
    for (cplx& v : out.x.c) v = std::conj(v);
    for (cplx& v : out.y.c) v = std::conj(v);
    for (cplx& v : out.z.c) v = std::conj(v);
    return out;
}

}  // namespace helwave
