#pragma once

#include "helwave/fourier.hpp"
#include "helwave/helical.hpp"

namespace helwave {

/// The four orthogonal pieces of a spectral vector field: three scalar
/// helical coefficient spectra (zero at k=0) and the uniform (harmonic)
/// vector carrying the k=0 content. Per mode,
/// |U_x|^2+|U_y|^2+|U_z|^2 = |u_+|^2+|u_-|^2+|u_0|^2.
struct HelicalCoeffs {
    int n = 0;
    SpectralScalar plus, minus, zero;
    CVec3 harmonic;

    HelicalCoeffs() = default;
    explicit HelicalCoeffs(int n_) : n(n_), plus(n_), minus(n_), zero(n_) {}

    SpectralScalar& channel(Polarity s) {
        return s == Polarity::SigmaPlus ? plus : (s == Polarity::SigmaMinus ? minus : zero);
    }
    const SpectralScalar& channel(Polarity s) const {
        return s == Polarity::SigmaPlus ? plus : (s == Polarity::SigmaMinus ? minus : zero);
    }
};

/// Split U into helical channels: u_s(k) = U(k).conj(h(k,s)) for k != 0,
/// harmonic = U(0). Accepts any field; all four parts are always produced.
inline HelicalCoeffs decompose(const SpectralVector& U) {
    HelicalCoeffs out(U.n);
    for_each_mode(U.n, [&](const Wavevector& k, std::size_t i) {
        if (k.is_zero()) return;
        const auto h = detail::helical_triple(k);
        const CVec3 u{U.x.c[i], U.y.c[i], U.z.c[i]};
        out.plus.c[i] = u.dot(h.plus.conj());
        out.minus.c[i] = u.dot(h.minus.conj());
        out.zero.c[i] = u.dot(h.zero.conj());
    });
    out.harmonic = U.at({0, 0, 0});
    const bool ro = U.real_origin();
    out.plus.real_origin = out.minus.real_origin = out.zero.real_origin = ro;
    return out;
}

/// Inverse of decompose: U(k) = sum_s u_s(k) h(k,s) for k != 0, U(0) = harmonic.
inline SpectralVector assemble(const HelicalCoeffs& H) {
    SpectralVector out(H.n);
    for_each_mode(H.n, [&](const Wavevector& k, std::size_t i) {
        if (k.is_zero()) return;
        const cplx cp = H.plus.c[i], cm = H.minus.c[i], cz = H.zero.c[i];
        if (cp == 0.0 && cm == 0.0 && cz == 0.0) return;
        const auto h = detail::helical_triple(k);
        out.x.c[i] = cp * h.plus.x + cm * h.minus.x + cz * h.zero.x;
        out.y.c[i] = cp * h.plus.y + cm * h.minus.y + cz * h.zero.y;
        out.z.c[i] = cp * h.plus.z + cm * h.minus.z + cz * h.zero.z;
    });
    out.set(Wavevector{0, 0, 0}, H.harmonic);
    const bool ro =
        H.plus.real_origin && H.minus.real_origin && H.zero.real_origin &&
        H.harmonic.x.imag() == 0 && H.harmonic.y.imag() == 0 && H.harmonic.z.imag() == 0;
    out.set_real_origin(ro);
    return out;
}

/// Orthogonal projection onto one helical channel (k = 0 annihilated).
inline SpectralVector project(const SpectralVector& U, Polarity s) {
    SpectralVector out(U.n);
    for_each_mode(U.n, [&](const Wavevector& k, std::size_t i) {
        if (k.is_zero()) return;
        const CVec3 u{U.x.c[i], U.y.c[i], U.z.c[i]};
        if (u.x == 0.0 && u.y == 0.0 && u.z == 0.0) return;
        const CVec3 h = helical_vector(k, s);
        const cplx a = u.dot(h.conj());
        out.x.c[i] = a * h.x;
        out.y.c[i] = a * h.y;
        out.z.c[i] = a * h.z;
    });
    out.set_real_origin(U.real_origin());
    return out;
}

/// Harmonic (uniform) part: the k = 0 coefficient vector.
inline CVec3 harmonic_part(const SpectralVector& U) { return U.at({0, 0, 0}); }

/// Pull a scalar spectrum up to the s channel: U(k) = f(k) h(k,s) for k != 0,
/// U(0) = 0. Unitary on zero-mean scalars.
inline SpectralVector pull_up(const SpectralScalar& f, Polarity s) {
    SpectralVector out(f.n);
    for_each_mode(f.n, [&](const Wavevector& k, std::size_t i) {
        if (k.is_zero()) return;
        const cplx a = f.c[i];
        if (a == 0.0) return;
        const CVec3 h = helical_vector(k, s);
        out.x.c[i] = a * h.x;
        out.y.c[i] = a * h.y;
        out.z.c[i] = a * h.z;
    });
    out.set_real_origin(f.real_origin);
    return out;
}

/// Adjoint of pull_up: f(k) = U(k).conj(h(k,s)) for k != 0, f(0) = 0.
/// pull_up_adjoint(pull_up(f,s),s) = f on zero-mean scalars, and
/// pull_up(pull_up_adjoint(U,s),s) = project(U,s).
inline SpectralScalar pull_up_adjoint(const SpectralVector& U, Polarity s) {
    SpectralScalar out(U.n);
    for_each_mode(U.n, [&](const Wavevector& k, std::size_t i) {
        if (k.is_zero()) return;
        const CVec3 u{U.x.c[i], U.y.c[i], U.z.c[i]};
        if (u.x == 0.0 && u.y == 0.0 && u.z == 0.0) return;
        out.c[i] = u.dot(helical_vector(k, s).conj());
    });
    out.real_origin = U.real_origin();
    return out;
}

}  // namespace helwave
