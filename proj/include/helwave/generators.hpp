#pragma once

#include <cstdint>

#include "helwave/hodge.hpp"

namespace helwave {

// ---------------------------------------------------------------------------
// Deterministic counter-based noise. Reimplementations in other languages
// must match bit-for-bit:
//   raw(seed, i)  = mix64(seed + (i + 1) * 0x9E3779B97F4A7C15)
//   mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//             z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31;
//   u01(seed, i)  = (raw >> 11) * 2^-53          in [0, 1)
//   sym(seed, i)  = 2 * u01 - 1                  in [-1, 1)
// All arithmetic is unsigned 64-bit with wraparound.
// ---------------------------------------------------------------------------

namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t raw(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

inline double u01(std::uint64_t seed, std::uint64_t counter) {
    return double(raw(seed, counter) >> 11) * 0x1.0p-53;
}

inline double sym(std::uint64_t seed, std::uint64_t counter) {
    return 2.0 * u01(seed, counter) - 1.0;
}

}  // namespace rng

/// Band-limited real scalar noise: white samples on the grid, with the
/// Nyquist content removed by a spectral round trip so that analysis /
/// synthesis identities hold exactly on the result.
inline GridScalarField random_scalar_field(std::uint64_t seed, int n,
                                           std::uint64_t stream = 0) {
    GridScalarField f(n);
    const std::uint64_t base = stream * f.size();
    for (std::size_t i = 0; i < f.v.size(); ++i) f.v[i] = rng::sym(seed, base + i);
    return ifft_scalar(fft_scalar(f));
}

/// Deterministic test-field kinds, one per helical subspace plus generic
/// and solenoidal random mixtures.
enum class FieldKind {
    Constant,          ///< uniform vector (pure harmonic)
    Gradient,          ///< grad sin(2 pi x) (pure dilatational)
    BeltramiMinus,     ///< (cos 2 pi z, sin 2 pi z, 0): curl u = -2 pi u
    Abc,               ///< ABC flow: curl u = +2 pi u
    RandomSolenoidal,  ///< seeded noise pulled up to the solenoidal channels
    Random             ///< band-limited seeded noise, all channels populated
};

inline FieldKind field_kind_from_string(const std::string& s) {
    if (s == "constant") return FieldKind::Constant;
    if (s == "gradient") return FieldKind::Gradient;
    if (s == "beltrami-minus") return FieldKind::BeltramiMinus;
    if (s == "abc") return FieldKind::Abc;
    if (s == "random-solenoidal") return FieldKind::RandomSolenoidal;
    if (s == "random") return FieldKind::Random;
    throw std::invalid_argument("unknown field kind: " + s);
}

/// params: Constant -> (cx, cy, cz); Abc -> (A, B, C); others ignore it.
/// seed: used by the random kinds only.
inline GridVectorField generate(FieldKind kind, const std::vector<double>& params,
                                std::uint64_t seed, int n) {
    check_grid_size(n);
    GridVectorField u(n);
    const double twopi = 2.0 * std::numbers::pi;
    auto param = [&](std::size_t i, double dflt) {
        return i < params.size() ? params[i] : dflt;
    };
    switch (kind) {
        case FieldKind::Constant: {
            const double cx = param(0, 1), cy = param(1, 0), cz = param(2, 0);
            for (std::size_t i = 0; i < u.x.v.size(); ++i) {
                u.x.v[i] = cx;
                u.y.v[i] = cy;
                u.z.v[i] = cz;
            }
            return u;
        }
        case FieldKind::Gradient: {
            for (int iz = 0; iz < n; ++iz)
                for (int iy = 0; iy < n; ++iy)
                    for (int ix = 0; ix < n; ++ix)
                        u.x.at(ix, iy, iz) = twopi * std::cos(twopi * ix / n);
            return u;
        }
        case FieldKind::BeltramiMinus: {
            for (int iz = 0; iz < n; ++iz) {
                const double c = std::cos(twopi * iz / n), s = std::sin(twopi * iz / n);
                for (int iy = 0; iy < n; ++iy)
                    for (int ix = 0; ix < n; ++ix) {
                        u.x.at(ix, iy, iz) = c;
                        u.y.at(ix, iy, iz) = s;
                    }
            }
            return u;
        }
        case FieldKind::Abc: {
            const double A = param(0, 1), B = param(1, 1), C = param(2, 1);
            for (int iz = 0; iz < n; ++iz)
                for (int iy = 0; iy < n; ++iy)
                    for (int ix = 0; ix < n; ++ix) {
                        const double x = twopi * ix / n, y = twopi * iy / n,
                                     z = twopi * iz / n;
                        u.x.at(ix, iy, iz) = A * std::sin(z) + C * std::cos(y);
                        u.y.at(ix, iy, iz) = B * std::sin(x) + A * std::cos(z);
                        u.z.at(ix, iy, iz) = C * std::sin(y) + B * std::cos(x);
                    }
            return u;
        }
        case FieldKind::RandomSolenoidal: {
            SpectralScalar a = fft_scalar(random_scalar_field(seed, n, 0));
            SpectralScalar b = fft_scalar(random_scalar_field(seed, n, 1));
            a.at(0, 0, 0) = b.at(0, 0, 0) = 0.0;
            SpectralVector U = pull_up(a, Polarity::SigmaPlus);
            const SpectralVector V = pull_up(b, Polarity::SigmaMinus);
            for (std::size_t i = 0; i < U.x.c.size(); ++i) {
                U.x.c[i] += V.x.c[i];
                U.y.c[i] += V.y.c[i];
                U.z.c[i] += V.z.c[i];
            }
            return ifft_vector(U);
        }
        case FieldKind::Random: {
            u.x = random_scalar_field(seed, n, 0);
            u.y = random_scalar_field(seed, n, 1);
            u.z = random_scalar_field(seed, n, 2);
            return u;
        }
    }
    throw std::invalid_argument("unknown field kind");
}

}  // namespace helwave
