#pragma once

#include <numbers>

#include "helwave/types.hpp"

namespace helwave {

/// The three orthogonal channels at each wavevector: the two curl
/// eigen-directions (solenoidal, positive/negative helicity) and the
/// dilatational (gradient) direction.
enum class Polarity { SigmaPlus, SigmaMinus, D };

inline constexpr std::array<Polarity, 3> kAllPolarities = {
    Polarity::SigmaPlus, Polarity::SigmaMinus, Polarity::D};

inline const char* polarity_name(Polarity s) {
    switch (s) {
        case Polarity::SigmaPlus: return "sigma+";
        case Polarity::SigmaMinus: return "sigma-";
        case Polarity::D: return "d";
    }
    return "?";
}

inline Polarity opposite(Polarity s) {
    if (s == Polarity::SigmaPlus) return Polarity::SigmaMinus;
    if (s == Polarity::SigmaMinus) return Polarity::SigmaPlus;
    return Polarity::D;
}

/// Right-handed orthonormal triad (e_r, e_theta, e_phi) at a wavevector.
struct RealTriad {
    Vec3 e_r, e_theta, e_phi;
};

/// Spherical-style triad at k != 0:
///   e_r   = k/|k|
///   e_phi = (e_z x e_r)/|e_z x e_r|    generically,
///           e_r x e_x                  when k is (anti)parallel to e_z,
///   e_theta = e_phi x e_r.
/// The polar branch condition is exact on the integer lattice (kx=ky=0), so
/// no tolerance is involved. The same polar formula serves both poles, which
/// is what keeps conj(h(k,s)) = h(-k,s) valid there.
inline RealTriad spherical_triad(const Wavevector& k) {
    if (k.is_zero())
        throw std::invalid_argument("spherical_triad: k = 0 has no triad (uniform channel)");
    RealTriad t;
    t.e_r = k.as_vec3().normalized();
    if (k.x == 0 && k.y == 0) {
        t.e_phi = t.e_r.cross(Vec3{1, 0, 0});
    } else {
        t.e_phi = Vec3{0, 0, 1}.cross(t.e_r).normalized();
    }
    t.e_theta = t.e_phi.cross(t.e_r);
    return t;
}

namespace detail {
inline CVec3 helical_from_triad(const RealTriad& t, Polarity s) {
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    switch (s) {
        case Polarity::SigmaPlus:
            return {cplx(t.e_theta.x, t.e_phi.x) * inv_sqrt2,
                    cplx(t.e_theta.y, t.e_phi.y) * inv_sqrt2,
                    cplx(t.e_theta.z, t.e_phi.z) * inv_sqrt2};
        case Polarity::SigmaMinus:
            return {cplx(t.e_theta.x, -t.e_phi.x) * inv_sqrt2,
                    cplx(t.e_theta.y, -t.e_phi.y) * inv_sqrt2,
                    cplx(t.e_theta.z, -t.e_phi.z) * inv_sqrt2};
        case Polarity::D:
            return {cplx(0, -t.e_r.x), cplx(0, -t.e_r.y), cplx(0, -t.e_r.z)};
    }
    return {};
}

/// All three helical vectors from one triad evaluation.
struct HelicalTriple {
    CVec3 plus, minus, zero;
};
inline HelicalTriple helical_triple(const Wavevector& k) {
    const RealTriad t = spherical_triad(k);
    return {helical_from_triad(t, Polarity::SigmaPlus),
            helical_from_triad(t, Polarity::SigmaMinus), helical_from_triad(t, Polarity::D)};
}
}  // namespace detail

/// Unit helical vector h(k,s) at k != 0:
///   h(k,+/-) = (e_theta +/- i e_phi)/sqrt(2),   h(k,0) = -i e_r.
/// Satisfies conj(h(k,s)) = h(-k,s) and conj(h(k,+/-)) = h(k,-/+).
inline CVec3 helical_vector(const Wavevector& k, Polarity s) {
    return detail::helical_from_triad(spherical_triad(k), s);
}

/// Orthonormal uniform (k = 0) triad, fixing the free convention for the
/// harmonic channel:
///   h(0,S+) = (e_x + i e_y)/sqrt(2),  h(0,S-) = (e_x - i e_y)/sqrt(2),
///   h(0,D)  = -i e_z.
inline CVec3 uniform_triad(Polarity s) {
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    switch (s) {
        case Polarity::SigmaPlus: return {cplx(inv_sqrt2, 0), cplx(0, inv_sqrt2), cplx(0, 0)};
        case Polarity::SigmaMinus: return {cplx(inv_sqrt2, 0), cplx(0, -inv_sqrt2), cplx(0, 0)};
        case Polarity::D: return {cplx(0, 0), cplx(0, 0), cplx(0, -1)};
    }
    return {};
}

}  // namespace helwave
