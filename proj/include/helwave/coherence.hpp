#pragma once

#include <optional>

#include "helwave/types.hpp"

namespace helwave {

/// Shell-summed squared magnitude about a center: shell j collects grid
/// points whose periodic (minimum-image) distance d from the center falls
/// in [j/n - 1/(2n), j/n + 1/(2n)), so every point lands in exactly one
/// shell and the values sum to the field's mean square. Shells reaching
/// past the inscribed sphere (radius 1/2) are kept and flagged partial.
struct CoherenceSpectrum {
    int n = 0;
    Vec3 center;
    std::vector<double> value;        ///< per-shell sum of |.|^2 / n^3
    std::vector<std::int64_t> count;  ///< grid points per shell
    std::vector<char> partial;

    double radius(std::size_t j) const { return double(j) / n; }
    double shell_width() const { return 0.5 / n; }
    std::size_t shells() const { return value.size(); }
    double total() const {
        long double s = 0;
        for (double v : value) s += v;
        return double(s);
    }
};

namespace detail {

inline std::vector<double> min_image_axis(int n, double c) {
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) {
        double t = std::abs(double(i) / n - c);
        t -= std::floor(t);  // into [0,1)
        d[i] = std::min(t, 1.0 - t);
    }
    return d;
}

/// Shared shell accumulation; value(ix,iy,iz) must return |.|^2.
template <typename SqFn>
CoherenceSpectrum shell_sum(int n, const Vec3& center, SqFn&& sq) {
    check_grid_size(n);
    CoherenceSpectrum out;
    out.n = n;
    out.center = center;
    const std::size_t nshell = std::size_t(std::floor(std::sqrt(3.0) / 2.0 * n + 0.5)) + 1;
    std::vector<long double> acc(nshell, 0.0L);
    out.count.assign(nshell, 0);
    const auto dx = min_image_axis(n, center.x);
    const auto dy = min_image_axis(n, center.y);
    const auto dz = min_image_axis(n, center.z);
    for (int iz = 0; iz < n; ++iz) {
        const double z2 = dz[iz] * dz[iz];
        for (int iy = 0; iy < n; ++iy) {
            const double yz2 = z2 + dy[iy] * dy[iy];
            for (int ix = 0; ix < n; ++ix) {
                const double d = std::sqrt(yz2 + dx[ix] * dx[ix]);
                const std::size_t s = std::size_t(std::floor(d * n + 0.5));
                acc[s] += sq(ix, iy, iz);
                ++out.count[s];
            }
        }
    }
    const long double scale = 1.0L / ((long double)(n) * n * n);
    out.value.resize(nshell);
    out.partial.resize(nshell);
    for (std::size_t s = 0; s < nshell; ++s) {
        out.value[s] = double(acc[s] * scale);
        out.partial[s] = (2 * s + 1 > std::size_t(n)) ? 1 : 0;
    }
    return out;
}

}  // namespace detail

inline CoherenceSpectrum coherence_spectrum(const GridScalarField& f, const Vec3& center) {
    return detail::shell_sum(f.n, center, [&](int ix, int iy, int iz) {
        const double v = f.at(ix, iy, iz);
        return v * v;
    });
}

inline CoherenceSpectrum coherence_spectrum(const GridVectorField& u, const Vec3& center) {
    return detail::shell_sum(u.n, center, [&](int ix, int iy, int iz) {
        const double a = u.x.at(ix, iy, iz);
        const double b = u.y.at(ix, iy, iz);
        const double c = u.z.at(ix, iy, iz);
        return a * a + b * b + c * c;
    });
}

/// Component-resolved variant; axis 0,1,2 = x,y,z.
inline CoherenceSpectrum coherence_spectrum(const GridVectorField& u, const Vec3& center,
                                            int axis) {
    const GridScalarField& f = u.comp(axis);
    return coherence_spectrum(f, center);
}

/// |component| sampled at the grid points nearest to center + r*direction,
/// r = m/n for m = 0 .. n/2.
struct RayProfile {
    std::vector<double> r, value;
};

inline RayProfile ray_profile(const GridVectorField& u, int axis, const Vec3& center,
                              const Vec3& direction) {
    check_grid_size(u.n);
    const Vec3 dir = direction.normalized();
    const GridScalarField& f = u.comp(axis);
    const int n = u.n;
    RayProfile out;
    out.r.reserve(n / 2 + 1);
    out.value.reserve(n / 2 + 1);
    for (int m = 0; m <= n / 2; ++m) {
        const double r = double(m) / n;
        const Vec3 p = center + dir * r;
        auto nearest = [n](double c) {
            int i = int(std::lround(c * n)) % n;
            return i < 0 ? i + n : i;
        };
        out.r.push_back(r);
        out.value.push_back(std::abs(f.at(nearest(p.x), nearest(p.y), nearest(p.z))));
    }
    return out;
}

/// Ordinary least squares on (log r, log value) over a radius window.
/// Nonpositive values are excluded; fewer than 8 usable samples is an error.
/// The algebraic flag marks a clean power-law fit (rms log-residual < 0.3).
struct TailFit {
    double rmin = 0, rmax = 0;
    double exponent = 0;
    double residual = 0;  ///< rms of log-space fit residuals
    int samples = 0;
    bool algebraic = false;
};

inline TailFit tail_fit(const std::vector<double>& r, const std::vector<double>& v,
                        double rmin, double rmax) {
    if (r.size() != v.size()) throw std::invalid_argument("tail_fit: length mismatch");
    if (!(rmin < rmax)) throw std::invalid_argument("tail_fit: need rmin < rmax");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] >= rmin && r[i] <= rmax && v[i] > 0.0) {
            xs.push_back(std::log(r[i]));
            ys.push_back(std::log(v[i]));
        }
    if (xs.size() < 8)
        throw std::invalid_argument("tail_fit: fewer than 8 positive samples in window");
    const std::size_t m = xs.size();
    long double xm = 0, ym = 0;
    for (std::size_t i = 0; i < m; ++i) {
        xm += xs[i];
        ym += ys[i];
    }
    xm /= m;
    ym /= m;
    long double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const long double dx = xs[i] - xm;
        sxx += dx * dx;
        sxy += dx * (ys[i] - ym);
    }
    TailFit out;
    out.rmin = rmin;
    out.rmax = rmax;
    out.samples = int(m);
    out.exponent = double(sxy / sxx);
    long double rr = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const long double e = (ys[i] - ym) - (long double)(out.exponent) * (xs[i] - xm);
        rr += e * e;
    }
    out.residual = std::sqrt(double(rr / m));
    out.algebraic = out.residual < 0.3;
    return out;
}

inline TailFit tail_fit(const CoherenceSpectrum& spec, double rmin, double rmax) {
    std::vector<double> r(spec.shells());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = spec.radius(j);
    return tail_fit(r, spec.value, rmin, rmax);
}

inline TailFit tail_fit(const RayProfile& p, double rmin, double rmax) {
    return tail_fit(p.r, p.value, rmin, rmax);
}

}  // namespace helwave
