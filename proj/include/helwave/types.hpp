#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace helwave {

using cplx = std::complex<double>;

/// Real 3-vector with the handful of operations the spectral algebra needs.
struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("Vec3: cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};

/// Complex 3-vector. dot() is bilinear; hdot() conjugates the left argument.
struct CVec3 {
    cplx x{}, y{}, z{};

    CVec3() = default;
    CVec3(cplx cx, cplx cy, cplx cz) : x(cx), y(cy), z(cz) {}
    explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator*(cplx s) const { return {x * s, y * s, z * s}; }
    CVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
    cplx dot(const CVec3& o) const { return x * o.x + y * o.y + z * o.z; }
    cplx hdot(const CVec3& o) const {
        return std::conj(x) * o.x + std::conj(y) * o.y + std::conj(z) * o.z;
    }
    double norm2() const { return std::norm(x) + std::norm(y) + std::norm(z); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 real() const { return {x.real(), y.real(), z.real()}; }
};

/// Integer wavevector on the dual lattice of the periodic unit cube.
struct Wavevector {
    int x = 0, y = 0, z = 0;

    bool operator==(const Wavevector&) const = default;
    Wavevector operator-() const { return {-x, -y, -z}; }
    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    std::int64_t norm2() const {
        return std::int64_t(x) * x + std::int64_t(y) * y + std::int64_t(z) * z;
    }
    double norm() const { return std::sqrt(double(norm2())); }
    Vec3 as_vec3() const { return {double(x), double(y), double(z)}; }
};

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Grids are dyadic cubes, n >= 4 samples per axis.
inline void check_grid_size(int n) {
    if (n < 4 || !is_pow2(n))
        throw std::invalid_argument("grid size must be a power of two >= 4, got " +
                                    std::to_string(n));
}

/// Real scalar samples at x = (i,j,k)/n, x-fastest storage.
struct GridScalarField {
    int n = 0;
    std::vector<double> v;

    GridScalarField() = default;
    explicit GridScalarField(int n_) : n(n_), v(std::size_t(n_) * n_ * n_, 0.0) {
        check_grid_size(n_);
    }
    std::size_t index(int ix, int iy, int iz) const {
        return std::size_t(ix) + std::size_t(n) * (std::size_t(iy) + std::size_t(n) * iz);
    }
    double& at(int ix, int iy, int iz) { return v[index(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const { return v[index(ix, iy, iz)]; }
    std::size_t size() const { return v.size(); }
};

/// Real vector field; the three Cartesian components share one grid.
struct GridVectorField {
    int n = 0;
    GridScalarField x, y, z;

    GridVectorField() = default;
    explicit GridVectorField(int n_) : n(n_), x(n_), y(n_), z(n_) {}

    GridScalarField& comp(int a) { return a == 0 ? x : (a == 1 ? y : z); }
    const GridScalarField& comp(int a) const { return a == 0 ? x : (a == 1 ? y : z); }
    Vec3 at(int ix, int iy, int iz) const {
        return {x.at(ix, iy, iz), y.at(ix, iy, iz), z.at(ix, iy, iz)};
    }
};

/// Fourier coefficients of a scalar field, FFT-native storage: the cube index
/// i in [0,n) along each axis carries wavevector k = i for i < n/2 and
/// k = i - n otherwise. Retained modes have |k_a| <= n/2 - 1 per axis; the
/// Nyquist planes (index n/2) are kept in storage but pinned to zero.
struct SpectralScalar {
    int n = 0;
    std::vector<cplx> c;
    bool real_origin = false;  ///< produced from (and invertible to) a real field

    SpectralScalar() = default;
    explicit SpectralScalar(int n_) : n(n_), c(std::size_t(n_) * n_ * n_, cplx{}) {
        check_grid_size(n_);
    }

    /// wavevector component -> storage index along one axis
    int wrap(int k) const { return k >= 0 ? k : k + n; }
    /// storage index along one axis -> wavevector component
    int freq(int i) const { return i < n / 2 ? i : i - n; }
    int kmax() const { return n / 2 - 1; }
    bool retained(const Wavevector& k) const {
        const int m = kmax();
        return std::abs(k.x) <= m && std::abs(k.y) <= m && std::abs(k.z) <= m;
    }

    std::size_t index(const Wavevector& k) const {
        return std::size_t(wrap(k.x)) +
               std::size_t(n) * (std::size_t(wrap(k.y)) + std::size_t(n) * wrap(k.z));
    }
    cplx& at(const Wavevector& k) { return c[index(k)]; }
    cplx at(const Wavevector& k) const { return c[index(k)]; }
    cplx& at(int kx, int ky, int kz) { return c[index({kx, ky, kz})]; }
    cplx at(int kx, int ky, int kz) const { return c[index({kx, ky, kz})]; }
};

/// Componentwise spectral representation of a vector field.
struct SpectralVector {
    int n = 0;
    SpectralScalar x, y, z;

    SpectralVector() = default;
    explicit SpectralVector(int n_) : n(n_), x(n_), y(n_), z(n_) {}

    SpectralScalar& comp(int a) { return a == 0 ? x : (a == 1 ? y : z); }
    const SpectralScalar& comp(int a) const { return a == 0 ? x : (a == 1 ? y : z); }
    CVec3 at(const Wavevector& k) const { return {x.at(k), y.at(k), z.at(k)}; }
    void set(const Wavevector& k, const CVec3& v) {
        x.at(k) = v.x;
        y.at(k) = v.y;
        z.at(k) = v.z;
    }
    bool real_origin() const { return x.real_origin && y.real_origin && z.real_origin; }
    void set_real_origin(bool b) { x.real_origin = y.real_origin = z.real_origin = b; }
};

/// Sobolev exponent r in the weight (1+|k|^2)^{r/2}.
struct SobolevOrder {
    double r = 0;
    SobolevOrder() = default;
    explicit SobolevOrder(double r_) : r(r_) {
        if (!std::isfinite(r_)) throw std::invalid_argument("Sobolev order must be finite");
    }
};

/// Visit every stored mode (including the pinned-zero Nyquist planes) in
/// storage order; fn(k, flat_index).
template <typename Fn>
void for_each_mode(int n, Fn&& fn) {
    std::size_t idx = 0;
    for (int iz = 0; iz < n; ++iz) {
        const int kz = iz < n / 2 ? iz : iz - n;
        for (int iy = 0; iy < n; ++iy) {
            const int ky = iy < n / 2 ? iy : iy - n;
            for (int ix = 0; ix < n; ++ix, ++idx) {
                const int kx = ix < n / 2 ? ix : ix - n;
                fn(Wavevector{kx, ky, kz}, idx);
            }
        }
    }
}

// --- deterministic accumulation helpers (long double running sums) ---

inline double l2_norm2(const SpectralScalar& f) {
    long double s = 0;
    for (const cplx& v : f.c) s += std::norm(v);
    return double(s);
}
inline double l2_norm2(const SpectralVector& u) {
    return l2_norm2(u.x) + l2_norm2(u.y) + l2_norm2(u.z);
}
inline double l2_norm(const SpectralScalar& f) { return std::sqrt(l2_norm2(f)); }
inline double l2_norm(const SpectralVector& u) { return std::sqrt(l2_norm2(u)); }

/// Conjugate-linear in the first slot.
inline cplx spectral_inner(const SpectralScalar& f, const SpectralScalar& g) {
    if (f.n != g.n) throw std::invalid_argument("spectral_inner: grid size mismatch");
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        const cplx t = std::conj(f.c[i]) * g.c[i];
        re += t.real();
        im += t.imag();
    }
    return {double(re), double(im)};
}
inline cplx spectral_inner(const SpectralVector& u, const SpectralVector& v) {
    return spectral_inner(u.x, v.x) + spectral_inner(u.y, v.y) + spectral_inner(u.z, v.z);
}

/// Discrete mean square (1/n^3) sum |f|^2; equals the coefficient l2 norm
/// squared for band-limited fields (Parseval).
inline double grid_mean_square(const GridScalarField& f) {
    long double s = 0;
    for (double v : f.v) s += (long double)(v) * v;
    return double(s / (long double)(f.size()));
}
inline double grid_mean_square(const GridVectorField& u) {
    return grid_mean_square(u.x) + grid_mean_square(u.y) + grid_mean_square(u.z);
}

/// Max |c(-k) - conj(c(k))| over retained modes, relative to max |c|.
inline double hermitian_residual(const SpectralScalar& f) {
    double worst = 0, scale = 0;
    const int m = f.kmax();
    for (int kz = -m; kz <= m; ++kz)
        for (int ky = -m; ky <= m; ++ky)
            for (int kx = -m; kx <= m; ++kx) {
                const cplx a = f.at(kx, ky, kz);
                const cplx b = f.at(-kx, -ky, -kz);
                worst = std::max(worst, std::abs(b - std::conj(a)));
                scale = std::max(scale, std::abs(a));
            }
    return scale > 0 ? worst / scale : worst;
}

}  // namespace helwave
