#include <catch2/catch_amalgamated.hpp>

#include "helwave/fourier.hpp"
#include "helwave/generators.hpp"

using namespace helwave;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Brute-force DFT, independent of the FFT backend.
SpectralScalar naive_dft(const GridScalarField& f) {
    SpectralScalar out(f.n);
    const int n = f.n;
    for_each_mode(n, [&](const Wavevector& k, std::size_t ki) {
        cplx acc{};
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    const double ph =
                        -kTwoPi * (double(k.x) * ix + double(k.y) * iy + double(k.z) * iz) / n;
                    acc += f.at(ix, iy, iz) * cplx(std::cos(ph), std::sin(ph));
                }
        out.c[ki] = acc / double(f.size());
    });
    zero_nyquist(out);
    return out;
}

double max_coeff_diff(const SpectralScalar& a, const SpectralScalar& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        worst = std::max(worst, std::abs(a.c[i] - b.c[i]));
    return worst;
}

double max_grid_diff(const GridScalarField& a, const GridScalarField& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        worst = std::max(worst, std::abs(a.v[i] - b.v[i]));
    return worst;
}

}  // namespace

TEST_CASE("grid sizes are dyadic") {
    CHECK_THROWS_AS(GridScalarField(6), std::invalid_argument);
    CHECK_THROWS_AS(GridScalarField(2), std::invalid_argument);
    CHECK_THROWS_AS(fft_scalar(GridScalarField{}), std::invalid_argument);
    CHECK_NOTHROW(GridScalarField(4));
}

TEST_CASE("fft of a constant") {
    GridScalarField f(8);
    for (double& v : f.v) v = 1.0;
    const SpectralScalar F = fft_scalar(f);
    CHECK(std::abs(F.at(0, 0, 0) - 1.0) < 1e-14);
    double off = 0;
    for_each_mode(8, [&](const Wavevector& k, std::size_t i) {
        if (!k.is_zero()) off = std::max(off, std::abs(F.c[i]));
    });
    CHECK(off < 1e-14);
}

TEST_CASE("fft of cos(2 pi x) lands on k = (+-1,0,0)") {
    const int n = 8;
    GridScalarField f(n);
    for (int iz = 0; iz < n; ++iz)
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) f.at(ix, iy, iz) = std::cos(kTwoPi * ix / n);
    const SpectralScalar F = fft_scalar(f);
    CHECK(std::abs(F.at(1, 0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(F.at(-1, 0, 0) - 0.5) < 1e-14);
    double rest = 0;
    for_each_mode(n, [&](const Wavevector& k, std::size_t i) {
        if (k == Wavevector{1, 0, 0} || k == Wavevector{-1, 0, 0}) return;
        rest = std::max(rest, std::abs(F.c[i]));
    });
    CHECK(rest < 1e-14);
}

TEST_CASE("fft agrees with a brute-force DFT") {
    const GridScalarField f = random_scalar_field(11, 8);
    const SpectralScalar fast = fft_scalar(f);
    const SpectralScalar slow = naive_dft(f);
    CHECK(max_coeff_diff(fast, slow) < 1e-12);
}

TEST_CASE("scalar round trip at n = 32") {
    const GridScalarField f = random_scalar_field(7, 32);
    CHECK(max_grid_diff(ifft_scalar(fft_scalar(f)), f) < 1e-12);
}

TEST_CASE("vector fft basics") {
    const int n = 16;
    SECTION("constant vector field") {
        const GridVectorField u = generate(FieldKind::Constant, {1, 0, 0}, 0, n);
        const SpectralVector U = fft_vector(u);
        CHECK(std::abs(U.x.at(0, 0, 0) - 1.0) < 1e-14);
        CHECK(std::abs(U.y.at(0, 0, 0)) < 1e-14);
        CHECK(l2_norm2(U) == Catch::Approx(1.0).margin(1e-13));
    }
    SECTION("single-mode Beltrami field populates only k = (0,0,+-1)") {
        const GridVectorField u = generate(FieldKind::BeltramiMinus, {}, 0, n);
        const SpectralVector U = fft_vector(u);
        double rest = 0;
        for_each_mode(n, [&](const Wavevector& k, std::size_t i) {
            if (k == Wavevector{0, 0, 1} || k == Wavevector{0, 0, -1}) return;
            rest = std::max({rest, std::abs(U.x.c[i]), std::abs(U.y.c[i]),
                             std::abs(U.z.c[i])});
        });
        CHECK(rest < 1e-14);
        CHECK(std::abs(U.x.at(0, 0, 1) - 0.5) < 1e-14);
    }
    SECTION("vector round trip at n = 32") {
        const GridVectorField u = generate(FieldKind::Random, {}, 3, 32);
        const GridVectorField back = ifft_vector(fft_vector(u));
        double worst = 0;
        for (int a = 0; a < 3; ++a)
            worst = std::max(worst, max_grid_diff(back.comp(a), u.comp(a)));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("spectral divergence") {
    const int n = 16;
    SECTION("constant field has zero divergence") {
        const SpectralVector U = fft_vector(generate(FieldKind::Constant, {2, 3, 4}, 0, n));
        CHECK(l2_norm(spectral_divergence(U)) < 1e-13);
    }
    SECTION("z-dependent transverse field is divergence-free") {
        const SpectralVector U = fft_vector(generate(FieldKind::BeltramiMinus, {}, 0, n));
        CHECK(l2_norm(spectral_divergence(U)) < 1e-13);
    }
    SECTION("div grad sin(2 pi x) = -4 pi^2 sin(2 pi x)") {
        const SpectralVector U = fft_vector(generate(FieldKind::Gradient, {}, 0, n));
        const GridScalarField d = ifft_scalar(spectral_divergence(U));
        double worst = 0;
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    const double want = -4.0 * std::numbers::pi * std::numbers::pi *
                                        std::sin(kTwoPi * ix / n);
                    worst = std::max(worst, std::abs(d.at(ix, iy, iz) - want));
                }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("spectral curl") {
    const int n = 16;
    SECTION("constant field has zero curl") {
        const SpectralVector U = fft_vector(generate(FieldKind::Constant, {2, 3, 4}, 0, n));
        CHECK(l2_norm(spectral_curl(U)) < 1e-13);
    }
    SECTION("negative Beltrami eigenfield: curl u = -2 pi u") {
        const SpectralVector U = fft_vector(generate(FieldKind::BeltramiMinus, {}, 0, n));
        const SpectralVector C = spectral_curl(U);
        double worst = 0;
        for (int a = 0; a < 3; ++a)
            for (std::size_t i = 0; i < C.comp(a).c.size(); ++i)
                worst = std::max(worst,
                                 std::abs(C.comp(a).c[i] + kTwoPi * U.comp(a).c[i]));
        CHECK(worst < 1e-13);
    }
    SECTION("curl of a gradient vanishes") {
        const SpectralVector U = fft_vector(generate(FieldKind::Gradient, {}, 0, n));
        CHECK(l2_norm(spectral_curl(U)) < 1e-12);
    }
    SECTION("div curl = 0 on random fields") {
        const SpectralVector U = fft_vector(generate(FieldKind::Random, {}, 5, 32));
        CHECK(l2_norm(spectral_divergence(spectral_curl(U))) < 1e-12);
    }
}

TEST_CASE("sobolev norm") {
    SpectralScalar F(8);
    SECTION("single mode, r = 2: norm^2 = (1+1)^1") {
        F.at(1, 0, 0) = 1.0;
        const double norm = sobolev_norm(F, SobolevOrder{2});
        CHECK(norm * norm == Catch::Approx(2.0).epsilon(1e-14));
    }
    SECTION("two modes, r = 1: norm^2 = sqrt(2) + sqrt(5)") {
        F.at(1, 0, 0) = 1.0;
        F.at(0, 2, 0) = 1.0;
        const double norm = sobolev_norm(F, SobolevOrder{1});
        CHECK(norm * norm ==
              Catch::Approx(std::sqrt(2.0) + std::sqrt(5.0)).epsilon(1e-14));
    }
    SECTION("r = 0 equals the coefficient l2 norm") {
        const SpectralScalar G = fft_scalar(random_scalar_field(2, 16));
        CHECK(sobolev_norm(G, SobolevOrder{0}) == Catch::Approx(l2_norm(G)).epsilon(1e-14));
    }
    SECTION("order must be finite") {
        CHECK_THROWS_AS(SobolevOrder(std::nan("")), std::invalid_argument);
    }
}

TEST_CASE("parity") {
    const int n = 16;
    SECTION("odd and even single modes") {
        GridScalarField s(n), c(n);
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    s.at(ix, iy, iz) = std::sin(kTwoPi * ix / n);
                    c.at(ix, iy, iz) = std::cos(kTwoPi * ix / n);
                }
        const GridScalarField gs = ifft_scalar(parity(fft_scalar(s)));
        const GridScalarField gc = ifft_scalar(parity(fft_scalar(c)));
        double worst_s = 0, worst_c = 0;
        for (std::size_t i = 0; i < s.v.size(); ++i) {
            worst_s = std::max(worst_s, std::abs(gs.v[i] + s.v[i]));
            worst_c = std::max(worst_c, std::abs(gc.v[i] - c.v[i]));
        }
        CHECK(worst_s < 1e-13);
        CHECK(worst_c < 1e-13);
    }
    SECTION("involution on random fields") {
        const SpectralScalar F = fft_scalar(random_scalar_field(9, n));
        const SpectralScalar FF = parity(parity(F));
        CHECK(max_coeff_diff(FF, F) < 1e-12);
    }
    SECTION("parity equals the spectrum of u(-x) for real fields") {
        const GridScalarField f = random_scalar_field(4, n);
        GridScalarField reflected(n);
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix)
                    reflected.at(ix, iy, iz) =
                        f.at((n - ix) % n, (n - iy) % n, (n - iz) % n);
        CHECK(max_coeff_diff(parity(fft_scalar(f)), fft_scalar(reflected)) < 1e-12);
    }
}

TEST_CASE("parseval identity up to n = 64") {
    for (int n : {16, 32, 64}) {
        const GridScalarField f = random_scalar_field(n, n);
        const double grid = grid_mean_square(f);
        const double spec = l2_norm2(fft_scalar(f));
        CHECK(std::abs(grid - spec) <= 1e-10 * grid);
    }
}

TEST_CASE("spectral operations preserve Hermitian symmetry") {
    const SpectralVector U = fft_vector(generate(FieldKind::Random, {}, 8, 16));
    CHECK(hermitian_residual(U.x) < 1e-13);
    const SpectralScalar d = spectral_divergence(U);
    const SpectralVector c = spectral_curl(U);
    CHECK(hermitian_residual(d) < 1e-13);
    CHECK(hermitian_residual(c.x) < 1e-13);
    CHECK(hermitian_residual(c.y) < 1e-13);
    CHECK(hermitian_residual(parity(d)) < 1e-13);
}
