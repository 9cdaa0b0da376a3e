#pragma once

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helwave/coherence.hpp"
#include "helwave/transform.hpp"

namespace helwave {

// ---------------------------------------------------------------------------
// Binary field container ("VF3T"):
//   magic "VF3T" | version u32 = 1 | n u32 | flags u32 | payload
// flags bit0: 1 = vector (three components), 0 = scalar. Payload is 64-bit
// IEEE little-endian samples, x-fastest, components concatenated x,y,z.
//
// Coefficient container ("HWC1"):
//   magic "HWC1" | n u32 | jmax u32
//   three polarity blocks in the order sigma+, sigma-, d; each block holds
//   records (j u32, eps u32, lx u32, ly u32, lz u32, re f64, im f64) in
//   ascending (j, eps, lz, ly, lx) order with lx fastest
//   | harmonic 3 x f64
// Both files are written atomically (temp file + rename) and byte-exactly
// reproducible for identical inputs.
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
void store_le(std::string& out, T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        for (std::size_t i = 0; i < sizeof(T) / 2; ++i)
            std::swap(buf[i], buf[sizeof(T) - 1 - i]);
    }
    out.append(buf, sizeof(T));
}

class LeReader {
  public:
    explicit LeReader(std::istream& in) : in_(in) {}

    template <typename T>
    T get() {
        char buf[sizeof(T)];
        in_.read(buf, sizeof(T));
        if (!in_) throw std::runtime_error("unexpected end of file");
        if constexpr (std::endian::native == std::endian::big) {
            for (std::size_t i = 0; i < sizeof(T) / 2; ++i)
                std::swap(buf[i], buf[sizeof(T) - 1 - i]);
        }
        T v;
        std::memcpy(&v, buf, sizeof(T));
        return v;
    }

  private:
    std::istream& in_;
};

inline void write_atomic(const std::filesystem::path& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(bytes.data(), std::streamsize(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

inline void expect_magic(LeReader& r, const char (&magic)[5], const std::string& what) {
    char m[4];
    for (auto& c : m) c = r.get<char>();
    if (std::memcmp(m, magic, 4) != 0)
        throw std::runtime_error("bad magic, not a " + what + " file");
}

}  // namespace detail

inline constexpr std::uint32_t kFieldFileVersion = 1;

inline void save_field(const std::filesystem::path& path, const GridVectorField& u) {
    std::string bytes;
    bytes.reserve(16 + 3 * u.x.v.size() * 8);
    bytes.append("VF3T", 4);
    detail::store_le<std::uint32_t>(bytes, kFieldFileVersion);
    detail::store_le<std::uint32_t>(bytes, std::uint32_t(u.n));
    detail::store_le<std::uint32_t>(bytes, 1u);  // bit0: vector
    for (int a = 0; a < 3; ++a)
        for (double v : u.comp(a).v) detail::store_le<double>(bytes, v);
    detail::write_atomic(path, bytes);
}

inline void save_field(const std::filesystem::path& path, const GridScalarField& f) {
    std::string bytes;
    bytes.reserve(16 + f.v.size() * 8);
    bytes.append("VF3T", 4);
    detail::store_le<std::uint32_t>(bytes, kFieldFileVersion);
    detail::store_le<std::uint32_t>(bytes, std::uint32_t(f.n));
    detail::store_le<std::uint32_t>(bytes, 0u);
    for (double v : f.v) detail::store_le<double>(bytes, v);
    detail::write_atomic(path, bytes);
}

namespace detail {
inline std::uint32_t read_field_header(LeReader& r, std::uint32_t& n) {
    expect_magic(r, "VF3T", "field");
    const auto version = r.get<std::uint32_t>();
    if (version != kFieldFileVersion)
        throw std::runtime_error("unsupported field file version " + std::to_string(version));
    n = r.get<std::uint32_t>();
    return r.get<std::uint32_t>();
}
}  // namespace detail

inline bool field_file_is_vector(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    detail::LeReader r(in);
    std::uint32_t n = 0;
    return (detail::read_field_header(r, n) & 1u) != 0;
}

inline GridVectorField load_vector_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    detail::LeReader r(in);
    std::uint32_t n = 0;
    if ((detail::read_field_header(r, n) & 1u) == 0)
        throw std::runtime_error(path.string() + " holds a scalar field, expected vector");
    GridVectorField u{int(n)};
    for (int a = 0; a < 3; ++a)
        for (double& v : u.comp(a).v) v = r.get<double>();
    return u;
}

inline GridScalarField load_scalar_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    detail::LeReader r(in);
    std::uint32_t n = 0;
    if ((detail::read_field_header(r, n) & 1u) != 0)
        throw std::runtime_error(path.string() + " holds a vector field, expected scalar");
    GridScalarField f{int(n)};
    for (double& v : f.v) v = r.get<double>();
    return f;
}

inline void save_coeffs(const std::filesystem::path& path, const HelicalWaveletCoeffs& c) {
    std::string bytes;
    bytes.reserve(12 + c.count() * 36);
    bytes.append("HWC1", 4);
    detail::store_le<std::uint32_t>(bytes, std::uint32_t(c.n));
    detail::store_le<std::uint32_t>(bytes, std::uint32_t(c.jmax));
    for (Polarity s : kAllPolarities) {
        c.channel(s).for_each([&](const WaveletIndex& idx, const cplx& v) {
            detail::store_le<std::uint32_t>(bytes, std::uint32_t(idx.j));
            detail::store_le<std::uint32_t>(bytes, std::uint32_t(idx.eps));
            detail::store_le<std::uint32_t>(bytes, std::uint32_t(idx.loc[0]));
            detail::store_le<std::uint32_t>(bytes, std::uint32_t(idx.loc[1]));
            detail::store_le<std::uint32_t>(bytes, std::uint32_t(idx.loc[2]));
            detail::store_le<double>(bytes, v.real());
            detail::store_le<double>(bytes, v.imag());
        });
    }
    detail::store_le<double>(bytes, c.harmonic.x);
    detail::store_le<double>(bytes, c.harmonic.y);
    detail::store_le<double>(bytes, c.harmonic.z);
    detail::write_atomic(path, bytes);
}

inline HelicalWaveletCoeffs load_coeffs(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    detail::LeReader r(in);
    detail::expect_magic(r, "HWC1", "coefficient");
    const int n = int(r.get<std::uint32_t>());
    const int jmax = int(r.get<std::uint32_t>());
    HelicalWaveletCoeffs c(n, jmax);
    for (Polarity s : kAllPolarities) {
        WaveletCoeffs& ch = c.channel(s);
        ch.for_each([&](const WaveletIndex& idx, const cplx&) {
            WaveletIndex got;
            got.j = int(r.get<std::uint32_t>());
            got.eps = int(r.get<std::uint32_t>());
            got.loc = {int(r.get<std::uint32_t>()), int(r.get<std::uint32_t>()),
                       int(r.get<std::uint32_t>())};
            if (!(got == idx)) throw std::runtime_error("coefficient record out of order");
            const double re = r.get<double>();
            const double im = r.get<double>();
            ch.at(idx) = cplx(re, im);
        });
    }
    c.harmonic = {r.get<double>(), r.get<double>(), r.get<double>()};
    return c;
}

// ---------------------------------------------------------------------------
// Plot-ready CSV: header "r,value" (one series) or "r,vx,vy,vz".
// ---------------------------------------------------------------------------

namespace detail {
inline std::string format_csv_rows(const std::vector<std::string>& header,
                                   const std::vector<std::vector<double>>& cols) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (std::size_t row = 0; row < cols[0].size(); ++row) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cols[i][row];
        out << "\n";
    }
    return out.str();
}
}  // namespace detail

inline void save_csv(const std::filesystem::path& path, const CoherenceSpectrum& spec) {
    std::vector<double> r(spec.shells());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = spec.radius(j);
    detail::write_atomic(path, detail::format_csv_rows({"r", "value"}, {r, spec.value}));
}

inline void save_csv(const std::filesystem::path& path, const CoherenceSpectrum& sx,
                     const CoherenceSpectrum& sy, const CoherenceSpectrum& sz) {
    std::vector<double> r(sx.shells());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = sx.radius(j);
    detail::write_atomic(path, detail::format_csv_rows({"r", "vx", "vy", "vz"},
                                                       {r, sx.value, sy.value, sz.value}));
}

inline void save_csv(const std::filesystem::path& path, const RayProfile& p) {
    detail::write_atomic(path, detail::format_csv_rows({"r", "value"}, {p.r, p.value}));
}

/// Read one named column against the leading "r" column.
inline void load_csv_series(const std::filesystem::path& path, const std::string& column,
                            std::vector<double>& r, std::vector<double>& v) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path.string());
    std::vector<std::string> names;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) names.push_back(cell);
    }
    std::size_t col = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == column) col = i;
    if (names.empty() || names[0] != "r" || col == names.size())
        throw std::runtime_error("csv must have an 'r' column and a '" + column +
                                 "' column: " + path.string());
    r.clear();
    v.clear();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != names.size())
            throw std::runtime_error("ragged csv row in " + path.string());
        r.push_back(row[0]);
        v.push_back(row[col]);
    }
}

}  // namespace helwave
