#include "cascade/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace cascade {

namespace {

constexpr char magic[8] = {'C', 'S', 'C', 'F', 'L', 'D', '1', '\0'};

template <typename T>
void put(std::ofstream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw std::runtime_error("snapshot: truncated file");
    return value;
}

} // namespace

void write_snapshot(const std::string& path, const SpectralField& field, double time,
                    bool single_precision) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path);
    out.write(magic, sizeof(magic));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(field.grid->dim()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(field.grid->points()));
    put<double>(out, field.grid->box_length());
    put<double>(out, time);
    put<std::uint32_t>(out, single_precision ? 8u : 16u);
    if (single_precision) {
        for (const auto& z : field.data) {
            const float re = static_cast<float>(z.real());
            const float im = static_cast<float>(z.imag());
            put<float>(out, re);
            put<float>(out, im);
        }
    } else {
        out.write(reinterpret_cast<const char*>(field.data.data()),
                  static_cast<std::streamsize>(field.data.size() * sizeof(std::complex<double>)));
    }
    if (!out) throw std::runtime_error("snapshot: write failed for " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    char head[8];
    in.read(head, sizeof(head));
    if (!in || std::memcmp(head, magic, sizeof(magic)) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    const auto dim = get<std::uint32_t>(in);
    const auto points = get<std::uint32_t>(in);
    const auto box = get<double>(in);
    const auto time = get<double>(in);
    const auto prec = get<std::uint32_t>(in);

    Snapshot snap;
    snap.time = time;
    snap.field = SpectralField(build_grid(static_cast<int>(dim), static_cast<int>(points), box));
    if (prec == 16) {
        in.read(reinterpret_cast<char*>(snap.field.data.data()),
                static_cast<std::streamsize>(snap.field.data.size() * sizeof(std::complex<double>)));
        if (!in) throw std::runtime_error("snapshot: truncated data in " + path);
    } else if (prec == 8) {
        for (auto& z : snap.field.data) {
            const float re = get<float>(in);
            const float im = get<float>(in);
            z = {static_cast<double>(re), static_cast<double>(im)};
        }
    } else {
        throw std::runtime_error("snapshot: unknown precision flag");
    }
    return snap;
}

void write_shell_abs_csv(const std::string& path, const SpectralField& field) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path);
    out << "shell,k,mean_abs\n";
    const auto& grid = *field.grid;
    out.precision(17);
    for (int s = 0; s < grid.shell_count(); ++s) {
        const auto& members = grid.shell_members(s);
        if (members.empty()) continue;
        double sum = 0.0;
        for (auto i : members) sum += std::abs(field.data[i]);
        out << s << ',' << s * grid.dk() << ',' << sum / static_cast<double>(members.size())
            << '\n';
    }
}

} // namespace cascade
