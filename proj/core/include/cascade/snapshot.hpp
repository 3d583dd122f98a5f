#pragma once

#include "cascade/field.hpp"

#include <string>

namespace cascade {

/// Binary field snapshot.
///
/// Layout (little endian): 8-byte magic "CSCFLD1\0", uint32 dim, uint32 points,
/// float64 box_length, float64 time, uint32 precision (8 or 16 bytes per
/// complex value), then the raw complex array in grid order.
void write_snapshot(const std::string& path, const SpectralField& field, double time,
                    bool single_precision = false);

struct Snapshot {
    SpectralField field;
    double time = 0.0;
};

Snapshot read_snapshot(const std::string& path);

/// CSV export of mean |u| per shell: columns shell, k, mean_abs.
void write_shell_abs_csv(const std::string& path, const SpectralField& field);

} // namespace cascade
