/// @file io.hpp
/// @brief CSV and PGM readers/writers for signals and fields, plus dataset
///        directory loading for the order-search harness.
///
/// CSV: signals are one value per line; fields are one row per y line with
/// comma-separated x values.  Floats are emitted with 17 significant digits
/// so write-then-read round-trips are exact.
///
/// PGM: P2 (ASCII) and P5 (binary, 8- or 16-bit big-endian) are supported;
/// stored integers [0, maxval] map linearly to [0, 1].

#pragma once

#include <string>

#include "fractv/denoise.hpp"
#include "fractv/grid.hpp"

namespace fractv {

Signal1D read_signal_csv(const std::string& path);
void write_signal_csv(const Signal1D& w, const std::string& path);

Field2D read_field_csv(const std::string& path);
void write_field_csv(const Field2D& u, const std::string& path);

Field2D read_field_pgm(const std::string& path);
void write_field_pgm(const Field2D& u, const std::string& path, int maxval = 65535,
                     bool binary = true);

/// Reads .pgm or .csv by extension.
Field2D read_field_any(const std::string& path);

/// Loads `<name>.clean.pgm|csv` / `<name>.noisy.pgm|csv` pairs from a
/// directory, sorted by name.
Dataset load_dataset(const std::string& dir);

/// 17-significant-digit float formatting used by every text writer.
std::string format_double(double v);

/// Order ladders: "a:b:step" (inclusive of both ends when step divides the
/// span within 1e-12) or a comma-separated list.
std::vector<double> parse_order_ladder(const std::string& spec);

}  // namespace fractv
