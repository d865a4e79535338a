#pragma once

#include "simplexsum/configuration.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace simplexsum::io {

/// Contents of a point file before command-specific validation: identity
/// commands expect dimension+2 points, barycentric commands dimension+1.
struct PointFile {
    std::size_t dimension = 0;
    std::vector<Point<Rational>> points;
};

/// Parses {"dimension": n, "points": [[...], ...]}. Coordinate entries are
/// JSON integers, "p/q" strings, or decimal strings; decimals convert
/// exactly (scaled integers), never through binary floats. Throws ParseError
/// or DimensionMismatchError.
PointFile parse_json_points(const std::string& text);

/// CSV alternative: one point per row, dimension inferred from the first
/// row, every row validated against it.
PointFile parse_csv_points(const std::string& text);

/// Dispatches on extension: ".csv" to the CSV reader, everything else JSON.
PointFile read_point_file(const std::filesystem::path& path);

/// Canonical JSON text for a point file; integers as numbers, proper
/// rationals as "p/q" strings. parse_json_points round-trips it.
std::string point_file_to_json(const PointFile& file);

std::string config_to_json(const Configuration<Rational>& cfg);
Configuration<Rational> config_from_json(const std::string& text);

/// Comma-separated coordinates, e.g. "1/4,1/2".
std::vector<Rational> parse_coordinates(std::string_view text);

/// Validates the n+2 point-count contract.
Configuration<Rational> to_configuration(const PointFile& file);

/// Validates the n+1 point-count contract for simplex files.
std::vector<Point<Rational>> to_simplex(const PointFile& file);

} // namespace simplexsum::io
