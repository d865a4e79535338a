#include "simplexsum/io.hpp"

#include "simplexsum/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace simplexsum::io {

namespace {

using json = nlohmann::ordered_json;

Rational entry_to_rational(const json& value) {
    if (value.is_number_integer()) {
        return Rational(static_cast<long long>(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
        return Rational::from_string(value.get<std::string>());
    }
    if (value.is_number_float()) {
        throw ParseError("non-integer JSON numbers lose exactness; quote decimals, e.g. \"0.25\"");
    }
    throw ParseError("coordinate entries must be integers or strings, got " + value.dump());
}

json rational_to_entry(const Rational& value) {
    if (value.is_integer() && value.abs() <= Rational(1000000000)) {
        return json(value.numerator().convert_to<std::int64_t>());
    }
    return json(value.to_string());
}

std::vector<Point<Rational>> points_from_json(const json& array, std::size_t dimension) {
    if (!array.is_array() || array.empty()) {
        throw ParseError("\"points\" must be a non-empty array of coordinate arrays");
    }
    std::vector<Point<Rational>> points;
    points.reserve(array.size());
    for (const json& row : array) {
        if (!row.is_array()) {
            throw ParseError("each point must be an array of coordinates");
        }
        if (row.size() != dimension) {
            throw DimensionMismatchError("point length " + std::to_string(row.size()) +
                                         " does not match dimension " + std::to_string(dimension));
        }
        Point<Rational> p;
        p.reserve(row.size());
        for (const json& entry : row) {
            p.push_back(entry_to_rational(entry));
        }
        points.push_back(std::move(p));
    }
    return points;
}

} // namespace

PointFile parse_json_points(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("points")) {
        throw ParseError("expected an object with \"dimension\" and \"points\"");
    }
    if (!doc["dimension"].is_number_integer() || doc["dimension"].get<std::int64_t>() < 1) {
        throw ParseError("\"dimension\" must be a positive integer");
    }
    PointFile file;
    file.dimension = doc["dimension"].get<std::size_t>();
    file.points = points_from_json(doc["points"], file.dimension);
    return file;
}

PointFile parse_csv_points(const std::string& text) {
    PointFile file;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> coords = parse_coordinates(line);
        if (file.points.empty()) {
            file.dimension = coords.size();
        } else if (coords.size() != file.dimension) {
            throw DimensionMismatchError("CSV row length " + std::to_string(coords.size()) +
                                         " does not match inferred dimension " +
                                         std::to_string(file.dimension));
        }
        file.points.push_back(std::move(coords));
    }
    if (file.points.empty()) {
        throw ParseError("CSV file contains no points");
    }
    if (file.dimension < 1) {
        throw DimensionMismatchError("dimension must be at least 1");
    }
    return file;
}

PointFile read_point_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (path.extension() == ".csv") {
        return parse_csv_points(buffer.str());
    }
    return parse_json_points(buffer.str());
}

std::string point_file_to_json(const PointFile& file) {
    json doc;
    doc["dimension"] = file.dimension;
    json rows = json::array();
    for (const auto& p : file.points) {
        json row = json::array();
        for (const auto& c : p) row.push_back(rational_to_entry(c));
        rows.push_back(std::move(row));
    }
    doc["points"] = std::move(rows);
    return doc.dump();
}

std::string config_to_json(const Configuration<Rational>& cfg) {
    return point_file_to_json({cfg.dimension(), cfg.points()});
}

Configuration<Rational> config_from_json(const std::string& text) {
    return to_configuration(parse_json_points(text));
}

std::vector<Rational> parse_coordinates(std::string_view text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        coords.push_back(Rational::from_string(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return coords;
}

Configuration<Rational> to_configuration(const PointFile& file) {
    if (file.points.size() != file.dimension + 2) {
        throw DimensionMismatchError("identity commands need dimension+2 = " +
                                     std::to_string(file.dimension + 2) + " points, got " +
                                     std::to_string(file.points.size()));
    }
    return Configuration<Rational>(file.dimension, file.points);
}

std::vector<Point<Rational>> to_simplex(const PointFile& file) {
    if (file.points.size() != file.dimension + 1) {
        throw DimensionMismatchError("barycentric commands need dimension+1 = " +
                                     std::to_string(file.dimension + 1) + " simplex points, got " +
                                     std::to_string(file.points.size()));
    }
    return file.points;
}

} // namespace simplexsum::io
