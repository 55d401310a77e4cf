#include "atiyah/points_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

namespace atiyah {

std::string format_double(double value) {
    std::array<char, 64> buf;
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::vector<Point> parse_points_text(std::string_view text) {
    std::vector<Point> points;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<double> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            double value = 0.0;
            const std::string_view tok = line.substr(i, j - i);
            const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || end != tok.data() + tok.size()) {
                throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                                 std::string(tok) + "'");
            }
            fields.push_back(value);
            i = j;
        }
        if (fields.empty()) continue;
        if (fields.size() == 2) {
            points.push_back({0.0, Complex(fields[0], fields[1])});
        } else if (fields.size() == 3) {
            points.push_back({fields[0], Complex(fields[1], fields[2])});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 or 3 fields, got " +
                             std::to_string(fields.size()));
        }
    }
    return points;
}

std::string format_points(std::span<const Point> points) {
    std::string out;
    for (const Point& p : points) {
        out += format_double(p.a);
        out += ' ';
        out += format_double(p.z.real());
        out += ' ';
        out += format_double(p.z.imag());
        out += '\n';
    }
    return out;
}

std::vector<Point> fixture(std::string_view name) {
    if (name == "square") {
        return {{0.0, {0.0, 1.0}}, {0.0, {0.0, 0.0}}, {0.0, {1.0, 0.0}}, {0.0, {1.0, 1.0}}};
    }
    if (name == "collinear3") {
        return {{0.0, {0.0, 0.0}}, {0.0, {1.0, 0.0}}, {0.0, {2.0, 0.0}}};
    }
    if (name == "collinear4") {
        return {{0.0, {0.0, 0.0}}, {0.0, {1.0, 0.0}}, {0.0, {2.0, 0.0}}, {0.0, {3.0, 0.0}}};
    }
    if (name == "equilateral") {
        return {{0.0, {0.0, 0.0}}, {0.0, {1.0, 0.0}}, {0.0, {0.5, std::sqrt(3.0) / 2.0}}};
    }
    if (name == "figure1") {
        return {{0.0, {1.0, -1.32}}, {0.0, {-0.5, -2.0}}, {0.0, {1.0, -4.0}}, {0.0, {2.5, -2.0}}};
    }
    throw InvalidSpecError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
    return {"square", "collinear3", "collinear4", "equilateral", "figure1"};
}

}  // namespace atiyah
