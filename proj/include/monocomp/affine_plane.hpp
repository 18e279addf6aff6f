#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monocomp/finite_field.hpp"

namespace monocomp {

/**
 * Affine plane AG(2, q) over GF(q). Points are (a, b) with id a*q + b.
 * Lines 0..q²−1 are the slope lines {(x, m*x + c)} with id m*q + c;
 * lines q²..q²+q−1 are the verticals {(a, y)} with id q² + a. Classes
 * group lines by slope, one class per slope value, verticals last.
 */
struct AffinePlane {
    int q{0};
    std::vector<std::vector<std::uint32_t>> lines;    // q²+q lines, q sorted point ids each
    std::vector<std::vector<std::uint32_t>> classes;  // q+1 classes, q line ids each

    std::uint32_t point_count() const { return static_cast<std::uint32_t>(q) * q; }
    std::uint32_t line_count() const { return static_cast<std::uint32_t>(lines.size()); }

    /// Parallel class of a line: its slope, or q for verticals.
    int class_of_line(std::uint32_t line_id) const {
        return line_id < static_cast<std::uint32_t>(q) * q ? static_cast<int>(line_id) / q : q;
    }
};

inline AffinePlane build_affine_plane(const FieldTables& field) {
    const int q = field.q;
    AffinePlane plane;
    plane.q = q;
    plane.lines.reserve(static_cast<std::size_t>(q) * q + q);
    plane.classes.assign(q + 1, {});

    for (int m = 0; m < q; ++m)
        for (int c = 0; c < q; ++c) {
            std::vector<std::uint32_t> pts(q);
            for (int x = 0; x < q; ++x) {
                int y = field.plus(field.times(static_cast<std::uint8_t>(m),
                                               static_cast<std::uint8_t>(x)),
                                   static_cast<std::uint8_t>(c));
                pts[x] = static_cast<std::uint32_t>(x) * q + y;  // x-major: already sorted
            }
            plane.classes[m].push_back(static_cast<std::uint32_t>(plane.lines.size()));
            plane.lines.push_back(std::move(pts));
        }
    for (int a = 0; a < q; ++a) {
        std::vector<std::uint32_t> pts(q);
        for (int y = 0; y < q; ++y) pts[y] = static_cast<std::uint32_t>(a) * q + y;
        plane.classes[q].push_back(static_cast<std::uint32_t>(plane.lines.size()));
        plane.lines.push_back(std::move(pts));
    }
    return plane;
}

struct PlaneVerdict {
    bool ok{true};
    std::string violation;  // empty when ok
};

/// Exhaustively checks the line count, exact pair coverage, and the
/// parallel-class partition. Reports the first violation found.
inline PlaneVerdict validate_affine_plane(const AffinePlane& plane) {
    const std::uint64_t q = static_cast<std::uint64_t>(plane.q);
    const std::uint64_t n_points = q * q;
    auto fail = [](std::string why) { return PlaneVerdict{false, std::move(why)}; };

    if (plane.q < 2) return fail("order must be at least 2");
    if (plane.lines.size() != n_points + q)
        return fail("expected " + std::to_string(n_points + q) + " lines, found " +
                    std::to_string(plane.lines.size()));
    for (std::size_t id = 0; id < plane.lines.size(); ++id) {
        const auto& line = plane.lines[id];
        if (line.size() != q)
            return fail("line " + std::to_string(id) + " has " + std::to_string(line.size()) +
                        " points, expected " + std::to_string(q));
        std::vector<std::uint8_t> seen(n_points, 0);
        for (auto p : line) {
            if (p >= n_points)
                return fail("line " + std::to_string(id) + " contains out-of-range point " +
                            std::to_string(p));
            if (seen[p]++)
                return fail("line " + std::to_string(id) + " repeats point " + std::to_string(p));
        }
    }

    std::vector<std::uint8_t> cover(n_points * n_points, 0);
    for (std::size_t id = 0; id < plane.lines.size(); ++id) {
        const auto& line = plane.lines[id];
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                std::uint64_t a = std::min(line[i], line[j]);
                std::uint64_t b = std::max(line[i], line[j]);
                if (cover[a * n_points + b]++)
                    return fail("points " + std::to_string(a) + " and " + std::to_string(b) +
                                " lie on more than one line");
            }
    }
    for (std::uint64_t a = 0; a < n_points; ++a)
        for (std::uint64_t b = a + 1; b < n_points; ++b)
            if (!cover[a * n_points + b])
                return fail("points " + std::to_string(a) + " and " + std::to_string(b) +
                            " lie on no line");

    if (plane.classes.size() != q + 1)
        return fail("expected " + std::to_string(q + 1) + " classes, found " +
                    std::to_string(plane.classes.size()));
    std::vector<std::uint8_t> line_used(plane.lines.size(), 0);
    for (std::size_t ci = 0; ci < plane.classes.size(); ++ci) {
        const auto& cls = plane.classes[ci];
        if (cls.size() != q)
            return fail("class " + std::to_string(ci) + " has " + std::to_string(cls.size()) +
                        " lines, expected " + std::to_string(q));
        std::vector<std::uint8_t> pt_used(n_points, 0);
        for (auto id : cls) {
            if (id >= plane.lines.size())
                return fail("class " + std::to_string(ci) + " references missing line " +
                            std::to_string(id));
            if (line_used[id]++)
                return fail("line " + std::to_string(id) + " appears in two classes");
            for (auto p : plane.lines[id])
                if (pt_used[p]++)
                    return fail("class " + std::to_string(ci) + " covers point " +
                                std::to_string(p) + " twice");
        }
        // q disjoint lines of q points each cover all q² points exactly once.
    }
    for (std::size_t id = 0; id < plane.lines.size(); ++id)
        if (!line_used[id])
            return fail("line " + std::to_string(id) + " belongs to no class");

    return {};
}

}  // namespace monocomp
