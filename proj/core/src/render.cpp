#include "sharpdeg/render.hpp"

#include <sstream>

namespace sharpdeg {

namespace {

void put(std::string& row, std::size_t col, char c) {
    if (row.size() <= col) row.resize(col + 1, ' ');
    row[col] = c;
}

// ASCII layout: one row per level, top level first, markers two columns
// apart; 'o' marks positive points, '@' negative, '.' in-simplex zeros.
std::string ascii_2d(const NewtonDiagram& D) {
    const int d = std::max(D.d(), 1);
    std::ostringstream os;
    for (int lvl = d - 1; lvl >= 0; --lvl) {
        // marker column of (lvl-b, b) is (d-1-lvl) + 2b
        std::string markers;
        for (int b = 0; b <= lvl; ++b) {
            std::size_t col = static_cast<std::size_t>(d - 1 - lvl + 2 * b);
            int v = D.sign_at(MultiIndex{lvl - b, b});
            put(markers, col, v > 0 ? 'o' : v < 0 ? '@' : '.');
            if (b < lvl && v != 0 && D.sign_at(MultiIndex{lvl - b - 1, b + 1}) != 0)
                put(markers, col + 1, '-');
        }
        os << markers << "\n";
        if (lvl == 0) break;
        std::string conn;
        for (int b = 0; b <= lvl - 1; ++b) {
            int low = D.sign_at(MultiIndex{lvl - 1 - b, b});
            if (low == 0) continue;
            std::size_t col = static_cast<std::size_t>(d - lvl + 2 * b);  // column of the low point
            if (D.sign_at(MultiIndex{lvl - b, b}) != 0) put(conn, col - 1, '\\');
            if (D.sign_at(MultiIndex{lvl - 1 - b, b + 1}) != 0) put(conn, col + 1, '/');
        }
        os << conn << "\n";
    }
    return os.str();
}

void svg_circle(std::ostringstream& os, int cx, int cy, bool positive) {
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"6\" stroke=\"black\" fill=\""
       << (positive ? "#eeeeee" : "#333333") << "\"/>\n";
}

void svg_line(std::ostringstream& os, int x1, int y1, int x2, int y2) {
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

// 2D lattice coordinates: (1,0) points up-left, (0,1) up-right.
void svg_panel_2d(std::ostringstream& os, const NewtonDiagram& D, int x0, int y0) {
    const int UX = 10, UY = 17;  // half horizontal step, vertical step
    auto cx = [&](const MultiIndex& m) { return x0 + UX * (m[1] - m[0]); };
    auto cy = [&](const MultiIndex& m) { return y0 - UY * (m[0] + m[1]); };
    for (const auto& [m, s] : D.signs()) {
        const MultiIndex nbrs[3] = {m.plus(0), m.plus(1), m.plus(0).plus(1, -1)};
        for (const MultiIndex& q : nbrs) {
            if (!q.non_negative()) continue;
            if (D.sign_at(q) == 0) continue;
            svg_line(os, cx(m), cy(m), cx(q), cy(q));
        }
    }
    for (const auto& [m, s] : D.signs()) svg_circle(os, cx(m), cy(m), s == Sign::P);
}

std::string svg_wrap(int width, int height, const std::string& body) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << body << "</svg>\n";
    return os.str();
}

NewtonDiagram project_support(const NewtonDiagram& D, int j) {
    // collapse projection; a cell shows the sign of its lexicographically
    // first source point
    NewtonDiagram out(2, D.d());
    std::map<MultiIndex, MultiIndex, GradedLexAsc> first;
    for (const auto& [m, s] : D.signs()) {
        MultiIndex cell =
            j == 1 ? MultiIndex{m[0], m[1] + m[2]}
                   : (j == 2 ? MultiIndex{m[0] + m[2], m[1]} : MultiIndex{m[0] + m[1], m[2]});
        auto it = first.find(cell);
        if (it == first.end() || GradedLexAsc{}(m, it->second)) {
            first.insert_or_assign(cell, m);
            out.set(cell, s);
        }
    }
    return out;
}

std::string ascii_3d(const NewtonDiagram& D) {
    std::ostringstream os;
    for (int j = 1; j <= 3; ++j) {
        os << "projection " << j << ":\n" << ascii_2d(project_support(D, j));
    }
    os << "levels:\n";
    for (int lvl = 0; lvl < D.d(); ++lvl) {
        os << "level " << lvl << ":\n";
        for (int a = lvl; a >= 0; --a) {
            std::string row(static_cast<std::size_t>(a), ' ');
            for (int b = 0; a + b <= lvl; ++b) {
                int v = D.sign_at(MultiIndex{a, b, lvl - a - b});
                row += (v > 0 ? 'o' : v < 0 ? '@' : '.');
                row += ' ';
            }
            os << row << "\n";
        }
    }
    return os.str();
}

} // namespace

std::string render_diagram(const NewtonDiagram& D, RenderFormat format) {
    if (D.n() == 2) {
        if (format == RenderFormat::Ascii) return ascii_2d(D);
        const int d = std::max(D.d(), 1);
        const int width = 20 * d + 40, height = 17 * d + 40;
        std::ostringstream body;
        svg_panel_2d(body, D, width / 2, height - 20);
        return svg_wrap(width, height, body.str());
    }
    if (D.n() == 3) {
        if (format == RenderFormat::Ascii) return ascii_3d(D);
        const int d = std::max(D.d(), 1);
        const int pw = 20 * d + 40, ph = 17 * d + 40;
        std::ostringstream body;
        for (int j = 1; j <= 3; ++j)
            svg_panel_2d(body, project_support(D, j), (j - 1) * pw + pw / 2, ph - 20);
        // level stack below the three projection panels
        int y = ph + ph - 20;
        for (int lvl = 0; lvl < D.d(); ++lvl) {
            NewtonDiagram slice(2, D.d());
            for (const auto& [m, s] : D.signs())
                if (m.degree() == lvl) slice.set(MultiIndex{m[0], m[1]}, s);
            svg_panel_2d(body, slice, lvl * pw + pw / 2, y);
        }
        return svg_wrap(std::max(3, d) * pw, 2 * ph, body.str());
    }
    throw PreconditionError("render_diagram: dimension must be 2 or 3");
}

} // namespace sharpdeg
