#include "frz/svg.hpp"

#include <algorithm>
#include <sstream>

namespace frz {

std::string rat_decimal(const Rat& r, int digits) {
    if (digits < 0) throw DomainError("precision must be non-negative");
    Int n = num(r), d = den(r);
    bool neg = n < 0;
    if (neg) n = -n;
    std::string s = Int(n / d).str();
    Int rem = n % d;
    if (digits > 0 && rem != 0) {
        std::string fs = Int(rem * pow_int(Int(10), unsigned(digits)) / d).str();
        fs.insert(0, std::size_t(digits) - fs.size(), '0');
        while (!fs.empty() && fs.back() == '0') fs.pop_back();
        if (!fs.empty()) s += "." + fs;
    }
    if (neg && s != "0") s.insert(0, 1, '-');
    return s;
}

namespace {

struct Board {
    std::ostringstream out;
    int digits;
    Rat ytop;  // screen y = ytop - y

    std::string px(const Rat& v) { return rat_decimal(v, digits); }
    std::string py(const Rat& y) { return rat_decimal(ytop - y, digits); }

    void line(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
        out << "    <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2)
            << "\" y2=\"" << py(y2) << "\"/>\n";
    }
    void semicircle(const Rat& xl, const Rat& xr) {
        Rat r = (xr - xl) / 2;
        out << "    <path d=\"M " << px(xl) << " " << py(Rat(0)) << " A " << px(r) << " "
            << px(r) << " 0 0 1 " << px(xr) << " " << py(Rat(0)) << "\"/>\n";
    }
    void circle(const Rat& cx, const Rat& cy, const Rat& r) {
        out << "    <circle cx=\"" << px(cx) << "\" cy=\"" << py(cy) << "\" r=\"" << px(r)
            << "\"/>\n";
    }
};

}  // namespace

std::string svg_farey(const PolygonTriangulation& t, int digits) {
    std::vector<Vec2> v = polygon_development(t);
    int m = t.n_plus_3;

    auto finite = [&](int i) { return v[i].y != 0; };
    auto coord = [&](int i) { return v[i].x / v[i].y; };

    Rat xmin, xmax;
    bool first = true;
    for (int i = 0; i < m; ++i) {
        if (!finite(i)) continue;
        Rat c = coord(i);
        if (first || c < xmin) xmin = c;
        if (first || c > xmax) xmax = c;
        first = false;
    }

    Rat span = xmax - xmin;
    Rat ytop = std::max(Rat(span / 2), Rat(1)) + Rat(1, 4);
    Rat x0 = xmin - 1, x1 = xmax + 1;
    Rat height = ytop + Rat(1, 4);

    Board b{{}, digits, ytop};
    Rat sw = std::max(Rat((x1 - x0) / 200), Rat(1, 100));

    b.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << b.px(x0)
          << " 0 " << b.px(x1 - x0) << " " << b.px(height) << "\">\n";

    b.out << "  <g fill=\"none\" stroke=\"#000\" stroke-width=\"" << b.px(sw) << "\">\n";
    b.line(x0, Rat(0), x1, Rat(0));
    std::vector<std::pair<int, int>> chords = t.diagonals;
    for (int i = 0; i + 1 < m; ++i) chords.push_back({i, i + 1});
    chords.push_back({0, m - 1});
    std::sort(chords.begin(), chords.end());
    for (auto [i, j] : chords) {
        if (finite(i) && finite(j)) {
            Rat a = coord(i), c = coord(j);
            if (c < a) std::swap(a, c);
            b.semicircle(a, c);
        } else {
            Rat a = coord(finite(i) ? i : j);
            b.line(a, Rat(0), a, ytop);
        }
    }
    b.out << "  </g>\n";

    b.out << "  <g fill=\"none\" stroke=\"#36c\" stroke-width=\"" << b.px(sw) << "\">\n";
    for (int i = 0; i < m; ++i) {
        if (finite(i)) {
            Rat r = Rat(1) / (2 * v[i].y * v[i].y);
            b.circle(coord(i), r, r);
        } else {
            b.line(x0, Rat(1), x1, Rat(1));
        }
    }
    b.out << "  </g>\n</svg>\n";
    return b.out.str();
}

}  // namespace frz
