#include "nfp/fixtures.hpp"

#include <algorithm>
#include <cmath>

namespace nfp {
namespace {

struct Pocket {
    double center_x;
    double width;   // cavity width
    double height;  // cavity height, cavity top is at y = 3
};

// Bar of the given width and height 4 with top-opening pockets. Each
// pocket is a rectangular cavity reached through a mouth of width 0.5
// between y = 3 and y = 4, too narrow for a unit square to pass.
Piece pocket_bar(double bar_width, std::vector<Pocket> pockets) {
    std::sort(pockets.begin(), pockets.end(),
              [](const Pocket& a, const Pocket& b) { return a.center_x > b.center_x; });
    Contour ring;
    ring.pts = {{0.0, 0.0}, {bar_width, 0.0}, {bar_width, 4.0}};
    for (const Pocket& pk : pockets) {
        const double c = pk.center_x;
        const double hw = pk.width / 2.0;
        const double bottom = 3.0 - pk.height;
        ring.pts.push_back({c + 0.25, 4.0});
        ring.pts.push_back({c + 0.25, 3.0});
        ring.pts.push_back({c + hw, 3.0});
        ring.pts.push_back({c + hw, bottom});
        ring.pts.push_back({c - hw, bottom});
        ring.pts.push_back({c - hw, 3.0});
        ring.pts.push_back({c - 0.25, 3.0});
        ring.pts.push_back({c - 0.25, 4.0});
    }
    ring.pts.push_back({0.0, 4.0});
    Piece p;
    p.outer = std::move(ring);
    p.reference = {0.0, 0.0};
    return p;
}

Piece unit_square() {
    Piece p;
    p.outer.pts = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    p.reference = {0.0, 0.0};
    return p;
}

constexpr CountBound exactly(int n) { return {n, n}; }
constexpr CountBound at_least(int n) { return {n, -1}; }

}  // namespace

std::vector<FixtureCase> builtin_fixtures() {
    std::vector<FixtureCase> cases;

    cases.push_back({"pocket_single",
                     pocket_bar(6.0, {{3.0, 2.0, 2.0}}),
                     unit_square(),
                     {exactly(1), exactly(1), exactly(0), exactly(0)}});

    cases.push_back({"pocket_row_five",
                     pocket_bar(32.0, {{3.0, 2.0, 2.0},
                                       {9.0, 2.0, 2.0},
                                       {15.0, 2.0, 2.0},
                                       {21.0, 2.0, 2.0},
                                       {27.0, 2.0, 2.0}}),
                     unit_square(),
                     {exactly(1), exactly(5), exactly(0), exactly(0)}});

    // Cavity width equals the orbital width: the square can only slide
    // vertically inside it.
    cases.push_back({"sliding_channel",
                     pocket_bar(6.0, {{3.0, 1.0, 2.0}}),
                     unit_square(),
                     {exactly(1), at_least(0), at_least(1), exactly(0)}});

    // Cavity congruent to the orbital: exactly one enclosed placement.
    cases.push_back({"exact_cavity",
                     pocket_bar(6.0, {{3.0, 1.0, 1.0}}),
                     unit_square(),
                     {exactly(1), exactly(0), exactly(0), at_least(1)}});

    cases.push_back({"mixed_pockets",
                     pocket_bar(20.0, {{3.0, 2.0, 2.0},
                                       {9.5, 3.0, 2.0},
                                       {16.0, 1.5, 2.0}}),
                     unit_square(),
                     {exactly(1), at_least(2), exactly(0), exactly(0)}});

    return cases;
}

Piece random_convex_piece(std::mt19937_64& rng, int max_vertices, double radius) {
    std::uniform_int_distribution<int> count(3, std::max(3, max_vertices));
    std::uniform_real_distribution<double> coord(-radius, radius);
    for (;;) {
        const int n = count(rng);
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(n));
        while (static_cast<int>(pts.size()) < n) {
            const Point p{coord(rng), coord(rng)};
            if (p.x * p.x + p.y * p.y <= radius * radius) pts.push_back(p);
        }
        // Andrew monotone chain, strict turns only.
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        std::vector<Point> hull(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
            hull[k++] = pts[i];
        }
        const std::size_t lower = k + 1;
        for (std::size_t i = pts.size(); i-- > 1;) {
            while (k >= lower &&
                   cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0.0) --k;
            hull[k++] = pts[i - 1];
        }
        hull.resize(k - 1);
        if (hull.size() < 3) continue;
        Piece p;
        p.outer.pts = std::move(hull);
        p.reference = {0.0, 0.0};
        return p;
    }
}

Piece random_star_piece(std::mt19937_64& rng, int vertices, double r_min, double r_max) {
    const int n = std::max(3, vertices);
    const double step = 2.0 * M_PI / n;
    std::uniform_real_distribution<double> jitter(-0.4 * step, 0.4 * step);
    std::uniform_real_distribution<double> radius(r_min, r_max);
    Piece p;
    p.outer.pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = i * step + jitter(rng);
        const double r = radius(rng);
        p.outer.pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    p.reference = {0.0, 0.0};
    return p;
}

}  // namespace nfp
