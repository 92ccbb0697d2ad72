#include "nfp/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nfp {
namespace {

using json = nlohmann::json;

// 12 significant digits, enough to round-trip at the epsilon scale while
// keeping output byte-stable across runs.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    if (std::strcmp(buf, "-0") == 0) return "0";
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_point(std::ostringstream& os, Point p) {
    os << '[' << num(p.x) << ',' << num(p.y) << ']';
}

void write_contour(std::ostringstream& os, const Contour& c) {
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        write_point(os, c[i]);
    }
    os << ']';
}

void write_contour_list(std::ostringstream& os, const std::vector<Contour>& cs) {
    os << '[';
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ',';
        write_contour(os, cs[i]);
    }
    os << ']';
}

Point read_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::runtime_error(where + ": expected a [x, y] number pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Contour read_contour(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::runtime_error(where + ": expected an array of points");
    Contour c;
    c.pts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        c.pts.push_back(read_point(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return c;
}

std::vector<Contour> read_contour_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::runtime_error(where + ": expected an array of contours");
    std::vector<Contour> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(read_contour(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

// True when p lies strictly between the endpoints of a segment.
bool strictly_interior(Point p, const Segment& s, double eps) {
    return norm(p - s.a) > eps && norm(p - s.b) > eps;
}

}  // namespace

PieceDocument parse_piece(const std::string& text, std::vector<std::string>* warnings) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("piece document: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("piece document: expected a top-level object");
    if (!j.contains("outer")) throw std::runtime_error("piece document: missing \"outer\" ring");

    PieceDocument doc;
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    if (j.contains("units")) doc.units = j["units"].get<std::string>();

    Piece& p = doc.piece;
    p.outer = read_contour(j["outer"], "outer");
    if (p.outer.size() < 3) throw std::runtime_error("outer: ring needs at least 3 vertices");
    if (j.contains("holes")) p.holes = read_contour_list(j["holes"], "holes");

    const double eps = ToleranceConfig{}.absolute(bounding_box(p.outer).diagonal());
    if (!is_simple(p.outer, eps)) throw std::runtime_error("outer: self-intersecting ring");
    if (!is_ccw(p.outer)) {
        p.outer = reversed(p.outer);
        if (warnings) warnings->push_back("outer: ring reversed to counter-clockwise");
    }

    for (std::size_t hi = 0; hi < p.holes.size(); ++hi) {
        const std::string where = "holes[" + std::to_string(hi) + "]";
        Contour& h = p.holes[hi];
        if (h.size() < 3) throw std::runtime_error(where + ": ring needs at least 3 vertices");
        if (!is_simple(h, eps)) throw std::runtime_error(where + ": self-intersecting ring");
        if (is_ccw(h)) {
            h = reversed(h);
            if (warnings) warnings->push_back(where + ": ring reversed to clockwise");
        }
        for (const Point& q : h.pts) {
            if (point_in_ring(q, p.outer, eps) == Containment::Outside) {
                throw std::runtime_error(where + ": hole extends outside the outer ring");
            }
        }
        // Vertices inside is not enough; an edge may still poke through.
        const std::size_t hn = h.size(), on = p.outer.size();
        for (std::size_t i = 0; i < hn; ++i) {
            const Segment hs{h[i], h[(i + 1) % hn]};
            for (std::size_t k = 0; k < on; ++k) {
                const Segment os_{p.outer[k], p.outer[(k + 1) % on]};
                for (const Point& x : segment_intersection(hs, os_, eps)) {
                    if (strictly_interior(x, hs, eps) && strictly_interior(x, os_, eps)) {
                        throw std::runtime_error(where + ": hole crosses the outer ring");
                    }
                }
            }
        }
    }

    if (j.contains("reference_point")) {
        p.reference = read_point(j["reference_point"], "reference_point");
    } else {
        p.reference = p.outer[0];
    }
    return doc;
}

std::string serialize_piece(const PieceDocument& doc) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": \"" << escape(doc.name) << "\",\n";
    os << "  \"units\": \"" << escape(doc.units) << "\",\n";
    os << "  \"outer\": ";
    write_contour(os, doc.piece.outer);
    os << ",\n  \"holes\": ";
    write_contour_list(os, doc.piece.holes);
    os << ",\n  \"reference_point\": ";
    write_point(os, doc.piece.reference);
    os << "\n}\n";
    return os.str();
}

NfpDocument parse_nfp(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("nfp document: ") + e.what());
    }
    NfpDocument doc;
    if (j.contains("stationary")) doc.stationary = j["stationary"].get<std::string>();
    if (j.contains("orbital")) doc.orbital = j["orbital"].get<std::string>();
    if (j.contains("epsilon")) doc.epsilon = j["epsilon"].get<double>();
    if (j.contains("tool_version")) doc.tool_version = j["tool_version"].get<std::string>();
    if (j.contains("outer")) doc.result.outer = read_contour_list(j["outer"], "outer");
    if (j.contains("holes")) doc.result.holes = read_contour_list(j["holes"], "holes");
    if (j.contains("slides")) doc.result.slides = read_contour_list(j["slides"], "slides");
    if (j.contains("fits")) {
        if (!j["fits"].is_array()) throw std::runtime_error("fits: expected an array of points");
        for (std::size_t i = 0; i < j["fits"].size(); ++i) {
            doc.result.fits.push_back(read_point(j["fits"][i], "fits[" + std::to_string(i) + "]"));
        }
    }
    return doc;
}

std::string serialize_nfp(const NfpDocument& doc) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"stationary\": \"" << escape(doc.stationary) << "\",\n";
    os << "  \"orbital\": \"" << escape(doc.orbital) << "\",\n";
    os << "  \"epsilon\": " << num(doc.epsilon) << ",\n";
    os << "  \"tool_version\": \"" << escape(doc.tool_version) << "\",\n";
    os << "  \"outer\": ";
    write_contour_list(os, doc.result.outer);
    os << ",\n  \"holes\": ";
    write_contour_list(os, doc.result.holes);
    os << ",\n  \"slides\": ";
    write_contour_list(os, doc.result.slides);
    os << ",\n  \"fits\": [";
    for (std::size_t i = 0; i < doc.result.fits.size(); ++i) {
        if (i) os << ',';
        write_point(os, doc.result.fits[i]);
    }
    os << "]\n}\n";
    return os.str();
}

std::string serialize_pieces(const std::string& operation, const std::vector<Piece>& pieces,
                             double epsilon) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"operation\": \"" << escape(operation) << "\",\n";
    os << "  \"epsilon\": " << num(epsilon) << ",\n";
    os << "  \"tool_version\": \"" << kToolVersion << "\",\n";
    os << "  \"pieces\": [";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        os << (i ? ",\n    {" : "\n    {") << "\"outer\": ";
        write_contour(os, pieces[i].outer);
        os << ", \"holes\": ";
        write_contour_list(os, pieces[i].holes);
        os << '}';
    }
    os << (pieces.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return os.str();
}

std::string serialize_components(const std::string& name, const std::vector<Contour>& components,
                                 double epsilon) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"piece\": \"" << escape(name) << "\",\n";
    os << "  \"epsilon\": " << num(epsilon) << ",\n";
    os << "  \"tool_version\": \"" << kToolVersion << "\",\n";
    os << "  \"components\": ";
    write_contour_list(os, components);
    os << "\n}\n";
    return os.str();
}

namespace {

struct SvgCanvas {
    std::ostringstream body;
    BoundingBox bb{0.0, 0.0, 1.0, 1.0};
    bool any = false;

    void take(Point p) {
        if (!any) { bb = BoundingBox{p.x, p.y, p.x, p.y}; any = true; }
        bb.expand(p);
    }

    // SVG y grows downward; emit flipped y so the drawing reads upright.
    std::string pt(Point p) const { return num(p.x) + " " + num(-p.y); }

    std::string finish() {
        const double pad = 0.05 * std::max(bb.diagonal(), 1e-9);
        const double vx = bb.min_x - pad;
        const double vy = -bb.max_y - pad;
        const double vw = bb.width() + 2.0 * pad;
        const double vh = bb.height() + 2.0 * pad;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' '
           << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\" width=\"800\" height=\""
           << num(vw > 0.0 ? 800.0 * vh / vw : 800.0) << "\">\n";
        os << body.str();
        os << "</svg>\n";
        return os.str();
    }
};

std::string ring_path(const SvgCanvas& sc, const Contour& c) {
    std::string d;
    for (std::size_t i = 0; i < c.size(); ++i) {
        d += (i == 0 ? "M " : " L ") + sc.pt(c[i]);
    }
    d += " Z";
    return d;
}

void take_ring(SvgCanvas& sc, const Contour& c) {
    for (const Point& p : c.pts) sc.take(p);
}

void fill_region(SvgCanvas& sc, const std::vector<Contour>& outers,
                 const std::vector<Contour>& holes, double stroke_w) {
    if (outers.empty()) return;
    std::string d;
    for (const Contour& c : outers) d += ring_path(sc, c) + " ";
    for (const Contour& c : holes) d += ring_path(sc, c) + " ";
    if (!d.empty()) d.pop_back();
    sc.body << "<path d=\"" << d
            << "\" fill=\"#5b8fc9\" fill-opacity=\"0.5\" fill-rule=\"evenodd\" "
               "stroke=\"#1d4f8b\" stroke-width=\"" << num(stroke_w) << "\"/>\n";
}

}  // namespace

std::string render_svg(const NfpResult& result) {
    SvgCanvas sc;
    for (const Contour& c : result.outer) take_ring(sc, c);
    for (const Contour& c : result.holes) take_ring(sc, c);
    for (const Contour& c : result.slides) take_ring(sc, c);
    for (const Point& p : result.fits) sc.take(p);

    const double diag = sc.any ? std::max(sc.bb.diagonal(), 1e-9) : 1.0;
    const double stroke_w = 0.004 * diag;
    fill_region(sc, result.outer, result.holes, stroke_w);
    for (const Contour& c : result.slides) {
        sc.body << "<path d=\"" << ring_path(sc, c)
                << "\" fill=\"none\" stroke=\"#c23a2b\" stroke-width=\"" << num(2.0 * stroke_w)
                << "\" stroke-dasharray=\"" << num(0.02 * diag) << ' ' << num(0.01 * diag)
                << "\"/>\n";
    }
    for (const Point& p : result.fits) {
        sc.body << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
                << num(0.015 * diag) << "\" fill=\"#c23a2b\"/>\n";
    }
    return sc.finish();
}

std::string render_svg(const std::vector<Piece>& pieces) {
    SvgCanvas sc;
    for (const Piece& p : pieces) {
        take_ring(sc, p.outer);
        for (const Contour& h : p.holes) take_ring(sc, h);
    }
    const double diag = sc.any ? std::max(sc.bb.diagonal(), 1e-9) : 1.0;
    for (const Piece& p : pieces) {
        fill_region(sc, {p.outer}, p.holes, 0.004 * diag);
    }
    return sc.finish();
}

}  // namespace nfp
