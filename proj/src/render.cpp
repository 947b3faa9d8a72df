#include "mwisp/render.hpp"

#include "mwisp/error.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace mwisp {

using geom::assemble_region;
using geom::make_rectangle;
using geom::to_double;

std::string format_decimal(const Rational& r, int decimals) {
    BigInt scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    BigInt num = abs(r.get_num()) * scale * 2 + r.get_den();
    BigInt den = r.get_den() * 2;
    BigInt q = num / den;  // round half away from zero
    std::string digits = q.get_str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals))
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
    }
    if (sgn(r) < 0 && digits != "0") digits.insert(0, "-");
    return digits;
}

namespace {

class Canvas {
public:
    Canvas(const Rational& N, const SvgOptions& opt) : N_(N), opt_(opt) {
        std::string n = format_decimal(N, opt.decimals);
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.pixels << "\" height=\"" << opt.pixels
             << "\" viewBox=\"0 0 " << n << ' ' << n << "\">\n";
        // stroke widths are in user units
        stroke_ = N > 0 ? to_double(N) / opt.pixels : 1.0;
        out_ << "<rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n
             << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << width(2) << "\"/>\n";
    }

    std::string x(const Rational& v) const { return format_decimal(v, opt_.decimals); }
    std::string y(const Rational& v) const { return format_decimal(N_ - v, opt_.decimals); }

    std::string width(double px) const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", px * stroke_);
        return buf;
    }

    void ring_path(const Ring& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out_ << (i ? " L" : "M") << x(r[i].x) << ',' << y(r[i].y);
        out_ << " Z";
    }

    void polygon(const Ring& r, const std::string& fill, const std::string& stroke, double px,
                 const std::string& extra = "") {
        out_ << "<path d=\"";
        ring_path(r);
        out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width(px) << '"' << extra
             << "/>\n";
    }

    void region(const Region& reg, const std::string& fill, const std::string& extra = "") {
        for (const auto& c : reg.components()) {
            out_ << "<path d=\"";
            ring_path(c.outer);
            for (const auto& h : c.holes) {
                out_ << ' ';
                ring_path(h);
            }
            out_ << "\" fill=\"" << fill << "\" fill-rule=\"evenodd\" stroke=\"none\"" << extra << "/>\n";
        }
    }

    void segment(const Segment& s, const std::string& stroke, double px) {
        out_ << "<line x1=\"" << x(s.a.x) << "\" y1=\"" << y(s.a.y) << "\" x2=\"" << x(s.b.x) << "\" y2=\""
             << y(s.b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width(px) << "\"/>\n";
    }

    void polyline(const std::vector<Point>& pts, const std::string& stroke, double px) {
        out_ << "<path d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " L" : "M") << x(pts[i].x) << ',' << y(pts[i].y);
        out_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width(px) << "\"/>\n";
    }

    void label(const Point& p, const std::string& text) {
        out_ << "<text x=\"" << x(p.x) << "\" y=\"" << y(p.y) << "\" font-size=\"" << width(10)
             << "\" text-anchor=\"middle\">" << text << "</text>\n";
    }

    void comment(const std::string& text) { out_ << "<!-- " << text << " -->\n"; }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    Rational N_;
    SvgOptions opt_;
    double stroke_ = 1;
    std::ostringstream out_;
};

Point centroid(const Ring& r) {
    Point c{0, 0};
    for (const auto& p : r) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= static_cast<long>(r.size());
    c.y /= static_cast<long>(r.size());
    return c;
}

// id text is user supplied
std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

const char* const kTints[] = {"#fde0dd", "#e0ecf4", "#e5f5e0", "#fff7bc", "#efedf5", "#fee6ce"};

}  // namespace

std::string svg_instance(const Instance& inst, const SvgOptions& opt) {
    Canvas cv(Rational(inst.N), opt);
    for (const auto& p : inst.polygons) {
        cv.polygon(p.shape.vertices(), "#9ecae1", "#08519c", 1, " fill-opacity=\"0.4\"");
        cv.label(centroid(p.shape.vertices()), escape(p.id));
    }
    return cv.finish();
}

std::string svg_solution(const Instance& inst, const Solution& sol, const SvgOptions& opt) {
    Canvas cv(Rational(inst.N), opt);
    for (const auto& p : inst.polygons) {
        bool chosen = std::binary_search(sol.chosen.begin(), sol.chosen.end(), p.id);
        if (chosen)
            cv.polygon(p.shape.vertices(), "#31a354", "#006d2c", 1.5, " fill-opacity=\"0.6\"");
        else
            cv.polygon(p.shape.vertices(), "none", "#969696", 1, " stroke-dasharray=\"4 2\"");
        cv.label(centroid(p.shape.vertices()), escape(p.id));
    }
    return cv.finish();
}

std::string svg_subdivision(const Subdivision& sub, const TriangleSet& ts, const SvgOptions& opt) {
    Canvas cv(sub.N, opt);
    cv.comment("stripes");
    for (std::size_t i = 0; i < sub.stripes.size(); ++i) {
        const auto& s = sub.stripes[i];
        if (i % 2) cv.polygon(make_rectangle(s.x0, 0, s.x1, sub.N).vertices(), "#f0f0f0", "none", 0);
    }
    cv.comment("faces");
    for (std::size_t f = 0; f < sub.faces.size(); ++f) cv.region(sub.faces[f], kTints[f % 6], " fill-opacity=\"0.7\"");
    cv.comment("triangles");
    for (std::size_t t = 0; t < ts.triangles.size(); ++t) {
        bool owned = std::binary_search(sub.owned.begin(), sub.owned.end(), t);
        cv.polygon(ts.triangles[t].shape.vertices(), owned ? "#6baed6" : "none", "#2171b5", 1,
                   owned ? " fill-opacity=\"0.5\"" : "");
    }
    cv.comment("L_ext");
    for (const auto& s : sub.Lext) cv.segment(s, "#999999", 1.5);
    cv.comment("L0");
    for (const auto& s : sub.L0) cv.segment(s, "#000000", 1.5);
    return cv.finish();
}

std::string svg_cut(const Cut& cut, const CutReport& report, const std::vector<WeightedPolygon>& polys,
                    const Rational& N, const SvgOptions& opt) {
    Canvas cv(N, opt);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const char* fill = "#bdbdbd";
        if (i < report.sides.size()) {
            if (report.sides[i] == CutSide::Inside) fill = "#74c476";
            if (report.sides[i] == CutSide::Crossed) fill = "#fd8d3c";
        }
        cv.polygon(polys[i].shape.vertices(), fill, "#525252", 1, " fill-opacity=\"0.6\"");
    }
    cv.polygon(cut.gamma.vertices(), "none", "#de2d26", 2);
    return cv.finish();
}

std::string svg_separator(const PlanarGraph& g, const VCycle& c, const Rational& N, const SvgOptions& opt) {
    Canvas cv(N, opt);
    for (std::size_t f = 1; f < g.faces.size() && f < c.side.size(); ++f) {
        if (c.side[f] == FaceSide::Exterior) continue;
        std::vector<Segment> edges;
        for (auto h : g.faces[f].walk) edges.push_back({g.vertices[g.half[h].origin], g.vertices[g.half[h].target]});
        cv.region(assemble_region(edges), c.side[f] == FaceSide::Interior ? "#c7e9c0" : "#fdd0a2");
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) cv.segment(g.segment(e), "#636363", 1);
    auto pts = c.points(g);
    if (!pts.empty()) pts.push_back(pts.front());
    cv.polyline(pts, "#de2d26", 2.5);
    return cv.finish();
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot rename onto " + path);
    }
}

}  // namespace mwisp
