#include "spectral/svg.hpp"

#include <sstream>

namespace spectral {

namespace {

// Fixed-point decimal with 6 places, computed in integer arithmetic so the
// output is identical across platforms.
std::string dec6(const Rational& q) {
    bool neg = sgn(q) < 0;
    Rational a = neg ? Rational(-q) : q;
    Integer scaled;
    Rational t = a * 1000000 + Rational(1, 2);
    mpz_fdiv_q(scaled.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    Integer ip = scaled / 1000000;
    Integer fp = scaled % 1000000;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    std::string out = (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.get_str() + "." + frac;
    return out;
}

struct Box {
    Rational x0, y0, x1, y1;
    bool any = false;

    void include(const Rational& x, const Rational& y) {
        if (!any) {
            x0 = x1 = x;
            y0 = y1 = y;
            any = true;
            return;
        }
        if (cmp(x, x0) < 0) x0 = x;
        if (cmp(x, x1) > 0) x1 = x;
        if (cmp(y, y0) < 0) y0 = y;
        if (cmp(y, y1) > 0) y1 = y;
    }
};

} // namespace

std::string render_svg(const SpectralRegion& r) {
    Box box;
    for (const auto& p : r.primitives()) {
        switch (p.kind) {
            case PrimitiveKind::Point:
                box.include(p.a.re, p.a.im);
                break;
            case PrimitiveKind::Segment:
                box.include(p.a.re, p.a.im);
                box.include(p.b.re, p.b.im);
                break;
            case PrimitiveKind::Circle:
            case PrimitiveKind::Disk:
                box.include(p.a.re - p.radius, p.a.im - p.radius);
                box.include(p.a.re + p.radius, p.a.im + p.radius);
                break;
        }
    }
    if (!box.any) {
        box.include(Rational(-1), Rational(-1));
        box.include(Rational(1), Rational(1));
    }
    Rational w = box.x1 - box.x0, h = box.y1 - box.y0;
    if (sgn(w) == 0) w = 2;
    if (sgn(h) == 0) h = 2;
    Rational margin_x = w * Rational(1, 20), margin_y = h * Rational(1, 20);
    Rational vx = box.x0 - margin_x, vw = w + 2 * margin_x;
    Rational vh = h + 2 * margin_y;
    // y axis is mirrored: a point z is drawn at (re z, -im z)
    Rational vy = -(box.y1 + margin_y);
    Rational stroke = std::max(vw, vh) / 200;
    Rational dot = std::max(vw, vh) / 100;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << dec6(vx) << " "
        << dec6(vy) << " " << dec6(vw) << " " << dec6(vh) << "\">\n";
    auto emit_round = [&](const RegionPrimitive& p, bool filled) {
        svg << "  <circle cx=\"" << dec6(p.a.re) << "\" cy=\"" << dec6(-p.a.im)
            << "\" r=\"" << dec6(p.radius) << "\"";
        if (filled)
            svg << " fill=\"#9ecae1\" fill-opacity=\"0.7\" stroke=\"#3182bd\"";
        else
            svg << " fill=\"none\" stroke=\"#e6550d\"";
        svg << " stroke-width=\"" << dec6(stroke) << "\"/>\n";
    };
    for (const auto& p : r.primitives())
        if (p.kind == PrimitiveKind::Disk) emit_round(p, true);
    for (const auto& p : r.primitives())
        if (p.kind == PrimitiveKind::Circle) emit_round(p, false);
    for (const auto& p : r.primitives())
        if (p.kind == PrimitiveKind::Segment)
            svg << "  <line x1=\"" << dec6(p.a.re) << "\" y1=\"" << dec6(-p.a.im)
                << "\" x2=\"" << dec6(p.b.re) << "\" y2=\"" << dec6(-p.b.im)
                << "\" stroke=\"#31a354\" stroke-width=\"" << dec6(stroke) << "\"/>\n";
    for (const auto& p : r.primitives())
        if (p.kind == PrimitiveKind::Point)
            svg << "  <circle cx=\"" << dec6(p.a.re) << "\" cy=\"" << dec6(-p.a.im)
                << "\" r=\"" << dec6(dot) << "\" fill=\"#756bb1\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace spectral
