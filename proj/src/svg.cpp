#include "cosetlab/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace cosetlab {

namespace {

using P3 = std::array<double, 3>;

double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
P3 cross3(const P3& a, const P3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
P3 scale3(const P3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
P3 add3(const P3& a, const P3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
P3 normalize3(const P3& a) { return scale3(a, 1.0 / std::sqrt(dot3(a, a))); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // avoid -0
    return buf;
}

struct Projector {
    P3 a, b, c;  // orthonormal frame, c towards rho
    // Stereographic projection from -c of a unit vector.
    bool project(const P3& p, double& x, double& y) const {
        double z = dot3(p, c);
        if (z < -0.98) return false;  // too close to the projection point
        x = dot3(p, a) / (1 + z);
        y = dot3(p, b) / (1 + z);
        return std::abs(x) < 6 && std::abs(y) < 6;
    }
};

// Geodesic arc samples between unit vectors.
std::vector<P3> slerp(const P3& u, const P3& v, int steps) {
    std::vector<P3> out;
    double ang = std::acos(std::min(1.0, std::max(-1.0, dot3(u, v))));
    for (int i = 0; i <= steps; ++i) {
        double t = static_cast<double>(i) / steps;
        double su = std::sin((1 - t) * ang), sv = std::sin(t * ang);
        if (ang < 1e-12) {
            out.push_back(u);
            continue;
        }
        out.push_back(normalize3(add3(scale3(u, su / std::sin(ang)), scale3(v, sv / std::sin(ang)))));
    }
    return out;
}

std::string polyline_path(const Projector& pr, const std::vector<P3>& pts) {
    std::string d;
    bool pen_down = false;
    for (const P3& p : pts) {
        double x, y;
        if (!pr.project(p, x, y)) {
            pen_down = false;
            continue;
        }
        d += pen_down ? "L" : "M";
        d += fmt(100 * x) + " " + fmt(-100 * y) + " ";
        pen_down = true;
    }
    return d;
}

}  // namespace

std::string render_rank3_svg(const PositiveComplex& complex) {
    const Group& g = complex.ring().group();
    if (g.rank() != 3)
        throw UnsupportedTypeError("figure rendering is implemented for rank-3 groups");

    // Orthonormal basis of the essential 3-space, by Gram-Schmidt on the
    // simple roots (floating point: rendering only).
    const int m = g.ambient_dim();
    std::vector<std::vector<double>> basis;
    for (int i = 0; i < 3; ++i) {
        std::vector<double> v(m);
        for (int j = 0; j < m; ++j) v[j] = g.simple_root(i)[j].get_d();
        for (const auto& u : basis) {
            double d = 0;
            for (int j = 0; j < m; ++j) d += v[j] * u[j];
            for (int j = 0; j < m; ++j) v[j] -= d * u[j];
        }
        double nn = 0;
        for (double x : v) nn += x * x;
        for (double& x : v) x /= std::sqrt(nn);
        basis.push_back(v);
    }
    auto coords = [&](const Vec& w) {
        P3 p{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < m; ++j) p[i] += w[j].get_d() * basis[i][j];
        return p;
    };

    Projector pr;
    pr.c = normalize3(coords(complex.rho().rho));
    P3 seed{1, 0, 0};
    if (std::abs(dot3(seed, pr.c)) > 0.9) seed = P3{0, 1, 0};
    pr.a = normalize3(add3(seed, scale3(pr.c, -dot3(seed, pr.c))));
    pr.b = cross3(pr.c, pr.a);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"-320 -320 640 640\">\n";
    out += "<rect x=\"-320\" y=\"-320\" width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // Shaded facets of the positive subcomplex; fundamental chamber darker.
    for (Elem w : complex.facets()) {
        std::array<P3, 3> v;
        for (int j = 0; j < 3; ++j) v[j] = normalize3(coords(g.rays()[g.ray_index(w, j)]));
        std::vector<P3> boundary;
        for (int e = 0; e < 3; ++e) {
            auto arc = slerp(v[e], v[(e + 1) % 3], 24);
            boundary.insert(boundary.end(), arc.begin(), arc.end());
        }
        std::string d = polyline_path(pr, boundary);
        if (d.empty()) continue;
        const char* fill = (w == g.identity()) ? "#909090" : "#d8d8d8";
        out += "<path d=\"" + d + "Z\" fill=\"" + fill + "\" stroke=\"none\"/>\n";
    }

    // Reflecting great circles.
    for (int t = 0; t < g.num_reflections(); ++t) {
        P3 nrm = normalize3(coords(g.positive_roots()[t]));
        P3 u = std::abs(nrm[0]) < 0.9 ? P3{1, 0, 0} : P3{0, 1, 0};
        u = normalize3(add3(u, scale3(nrm, -dot3(u, nrm))));
        P3 v = cross3(nrm, u);
        std::vector<P3> pts;
        for (int i = 0; i <= 256; ++i) {
            double th = 2 * M_PI * i / 256;
            pts.push_back(add3(scale3(u, std::cos(th)), scale3(v, std::sin(th))));
        }
        std::string d = polyline_path(pr, pts);
        if (!d.empty())
            out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    // The cut hyperplane projects to the unit circle.
    out += "<circle cx=\"0\" cy=\"0\" r=\"100\" fill=\"none\" stroke=\"red\" "
           "stroke-width=\"4\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace cosetlab
