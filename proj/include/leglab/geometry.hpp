#pragma once

// Contact-geometric measurement layer: points and tangents of (R^3, ker dz - y dx)
// and (R^5, ker dz - y dx - p dq), parametric maps with derivative access,
// grid-based sup-norm scans and Legendrian defect functionals.

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leglab {

struct V3 {
    double x = 0, y = 0, z = 0;
    V3 operator+(const V3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    V3 operator-(const V3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    V3 operator*(double c) const { return {c * x, c * y, c * z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

struct V5 {
    double x = 0, y = 0, z = 0, q = 0, p = 0;
    V5 operator+(const V5& o) const { return {x + o.x, y + o.y, z + o.z, q + o.q, p + o.p}; }
    V5 operator-(const V5& o) const { return {x - o.x, y - o.y, z - o.z, q - o.q, p - o.p}; }
    V5 operator*(double c) const { return {c * x, c * y, c * z, c * q, c * p}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z + q * q + p * p); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) && std::isfinite(q) &&
               std::isfinite(p);
    }
    double operator[](int i) const {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
            case 3: return q;
            default: return p;
        }
    }
    double& operator[](int i) {
        switch (i) {
            case 0: return x;
            case 1: return y;
            case 2: return z;
            case 3: return q;
            default: return p;
        }
    }
};

using Point3 = V3;
using Tangent3 = V3;
using Point5 = V5;
using Tangent5 = V5;

// alpha = dz - y dx evaluated on a tangent vector at pt
inline double alpha3(const Point3& pt, const Tangent3& v) { return v.z - pt.y * v.x; }

// beta = dz - y dx - p dq
inline double beta5(const Point5& pt, const Tangent5& v) { return v.z - pt.y * v.x - pt.p * v.q; }

struct Interval {
    double lo = 0, hi = 0;
    double length() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Parameter box, k in {1,2,3} axes.
struct Box {
    int dim = 1;
    std::array<Interval, 3> axis{Interval{-1, 1}, Interval{-1, 1}, Interval{-1, 1}};
    static Box line(double lo = -1, double hi = 1) { return Box{1, {Interval{lo, hi}}}; }
    static Box square(double lo = -1, double hi = 1) {
        return Box{2, {Interval{lo, hi}, Interval{lo, hi}}};
    }
    static Box cube3(Interval a, Interval b, Interval c) { return Box{3, {a, b, c}}; }
    bool same_as(const Box& o) const {
        if (dim != o.dim) return false;
        for (int i = 0; i < dim; ++i)
            if (axis[i].lo != o.axis[i].lo || axis[i].hi != o.axis[i].hi) return false;
        return true;
    }
};

struct GridSpec {
    std::array<int, 3> counts{2, 2, 2};
    bool inclusive = true;  // include endpoints
    static GridSpec line(int n) { return GridSpec{{n, 1, 1}, true}; }
    static GridSpec plane(int n0, int n1) { return GridSpec{{n0, n1, 1}, true}; }
    static GridSpec volume(int n0, int n1, int n2) { return GridSpec{{n0, n1, n2}, true}; }
    long total(int dim) const {
        long t = 1;
        for (int i = 0; i < dim; ++i) t *= counts[i];
        return t;
    }
};

using Params = std::array<double, 3>;

// Visits the full tensor grid in lexicographic order (axis 0 slowest).
template <class Fn>
void for_each_grid_point(const Box& box, const GridSpec& grid, Fn&& fn) {
    std::array<int, 3> n{1, 1, 1};
    for (int i = 0; i < box.dim; ++i) {
        n[i] = grid.counts[i];
        if (n[i] < 2) throw std::invalid_argument("GridSpec: sample counts must be >= 2");
    }
    auto coord = [&](int i, int k) {
        const Interval& I = box.axis[i];
        if (grid.inclusive) return I.lo + I.length() * double(k) / double(n[i] - 1);
        return I.lo + I.length() * (double(k) + 0.5) / double(n[i]);
    };
    Params u{box.axis[0].mid(), box.axis[1].mid(), box.axis[2].mid()};
    for (int i0 = 0; i0 < n[0]; ++i0) {
        u[0] = coord(0, i0);
        if (box.dim == 1) {
            fn(u);
            continue;
        }
        for (int i1 = 0; i1 < n[1]; ++i1) {
            u[1] = coord(1, i1);
            if (box.dim == 2) {
                fn(u);
                continue;
            }
            for (int i2 = 0; i2 < n[2]; ++i2) {
                u[2] = coord(2, i2);
                fn(u);
            }
        }
    }
}

// A parametric map from a box into R^3 or R^5.  Derivatives come from the
// closed-form jet when provided, otherwise from central differences with a
// step proportional to the axis length.
template <class V>
struct ParamMap {
    Box domain;
    std::function<V(const Params&)> value;
    std::function<V(const Params&, int axis)> jet;  // closed-form directional derivative
    double fd_scale = 1e-6;

    bool has_closed_form() const { return static_cast<bool>(jet); }

    V operator()(const Params& u) const { return value(u); }
    V at(double t) const { return value(Params{t, 0, 0}); }

    V deriv_fd(const Params& u, int axis, double h = 0) const {
        if (h <= 0) h = fd_scale * domain.axis[axis].length();
        Params a = u, b = u;
        a[axis] += h;
        b[axis] -= h;
        return (value(a) - value(b)) * (0.5 / h);
    }

    V deriv(const Params& u, int axis) const {
        if (jet) return jet(u, axis);
        return deriv_fd(u, axis);
    }
};

using ParamMap3 = ParamMap<V3>;
using ParamMap5 = ParamMap<V5>;

struct DefectReport {
    double max_defect = 0;
    Params argmax{0, 0, 0};
    bool finite = true;
    std::string error;
};

// Sup over the grid of |alpha(curve'(t))| for a curve in R^3.
DefectReport legendrian_defect(const ParamMap3& curve, const GridSpec& grid);
// Same with beta for a curve in R^5.
DefectReport legendrian_defect(const ParamMap5& curve, const GridSpec& grid);
// Surface version: max of |beta| over both coordinate directions of a 2-parameter map.
DefectReport legendrian_defect_surface(const ParamMap5& surface, const GridSpec& grid);

// True iff alpha(curve') > 0 at every grid point.
bool transverse_check(const ParamMap3& curve, const GridSpec& grid);

// Sup over the grid of the Euclidean distance |f(u) - g(u)|.  Throws on
// domain mismatch.
double c0_distance(const ParamMap3& f, const ParamMap3& g, const GridSpec& grid);
double c0_distance(const ParamMap5& f, const ParamMap5& g, const GridSpec& grid);

// Max over the grid of |closed-form jet - central difference| across all axes.
// Zero when the map carries no closed form.
double max_jet_mismatch(const ParamMap3& f, const GridSpec& grid, double h);
double max_jet_mismatch(const ParamMap5& f, const GridSpec& grid, double h);

}  // namespace leglab
