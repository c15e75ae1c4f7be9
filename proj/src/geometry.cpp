#include "leglab/geometry.hpp"

namespace leglab {

namespace {

template <class V, class FormFn>
DefectReport scan_defect(const ParamMap<V>& curve, const GridSpec& grid, FormFn&& form) {
    if (curve.domain.dim != 1)
        throw std::invalid_argument("legendrian_defect: curve domain must be an interval");
    DefectReport rep;
    for_each_grid_point(curve.domain, grid, [&](const Params& u) {
        if (!rep.finite) return;
        V pt = curve(u);
        V v = curve.deriv(u, 0);
        if (!pt.finite() || !v.finite()) {
            rep.finite = false;
            rep.argmax = u;
            rep.error = "non-finite evaluation at t=" + std::to_string(u[0]);
            return;
        }
        double d = std::abs(form(pt, v));
        if (d > rep.max_defect) {
            rep.max_defect = d;
            rep.argmax = u;
        }
    });
    return rep;
}

}  // namespace

DefectReport legendrian_defect(const ParamMap3& curve, const GridSpec& grid) {
    return scan_defect(curve, grid, [](const Point3& pt, const Tangent3& v) { return alpha3(pt, v); });
}

DefectReport legendrian_defect(const ParamMap5& curve, const GridSpec& grid) {
    return scan_defect(curve, grid, [](const Point5& pt, const Tangent5& v) { return beta5(pt, v); });
}

DefectReport legendrian_defect_surface(const ParamMap5& surface, const GridSpec& grid) {
    if (surface.domain.dim != 2)
        throw std::invalid_argument("legendrian_defect_surface: domain must be 2-dimensional");
    DefectReport rep;
    for_each_grid_point(surface.domain, grid, [&](const Params& u) {
        if (!rep.finite) return;
        Point5 pt = surface(u);
        for (int axis = 0; axis < 2; ++axis) {
            Tangent5 v = surface.deriv(u, axis);
            if (!pt.finite() || !v.finite()) {
                rep.finite = false;
                rep.argmax = u;
                rep.error = "non-finite evaluation";
                return;
            }
            double d = std::abs(beta5(pt, v));
            if (d > rep.max_defect) {
                rep.max_defect = d;
                rep.argmax = u;
            }
        }
    });
    return rep;
}

bool transverse_check(const ParamMap3& curve, const GridSpec& grid) {
    if (curve.domain.dim != 1)
        throw std::invalid_argument("transverse_check: curve domain must be an interval");
    bool ok = true;
    for_each_grid_point(curve.domain, grid, [&](const Params& u) {
        if (!ok) return;
        if (alpha3(curve(u), curve.deriv(u, 0)) <= 0) ok = false;
    });
    return ok;
}

template <class V>
static double c0_impl(const ParamMap<V>& f, const ParamMap<V>& g, const GridSpec& grid) {
    if (!f.domain.same_as(g.domain))
        throw std::invalid_argument("c0_distance: domain mismatch");
    double best = 0;
    for_each_grid_point(f.domain, grid, [&](const Params& u) {
        double d = (f(u) - g(u)).norm();
        if (d > best) best = d;
    });
    return best;
}

double c0_distance(const ParamMap3& f, const ParamMap3& g, const GridSpec& grid) {
    return c0_impl(f, g, grid);
}
double c0_distance(const ParamMap5& f, const ParamMap5& g, const GridSpec& grid) {
    return c0_impl(f, g, grid);
}

template <class V>
static double jet_mismatch_impl(const ParamMap<V>& f, const GridSpec& grid, double h) {
    if (!f.has_closed_form()) return 0;
    double worst = 0;
    for_each_grid_point(f.domain, grid, [&](const Params& u) {
        for (int axis = 0; axis < f.domain.dim; ++axis) {
            // stay clear of the boundary so the centered stencil remains inside
            if (u[axis] - h < f.domain.axis[axis].lo || u[axis] + h > f.domain.axis[axis].hi)
                continue;
            double d = (f.jet(u, axis) - f.deriv_fd(u, axis, h)).norm();
            if (d > worst) worst = d;
        }
    });
    return worst;
}

double max_jet_mismatch(const ParamMap3& f, const GridSpec& grid, double h) {
    return jet_mismatch_impl(f, grid, h);
}
double max_jet_mismatch(const ParamMap5& f, const GridSpec& grid, double h) {
    return jet_mismatch_impl(f, grid, h);
}

}  // namespace leglab
