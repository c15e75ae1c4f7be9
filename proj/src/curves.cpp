#include "leglab/curves.hpp"

#include <algorithm>
#include <cmath>

namespace leglab {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_m(int m) {
    if (m < 1) throw std::invalid_argument("frequency parameter m must be >= 1");
}
}  // namespace

Point3 gamma_m(int m, double t) {
    require_m(m);
    const double mm = double(m) * m;
    const double s = std::sin(mm * t), c = std::cos(mm * t);
    return {(s - c) / m, (s + c) / m, t - std::cos(2 * mm * t) / (2 * mm)};
}

Tangent3 gamma_m_dt(int m, double t) {
    const double mm = double(m) * m;
    const double s = std::sin(mm * t), c = std::cos(mm * t);
    return {m * (c + s), m * (c - s), 1 + std::sin(2 * mm * t)};
}

Point3 gamma_inf(double t) { return {0, 0, t}; }

Point5 lambda_i(int m, double t, double s) {
    Point3 g = gamma_m(m, t);
    return {g.x, g.y, g.z, s, 0};
}

Point5 lambda_inf(double t, double s) { return {0, 0, t, s, 0}; }

Point3 sigma(int m, double t, double w) {
    require_m(m);
    const double mm = double(m) * m;
    const double s = std::sin(mm * t), c = std::cos(mm * t);
    const double r = 1 - w;
    return {r * (s - c) / m, r * (s + c) / m, t - r * r * std::cos(2 * mm * t) / (2 * mm)};
}

Tangent3 sigma_dt(int m, double t, double w) {
    const double mm = double(m) * m;
    const double s = std::sin(mm * t), c = std::cos(mm * t);
    const double r = 1 - w;
    return {r * m * (c + s), r * m * (c - s), 1 + r * r * std::sin(2 * mm * t)};
}

Tangent3 sigma_dw(int m, double t, double w) {
    const double mm = double(m) * m;
    const double s = std::sin(mm * t), c = std::cos(mm * t);
    const double r = 1 - w;
    return {(c - s) / m, -(c + s) / m, r * std::cos(2 * mm * t) / mm};
}

Point5 pi_embedding(int m, double t, double s, double w) {
    Point3 g = sigma(m, t, w);
    return {g.x, g.y, g.z, s, 0};
}

ParamMap3 gamma_map(int m) {
    require_m(m);
    ParamMap3 f;
    f.domain = Box::line();
    f.value = [m](const Params& u) { return gamma_m(m, u[0]); };
    f.jet = [m](const Params& u, int) { return gamma_m_dt(m, u[0]); };
    return f;
}

ParamMap3 gamma_inf_map() {
    ParamMap3 f;
    f.domain = Box::line();
    f.value = [](const Params& u) { return gamma_inf(u[0]); };
    f.jet = [](const Params&, int) { return Tangent3{0, 0, 1}; };
    return f;
}

ParamMap5 lambda_map(int m) {
    require_m(m);
    ParamMap5 f;
    f.domain = Box::square();
    f.value = [m](const Params& u) { return lambda_i(m, u[0], u[1]); };
    f.jet = [m](const Params& u, int axis) -> Tangent5 {
        if (axis == 0) {
            Tangent3 g = gamma_m_dt(m, u[0]);
            return {g.x, g.y, g.z, 0, 0};
        }
        return {0, 0, 0, 1, 0};
    };
    return f;
}

ParamMap5 lambda_inf_map() {
    ParamMap5 f;
    f.domain = Box::square();
    f.value = [](const Params& u) { return lambda_inf(u[0], u[1]); };
    f.jet = [](const Params&, int axis) -> Tangent5 {
        if (axis == 0) return {0, 0, 1, 0, 0};
        return {0, 0, 0, 1, 0};
    };
    return f;
}

ParamMap3 sigma_map(int m) {
    require_m(m);
    ParamMap3 f;
    f.domain = Box{2, {Interval{-1, 1}, Interval{0, 1}}};
    f.value = [m](const Params& u) { return sigma(m, u[0], u[1]); };
    f.jet = [m](const Params& u, int axis) {
        return axis == 0 ? sigma_dt(m, u[0], u[1]) : sigma_dw(m, u[0], u[1]);
    };
    return f;
}

ParamMap5 pi_map(int m) {
    require_m(m);
    ParamMap5 f;
    f.domain = Box{3, {Interval{-1, 1}, Interval{-1, 1}, Interval{0, 1}}};
    f.value = [m](const Params& u) { return pi_embedding(m, u[0], u[1], u[2]); };
    f.jet = [m](const Params& u, int axis) -> Tangent5 {
        if (axis == 1) return {0, 0, 0, 1, 0};
        Tangent3 g = axis == 0 ? sigma_dt(m, u[0], u[2]) : sigma_dw(m, u[0], u[2]);
        return {g.x, g.y, g.z, 0, 0};
    };
    return f;
}

ParamMap3 sigma_slice_map(int m, double w) {
    require_m(m);
    ParamMap3 f;
    f.domain = Box::line();
    f.value = [m, w](const Params& u) { return sigma(m, u[0], w); };
    f.jet = [m, w](const Params& u, int) { return sigma_dt(m, u[0], w); };
    return f;
}

double sigma_slice_transversality(double w) { return w * (2 - w); }

double gamma_c0_analytic(int m) {
    const double m2 = double(m) * m;
    return std::sqrt(2.0 / m2 + 1.0 / (4.0 * m2 * m2));
}

double pi_fiber_diameter(int m, double t, int w_samples) {
    std::vector<Point3> pts;
    pts.reserve(w_samples);
    for (int i = 0; i < w_samples; ++i)
        pts.push_back(sigma(m, t, double(i) / (w_samples - 1)));
    double best = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, (pts[i] - pts[j]).norm());
    return best;
}

std::vector<CuspRecord> cusp_set(int m) {
    require_m(m);
    const double mm = double(m) * m;
    std::vector<CuspRecord> out;
    // t = (4i-1)pi/(4 m^2) in (-1,1)  <=>  |4i-1| < 4 m^2/pi
    const double lim = 4 * mm / kPi;
    const int ilo = int(std::floor((1 - lim) / 4)) - 1;
    const int ihi = int(std::ceil((1 + lim) / 4)) + 1;
    for (int i = ilo; i <= ihi; ++i) {
        const double t = (4.0 * i - 1) * kPi / (4 * mm);
        if (t <= -1 || t >= 1) continue;
        CuspRecord c;
        c.t = t;
        c.index = i;
        const double ci = (i % 2 == 0) ? 1.0 : -1.0;  // cos(i pi)
        c.x = -std::sqrt(2.0) * ci / m;
        c.z = t;  // cos(2 m^2 t) vanishes at the cusps
        c.side = (i % 2 != 0) ? CuspSide::Right : CuspSide::Left;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const CuspRecord& a, const CuspRecord& b) { return a.t < b.t; });
    return out;
}

CuspCounts cusp_counts(int m) {
    require_m(m);
    const double a = double(m) * m / (2 * kPi);
    CuspCounts c;
    c.right = 1 + int(std::floor(a - 3.0 / 8)) + int(std::floor(a + 3.0 / 8));
    c.left = 1 + int(std::floor(a - 1.0 / 8)) + int(std::floor(a + 1.0 / 8));
    return c;
}

double frac_m2_over_2pi(int m) {
    const double a = double(m) * m / (2 * kPi);
    return a - std::floor(a);
}

std::vector<int> equidistribution_filter(int m_lo, int m_hi) {
    std::vector<int> out;
    for (int m = std::max(1, m_lo); m <= m_hi; ++m) {
        const double f = frac_m2_over_2pi(m);
        if (f > 0 && f < 0.125) out.push_back(m);
    }
    return out;
}

std::vector<double> z_axis_crossings(int m) {
    require_m(m);
    const double mm = double(m) * m;
    std::vector<double> out;
    const double lim = 4 * mm / kPi;
    const int ilo = int(std::floor((-1 - lim) / 4)) - 1;
    const int ihi = int(std::ceil((lim - 1) / 4)) + 1;
    for (int i = ilo; i <= ihi; ++i) {
        const double t = (4.0 * i + 1) * kPi / (4 * mm);
        if (t > -1 && t < 1) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> t_set(int M) {
    require_m(M);
    const double mm = double(M) * M;
    std::vector<double> out;
    const double lim = 4 * mm / kPi;
    const int klo = int(std::floor((-1 - lim) / 8)) - 1;
    const int khi = int(std::ceil((lim - 1) / 8)) + 1;
    for (int k = klo; k <= khi; ++k) {
        const double t = (8.0 * k + 1) * kPi / (4 * mm);
        if (t > -1 && t < 1) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SequencePlan build_sequence_plan(int N, const GridSpec& c0_grid) {
    if (N < 1) throw std::invalid_argument("build_sequence_plan: N must be >= 1");
    SequencePlan plan;
    ParamMap5 lim = lambda_inf_map();
    int prev = 1;
    double run = 0;
    for (int i = 1; i <= N; ++i) {
        int lo = std::max(1 << (i - 1), prev);
        int m = lo + 1;
        while (true) {
            const double f = frac_m2_over_2pi(m);
            if (f > 0 && f < 0.125) break;
            ++m;
        }
        plan.m.push_back(m);
        prev = m;
        const double d = c0_distance(lambda_map(m), lim, c0_grid);
        plan.c0_to_limit.push_back(d);
        run += d;
        plan.partial_sum.push_back(run);
    }
    plan.tail_bound = 4.0 / std::pow(2.0, N);
    return plan;
}

}  // namespace leglab
