#pragma once

// The named curve and surface families: the Legendrian coils gamma_m, their
// transverse C^0-limit gamma_inf, the product Legendrians Lambda_m in R^5,
// the stretching surface Sigma and its thickening Pi, plus the cusp analytics
// of the gamma_m front projection (cusp census, z-axis crossings, frequency
// sequence plans).

#include <vector>

#include "leglab/geometry.hpp"

namespace leglab {

struct GammaFamily {
    int m = 1;  // frequency parameter, m >= 1
};

struct SigmaSurface {
    int m = 1;
};

struct PiEmbedding {
    int m = 1;
};

// gamma_m(t) = ((sin m^2 t - cos m^2 t)/m, (sin m^2 t + cos m^2 t)/m,
//               t - cos(2 m^2 t)/(2 m^2))
Point3 gamma_m(int m, double t);
Tangent3 gamma_m_dt(int m, double t);

Point3 gamma_inf(double t);  // (0,0,t)

// Lambda_m(t,s) = (gamma_m(t), s, 0), Lambda_inf(t,s) = (0,0,t,s,0)
Point5 lambda_i(int m, double t, double s);
Point5 lambda_inf(double t, double s);

// Sigma(t,w): scales the coil radially toward the z-axis; w=0 gives gamma_m,
// w=1 gives gamma_inf.
Point3 sigma(int m, double t, double w);
Tangent3 sigma_dt(int m, double t, double w);
Tangent3 sigma_dw(int m, double t, double w);

// Pi(t,s,w) = (Sigma(t,w), s, 0)
Point5 pi_embedding(int m, double t, double s, double w);

// ParamMap builders (closed-form jets everywhere)
ParamMap3 gamma_map(int m);
ParamMap3 gamma_inf_map();
ParamMap5 lambda_map(int m);      // (t,s) in [-1,1]^2
ParamMap5 lambda_inf_map();
ParamMap3 sigma_map(int m);       // (t,w) in [-1,1]x[0,1], as two curves-in-one; dim 2
ParamMap5 pi_map(int m);          // (t,s,w)
ParamMap3 sigma_slice_map(int m, double w);  // t -> Sigma(t,w)

// alpha(d/dt Sigma(t,w)) is independent of t; equals w(2-w).
double sigma_slice_transversality(double w);

// sup_t |gamma_m(t) - gamma_inf(t)| = sqrt(2/m^2 + 1/(4 m^4))
double gamma_c0_analytic(int m);

// max over w-pairs of |Sigma(t,w1)-Sigma(t,w2)|, scanned over a w-grid
double pi_fiber_diameter(int m, double t, int w_samples = 64);

enum class CuspSide { Left, Right };

struct CuspRecord {
    double t = 0;       // parameter of the cusp, in (-1,1)
    double x = 0, z = 0;  // front position
    CuspSide side = CuspSide::Left;
    int index = 0;      // the integer i with t = (4i-1)pi/(4 m^2)
};

// Cusps of the gamma_m front: t = (4i-1)pi/(4m^2), front point
// (-sqrt(2) cos(i pi)/m, t); side Right iff x attains a local maximum there.
std::vector<CuspRecord> cusp_set(int m);

struct CuspCounts {
    int right = 0, left = 0;
};

// Closed-form census: right = 1 + floor(m^2/2pi - 3/8) + floor(m^2/2pi + 3/8),
// left = 1 + floor(m^2/2pi - 1/8) + floor(m^2/2pi + 1/8).
CuspCounts cusp_counts(int m);

// fractional part of m^2/(2 pi)
double frac_m2_over_2pi(int m);

// All m in [m_lo, m_hi] with m^2/(2pi) mod 1 in (0, 1/8).
std::vector<int> equidistribution_filter(int m_lo, int m_hi);

// Front of gamma_m meets the z-axis at t = (4i+1)pi/(4m^2), sorted ascending.
std::vector<double> z_axis_crossings(int m);

// T_M = {(8k+1)pi/(4M^2)} cap (-1,1), sorted ascending; consecutive points
// bracket exactly one zig-zag (two cusps) of the gamma_M front.
std::vector<double> t_set(int M);

struct SequencePlan {
    std::vector<int> m;                  // m_1 < m_2 < ... < m_N
    std::vector<double> c0_to_limit;     // measured d_C0(Lambda_i, Lambda_inf)
    std::vector<double> partial_sum;
    double tail_bound = 0;               // sum_{i>N} 2/2^{i-1} = 4/2^N
};

// Greedy least-admissible sequence: m_i is the least integer above
// max(2^{i-1}, m_{i-1}) passing the equidistribution filter.
SequencePlan build_sequence_plan(int N, const GridSpec& c0_grid);

}  // namespace leglab
