#pragma once

#include <string>
#include <vector>

#include "xfc/rational.hpp"

namespace xfc {

/// Lambert W on [0, ∞) by Newton iteration to 1e-12.
double lambert_w(double x);

/// c0 = exp(2 W(1/sqrt 2)) / 2 ≈ 1.23; the second-moment constant.
double c0_constant();

struct GStat {
    double g = 0.0;
    double c0_g_squared = 0.0;
};

/// g(n,p,v) = v^2 p^{-d/2} (1-p)^{-v/2} / (n-v), plus the bound c0 g^2 on
/// the non-containment probability. Requires 0 < p <= 1/2 and v < n.
GStat g_statistic(double n, double p, double v, double d);

enum class Regime { High, Middle, Low };
std::string regime_name(Regime r);

/// Parameter bundle for the gadget-based lower bound at finite (n, p).
/// Finite-n regime cutoffs: High when n p^4 > ln n, Low when p < n^(-1/3),
/// Middle between. A regime can also be forced explicitly.
struct RegimeParams {
    Regime regime = Regime::High;
    int t = 1;
    int ell = 0;
    Rat gamma{3, 2};           // (2*ell + 3) / 2
    Rat d = 4;                 // 4 in the high regime, else 2 + 2/gamma
    long long v = 0;           // t + (2*ell + 2) * C(t,2)
    double g = 0.0;
    bool g_valid = false;
    double predicted_exponent = 0.0;  // t * log2(3/2)
    bool asymptotic_ok = true;        // false when any flag was raised
    std::vector<std::string> flags;
};

RegimeParams select_parameters(double n, double p, double c = 1.0, double delta = 0.5);
RegimeParams select_parameters_forced(double n, double p, Regime regime, double c = 1.0,
                                      double delta = 0.5);

struct XcBoundReport {
    RegimeParams params;
    double lower_exponent = 0.0;  // t log2(3/2)
    double upper_exponent = 0.0;  // log2(n+1) * 4 ln(n) / p
    std::string caveat;
};

/// Lower/upper bound exponents on log2 xc(STAB(G(n,p))). Both hold with
/// high probability per the underlying statements; neither is certified
/// for a specific sample.
XcBoundReport xc_bound_report(double n, double p, double c = 1.0, double delta = 0.5);

struct SweepRow {
    double p = 0.0;
    RegimeParams selected;
    double t_high = 0.0, t_mid = 0.0, t_low = 0.0;     // raw formula values
    bool high_valid = false, mid_valid = false, low_valid = false;
    double exp_high = 0.0, exp_mid = 0.0, exp_low = 0.0;  // certified: 0 when invalid
    double upper_exponent = 0.0;
};

std::vector<SweepRow> xc_bound_sweep(double n, const std::vector<double>& p_grid,
                                     double c = 1.0, double delta = 0.5);

/// Log-spaced default grid from n^(-0.4) up to 1/ln n.
std::vector<double> default_sweep_grid(double n, int points);

}  // namespace xfc
