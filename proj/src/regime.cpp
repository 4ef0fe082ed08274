#include "xfc/regime.hpp"

#include <cmath>

#include "xfc/errors.hpp"

namespace xfc {

double lambert_w(double x) {
    if (x < 0) throw Error("lambert_w implemented for x >= 0 only");
    if (x == 0) return 0.0;
    double w = x < 1 ? x : std::log(x);
    for (int it = 0; it < 100; ++it) {
        double ew = std::exp(w);
        double f = w * ew - x;
        double step = f / (ew * (1.0 + w));
        w -= step;
        if (std::fabs(step) < 1e-12) break;
    }
    return w;
}

double c0_constant() {
    static const double c0 = std::exp(2.0 * lambert_w(1.0 / std::sqrt(2.0))) / 2.0;
    return c0;
}

GStat g_statistic(double n, double p, double v, double d) {
    if (!(p > 0.0) || p > 0.5) throw Error("g statistic needs 0 < p <= 1/2");
    if (!(v < n)) throw Error("g statistic needs v < n");
    if (v <= 0) throw Error("g statistic needs v > 0");
    GStat out;
    out.g = v * v * std::pow(p, -d / 2.0) * std::pow(1.0 - p, -v / 2.0) / (n - v);
    out.c0_g_squared = c0_constant() * out.g * out.g;
    return out;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::High: return "high";
        case Regime::Middle: return "middle";
        case Regime::Low: return "low";
    }
    return "?";
}

namespace {

double high_cutoff(double n) { return std::pow(std::log(n) / n, 0.25); }
double low_cutoff(double n) { return std::pow(n, -1.0 / 3.0); }

double t_high_formula(double n, double p, double c) {
    double arg = std::log(n * std::pow(p, 4.0)) / p;
    return arg > 0 ? c * std::sqrt(arg) : 0.0;
}
double t_mid_formula(double p) { return 1.0 / std::sqrt(p * std::log(1.0 / p)); }
double t_low_formula(double n, double p, double delta) {
    return delta * std::sqrt(std::sqrt(p * n) / std::log(1.0 / p));
}

int ell_formula(double p, int t) {
    double lg = std::log(1.0 / p);
    double inner = lg / (std::sqrt(4.0 + 2.0 * p * t * static_cast<double>(t) * lg) + 2.0) -
                   0.75;
    int ell = 2 * static_cast<int>(std::ceil(inner));
    return ell;
}

}  // namespace

RegimeParams select_parameters_forced(double n, double p, Regime regime, double c,
                                      double delta) {
    if (!(n >= 2)) throw Error("need n >= 2");
    if (!(p > 1.0 / n) || !(p < 1.0))
        throw Error("need 1/n < p < 1");
    if (!(c > 0)) throw Error("need c > 0");
    if (!(delta > 0) || !(delta < 1)) throw Error("need 0 < delta < 1");

    RegimeParams out;
    out.regime = regime;
    double traw = 0.0;
    switch (regime) {
        case Regime::High:
            traw = t_high_formula(n, p, c);
            if (c >= 2.0 / std::sqrt(3.0))
                out.flags.push_back("c outside (0, 2/sqrt(3)); high-regime bound not proven");
            if (!(n * std::pow(p, 4.0) > 1.0))
                out.flags.push_back("n p^4 <= 1; high-regime formula degenerate");
            break;
        case Regime::Middle:
            traw = t_mid_formula(p);
            break;
        case Regime::Low:
            traw = t_low_formula(n, p, delta);
            break;
    }
    out.t = static_cast<int>(std::ceil(traw));
    if (out.t < 1) {
        out.t = 1;
        out.flags.push_back("t formula below 1; clamped");
    }
    if (regime == Regime::High) {
        out.ell = 0;
    } else {
        out.ell = ell_formula(p, out.t);
        if (out.ell < 0) {
            out.ell = 0;
            out.flags.push_back("ell formula negative at this finite n; clamped to 0");
        }
    }
    out.gamma = Rat(2 * out.ell + 3, 2);
    out.d = regime == Regime::High ? Rat(4) : Rat(2) + Rat(2) / out.gamma;
    out.v = out.t + (2ll * out.ell + 2) * out.t * (out.t - 1) / 2;
    out.predicted_exponent = out.t * std::log2(1.5);
    if (!(static_cast<double>(out.v) < n))
        out.flags.push_back("asymptotic regime not reached: v >= n");
    if (p <= 0.5 && static_cast<double>(out.v) < n) {
        out.g = g_statistic(n, p, static_cast<double>(out.v), to_double(out.d)).g;
        out.g_valid = true;
    } else {
        out.flags.push_back("g statistic unavailable (needs p <= 1/2 and v < n)");
    }
    out.asymptotic_ok = out.flags.empty();
    return out;
}

RegimeParams select_parameters(double n, double p, double c, double delta) {
    Regime regime = Regime::Middle;
    if (p > high_cutoff(n))
        regime = Regime::High;
    else if (p < low_cutoff(n))
        regime = Regime::Low;
    return select_parameters_forced(n, p, regime, c, delta);
}

XcBoundReport xc_bound_report(double n, double p, double c, double delta) {
    XcBoundReport rep;
    rep.params = select_parameters(n, p, c, delta);
    rep.lower_exponent = rep.params.predicted_exponent;
    rep.upper_exponent = std::log2(n + 1.0) * 4.0 * std::log(n) / p;
    rep.caveat = "holds w.h.p. per the probabilistic statements; not certified for a "
                 "specific sample";
    return rep;
}

std::vector<SweepRow> xc_bound_sweep(double n, const std::vector<double>& p_grid, double c,
                                     double delta) {
    std::vector<SweepRow> rows;
    const double log15 = std::log2(1.5);
    for (double p : p_grid) {
        SweepRow row;
        row.p = p;
        row.selected = select_parameters(n, p, c, delta);
        row.t_high = std::ceil(t_high_formula(n, p, c));
        row.t_mid = std::ceil(t_mid_formula(p));
        row.t_low = std::ceil(t_low_formula(n, p, delta));
        row.high_valid = p > high_cutoff(n);
        row.low_valid = p < low_cutoff(n);
        row.mid_valid = !row.high_valid && !row.low_valid;
        row.exp_high = row.high_valid ? row.t_high * log15 : 0.0;
        row.exp_mid = row.mid_valid ? row.t_mid * log15 : 0.0;
        row.exp_low = row.low_valid ? row.t_low * log15 : 0.0;
        row.upper_exponent = std::log2(n + 1.0) * 4.0 * std::log(n) / p;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> default_sweep_grid(double n, int points) {
    if (points < 2) throw Error("sweep grid needs at least 2 points");
    double lo = std::log(std::pow(n, -0.4));
    double hi = std::log(1.0 / std::log(n));
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = std::exp(lo + (hi - lo) * i / (points - 1));
    return grid;
}

}  // namespace xfc
