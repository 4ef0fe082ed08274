#include "xfc/mc.hpp"

#include <cmath>
#include <thread>

#include "xfc/density.hpp"
#include "xfc/errors.hpp"
#include "xfc/gnp.hpp"
#include "xfc/induced.hpp"
#include "xfc/regime.hpp"
#include "xfc/rng.hpp"
#include "xfc/stable.hpp"

namespace xfc {

namespace {

constexpr double kWilsonZ = 1.959963984540054;  // 97.5th normal percentile

// Runs fn(trial) for every trial index over the requested worker count.
// Results land in a per-trial array, so aggregation is schedule-independent.
template <typename Fn>
void run_trials(int trials, int threads, Fn&& fn) {
    if (threads <= 1) {
        for (int t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    int per = (trials + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        int lo = w * per, hi = std::min(trials, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int t = lo; t < hi; ++t) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

McEstimate wilson_estimate(std::uint64_t successes, std::uint64_t undecided,
                           std::uint64_t trials, std::uint64_t seed) {
    if (successes + undecided > trials)
        throw Error("successes + undecided exceed trials");
    McEstimate est;
    est.trials = trials;
    est.successes = successes;
    est.undecided = undecided;
    est.seed = seed;
    std::uint64_t decided = trials - undecided;
    if (decided == 0) {
        est.flagged = true;
        est.flag_reason = "no decided trials";
        return est;
    }
    double nd = static_cast<double>(decided);
    double phat = static_cast<double>(successes) / nd;
    est.point = phat;
    double z2 = kWilsonZ * kWilsonZ;
    double denom = 1.0 + z2 / nd;
    double center = phat + z2 / (2.0 * nd);
    double spread = kWilsonZ * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd));
    est.ci_low = successes == 0 ? 0.0 : std::max(0.0, (center - spread) / denom);
    est.ci_high = successes == decided ? 1.0 : std::min(1.0, (center + spread) / denom);
    if (undecided * 100 > trials) {
        est.flagged = true;
        est.flag_reason = "more than 1% of trials undecided";
    }
    return est;
}

ContainmentReport containment_probability_mc(const Graph& h, int n, double p, int trials,
                                             std::uint64_t seed,
                                             std::uint64_t node_budget,
                                             std::optional<double> d_override,
                                             int threads) {
    if (trials < 1) throw Error("need at least one trial");
    if (h.vertex_count() > n) throw Error("pattern larger than n");

    ContainmentReport rep;
    rep.d_used = d_override ? *d_override : to_double(max_avg_degree_induced(h));

    CounterRng master(seed);
    // 0 = contains, 1 = certified non-containment, 2 = undecided
    std::vector<std::uint8_t> outcome(trials, 2);
    run_trials(trials, threads, [&](int trial) {
        GnpConfig cfg{n, p, master.stream(trial).seed()};
        Graph g = sample_gnp(cfg);
        InducedSearchResult r = find_induced(h, g, node_budget);
        if (r.outcome == InducedSearchResult::Found)
            outcome[trial] = 0;
        else if (r.outcome == InducedSearchResult::Absent)
            outcome[trial] = 1;
    });
    std::uint64_t successes = 0, undecided = 0;
    for (auto o : outcome) {
        if (o == 1) ++successes;
        if (o == 2) ++undecided;
    }
    rep.estimate = wilson_estimate(successes, undecided, trials, seed);

    double v = h.vertex_count();
    if (p > 0 && p <= 0.5 && v < n) {
        GStat gs = g_statistic(n, p, v, rep.d_used);
        rep.g = gs.g;
        rep.c0_g_squared = gs.c0_g_squared;
        rep.bound_valid = true;
    } else {
        rep.estimate.flagged = true;
        rep.estimate.flag_reason = "second-moment bound needs 0 < p <= 1/2 and v < n";
    }
    return rep;
}

AlphaTailReport alpha_tail_experiment(int n, double p, int threshold, int trials,
                                      std::uint64_t seed, int threads) {
    if (n > kAlphaVertexCap)
        throw InstanceTooLarge("alpha tail experiment capped at " +
                               std::to_string(kAlphaVertexCap) + " vertices");
    if (trials < 1) throw Error("need at least one trial");
    AlphaTailReport rep;
    rep.threshold = threshold;

    CounterRng master(seed);
    std::vector<std::uint8_t> hit(trials, 0);
    run_trials(trials, threads, [&](int trial) {
        GnpConfig cfg{n, p, master.stream(trial).seed()};
        Graph g = sample_gnp(cfg);
        if (stability_number(g) >= threshold) hit[trial] = 1;
    });
    std::uint64_t successes = 0;
    for (auto o : hit) successes += o;
    rep.estimate = wilson_estimate(successes, 0, trials, seed);
    rep.analytic_bound =
        std::pow(n * std::exp(-p * (threshold - 1) / 2.0), threshold);
    return rep;
}

StableCountReport stable_count_check(const Graph& g) {
    StableCountReport rep;
    rep.count = count_stable_sets(g);
    rep.alpha = stability_number(g);
    rep.bound = boost::multiprecision::pow(Int(g.vertex_count() + 1),
                                           static_cast<unsigned>(rep.alpha));
    rep.holds = Int(rep.count) <= rep.bound;
    if (!rep.holds)
        throw IdentityViolation("stable-set count exceeds (n+1)^alpha (bug)");
    return rep;
}

}  // namespace xfc
