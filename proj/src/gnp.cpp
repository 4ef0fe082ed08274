#include "xfc/gnp.hpp"

#include "xfc/errors.hpp"
#include "xfc/rng.hpp"

namespace xfc {

Graph sample_gnp(const GnpConfig& cfg) {
    if (cfg.n < 1) throw Error("G(n,p) needs n >= 1");
    if (!(cfg.p > 0.0) || !(cfg.p < 1.0))
        throw Error("G(n,p) needs 0 < p < 1");
    CounterRng rng(cfg.seed);
    std::vector<int> vertices(cfg.n);
    for (int i = 0; i < cfg.n; ++i) vertices[i] = i + 1;
    std::vector<std::pair<int, int>> edges;
    std::uint64_t counter = 0;
    for (int i = 1; i <= cfg.n; ++i)
        for (int j = i + 1; j <= cfg.n; ++j) {
            if (rng.bernoulli(counter, cfg.p)) edges.emplace_back(i, j);
            ++counter;
        }
    return Graph::from_edges(std::move(vertices), edges);
}

}  // namespace xfc
