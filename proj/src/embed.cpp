#include "xfc/embed.hpp"

#include <bit>
#include <set>

#include "xfc/errors.hpp"
#include "xfc/stable.hpp"

namespace xfc {

namespace {

constexpr int kTemplateCap = 6;

std::string mask_label(std::uint64_t mask, int t) {
    std::string s(static_cast<std::size_t>(t), '0');
    for (int i = 0; i < t; ++i)
        if (mask & (1ull << i)) s[i] = '1';
    return s;
}

}  // namespace

EmbedResult embed_udisj_via_gadget(const GadgetGraph& gg) {
    const Graph& tmpl = gg.tmpl();
    int t = tmpl.vertex_count();
    if (t > kTemplateCap)
        throw InstanceTooLarge("embedding capped at K_" + std::to_string(kTemplateCap));
    if (tmpl.edge_count() != t * (t - 1) / 2)
        throw Error("embedding requires a complete template K_t");

    std::uint64_t total = 1ull << t;
    std::vector<std::string> row_labels, col_labels;
    for (std::uint64_t a = 1; a < total; ++a) row_labels.push_back(mask_label(a, t));
    for (std::uint64_t b = 0; b < total; ++b) col_labels.push_back(mask_label(b, t));

    EmbedResult res;
    res.N = RatMatrix(std::move(row_labels), std::move(col_labels));

    // column data: the canonical stable-set extensions S(b)
    std::vector<std::set<int>> stable_sets;
    for (std::uint64_t bm = 0; bm < total; ++bm) {
        std::vector<int> b;
        for (int i = 0; i < t; ++i)
            if (bm & (1ull << i)) b.push_back(tmpl.vertices()[i]);
        auto s = gg.extend_stable_set(b);
        if (!is_stable(gg.graph(), s))
            throw IdentityViolation("S(b) is not stable for b = " + mask_label(bm, t));
        res.col_stable_sets.emplace_back(s.begin(), s.end());
        stable_sets.emplace_back(s.begin(), s.end());
    }

    for (std::uint64_t am = 1; am < total; ++am) {
        std::vector<int> a;
        for (int i = 0; i < t; ++i)
            if (am & (1ull << i)) a.push_back(tmpl.vertices()[i]);
        Graph sub = gg.sub(a);
        Graph small = gg.small(a);
        int alpha_sub = stability_number(sub);
        int alpha_small = stability_number(small);
        res.row_gadget_vertices.push_back(sub.vertices());
        res.row_small_vertices.push_back(small.vertices());

        for (std::uint64_t bm = 0; bm < total; ++bm) {
            const auto& sb = stable_sets[bm];
            long long hit_sub = 0, hit_small = 0;
            for (int v : sub.vertices()) hit_sub += sb.count(v);
            for (int v : small.vertices()) hit_small += sb.count(v);
            long long value = (alpha_sub - hit_sub) + (alpha_small - hit_small);
            long long inter = std::popcount(am & bm);
            if (value != (1 - inter) * (1 - inter))
                throw IdentityViolation(
                    "embedding identity failed at (a, b) = (" + mask_label(am, t) + ", " +
                    mask_label(bm, t) + "): N = " + std::to_string(value) +
                    ", (1-|a∩b|)^2 = " + std::to_string((1 - inter) * (1 - inter)));
            res.N.set(am - 1, bm, Rat(value));
        }
    }
    return res;
}

}  // namespace xfc
