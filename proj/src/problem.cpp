#include "xfc/problem.hpp"

#include <algorithm>
#include <bit>

#include "xfc/errors.hpp"
#include "xfc/stable.hpp"

namespace xfc {

namespace {

std::string subset_bitstring(std::uint64_t mask, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (mask & (1ull << i)) s[i] = '1';
    return s;
}

constexpr std::uint64_t kCellBudget = 1ull << 24;

}  // namespace

RatMatrix slack_matrix(const MaxProblem& p) {
    RatMatrix m(p.objective_labels, p.solution_labels);
    for (std::size_t f = 0; f < p.num_objectives(); ++f) {
        if (p.objective_values[f].size() != p.num_solutions())
            throw DimensionMismatch("objective " + p.objective_labels[f] + " has " +
                                    std::to_string(p.objective_values[f].size()) +
                                    " values for " + std::to_string(p.num_solutions()) +
                                    " solutions");
        for (std::size_t s = 0; s < p.num_solutions(); ++s) {
            Rat slack = p.guarantees[f] - p.objective_values[f][s];
            if (slack < 0)
                throw GuaranteeViolation(
                    "objective '" + p.objective_labels[f] + "' exceeds its guarantee at '" +
                    p.solution_labels[s] + "': f(s) = " +
                    rat_to_string(p.objective_values[f][s]) + " > f* = " +
                    rat_to_string(p.guarantees[f]));
            m.set(f, s, std::move(slack));
        }
    }
    return m;
}

MaxProblem stab_u_problem(const std::vector<Graph>& family, int n, const Rat& rho) {
    if (n < 1 || n > 24) throw InstanceTooLarge("stab_u universe must satisfy 1 <= n <= 24");
    if (rho < 0) throw Error("rho must be nonnegative");
    std::uint64_t solutions = 1ull << n;
    if (solutions * std::max<std::size_t>(family.size(), 1) > kCellBudget)
        throw BudgetExceeded("stab_u problem would exceed the cell budget", 0);
    for (const Graph& g : family)
        for (int v : g.vertices())
            if (v < 1 || v > n)
                throw Error("graph vertex " + std::to_string(v) + " outside [" +
                            std::to_string(n) + "]");

    MaxProblem p;
    p.solution_labels.reserve(solutions);
    for (std::uint64_t s = 0; s < solutions; ++s)
        p.solution_labels.push_back(subset_bitstring(s, n));

    for (std::size_t gi = 0; gi < family.size(); ++gi) {
        const Graph& g = family[gi];
        int alpha = stability_number(g);
        std::uint64_t vmask = 0;
        for (int v : g.vertices()) vmask |= 1ull << (v - 1);

        std::vector<Rat> row(solutions);
        Rat best = 0;
        for (std::uint64_t s = 0; s < solutions; ++s) {
            std::uint64_t inter = s & vmask;
            long long hit = std::popcount(inter);
            long long edges = 0;
            for (auto [a, b] : g.edges())
                if ((inter >> (a - 1) & 1) && (inter >> (b - 1) & 1)) ++edges;
            row[s] = Rat(hit - edges);
            if (row[s] > best) best = row[s];
            // Condition (b): value equals the intersection size when it is <= 1.
            if (hit <= 1 && row[s] != hit)
                throw IdentityViolation("stab_u condition (b) failed");
        }
        // Condition (a): the maximum over all subsets is alpha(G).
        if (best != alpha)
            throw IdentityViolation("stab_u condition (a) failed: max f = " +
                                    rat_to_string(best) + ", alpha = " +
                                    std::to_string(alpha));
        p.objective_labels.push_back("G" + std::to_string(gi) + "|" +
                                     subset_bitstring(vmask, n));
        p.objective_values.push_back(std::move(row));
        p.guarantees.push_back((Rat(1) + rho) * alpha);
    }
    return p;
}

MaxProblem stab_nu_problem(const Graph& g,
                           std::optional<std::vector<std::vector<int>>> objective_family,
                           std::uint64_t solution_cap) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> objectives;
    if (objective_family) {
        objectives = *objective_family;
        for (const auto& a : objectives)
            for (int v : a)
                if (!g.has_vertex(v))
                    throw Error("objective vertex " + std::to_string(v) + " not in graph");
    } else {
        if (n > 16)
            throw InstanceTooLarge(
                "full objective family needs |V| <= 16; pass an explicit family");
        for (std::uint64_t am = 0; am < (1ull << n); ++am) {
            std::vector<int> a;
            for (int i = 0; i < n; ++i)
                if (am & (1ull << i)) a.push_back(g.vertices()[i]);
            objectives.push_back(std::move(a));
        }
    }

    auto stable = enumerate_stable_sets(g, std::nullopt, solution_cap);
    if (stable.size() * std::max<std::size_t>(objectives.size(), 1) > kCellBudget)
        throw BudgetExceeded("stab_nu problem would exceed the cell budget", 0);

    int universe = std::max(g.max_label(), 1);
    MaxProblem p;
    for (const auto& s : stable) p.solution_labels.push_back(VertexSet(universe, s).bitstring());
    for (const auto& a : objectives) {
        std::vector<Rat> row(stable.size());
        VertexSet aset(universe, a);
        for (std::size_t si = 0; si < stable.size(); ++si) {
            int hit = 0;
            for (int v : stable[si]) hit += aset.contains(v);
            row[si] = hit;
        }
        p.objective_labels.push_back(aset.bitstring());
        p.objective_values.push_back(std::move(row));
        p.guarantees.push_back(stability_number(g.induced(a)));
    }
    return p;
}

UniformToy uniform_model_toy(int n, int k, const Rat& rho) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw Error("toy uniform model needs n a power of two so 3 log2 n is exact");
    if (k < 1 || k > n) throw Error("need 1 <= k <= n");
    int log2n = std::countr_zero(static_cast<unsigned>(n));

    UniformToy toy;
    std::vector<Graph> family;
    for (std::uint64_t am = 0; am < (1ull << n); ++am) {
        if (std::popcount(am) != k) continue;
        std::vector<int> a;
        for (int i = 0; i < n; ++i)
            if (am & (1ull << i)) a.push_back(i + 1);
        // The alpha-minimizing graph on vertex set a is the complete graph
        // (unique, so the lexicographic tie-break never fires).
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) edges.emplace_back(a[i], a[j]);
        family.push_back(Graph::from_edges(a, edges));
    }
    toy.problem = stab_u_problem(family, n, rho);
    toy.good_graphs = std::move(family);
    Rat scale = Rat(1) + rho;
    for (const Graph& g : toy.good_graphs)
        toy.shift_vector.push_back(scale * (Rat(3 * log2n) - stability_number(g)));
    toy.shifted_high = scale * Rat(3 * log2n);
    return toy;
}

}  // namespace xfc
