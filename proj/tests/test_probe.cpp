#include <bit>
#include <cmath>
#include <limits>

#include <catch2/catch_amalgamated.hpp>

#include <lapgap/probe.hpp>
#include <lapgap/report.hpp>

#include "support/oracles.hpp"

using namespace lapgap;

namespace {

constexpr auto kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct BruteCount
{
    std::uint64_t complexes = 0;
    std::uint64_t hits = 0;
};

/** Count (X, k) with μ_k(X) = (d+1)(k+1) - dn using the Jacobi oracle. */
void count_hits(const SimplicialComplex& x, int d, BruteCount& out)
{
    const int n = x.vertex_count();
    ++out.complexes;
    for (int k = 0; k <= x.dimension(); ++k)
    {
        const double target = static_cast<double>((d + 1) * (k + 1) - d * n);
        auto eig = testing::jacobi_eigenvalues(laplacian(x, k).to_double());
        if (std::abs(*std::min_element(eig.begin(), eig.end()) - target) <= 1e-9)
            ++out.hits;
    }
}

/** Every antichain of vertex sets of sizes 2..d+1 containing one of size d+1. */
BruteCount brute_force_probe(int d, int n)
{
    std::vector<std::uint64_t> cand;
    for (std::uint64_t s = 0; s < (1u << n); ++s)
        if (std::popcount(s) >= 2 && std::popcount(s) <= d + 1)
            cand.push_back(s);
    BruteCount out;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << cand.size()); ++pick)
    {
        std::set<std::uint64_t> chosen;
        bool antichain = true;
        bool top = false;
        for (std::size_t i = 0; i < cand.size() && antichain; ++i)
        {
            if (!((pick >> i) & 1u))
                continue;
            for (auto m : chosen)
                if ((m & cand[i]) == m || (m & cand[i]) == cand[i])
                    antichain = false;
            chosen.insert(cand[i]);
            top = top || std::popcount(cand[i]) == d + 1;
        }
        if (!antichain || !top)
            continue;
        std::vector<std::vector<Vertex>> facets;
        for (auto mask : testing::reconstruct_from_missing(n, chosen))
        {
            std::vector<Vertex> f;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u)
                    f.push_back(v);
            if (!f.empty())
                facets.push_back(f);
        }
        count_hits(from_facets(n, facets), d, out);
    }
    return out;
}

}   // namespace

TEST_CASE("clique equality search matches brute force", "[probe]")
{
    for (int n = 2; n <= 5; ++n)
    {
        BruteCount brute;
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t g = 0; g < (1u << pairs); ++g)
        {
            std::vector<std::pair<Vertex, Vertex>> edges;
            int bit = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++bit)
                    if ((g >> bit) & 1u)
                        edges.emplace_back(a, b);
            count_hits(clique_complex(n, edges), 1, brute);
        }
        auto report = clique_equality_search(n);
        INFO("n = " << n);
        REQUIRE(report.examined == brute.complexes);
        REQUIRE(report.labeled_hits == brute.hits);
        REQUIRE(report.counterexamples() == 0);
        REQUIRE(report.complete);
        std::uint64_t copies = 0;
        for (const auto& h : report.hits)
            copies += h.labeled_copies;
        REQUIRE(copies == report.labeled_hits);
    }
    REQUIRE(clique_equality_search(4).labeled_hits == 10);
    REQUIRE(clique_equality_search(5).labeled_hits == 26);
    REQUIRE(clique_equality_search(1).hits.size() == 1);
}

TEST_CASE("exhaustive d = 2 probe matches brute force", "[probe]")
{
    for (int n = 3; n <= 5; ++n)
    {
        auto brute = brute_force_probe(2, n);
        auto report = conjecture_probe(2, n, ProbeMode::exhaustive, kUnlimited);
        INFO("n = " << n);
        REQUIRE(report.examined == brute.complexes);
        REQUIRE(report.labeled_hits == brute.hits);
        REQUIRE(report.counterexamples() == 0);
        REQUIRE(report.near_misses == 0);
    }
    REQUIRE(conjecture_probe(2, 5, ProbeMode::exhaustive, kUnlimited).examined == 5188);
}

TEST_CASE("exhaustive d = 2 probe on six vertices", "[probe]")
{
    auto report = conjecture_probe(2, 6, ProbeMode::exhaustive, kUnlimited);
    REQUIRE(report.complete);
    REQUIRE(report.examined == 3669245);
    REQUIRE(report.counterexamples() == 0);
    // (∂Δ₂ * ∂Δ₂ at k = 3) and (∂Δ₂ * Δ₂ at k = 4)
    REQUIRE(report.hits.size() == 2);
    for (const auto& h : report.hits)
    {
        REQUIRE(h.isomorphic_to_canonical);
        REQUIRE(h.mu == Catch::Approx(static_cast<double>(h.target)).margin(1e-10));
    }
}

TEST_CASE("probe budget and argument checks", "[probe]")
{
    auto partial = conjecture_probe(2, 5, ProbeMode::exhaustive, 10);
    REQUIRE_FALSE(partial.complete);
    REQUIRE(partial.examined == 10);

    REQUIRE_THROWS_AS(conjecture_probe(1, 5, ProbeMode::exhaustive, 10), InputError);
    REQUIRE_THROWS_AS(conjecture_probe(2, 2, ProbeMode::exhaustive, 10), InputError);
    REQUIRE_THROWS_AS(conjecture_probe(2, 10, ProbeMode::exhaustive, 10), InputError);
    REQUIRE_THROWS_AS(conjecture_probe(2, 13, ProbeMode::random, 10), InputError);
    REQUIRE_THROWS_AS(clique_equality_search(0), InputError);
}

TEST_CASE("random probe is deterministic under a seed", "[probe]")
{
    auto render = [](const ProbeReport& r) {
        std::string s = probe_summary_json(r);
        for (const auto& h : r.hits)
            s += "\n" + probe_hit_json(h);
        return s;
    };
    auto a = conjecture_probe(2, 7, ProbeMode::random, 3000, 42);
    auto b = conjecture_probe(2, 7, ProbeMode::random, 3000, 42);
    REQUIRE(render(a) == render(b));
    REQUIRE(a.examined == 3000);
    REQUIRE(a.counterexamples() == 0);

    auto c = conjecture_probe(3, 6, ProbeMode::random, 2000, 7);
    REQUIRE(c.counterexamples() == 0);
    for (const auto& h : c.hits)
        REQUIRE(h.isomorphic_to_canonical);
}
