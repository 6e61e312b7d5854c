#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <lapgap/extremal.hpp>
#include <lapgap/spectral.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace lapgap;

namespace {

SimplicialComplex cycle(int n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return clique_complex(n, edges);
}

Spectrum oracle_spectrum(const SimplicialComplex& x, int k)
{
    return Spectrum(testing::jacobi_eigenvalues(laplacian(x, k).to_double()));
}

}   // namespace

TEST_CASE("eigenvalues of small explicit matrices", "[spectral]")
{
    // L_0 of the 5-cycle: 5 - 2cos(2πj/5) over j, i.e. {(5-√5)/2 x2, (5+√5)/2 x2, 5}
    auto s = laplacian_spectrum(cycle(5), 0);
    const double lo = (5.0 - std::sqrt(5.0)) / 2.0;
    const double hi = (5.0 + std::sqrt(5.0)) / 2.0;
    REQUIRE(multiset_equal(s, Spectrum({lo, lo, hi, hi, 5.0}), 1e-10));
    REQUIRE(s.values[0] == Catch::Approx(1.38196601).margin(1e-8));
    REQUIRE(s.groups().size() == 3);
    REQUIRE(s.count_below(2.0) == 2);

    REQUIRE(multiset_equal(laplacian_spectrum(cycle(4), 0), Spectrum({2, 2, 4, 4}), 1e-10));
    REQUIRE(multiset_equal(laplacian_spectrum(cycle(5), -1), Spectrum({5}), 0));

    Eigen::MatrixXd asym(2, 2);
    asym << 1, 2, 0, 1;
    REQUIRE_THROWS_AS(eigenvalues(asym), ContractError);
    REQUIRE_THROWS_AS(eigenvalues(Eigen::MatrixXd(2, 3)), ContractError);
    REQUIRE_THROWS_AS(laplacian_spectrum(cycle(5), 2), DomainError);
}

TEST_CASE("eigensolver agrees with an independent Jacobi solver", "[spectral][property]")
{
    for (const auto& x : testing::mixed_corpus(707, 120))
        for (int k = -1; k <= x.dimension(); ++k)
        {
            if (x.face_count(k) > 60)
                continue;
            auto s = laplacian_spectrum(x, k);
            REQUIRE(multiset_equal(s, oracle_spectrum(x, k), 1e-8));
            REQUIRE(s.min() >= -1e-9);
            // trace = Σ (deg σ + k + 1)
            double trace = 0.0;
            for (double v : s.values)
                trace += v;
            double expected = (k == -1) ? static_cast<double>(x.face_count(0)) : 0.0;
            if (k >= 0)
                for (auto deg : degrees(x, k))
                    expected += static_cast<double>(deg + k + 1);
            REQUIRE(trace == Catch::Approx(expected).margin(1e-7));
        }
}

TEST_CASE("skeleton spectra match their closed form", "[spectral]")
{
    for (int m = 0; m <= 6; ++m)
        for (int k = -1; k <= m; ++k)
        {
            auto x = skeleton(m, k);
            for (int i = -1; i <= k; ++i)
                REQUIRE(multiset_equal(laplacian_spectrum(x, i), skeleton_spectrum(m + 1, k, i), 1e-9));
        }
    REQUIRE(multiset_equal(skeleton_spectrum(3, 1, 1), Spectrum({0, 3, 3}), 0));
    REQUIRE_THROWS_AS(skeleton_spectrum(3, 1, 2), InputError);
}

TEST_CASE("Betti numbers", "[spectral]")
{
    REQUIRE(betti(cycle(5), 1) == 1);
    REQUIRE(betti(cycle(5), 0) == 0);
    REQUIRE(betti(cycle(5), -1) == 0);
    REQUIRE(betti(skeleton(4, 1), 1) == 6);
    REQUIRE(betti(skeleton(3, 2), 2) == 1);
    REQUIRE(betti(simplex(3), 3) == 0);
    // two components: reduced H_0 has rank 1
    REQUIRE(betti(from_facets(4, {{0, 1}, {2, 3}}), 0) == 1);
    REQUIRE(betti(skeleton(3, -1), -1) == 1);
}

TEST_CASE("spectral and exact Betti numbers agree", "[spectral][property]")
{
    for (const auto& x : testing::mixed_corpus(808, 150))
        for (int k = -1; k <= x.dimension(); ++k)
        {
            auto s = laplacian_spectrum(x, k);
            REQUIRE(s.count_below(kZeroTolerance) == betti_exact(x, k));
        }
}

TEST_CASE("Hodge decomposition of the spectrum", "[spectral][property]")
{
    // nonzero spectrum of L_k = nonzero parts of δ_{k-1}δ_{k-1}ᵀ and δ_kᵀδ_k
    for (const auto& x : testing::mixed_corpus(909, 80))
        for (int k = 0; k <= x.dimension(); ++k)
        {
            if (x.face_count(k) > 60)
                continue;
            auto down = coboundary_matrix(x, k - 1).to_double();
            Eigen::MatrixXd lower = down * down.transpose();
            Eigen::MatrixXd upper = Eigen::MatrixXd::Zero(lower.rows(), lower.cols());
            if (k < x.dimension())
            {
                auto up = coboundary_matrix(x, k).to_double();
                upper = up.transpose() * up;
            }
            std::vector<double> nonzero;
            for (double v : testing::jacobi_eigenvalues(lower))
                if (v > 1e-8)
                    nonzero.push_back(v);
            for (double v : testing::jacobi_eigenvalues(upper))
                if (v > 1e-8)
                    nonzero.push_back(v);
            std::vector<double> from_lap;
            for (double v : laplacian_spectrum(x, k).values)
                if (v > 1e-8)
                    from_lap.push_back(v);
            REQUIRE(multiset_equal(Spectrum(nonzero), Spectrum(from_lap), 1e-8));
        }
}

TEST_CASE("join spectra from factor spectra", "[spectral]")
{
    auto s0 = factor_spectra(skeleton(1, 0));
    auto c4 = join(skeleton(1, 0), skeleton(1, 0));
    for (int k = -1; k <= 1; ++k)
        REQUIRE(multiset_equal(join_spectrum({s0, s0}, k), laplacian_spectrum(c4, k), 1e-9));
    REQUIRE(join_spectrum({s0, s0}, 2).empty());
    REQUIRE_THROWS_AS(join_spectrum({}, 0), InputError);

    // Z(2,2,1) = ∂Δ₂ * ∂Δ₂ * point
    auto tri = factor_spectra(skeleton(2, 1));
    auto pt = factor_spectra(simplex(0));
    auto z = build_Z(2, 2, 1);
    for (int k = -1; k <= z.dimension(); ++k)
        REQUIRE(multiset_equal(join_spectrum({tri, tri, pt}, k), laplacian_spectrum(z, k), 1e-8));
}

TEST_CASE("join spectra on random pairs", "[spectral][property]")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial)
    {
        auto x = testing::random_facet_complex(rng, 2 + trial % 3, 4, 3);
        auto y = testing::random_facet_complex(rng, 1 + trial % 4, 4, 3);
        auto j = join(x, y);
        auto fx = factor_spectra(x);
        auto fy = factor_spectra(y);
        for (int k = -1; k <= j.dimension(); ++k)
            REQUIRE(multiset_equal(join_spectrum({fx, fy}, k), laplacian_spectrum(j, k), 1e-8));
    }
}

TEST_CASE("spectral profile", "[spectral]")
{
    auto profile = spectral_profile(cycle(5));
    REQUIRE(profile.size() == 3);
    REQUIRE(profile[0].k == -1);
    REQUIRE(profile[0].gap == 5.0);
    REQUIRE(profile[1].gap == Catch::Approx((5.0 - std::sqrt(5.0)) / 2.0).margin(1e-10));
    REQUIRE(profile[2].betti == 1);
    REQUIRE(profile[2].gap == Catch::Approx(0.0).margin(1e-10));
}
