#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <lapgap/extremal.hpp>
#include <lapgap/isomorphism.hpp>

#include "support/corpus.hpp"

using namespace lapgap;

namespace {

std::vector<Integer> predicted_mu(const ZParams& p)
{
    std::vector<Integer> out;
    for (const auto& row : predicted_profile_Z(p))
        out.push_back(row.mu);
    return out;
}

SimplicialComplex shuffled(const SimplicialComplex& x, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(x.vertex_count());
    for (int i = 0; i < x.vertex_count(); ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(x, perm);
}

}   // namespace

TEST_CASE("Z(d,t,r) construction", "[extremal]")
{
    auto z = build_Z(1, 2, 1);
    REQUIRE(z.vertex_count() == 5);
    REQUIRE(z.dimension() == 2);
    REQUIRE(z.f_vector() == std::vector<std::size_t>{1, 5, 8, 4});

    for (int d = 1; d <= 3; ++d)
        for (int t = 1; t <= 2; ++t)
            for (int r = 1; r <= 2; ++r)
            {
                ZParams p{d, t, r};
                auto built = build_Z(p);
                REQUIRE(built.vertex_count() == p.n());
                REQUIRE(built.dimension() == p.dim());
                auto counts = z_face_counts(p);
                for (int k = -1; k <= p.dim(); ++k)
                    REQUIRE(built.face_count(k) == counts[k + 1]);
                REQUIRE(missing_face_dimension(built).d == d);
            }
    REQUIRE_THROWS_AS(build_Z(0, 1, 1), InputError);
    REQUIRE_THROWS_AS(build_Z(2, 0, 1), InputError);
    REQUIRE_THROWS_AS(build_Z(2, 1, 0), InputError);
}

TEST_CASE("predicted Z profiles", "[extremal]")
{
    REQUIRE(predicted_mu({1, 2, 1}) == std::vector<Integer>{5, 3, 1, 1});
    REQUIRE(predicted_mu({2, 2, 1}) == std::vector<Integer>{7, 7, 4, 4, 1, 1});
    REQUIRE(predicted_mu({3, 1, 2}) == std::vector<Integer>{6, 6, 6, 2, 2, 2});
    auto rows = predicted_profile_Z({2, 2, 1});
    REQUIRE(rows.front().delta == 7);
    REQUIRE(rows.back().delta == 0);
}

TEST_CASE("Z complexes meet the predicted profile", "[extremal]")
{
    for (int d = 1; d <= 2; ++d)
        for (int t = 1; t <= 3; ++t)
            for (int r = 1; r <= 3; ++r)
            {
                auto rep = verify_prop14({d, t, r});
                INFO("Z(" << d << "," << t << "," << r << ")");
                REQUIRE(rep.passed());
                REQUIRE(rep.rows.size() == static_cast<std::size_t>(ZParams{d, t, r}.dim() + 2));
            }
    REQUIRE(verify_prop14({3, 1, 2}).passed());
    REQUIRE_THROWS_AS(verify_prop14({4, 4, 4}), SizeError);
}

TEST_CASE("canonical equality complexes", "[extremal]")
{
    auto c = canonical_equality_complex(6, 3);
    REQUIRE(c.vertex_count() == 6);
    REQUIRE(c.dimension() == 3);
    REQUIRE(spectral_gap(c, 3) == Catch::Approx(2.0).margin(1e-9));

    // t = 0 gives the full simplex, r = 0 a pure join of skeleta
    REQUIRE(canonical_equality_complex(4, 3) == simplex(3));
    REQUIRE(canonical_equality_complex(4, 1) == join(skeleton(1, 0), skeleton(1, 0)));
    REQUIRE(canonical_complex(2, 4, 2).vertex_count() == 4);
    REQUIRE(spectral_gap(canonical_complex(2, 4, 2), 2) == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(spectral_gap(canonical_equality_complex(4, 2), 2) == Catch::Approx(2.0).margin(1e-9));

    REQUIRE_THROWS_AS(canonical_equality_complex(6, 1), InputError);
    REQUIRE_THROWS_AS(canonical_equality_complex(3, 3), InputError);
    REQUIRE_THROWS_AS(canonical_complex(0, 3, 2), InputError);

    // every canonical complex attains the bound with equality
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 8; ++n)
            for (int k = -1; k < n; ++k)
            {
                const int t = n - k - 1;
                const int r = (d + 1) * (k + 1) - d * n;
                if (t < 0 || r < 0)
                    continue;
                auto x = canonical_complex(d, n, k);
                REQUIRE(x.vertex_count() == n);
                REQUIRE(spectral_gap(x, k) == Catch::Approx(static_cast<double>(r)).margin(1e-9));
            }
}

TEST_CASE("isomorphism search", "[extremal][isomorphism]")
{
    auto c = canonical_equality_complex(6, 3);
    auto s = shuffled(c, 4);
    auto f = isomorphic(s, c);
    REQUIRE(f.has_value());
    REQUIRE(is_isomorphism(s, c, *f));

    auto c5 = clique_complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto path = clique_complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}});
    REQUIRE_FALSE(isomorphic(c5, path).has_value());
    REQUIRE_FALSE(isomorphic(c5, simplex(4)).has_value());

    for (const auto& x : testing::mixed_corpus(1401, 60))
    {
        auto y = shuffled(x, 77);
        auto g = isomorphic(x, y);
        REQUIRE(g.has_value());
        REQUIRE(is_isomorphism(x, y, *g));
        auto back = isomorphic(y, x);
        REQUIRE(back.has_value());
    }
}

TEST_CASE("equality case check", "[extremal]")
{
    auto s = shuffled(canonical_equality_complex(6, 3), 9);
    auto v = equality_case_check(s, 3);
    REQUIRE(v.holds);
    REQUIRE(v.target == 2);
    REQUIRE(v.canonical_iso.has_value());

    auto c5 = clique_complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto not_tight = equality_case_check(c5, 0);
    REQUIRE_FALSE(not_tight.holds);
    REQUIRE(not_tight.target == -3);
    REQUIRE_FALSE(not_tight.canonical_iso.has_value());

    REQUIRE(equality_case_check(simplex(3), 3).holds);
    REQUIRE_THROWS_AS(equality_case_check(skeleton(3, 1), 1), InputError);
    REQUIRE_THROWS_AS(equality_case_check(c5, 2), DomainError);
}

TEST_CASE("equality forces the canonical complex on random clique complexes", "[extremal][property]")
{
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 300; ++trial)
    {
        auto x = testing::random_clique_complex(rng, 2 + trial % 6, 0.75);
        for (int k = -1; k <= x.dimension(); ++k)
        {
            auto v = equality_case_check(x, k);
            REQUIRE(v.mu >= static_cast<double>(v.target) - 1e-7);
            if (v.holds)
                REQUIRE(is_isomorphism(x, canonical_equality_complex(x.vertex_count(), k), *v.canonical_iso));
        }
    }
}
