#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include <lapgap/complex.hpp>
#include <lapgap/facet_io.hpp>
#include <lapgap/spectral.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace lapgap;

namespace {

SimplicialComplex cycle_complex(int n)
{
    std::vector<std::vector<Vertex>> facets;
    for (int i = 0; i < n; ++i)
        facets.push_back({i, (i + 1) % n});
    return from_facets(n, facets);
}

std::vector<std::size_t> counts(std::initializer_list<std::size_t> c) { return c; }

}   // namespace

TEST_CASE("Simplex keeps a canonical sorted representative", "[simplex]")
{
    Simplex s{3, 0, 2};
    REQUIRE(s.dimension() == 2);
    REQUIRE(s.to_string() == "{0,2,3}");
    REQUIRE(Simplex{}.dimension() == -1);
    REQUIRE_THROWS_AS(Simplex({1, 1}), InputError);
    REQUIRE_THROWS_AS(Simplex({-1, 2}), InputError);
    REQUIRE(Simplex::from_mask(0b1011) == Simplex{0, 1, 3});
    REQUIRE((Simplex{0, 1, 3}.to_mask()) == 0b1011u);
}

TEST_CASE("from_facets closes downward and adds every singleton", "[complex]")
{
    auto boundary = from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(boundary.f_vector() == counts({1, 3, 3}));
    REQUIRE_FALSE(boundary.contains(Simplex{0, 1, 2}));

    auto tetra = from_facets(4, {{0, 1, 2, 3}});
    REQUIRE(tetra.f_vector() == counts({1, 4, 6, 4, 1}));

    auto c5 = cycle_complex(5);
    REQUIRE(c5.f_vector() == counts({1, 5, 5}));
    REQUIRE(c5.dimension() == 1);

    auto isolated = from_facets(3, {});
    REQUIRE(isolated.f_vector() == counts({1, 3}));

    REQUIRE_THROWS_AS(from_facets(3, {{0, 3}}), InputError);
    REQUIRE_THROWS_AS(from_facets(0, {}), InputError);
}

TEST_CASE("clique_complex fills every clique", "[complex]")
{
    auto triangle = clique_complex(3, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(triangle == simplex(2));

    auto c5 = clique_complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    REQUIRE(c5 == cycle_complex(5));
    auto mf = missing_faces(c5);
    REQUIRE(mf.missing_faces.size() == 5);
    REQUIRE(mf.h == 1);

    auto empty = clique_complex(4, {});
    auto mf_empty = missing_faces(empty);
    REQUIRE(mf_empty.missing_faces.size() == 6);
    REQUIRE(mf_empty.h == 1);

    REQUIRE_THROWS_AS(clique_complex(3, {{1, 1}}), InputError);
    REQUIRE_THROWS_AS(clique_complex(3, {{0, 3}}), InputError);
}

TEST_CASE("skeletons and simplices", "[complex]")
{
    REQUIRE(skeleton(2, 1) == from_facets(3, {{0, 1}, {1, 2}, {0, 2}}));
    REQUIRE(skeleton(3, 1).f_vector() == counts({1, 4, 6}));
    auto mf = missing_faces(skeleton(2, 1));
    REQUIRE(mf.missing_faces == std::vector<Simplex>{Simplex{0, 1, 2}});
    REQUIRE(mf.h == 2);
    REQUIRE(simplex(3).f_vector() == counts({1, 4, 6, 4, 1}));
    REQUIRE(simplex(-1).f_vector() == counts({1}));
    REQUIRE(skeleton(3, -1).f_vector() == counts({1}));
    REQUIRE(skeleton(3, -1).vertex_count() == 4);
    REQUIRE_THROWS_AS(skeleton(2, 3), InputError);

    for (int m = 0; m <= 6; ++m)
        for (int k = -1; k <= m; ++k)
        {
            auto x = skeleton(m, k);
            for (int j = -1; j <= m; ++j)
                REQUIRE(x.face_count(j) == (j <= k ? binomial(m + 1, j + 1) : 0u));
        }
}

TEST_CASE("join of two 0-spheres is the 4-cycle", "[complex]")
{
    auto s0 = skeleton(1, 0);
    auto c4 = join(s0, s0);
    REQUIRE(c4 == from_facets(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    REQUIRE_FALSE(c4.contains(Simplex{0, 1}));
    REQUIRE_FALSE(c4.contains(Simplex{2, 3}));

    auto cone = join(cycle_complex(5), simplex(0));
    REQUIRE(cone.dimension() == 2);
    REQUIRE(cone.vertex_count() == 6);

    auto z = join(join(skeleton(2, 1), skeleton(2, 1)), simplex(0));
    REQUIRE(z.vertex_count() == 7);
    REQUIRE(z.dimension() == 4);

    REQUIRE(join(cycle_complex(5), simplex(-1)) == cycle_complex(5));
}

TEST_CASE("join face counts convolve", "[complex][property]")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial)
    {
        auto x = testing::random_facet_complex(rng, 2 + trial % 4, 4, 3);
        auto y = testing::random_facet_complex(rng, 1 + trial % 3, 3, 3);
        auto j = join(x, y);
        REQUIRE(j.dimension() == x.dimension() + y.dimension() + 1);
        REQUIRE(j.is_downward_closed());
        for (int k = -1; k <= j.dimension(); ++k)
        {
            std::size_t expected = 0;
            for (int i = -1; i <= x.dimension(); ++i)
                expected += x.face_count(i) * y.face_count(k - 1 - i);
            REQUIRE(j.face_count(k) == expected);
        }
    }
}

TEST_CASE("link and induced subcomplexes", "[complex]")
{
    auto boundary = skeleton(2, 1);
    auto lk = link(boundary, Simplex{0});
    REQUIRE(lk.f_vector() == counts({1, 2}));
    REQUIRE(lk.contains(Simplex{1}));
    REQUIRE(lk.contains(Simplex{2}));
    REQUIRE_FALSE(lk.contains(Simplex{0}));

    auto edge_link = link(simplex(3), Simplex{0, 1});
    REQUIRE(edge_link.faces(1) == std::vector<Simplex>{Simplex{2, 3}});
    REQUIRE(edge_link.dimension() == 1);

    auto c5 = cycle_complex(5);
    auto vlink = link(c5, Simplex{0});
    REQUIRE(vlink.faces(0) == std::vector<Simplex>{Simplex{1}, Simplex{4}});
    REQUIRE(vlink.dimension() == 0);
    REQUIRE_THROWS_AS(link(c5, Simplex{0, 2}), InputError);

    REQUIRE(induced(simplex(3), {0, 1, 2}).faces(2) == std::vector<Simplex>{Simplex{0, 1, 2}});
    auto path = induced(c5, {0, 1, 2});
    REQUIRE(path.faces(1) == std::vector<Simplex>{Simplex{0, 1}, Simplex{1, 2}});
    REQUIRE(induced(c5, {}).f_vector() == counts({1}));
}

TEST_CASE("degrees and minimum degrees", "[complex]")
{
    REQUIRE(degree(simplex(3), Simplex{0, 1}) == 2);
    auto c5 = cycle_complex(5);
    for (Vertex v = 0; v < 5; ++v)
        REQUIRE(degree(c5, Simplex{v}) == 2);
    for (const auto& e : c5.faces(1))
        REQUIRE(degree(c5, e) == 0);
    REQUIRE(min_degree(c5, -1) == 5);
    REQUIRE(min_degree(c5, 0) == 2);
    REQUIRE(min_degree(c5, 1) == 0);
    REQUIRE_THROWS_AS(min_degree(c5, 2), DomainError);
    REQUIRE_THROWS_AS(degree(c5, Simplex{0, 2}), InputError);
}

TEST_CASE("missing faces of small complexes", "[complex]")
{
    auto full = missing_faces(simplex(3));
    REQUIRE(full.missing_faces.empty());
    REQUIRE_FALSE(full.h.has_value());

    // brute force over all 32 subsets of 5 vertices
    auto c5 = cycle_complex(5);
    auto brute = testing::brute_missing_faces(c5);
    std::set<std::uint64_t> got;
    for (const auto& m : missing_faces(c5).missing_faces)
        got.insert(m.to_mask());
    REQUIRE(got == brute);
    REQUIRE(got.size() == 5);
}

TEST_CASE("missing faces determine the complex", "[complex][property]")
{
    // n <= 9 exhaustive reconstruction
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial)
    {
        const int n = 2 + trial % 8;
        auto x = (trial % 2) ? testing::random_facet_complex(rng, n, 6, std::min(n, 6))
                             : testing::random_clique_complex(rng, n, 0.6);
        REQUIRE(x.is_downward_closed());
        auto report = missing_faces(x);
        std::set<std::uint64_t> missing;
        for (const auto& m : report.missing_faces)
        {
            REQUIRE_FALSE(x.contains(m));
            for (std::size_t i = 0; i < m.size(); ++i)
                REQUIRE(x.contains(m.without_position(i)));
            missing.insert(m.to_mask());
        }
        REQUIRE(missing == testing::brute_missing_faces(x));
        REQUIRE(testing::reconstruct_from_missing(n, missing) == testing::face_masks(x));
    }
}

TEST_CASE("clique complexes have only 1-dimensional missing faces", "[complex][property]")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial)
    {
        auto x = testing::random_clique_complex(rng, 2 + trial % 7, 0.5);
        for (const auto& m : missing_faces(x).missing_faces)
            REQUIRE(m.dimension() == 1);
    }
}

TEST_CASE("degree equals the vertex count of the link", "[complex][property]")
{
    for (const auto& x : testing::mixed_corpus(11, 80))
        for (int k = 0; k <= x.dimension(); ++k)
            for (const auto& s : x.faces(k))
                REQUIRE(degree(x, s) == link(x, s).face_count(0));
}

TEST_CASE("facet file format", "[complex][io]")
{
    std::istringstream in("# a triangle boundary\n\nn 3   # three vertices\n0 1\n1 2 # edge\n 0 2\n");
    auto x = read_facet_file(in);
    REQUIRE(x == skeleton(2, 1));

    std::istringstream only_header("n 4\n");
    REQUIRE(read_facet_file(only_header).f_vector() == counts({1, 4}));

    std::istringstream bad_vertex("n 2\n0 2\n");
    REQUIRE_THROWS_AS(read_facet_file(bad_vertex), InputError);
    std::istringstream no_header("0 1\n");
    REQUIRE_THROWS_AS(read_facet_file(no_header), InputError);
    std::istringstream junk("n 3\n0 x\n");
    REQUIRE_THROWS_AS(read_facet_file(junk), InputError);
    REQUIRE_THROWS_AS(read_facet_file(std::string("/nonexistent/missing.txt")), InputError);

    for (const auto& c : testing::mixed_corpus(5, 30))
    {
        std::ostringstream out;
        write_facet_file(out, c);
        std::istringstream back(out.str());
        REQUIRE(read_facet_file(back) == c);
    }
}
