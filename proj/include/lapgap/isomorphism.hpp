/**
 * Isomorphism of small simplicial complexes by backtracking over vertex
 * bijections.
 */

#ifndef LAPGAP_ISOMORPHISM_HPP
#define LAPGAP_ISOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace lapgap {

inline constexpr int kIsomorphismVertexCap = 14;

namespace detail {

// Per-vertex invariant: number of faces of each dimension containing v.
inline std::vector<std::vector<std::size_t>> vertex_signatures(const SimplicialComplex& x)
{
    const int n = x.vertex_count();
    const int levels = x.dimension() + 1;
    std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(std::max(levels, 0), 0));
    for (int k = 0; k <= x.dimension(); ++k)
        for (const auto& s : x.faces(k))
            for (Vertex v : s)
                ++sig[v][k];
    return sig;
}

}   // namespace detail

/**
 * A vertex bijection f with f(X) = Y as face sets, or nullopt. The result
 * maps vertex v of X to f[v] in Y.
 *
 * Vertices of X are placed in an order that starts from the largest
 * 1-skeleton degree and then prefers vertices adjacent to many already
 * placed ones; a candidate image must share the vertex signature, agree on
 * adjacency with every placed vertex, and send every face completed at
 * this step onto a face of Y. Equal f-vectors turn the final injection of
 * faces into a bijection.
 */
inline std::optional<std::vector<Vertex>> isomorphic(const SimplicialComplex& x, const SimplicialComplex& y)
{
    if (x.vertex_count() > kIsomorphismVertexCap || y.vertex_count() > kIsomorphismVertexCap)
        throw SizeError("isomorphic: complexes are limited to "
                        + std::to_string(kIsomorphismVertexCap) + " vertices");
    if (x.vertex_count() != y.vertex_count() || x.f_vector() != y.f_vector())
        return std::nullopt;
    const int n = x.vertex_count();

    const auto sig_x = detail::vertex_signatures(x);
    const auto sig_y = detail::vertex_signatures(y);
    {
        auto a = sig_x, b = sig_y;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    std::unordered_set<std::uint64_t> faces_y;
    for (int k = -1; k <= y.dimension(); ++k)
        for (const auto& s : y.faces(k))
            faces_y.insert(s.to_mask());

    auto adjacency = [n](const SimplicialComplex& c) {
        std::vector<std::uint64_t> adj(n, 0);
        for (const auto& e : c.faces(1))
        {
            adj[e[0]] |= std::uint64_t{1} << e[1];
            adj[e[1]] |= std::uint64_t{1} << e[0];
        }
        return adj;
    };
    const auto adj_x = adjacency(x);
    const auto adj_y = adjacency(y);

    // placement order
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step)
    {
        Vertex best = -1;
        int best_links = -1, best_deg = -1;
        for (Vertex v = 0; v < n; ++v)
        {
            if (placed[v])
                continue;
            int links = 0;
            for (Vertex u : order)
                links += static_cast<int>(adj_x[v] >> u & 1u);
            int deg = __builtin_popcountll(adj_x[v]);
            if (links > best_links || (links == best_links && deg > best_deg))
            {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;

    // faces of X grouped by the step at which their last vertex is placed
    std::vector<std::vector<Simplex>> completed(n);
    for (int k = 0; k <= x.dimension(); ++k)
        for (const auto& s : x.faces(k))
        {
            int last = 0;
            for (Vertex v : s)
                last = std::max(last, position[v]);
            completed[last].push_back(s);
        }

    std::vector<Vertex> image(n, -1);
    std::vector<bool> used(n, false);

    auto search = [&](auto&& self, int step) -> bool {
        if (step == n)
            return true;
        const Vertex v = order[step];
        for (Vertex w = 0; w < n; ++w)
        {
            if (used[w] || sig_x[v] != sig_y[w])
                continue;
            bool ok = true;
            for (int j = 0; j < step && ok; ++j)
            {
                const Vertex u = order[j];
                ok = ((adj_x[v] >> u) & 1u) == ((adj_y[w] >> image[u]) & 1u);
            }
            if (!ok)
                continue;
            image[v] = w;
            for (const auto& s : completed[step])
            {
                std::uint64_t m = 0;
                for (Vertex a : s)
                    m |= std::uint64_t{1} << image[a];
                if (!faces_y.count(m))
                {
                    ok = false;
                    break;
                }
            }
            if (ok)
            {
                used[w] = true;
                if (self(self, step + 1))
                    return true;
                used[w] = false;
            }
            image[v] = -1;
        }
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;
    return image;
}

/** True when `f` maps the face set of X bijectively onto that of Y. */
inline bool is_isomorphism(const SimplicialComplex& x, const SimplicialComplex& y, const std::vector<Vertex>& f)
{
    if (x.vertex_count() != y.vertex_count() || static_cast<int>(f.size()) != x.vertex_count())
        return false;
    try
    {
        return relabel(x, f) == y;
    }
    catch (const InputError&)
    {
        return false;
    }
}

}   // namespace lapgap

#endif
