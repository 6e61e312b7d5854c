/**
 * Finite simplicial complexes and their set-theoretic queries: faces by
 * dimension, links, induced subcomplexes, joins, skeletons, degrees and
 * missing (minimal non-) faces.
 *
 * A complex lives on the ambient vertex ids {0, ..., n-1}. Every
 * constructor except `link`, `induced` and `skeleton(m, -1)` makes each
 * singleton a 0-face, so for those complexes |X(0)| = n. Quantities that
 * the theory attaches to "the vertex set" (the degree of the empty simplex,
 * the operator L_{-1}) are taken over X(0).
 */

#ifndef LAPGAP_COMPLEX_HPP
#define LAPGAP_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "simplex.hpp"

namespace lapgap {

class SimplicialComplex
{
    private:
        int n_ = 0;
        std::vector<std::vector<Simplex>> faces_;     // faces_[k + 1] = sorted X(k)

        static inline const std::vector<Simplex> no_faces_{};

        SimplicialComplex(int n, std::vector<std::vector<Simplex>> faces)
            : n_(n), faces_(std::move(faces))
        {
            for (auto& level : faces_)
            {
                std::sort(level.begin(), level.end());
                level.erase(std::unique(level.begin(), level.end()), level.end());
            }
            while (faces_.size() > 1 && faces_.back().empty())
                faces_.pop_back();
        }

    public:
        /**
         * Assemble a complex from an explicit face list. The list must be
         * downward closed and contain the empty simplex; only cheap
         * bookkeeping (bucketing, sorting, de-duplication) is done here.
         */
        static SimplicialComplex from_faces(int n, const std::vector<Simplex>& faces)
        {
            std::vector<std::vector<Simplex>> levels(1);
            for (const auto& f : faces)
            {
                std::size_t slot = f.size();
                if (levels.size() <= slot)
                    levels.resize(slot + 1);
                levels[slot].push_back(f);
            }
            if (levels[0].empty())
                levels[0].push_back(Simplex{});
            return SimplicialComplex(n, std::move(levels));
        }

        /** Ambient vertex count n. */
        int vertex_count() const { return n_; }

        /** Top dimension; -1 for the complex {∅}. */
        int dimension() const { return static_cast<int>(faces_.size()) - 2; }

        /** Sorted list X(k); empty when k is outside [-1, dim]. */
        const std::vector<Simplex>& faces(int k) const
        {
            if (k < -1 || k > dimension())
                return no_faces_;
            return faces_[k + 1];
        }

        std::size_t face_count(int k) const { return faces(k).size(); }

        std::size_t total_face_count() const
        {
            std::size_t total = 0;
            for (const auto& level : faces_)
                total += level.size();
            return total;
        }

        /** Face counts for k = -1, ..., dim. */
        std::vector<std::size_t> f_vector() const
        {
            std::vector<std::size_t> f;
            for (const auto& level : faces_)
                f.push_back(level.size());
            return f;
        }

        /** Position of sigma inside X(dim sigma), if sigma is a face. */
        std::optional<std::size_t> index_of(const Simplex& sigma) const
        {
            const auto& level = faces(sigma.dimension());
            auto it = std::lower_bound(level.begin(), level.end(), sigma);
            if (it == level.end() || *it != sigma)
                return std::nullopt;
            return static_cast<std::size_t>(it - level.begin());
        }

        bool contains(const Simplex& sigma) const { return index_of(sigma).has_value(); }

        /** Maximal faces in lexicographic order within each dimension. */
        std::vector<Simplex> facets() const;

        /** Exhaustive check that every codimension-1 face of a face is a face. */
        bool is_downward_closed() const
        {
            if (faces(-1).size() != 1)
                return false;
            for (int k = 0; k <= dimension(); ++k)
                for (const auto& s : faces(k))
                {
                    if (s.vertices().back() >= n_)
                        return false;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (!contains(s.without_position(i)))
                            return false;
                }
            return true;
        }

        friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

inline std::vector<Simplex> SimplicialComplex::facets() const
{
    std::vector<Simplex> out;
    for (int k = -1; k <= dimension(); ++k)
        for (const auto& s : faces(k))
        {
            bool maximal = true;
            for (Vertex v = 0; v < n_ && maximal; ++v)
                if (!s.contains(v) && contains(s.with(v)))
                    maximal = false;
            if (maximal)
                out.push_back(s);
        }
    return out;
}

namespace detail {

inline void require_positive_vertex_count(int n)
{
    if (n <= 0)
        throw InputError("vertex count must be at least 1");
}

inline void add_all_subsets(const Simplex& facet, std::set<Simplex>& out)
{
    const std::size_t m = facet.size();
    if (m > 24)
        throw SizeError("facet with " + std::to_string(m) + " vertices is too large to close downward");
    const auto verts = facet.vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    {
        std::vector<Vertex> v;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1u)
                v.push_back(verts[i]);
        out.insert(Simplex::from_sorted(std::move(v)));
    }
}

inline std::vector<Simplex> singletons(int n)
{
    std::vector<Simplex> out;
    for (Vertex v = 0; v < n; ++v)
        out.push_back(Simplex::from_sorted({v}));
    return out;
}

}   // namespace detail

/**
 * Downward closure of `facets` on the vertex set {0, ..., n-1}, with every
 * singleton included.
 */
inline SimplicialComplex from_facets(int n, const std::vector<std::vector<Vertex>>& facets)
{
    detail::require_positive_vertex_count(n);
    std::set<Simplex> faces;
    faces.insert(Simplex{});
    for (auto& s : detail::singletons(n))
        faces.insert(s);
    for (const auto& raw : facets)
    {
        Simplex facet(raw);
        if (!facet.empty() && facet.vertices().back() >= n)
            throw InputError("facet " + facet.to_string() + " uses a vertex outside 0.."
                             + std::to_string(n - 1));
        detail::add_all_subsets(facet, faces);
    }
    return SimplicialComplex::from_faces(n, {faces.begin(), faces.end()});
}

/** The clique (flag) complex of the graph with the given edges. */
inline SimplicialComplex clique_complex(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    detail::require_positive_vertex_count(n);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges)
    {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b)
                             + ") references a vertex outside 0.." + std::to_string(n - 1));
        if (a == b)
            throw InputError("self-loop at vertex " + std::to_string(a));
        adj[a][b] = adj[b][a] = true;
    }

    std::vector<Simplex> faces{Simplex{}};
    std::vector<Simplex> frontier = detail::singletons(n);
    while (!frontier.empty())
    {
        std::vector<Simplex> next;
        for (const auto& c : frontier)
        {
            faces.push_back(c);
            for (Vertex v = c.vertices().back() + 1; v < n; ++v)
            {
                bool ok = true;
                for (Vertex u : c)
                    if (!adj[u][v])
                    {
                        ok = false;
                        break;
                    }
                if (ok)
                    next.push_back(c.with(v));
            }
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_faces(n, faces);
}

/**
 * The k-skeleton of the full simplex on m + 1 vertices: every subset of
 * {0, ..., m} with at most k + 1 elements. For k = -1 the result is {∅}
 * on the ambient ids {0, ..., m}, with no 0-faces.
 */
inline SimplicialComplex skeleton(int m, int k)
{
    if (k < -1 || k > m)
        throw InputError("skeleton(" + std::to_string(m) + "," + std::to_string(k)
                         + ") requires -1 <= k <= m");
    const int n = m + 1;
    std::vector<Simplex> faces{Simplex{}};
    std::vector<Simplex> frontier = (k >= 0) ? detail::singletons(n) : std::vector<Simplex>{};
    for (int dim = 0; dim <= k; ++dim)
    {
        std::vector<Simplex> next;
        for (const auto& s : frontier)
        {
            faces.push_back(s);
            if (dim < k)
                for (Vertex v = s.vertices().back() + 1; v < n; ++v)
                    next.push_back(s.with(v));
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_faces(std::max(n, 0), faces);
}

/** The full simplex Δ_m on m + 1 vertices; Δ_{-1} is {∅} on no vertices. */
inline SimplicialComplex simplex(int m)
{
    if (m < -1)
        throw InputError("simplex(m) requires m >= -1");
    return skeleton(m, m);
}

/**
 * Join X * Y. X keeps its vertex ids, Y's ids are shifted by X's vertex
 * count.
 */
inline SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y)
{
    const int shift = x.vertex_count();
    std::vector<Simplex> faces;
    faces.reserve(x.total_face_count() * y.total_face_count());
    for (int i = -1; i <= x.dimension(); ++i)
        for (const auto& s : x.faces(i))
            for (int j = -1; j <= y.dimension(); ++j)
                for (const auto& t : y.faces(j))
                {
                    std::vector<Vertex> v(s.begin(), s.end());
                    for (Vertex w : t)
                        v.push_back(w + shift);
                    faces.push_back(Simplex::from_sorted(std::move(v)));
                }
    return SimplicialComplex::from_faces(x.vertex_count() + y.vertex_count(), faces);
}

/** Join of `factor` with itself `copies` times (copies >= 1). */
inline SimplicialComplex join_power(const SimplicialComplex& factor, int copies)
{
    if (copies < 1)
        throw InputError("join power needs at least one copy");
    SimplicialComplex out = factor;
    for (int i = 1; i < copies; ++i)
        out = join(out, factor);
    return out;
}

/**
 * Relabel vertices: vertex v of X becomes perm[v]. `perm` must be a
 * permutation of {0, ..., n-1}.
 */
inline SimplicialComplex relabel(const SimplicialComplex& x, const std::vector<Vertex>& perm)
{
    const int n = x.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (static_cast<int>(perm.size()) != n)
        throw InputError("relabel: permutation has the wrong length");
    for (Vertex v : perm)
    {
        if (v < 0 || v >= n || seen[v])
            throw InputError("relabel: not a permutation");
        seen[v] = true;
    }
    std::vector<Simplex> faces;
    for (int k = -1; k <= x.dimension(); ++k)
        for (const auto& s : x.faces(k))
        {
            std::vector<Vertex> v;
            for (Vertex w : s)
                v.push_back(perm[w]);
            faces.emplace_back(std::move(v));
        }
    return SimplicialComplex::from_faces(n, faces);
}

/** Link lk(X, sigma) = {tau : tau ∪ sigma ∈ X, tau ∩ sigma = ∅}, on the same ids. */
inline SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma)
{
    if (!x.contains(sigma))
        throw InputError("link: " + sigma.to_string() + " is not a face");
    std::vector<Simplex> faces;
    for (int k = sigma.dimension(); k <= x.dimension(); ++k)
        for (const auto& eta : x.faces(k))
            if (sigma.is_subset_of(eta))
                faces.push_back(set_difference(eta, sigma));
    return SimplicialComplex::from_faces(x.vertex_count(), faces);
}

/** Induced subcomplex X[U] = {sigma ∈ X : sigma ⊆ U}, on the same ids. */
inline SimplicialComplex induced(const SimplicialComplex& x, const std::vector<Vertex>& u)
{
    Simplex keep(u);
    if (!keep.empty() && keep.vertices().back() >= x.vertex_count())
        throw InputError("induced: vertex set leaves 0.." + std::to_string(x.vertex_count() - 1));
    std::vector<Simplex> faces;
    for (int k = -1; k <= x.dimension(); ++k)
        for (const auto& s : x.faces(k))
            if (s.is_subset_of(keep))
                faces.push_back(s);
    return SimplicialComplex::from_faces(x.vertex_count(), faces);
}

/** Number of (dim sigma + 1)-faces containing sigma. */
inline std::size_t degree(const SimplicialComplex& x, const Simplex& sigma)
{
    if (!x.contains(sigma))
        throw InputError("degree: " + sigma.to_string() + " is not a face");
    std::size_t deg = 0;
    for (Vertex v = 0; v < x.vertex_count(); ++v)
        if (!sigma.contains(v) && x.contains(sigma.with(v)))
            ++deg;
    return deg;
}

/** δ_k: minimum degree over X(k). */
inline std::size_t min_degree(const SimplicialComplex& x, int k)
{
    const auto& level = x.faces(k);
    if (level.empty())
        throw DomainError("min_degree: X(" + std::to_string(k) + ") is empty");
    std::size_t best = degree(x, level.front());
    for (const auto& s : level)
        best = std::min(best, degree(x, s));
    return best;
}

struct MissingFaceReport
{
    std::vector<Simplex> missing_faces;     // sorted by dimension, then lexicographically
    std::optional<int> h;                   // absent when there are no missing faces
};

/**
 * All minimal non-faces of X among subsets of {0, ..., n-1}.
 *
 * Candidates are generated level by level: a missing face of size s >= 2
 * is a face of size s - 1 plus one vertex, so every candidate comes from
 * X(s - 2), and it is kept when it is absent from X while all of its
 * codimension-1 faces are present.
 */
inline MissingFaceReport missing_faces(const SimplicialComplex& x)
{
    MissingFaceReport report;
    for (Vertex v = 0; v < x.vertex_count(); ++v)
        if (!x.contains(Simplex::from_sorted({v})))
            report.missing_faces.push_back(Simplex::from_sorted({v}));

    for (int k = 0; k <= x.dimension(); ++k)
    {
        std::set<Simplex> found;
        for (const auto& s : x.faces(k))
            for (Vertex v = 0; v < x.vertex_count(); ++v)
            {
                if (s.contains(v))
                    continue;
                Simplex cand = s.with(v);
                if (found.count(cand) || x.contains(cand))
                    continue;
                bool minimal = true;
                for (std::size_t i = 0; i < cand.size() && minimal; ++i)
                    minimal = x.contains(cand.without_position(i));
                if (minimal)
                    found.insert(cand);
            }
        report.missing_faces.insert(report.missing_faces.end(), found.begin(), found.end());
    }
    for (const auto& m : report.missing_faces)
        report.h = std::max(report.h.value_or(-1), m.dimension());
    return report;
}

}   // namespace lapgap

#endif
