/**
 * The Simplex value type and the orientation sign between a simplex and
 * one of its faces.
 *
 * A simplex is stored as its canonical representative: the strictly
 * increasing list of its vertex ids. All orientation signs in lapgap are
 * taken relative to this sorted order.
 */

#ifndef LAPGAP_SIMPLEX_HPP
#define LAPGAP_SIMPLEX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace lapgap {

using Vertex = int;

class Simplex
{
    private:
        std::vector<Vertex> vertices_;

        struct Trusted {};
        Simplex(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}

    public:
        /** The empty simplex (dimension -1). */
        Simplex() = default;

        /**
         * Build a simplex from an arbitrary list of vertex ids.
         *
         * The list is sorted; duplicate or negative ids are rejected.
         */
        explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
        {
            std::sort(vertices_.begin(), vertices_.end());
            if (!vertices_.empty() && vertices_.front() < 0)
                throw InputError("simplex has a negative vertex id");
            if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
                throw InputError("simplex has a repeated vertex id");
        }

        Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

        /** Wrap a list the caller guarantees to be strictly increasing. */
        static Simplex from_sorted(std::vector<Vertex> sorted)
        {
            return Simplex(Trusted{}, std::move(sorted));
        }

        /** Simplex whose vertices are the set bits of `mask`. */
        static Simplex from_mask(std::uint64_t mask)
        {
            std::vector<Vertex> v;
            for (Vertex i = 0; mask != 0; ++i, mask >>= 1)
                if (mask & 1u)
                    v.push_back(i);
            return Simplex(Trusted{}, std::move(v));
        }

        int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
        std::size_t size() const { return vertices_.size(); }
        bool empty() const { return vertices_.empty(); }

        std::span<const Vertex> vertices() const { return vertices_; }
        Vertex operator[](std::size_t i) const { return vertices_[i]; }
        auto begin() const { return vertices_.begin(); }
        auto end() const { return vertices_.end(); }

        bool contains(Vertex v) const
        {
            return std::binary_search(vertices_.begin(), vertices_.end(), v);
        }

        bool is_subset_of(const Simplex& other) const
        {
            return std::includes(other.vertices_.begin(), other.vertices_.end(),
                                 vertices_.begin(), vertices_.end());
        }

        /** The face obtained by deleting the vertex at sorted position i. */
        Simplex without_position(std::size_t i) const
        {
            std::vector<Vertex> v;
            v.reserve(vertices_.size() - 1);
            for (std::size_t j = 0; j < vertices_.size(); ++j)
                if (j != i)
                    v.push_back(vertices_[j]);
            return Simplex(Trusted{}, std::move(v));
        }

        /** This simplex with `v` added (v must not already be present). */
        Simplex with(Vertex v) const
        {
            std::vector<Vertex> out;
            out.reserve(vertices_.size() + 1);
            auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
            out.insert(out.end(), vertices_.begin(), it);
            out.push_back(v);
            out.insert(out.end(), it, vertices_.end());
            return Simplex(Trusted{}, std::move(out));
        }

        /** Add `offset` to every vertex id. */
        Simplex shifted(Vertex offset) const
        {
            std::vector<Vertex> v(vertices_);
            for (auto& x : v)
                x += offset;
            return Simplex(Trusted{}, std::move(v));
        }

        std::uint64_t to_mask() const
        {
            std::uint64_t m = 0;
            for (Vertex v : vertices_)
            {
                if (v >= 64)
                    throw InputError("vertex id too large for a bit mask");
                m |= std::uint64_t{1} << v;
            }
            return m;
        }

        friend Simplex set_union(const Simplex& a, const Simplex& b)
        {
            std::vector<Vertex> out;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return Simplex(Trusted{}, std::move(out));
        }

        friend Simplex set_intersection(const Simplex& a, const Simplex& b)
        {
            std::vector<Vertex> out;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return Simplex(Trusted{}, std::move(out));
        }

        friend Simplex set_difference(const Simplex& a, const Simplex& b)
        {
            std::vector<Vertex> out;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return Simplex(Trusted{}, std::move(out));
        }

        friend bool operator==(const Simplex&, const Simplex&) = default;

        // Shorter simplices first, then lexicographic. Within one dimension
        // this is the plain lexicographic order used for every basis.
        friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
        {
            if (auto c = a.size() <=> b.size(); c != 0)
                return c;
            return a.vertices_ <=> b.vertices_;
        }

        std::string to_string() const
        {
            std::string s = "{";
            for (std::size_t i = 0; i < vertices_.size(); ++i)
            {
                if (i)
                    s += ",";
                s += std::to_string(vertices_[i]);
            }
            return s + "}";
        }
};

/**
 * Orientation sign [sigma : tau] for tau a subset of sigma.
 *
 * This is the parity of the permutation taking sorted sigma to the
 * concatenation (sigma \ tau, tau), each part kept in sorted order. The
 * inversions of that concatenation are exactly the pairs x in sigma \ tau,
 * y in tau with x > y.
 */
inline int sign(const Simplex& sigma, const Simplex& tau)
{
    if (!tau.is_subset_of(sigma))
        throw InputError("sign: " + tau.to_string() + " is not a face of " + sigma.to_string());
    long inversions = 0;
    std::size_t below = 0;      // elements of tau smaller than the current vertex
    auto t = tau.begin();
    for (Vertex x : sigma)
    {
        while (t != tau.end() && *t < x)
        {
            ++t;
            ++below;
        }
        if (t != tau.end() && *t == x)
            continue;
        inversions += static_cast<long>(below);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}   // namespace lapgap

#endif
