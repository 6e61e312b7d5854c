/**
 * Oriented cochain bases and the integer operators built on them:
 * coboundaries, the reduced Laplacian by two independent routes, the
 * Bochner split L_k = D_k + K_k and the off-diagonal row-sum identity.
 *
 * Every simplex carries its sorted vertex order, so e_sigma for the basis
 * simplex sigma is the indicator of sorted sigma. All entries are exact
 * 64-bit integers; floating point enters only in spectral.hpp.
 */

#ifndef LAPGAP_OPERATORS_HPP
#define LAPGAP_OPERATORS_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "complex.hpp"
#include "error.hpp"
#include "simplex.hpp"

namespace lapgap {

using Integer = std::int64_t;
using IntSparse = Eigen::SparseMatrix<Integer, Eigen::RowMajor>;
using IntDense = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/** Largest basis a dense operator may be built on. */
inline constexpr std::size_t kDenseBasisCap = 5000;

/** The k-faces of X in lexicographic order; position i is basis vector e_i. */
class OrientedBasis
{
    private:
        int k_ = -1;
        std::vector<Simplex> simplices_;

    public:
        OrientedBasis() = default;
        OrientedBasis(const SimplicialComplex& x, int k) : k_(k), simplices_(x.faces(k)) {}

        int dimension() const { return k_; }
        std::size_t size() const { return simplices_.size(); }
        const std::vector<Simplex>& simplices() const { return simplices_; }
        const Simplex& operator[](std::size_t i) const { return simplices_[i]; }

        std::optional<std::size_t> index_of(const Simplex& s) const
        {
            auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
            if (it == simplices_.end() || *it != s)
                return std::nullopt;
            return static_cast<std::size_t>(it - simplices_.begin());
        }
};

/** An exact integer matrix with oriented bases attached to rows and columns. */
struct OperatorMatrix
{
    OrientedBasis rows;
    OrientedBasis cols;
    IntSparse entries;

    Integer at(std::size_t i, std::size_t j) const
    {
        return entries.coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    IntDense dense() const { return IntDense(entries); }

    Eigen::MatrixXd to_double() const { return IntDense(entries).cast<double>(); }

    bool is_symmetric() const
    {
        if (entries.rows() != entries.cols())
            return false;
        IntSparse t = entries.transpose();
        return (entries - t).norm() == 0;
    }
};

namespace detail {

inline void require_dimension(const SimplicialComplex& x, int k, int lowest, const char* what)
{
    if (k < lowest || k > x.dimension())
        throw InputError(std::string(what) + ": k = " + std::to_string(k) + " is outside ["
                         + std::to_string(lowest) + ", " + std::to_string(x.dimension()) + "]");
}

inline void require_dense_size(std::size_t size, int k)
{
    if (size > kDenseBasisCap)
        throw SizeError("dimension " + std::to_string(k) + " has " + std::to_string(size)
                        + " faces, above the dense cap of " + std::to_string(kDenseBasisCap));
}

inline IntSparse from_triplets(std::size_t rows, std::size_t cols,
                               const std::vector<Eigen::Triplet<Integer>>& triplets)
{
    IntSparse m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.prune(Integer{0});
    m.makeCompressed();
    return m;
}

}   // namespace detail

/**
 * Degrees of every face in X(k), aligned with the basis order. For
 * k = -1 this is the single value |X(0)|.
 */
inline std::vector<std::size_t> degrees(const SimplicialComplex& x, int k)
{
    const auto& level = x.faces(k);
    std::vector<std::size_t> deg(level.size(), 0);
    for (const auto& eta : x.faces(k + 1))
        for (std::size_t i = 0; i < eta.size(); ++i)
            ++deg[*x.index_of(eta.without_position(i))];
    return deg;
}

/**
 * Coboundary δ_k : C^k -> C^{k+1} as a |X(k+1)| x |X(k)| matrix with
 * entry [sigma : tau] when tau ⊂ sigma. δ_{-1} is the all-ones column.
 */
inline OperatorMatrix coboundary_matrix(const SimplicialComplex& x, int k)
{
    detail::require_dimension(x, k, -1, "coboundary_matrix");
    OperatorMatrix op{OrientedBasis(x, k + 1), OrientedBasis(x, k), {}};
    std::vector<Eigen::Triplet<Integer>> trip;
    for (std::size_t r = 0; r < op.rows.size(); ++r)
    {
        const Simplex& sigma = op.rows[r];
        for (std::size_t i = 0; i < sigma.size(); ++i)
        {
            auto c = op.cols.index_of(sigma.without_position(i));
            trip.emplace_back(static_cast<int>(r), static_cast<int>(*c), (i % 2 == 0) ? 1 : -1);
        }
    }
    op.entries = detail::from_triplets(op.rows.size(), op.cols.size(), trip);
    return op;
}

/** The boundary ∂_k, realized as the transpose of δ_k. */
inline OperatorMatrix boundary_matrix(const SimplicialComplex& x, int k)
{
    auto d = coboundary_matrix(x, k);
    return OperatorMatrix{d.cols, d.rows, IntSparse(d.entries.transpose())};
}

/**
 * Reduced Laplacian L_k = δ_{k-1} ∂_{k-1} + ∂_k δ_k, assembled by composing
 * coboundary matrices. L_{-1} = ∂_{-1} δ_{-1} is the 1x1 matrix [|X(0)|].
 */
inline OperatorMatrix laplacian(const SimplicialComplex& x, int k)
{
    detail::require_dimension(x, k, -1, "laplacian");
    detail::require_dense_size(x.face_count(k), k);
    OrientedBasis basis(x, k);
    const IntSparse up = coboundary_matrix(x, k).entries;
    IntSparse lap = IntSparse(up.transpose()) * up;
    if (k >= 0)
    {
        const IntSparse down = coboundary_matrix(x, k - 1).entries;
        lap += IntSparse(down * IntSparse(down.transpose()));
    }
    lap.prune(Integer{0});
    lap.makeCompressed();
    return OperatorMatrix{basis, basis, std::move(lap)};
}

/**
 * Closed-form entry L_k(sigma, tau) for two k-faces: deg(sigma) + k + 1 on
 * the diagonal; [sigma : sigma∩tau][tau : sigma∩tau] when the faces share
 * k vertices and their union is not a face; 0 otherwise.
 */
inline Integer laplacian_entry(const SimplicialComplex& x, const Simplex& sigma, const Simplex& tau)
{
    if (sigma.dimension() != tau.dimension())
        throw InputError("laplacian_entry: " + sigma.to_string() + " and " + tau.to_string()
                         + " have different dimensions");
    if (!x.contains(sigma) || !x.contains(tau))
        throw InputError("laplacian_entry: both arguments must be faces");
    const int k = sigma.dimension();
    if (sigma == tau)
        return static_cast<Integer>(degree(x, sigma)) + k + 1;
    Simplex common = set_intersection(sigma, tau);
    if (common.dimension() != k - 1 || x.contains(set_union(sigma, tau)))
        return 0;
    return sign(sigma, common) * sign(tau, common);
}

namespace detail {

// For each sigma in X(k), visit every tau in X(k) with |sigma ∩ tau| = k
// and sigma ∪ tau not in X(k+1), passing (row, col, sign product).
template <typename Visit>
void for_each_lower_adjacent_pair(const SimplicialComplex& x, int k, Visit&& visit)
{
    const auto& level = x.faces(k);
    for (std::size_t r = 0; r < level.size(); ++r)
    {
        const Simplex& sigma = level[r];
        for (std::size_t i = 0; i < sigma.size(); ++i)
        {
            const Simplex rho = sigma.without_position(i);
            const int sigma_sign = (i % 2 == 0) ? 1 : -1;
            for (Vertex v = 0; v < x.vertex_count(); ++v)
            {
                if (sigma.contains(v))
                    continue;
                Simplex tau = rho.with(v);
                auto c = x.index_of(tau);
                if (!c || x.contains(sigma.with(v)))
                    continue;
                visit(r, *c, sigma_sign * sign(tau, rho));
            }
        }
    }
}

}   // namespace detail

/**
 * L_k assembled entry by entry from the closed form, without composing
 * coboundaries. Agrees exactly with `laplacian`.
 */
inline OperatorMatrix laplacian_closed_form(const SimplicialComplex& x, int k)
{
    detail::require_dimension(x, k, -1, "laplacian_closed_form");
    detail::require_dense_size(x.face_count(k), k);
    OrientedBasis basis(x, k);
    std::vector<Eigen::Triplet<Integer>> trip;
    if (k == -1)
        trip.emplace_back(0, 0, static_cast<Integer>(x.face_count(0)));
    else
    {
        const auto deg = degrees(x, k);
        for (std::size_t r = 0; r < basis.size(); ++r)
            trip.emplace_back(static_cast<int>(r), static_cast<int>(r),
                              static_cast<Integer>(deg[r]) + k + 1);
        detail::for_each_lower_adjacent_pair(x, k, [&](std::size_t r, std::size_t c, int s) {
            trip.emplace_back(static_cast<int>(r), static_cast<int>(c), s);
        });
    }
    return OperatorMatrix{basis, basis, detail::from_triplets(basis.size(), basis.size(), trip)};
}

/** L_k = D_k + K_k with K_k = H_k H_k^T the Laplacian of the signed graph G_k. */
struct BochnerSplit
{
    int k = 0;
    OperatorMatrix d;                                           // diagonal part D_k
    OperatorMatrix k_part;                                      // signed-graph Laplacian K_k
    IntSparse h;                                                // |X(k)| x |E_k| incidence H_k
    std::vector<std::pair<std::size_t, std::size_t>> edges;     // E_k as basis index pairs, i < j
    std::vector<int> edge_sign;                                 // φ on each edge
};

/**
 * Bochner decomposition of L_k for k >= 0.
 *
 * G_k joins two k-faces sharing k vertices whose union is not a face, with
 * sign φ({σ,τ}) = -[σ : σ∩τ][τ : σ∩τ]. H_k(σ, {η,τ}) = [σ : η∩τ] for
 * σ ∈ {η, τ}, and D_k(σ,σ) = 2(k+1) + (k+2)deg(σ) - Σ_{τ ∈ σ(k-1)} deg(τ).
 */
inline BochnerSplit bochner_split(const SimplicialComplex& x, int k)
{
    detail::require_dimension(x, k, 0, "bochner_split");
    detail::require_dense_size(x.face_count(k), k);
    BochnerSplit out;
    out.k = k;
    OrientedBasis basis(x, k);
    const std::size_t m = basis.size();

    detail::for_each_lower_adjacent_pair(x, k, [&](std::size_t r, std::size_t c, int s) {
        if (r < c)
        {
            out.edges.emplace_back(r, c);
            out.edge_sign.push_back(-s);
        }
    });

    std::vector<Eigen::Triplet<Integer>> h_trip;
    for (std::size_t e = 0; e < out.edges.size(); ++e)
    {
        auto [i, j] = out.edges[e];
        Simplex common = set_intersection(basis[i], basis[j]);
        h_trip.emplace_back(static_cast<int>(i), static_cast<int>(e), sign(basis[i], common));
        h_trip.emplace_back(static_cast<int>(j), static_cast<int>(e), sign(basis[j], common));
    }
    out.h = detail::from_triplets(m, out.edges.size(), h_trip);
    IntSparse kk = out.h * IntSparse(out.h.transpose());
    kk.prune(Integer{0});
    kk.makeCompressed();
    out.k_part = OperatorMatrix{basis, basis, std::move(kk)};

    const auto deg = degrees(x, k);
    const auto deg_below = degrees(x, k - 1);
    OrientedBasis below(x, k - 1);
    std::vector<Eigen::Triplet<Integer>> d_trip;
    for (std::size_t r = 0; r < m; ++r)
    {
        Integer sum_below = 0;
        for (std::size_t i = 0; i < basis[r].size(); ++i)
            sum_below += static_cast<Integer>(deg_below[*below.index_of(basis[r].without_position(i))]);
        Integer value = 2 * (k + 1) + static_cast<Integer>(k + 2) * static_cast<Integer>(deg[r]) - sum_below;
        d_trip.emplace_back(static_cast<int>(r), static_cast<int>(r), value);
    }
    out.d = OperatorMatrix{basis, basis, detail::from_triplets(m, m, d_trip)};
    return out;
}

/** Both sides of the off-diagonal absolute row-sum identity for one row of L_k. */
struct RowSumIdentity
{
    Simplex sigma;
    Integer direct = 0;     // Σ_{η ≠ σ} |L_k(σ, η)| read off the assembled matrix
    Integer formula = 0;    // Σ_{τ ∈ σ(k-1)} deg(τ) - (k+1)(deg(σ) + 1)

    bool holds() const { return direct == formula; }
};

/** The row-sum identity for every row of L_k, in basis order (k >= 0). */
inline std::vector<RowSumIdentity> offdiag_abs_row_sums(const SimplicialComplex& x, int k)
{
    detail::require_dimension(x, k, 0, "offdiag_abs_row_sum");
    const auto lap = laplacian(x, k);
    const auto deg = degrees(x, k);
    const auto deg_below = degrees(x, k - 1);
    OrientedBasis below(x, k - 1);
    std::vector<RowSumIdentity> out;
    for (std::size_t r = 0; r < lap.rows.size(); ++r)
    {
        RowSumIdentity row{lap.rows[r]};
        for (IntSparse::InnerIterator it(lap.entries, static_cast<Eigen::Index>(r)); it; ++it)
            if (static_cast<std::size_t>(it.col()) != r)
                row.direct += std::abs(it.value());
        Integer sum_below = 0;
        for (std::size_t i = 0; i < row.sigma.size(); ++i)
            sum_below += static_cast<Integer>(deg_below[*below.index_of(row.sigma.without_position(i))]);
        row.formula = sum_below - static_cast<Integer>(k + 1) * (static_cast<Integer>(deg[r]) + 1);
        out.push_back(std::move(row));
    }
    return out;
}

inline RowSumIdentity offdiag_abs_row_sum(const SimplicialComplex& x, int k, const Simplex& sigma)
{
    if (sigma.dimension() != k || !x.contains(sigma))
        throw InputError("offdiag_abs_row_sum: " + sigma.to_string() + " is not in X("
                         + std::to_string(k) + ")");
    auto rows = offdiag_abs_row_sums(x, k);
    return rows[*x.index_of(sigma)];
}

/**
 * Matrix dump: `rows cols`, then `i j value` for each non-zero in row-major
 * order.
 */
inline void write_matrix_dump(std::ostream& out, const OperatorMatrix& m)
{
    out << m.entries.rows() << " " << m.entries.cols() << "\n";
    for (Eigen::Index r = 0; r < m.entries.outerSize(); ++r)
        for (IntSparse::InnerIterator it(m.entries, r); it; ++it)
            if (it.value() != 0)
                out << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}   // namespace lapgap

#endif
