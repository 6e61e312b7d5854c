/**
 * The spectral-gap lower bound (d+1)(δ_k + k + 1) - dn for complexes whose
 * missing faces have dimension at most d, the quantities on the way to it
 * (Gershgorin row bound, the degree-sum minimum, the degree-sum identity
 * and inequality), and the cohomology vanishing threshold it implies.
 *
 * Every bound quantity is an exact integer; only μ_k is floating point and
 * it is compared with absolute tolerance kBoundTolerance.
 */

#ifndef LAPGAP_BOUNDS_HPP
#define LAPGAP_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "complex.hpp"
#include "error.hpp"
#include "operators.hpp"
#include "spectral.hpp"

namespace lapgap {

inline constexpr double kBoundTolerance = 1e-7;

/**
 * Gershgorin lower bound min_i (A_ii - Σ_{j≠i} |A_ij|) for a square matrix.
 * Every real eigenvalue of a symmetric A is at least this value.
 */
template <typename Derived>
typename Derived::Scalar gershgorin_lower_bound(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols())
        throw InputError("gershgorin_lower_bound: matrix is not square");
    if (a.rows() == 0)
        throw InputError("gershgorin_lower_bound: empty matrix");
    Scalar best = std::numeric_limits<Scalar>::max();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
    {
        Scalar off = 0;
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (j != i)
                off += (a(i, j) < 0) ? -a(i, j) : a(i, j);
        best = std::min<Scalar>(best, a(i, i) - off);
    }
    return best;
}

/** Same bound read from a sparse integer operator. */
inline Integer gershgorin_lower_bound(const OperatorMatrix& op)
{
    const auto& e = op.entries;
    if (e.rows() != e.cols())
        throw InputError("gershgorin_lower_bound: matrix is not square");
    if (e.rows() == 0)
        throw InputError("gershgorin_lower_bound: empty matrix");
    Integer best = std::numeric_limits<Integer>::max();
    for (Eigen::Index r = 0; r < e.outerSize(); ++r)
    {
        Integer diag = 0, off = 0;
        for (IntSparse::InnerIterator it(e, r); it; ++it)
        {
            if (it.col() == r)
                diag = it.value();
            else
                off += std::abs(it.value());
        }
        best = std::min(best, diag - off);
    }
    return best;
}

/** h(X), or 0 for a complex without missing faces. */
struct MissingFaceDimension
{
    int d = 0;
    bool convention = false;    // true when X has no missing faces and d = 0 is assumed
};

inline MissingFaceDimension missing_face_dimension(const SimplicialComplex& x)
{
    auto report = missing_faces(x);
    if (!report.h)
        return {0, true};
    return {*report.h, false};
}

/** Both sides of the degree-sum identity and of the degree-sum inequality for one face. */
struct DegreeSumRecord
{
    Simplex sigma;
    int k = 0;
    int d = 0;
    Integer inequality_lhs = 0;      // Σ_{τ∈σ(k-1)} deg τ - (k-d+1) deg σ
    Integer inequality_rhs = 0;      // dn - (d-1)(k+1)
    Integer identity_lhs = 0;   // Σ_{τ∈σ(k-1)} deg τ
    Integer identity_rhs = 0;   // (k+1)(deg σ + 1) + Σ_{v∉σ, v∉lk σ} |{τ ∈ σ(k-1) : v ∈ lk τ}|

    bool inequality_holds() const { return inequality_lhs <= inequality_rhs; }
    bool inequality_tight() const { return inequality_lhs == inequality_rhs; }
    bool identity_holds() const { return identity_lhs == identity_rhs; }
};

inline DegreeSumRecord degree_sum_check(const SimplicialComplex& x, const Simplex& sigma, int d)
{
    if (!x.contains(sigma))
        throw InputError("degree_sum_check: " + sigma.to_string() + " is not a face");
    const int k = sigma.dimension();
    if (k < 0)
        throw InputError("degree_sum_check: requires a face of dimension >= 0");
    const Integer n = x.vertex_count();
    const Integer deg_sigma = static_cast<Integer>(degree(x, sigma));

    DegreeSumRecord rec;
    rec.sigma = sigma;
    rec.k = k;
    rec.d = d;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        rec.identity_lhs += static_cast<Integer>(degree(x, sigma.without_position(i)));

    rec.identity_rhs = static_cast<Integer>(k + 1) * (deg_sigma + 1);
    for (Vertex v = 0; v < x.vertex_count(); ++v)
    {
        if (sigma.contains(v) || x.contains(sigma.with(v)))
            continue;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (x.contains(sigma.without_position(i).with(v)))
                ++rec.identity_rhs;
    }

    rec.inequality_lhs = rec.identity_lhs - static_cast<Integer>(k - d + 1) * deg_sigma;
    rec.inequality_rhs = static_cast<Integer>(d) * n - static_cast<Integer>(d - 1) * (k + 1);
    return rec;
}

/** Everything known about the gap bound in one dimension. */
struct BoundReport
{
    int k = -1;
    Integer delta_k = 0;
    double mu_k = 0.0;
    Integer paper_bound = 0;        // (d+1)(δ_k + k + 1) - dn
    Integer degree_sum_min = 0;     // min_σ ((k+2)deg σ + 2(k+1) - Σ_{τ∈σ(k-1)} deg τ)
    Integer gershgorin_bound = 0;   // read off the assembled L_k
    int d = 0;
    bool d_convention = false;
    double slack = 0.0;             // μ_k - paper_bound
    bool tight = false;             // |slack| <= tolerance
    bool degree_sum_holds = true;        // degree-sum inequality for every σ ∈ X(k)

    bool bound_holds() const { return mu_k >= static_cast<double>(paper_bound) - kBoundTolerance; }

    /** paper_bound <= degree_sum_min == gershgorin_bound <= μ_k. */
    bool chain_holds() const
    {
        return paper_bound <= degree_sum_min && degree_sum_min == gershgorin_bound
               && static_cast<double>(gershgorin_bound) <= mu_k + kBoundTolerance;
    }

    bool ok() const { return bound_holds() && chain_holds() && degree_sum_holds; }
};

/**
 * Bound report for dimension k. d defaults to h(X) (0 with the convention
 * flag when X has no missing faces); `d_override` replaces it.
 */
inline BoundReport theorem_bound(const SimplicialComplex& x, int k, std::optional<int> d_override = std::nullopt)
{
    if (k < -1 || k > x.dimension())
        throw DomainError("theorem_bound: dimension " + std::to_string(k) + " undefined (no k-faces)");
    BoundReport rep;
    rep.k = k;
    if (d_override)
        rep.d = *d_override;
    else
    {
        auto h = missing_face_dimension(x);
        rep.d = h.d;
        rep.d_convention = h.convention;
    }
    const Integer n = x.vertex_count();
    const Integer d = rep.d;

    const auto deg = degrees(x, k);
    rep.delta_k = static_cast<Integer>(*std::min_element(deg.begin(), deg.end()));
    rep.paper_bound = (d + 1) * (rep.delta_k + k + 1) - d * n;

    const auto lap = laplacian(x, k);
    rep.gershgorin_bound = gershgorin_lower_bound(lap);
    if (k == -1)
    {
        rep.degree_sum_min = rep.delta_k;
        rep.mu_k = static_cast<double>(x.face_count(0));
    }
    else
    {
        const auto deg_below = degrees(x, k - 1);
        const auto& level = x.faces(k);
        rep.degree_sum_min = std::numeric_limits<Integer>::max();
        for (std::size_t r = 0; r < level.size(); ++r)
        {
            Integer sum_below = 0;
            for (std::size_t i = 0; i < level[r].size(); ++i)
                sum_below += static_cast<Integer>(deg_below[*x.index_of(level[r].without_position(i))]);
            const Integer value = static_cast<Integer>(k + 2) * static_cast<Integer>(deg[r])
                                  + 2 * (k + 1) - sum_below;
            rep.degree_sum_min = std::min(rep.degree_sum_min, value);

            const Integer inequality_lhs = sum_below - static_cast<Integer>(k - rep.d + 1) * static_cast<Integer>(deg[r]);
            const Integer inequality_rhs = d * n - (d - 1) * (k + 1);
            if (inequality_lhs > inequality_rhs)
                rep.degree_sum_holds = false;
        }
        rep.mu_k = eigenvalues(lap).min();
    }
    rep.slack = rep.mu_k - static_cast<double>(rep.paper_bound);
    rep.tight = std::abs(rep.slack) <= kBoundTolerance;
    return rep;
}

struct VanishingReport
{
    int d = 0;
    bool d_convention = false;
    int k_min = 0;          // smallest integer k with k > dn/(d+1) - 1
    bool verified = false;  // β_k = 0 for all k_min <= k <= dim X
};

/**
 * Dimension above which reduced cohomology must vanish. k > dn/(d+1) - 1
 * is equivalent to (k+1)(d+1) > dn, so k_min = floor(dn / (d+1)).
 */
inline VanishingReport vanishing_threshold(const SimplicialComplex& x, std::optional<int> d_override = std::nullopt)
{
    VanishingReport rep;
    if (d_override)
        rep.d = *d_override;
    else
    {
        auto h = missing_face_dimension(x);
        rep.d = h.d;
        rep.d_convention = h.convention;
    }
    const long long dn = static_cast<long long>(rep.d) * x.vertex_count();
    rep.k_min = static_cast<int>(dn / (rep.d + 1));
    rep.verified = true;
    for (int k = std::max(rep.k_min, -1); k <= x.dimension(); ++k)
        if (betti(x, k) != 0)
            rep.verified = false;
    return rep;
}

}   // namespace lapgap

#endif
