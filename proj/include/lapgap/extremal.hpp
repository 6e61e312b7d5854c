/**
 * Complexes attaining the gap bound with equality.
 *
 * Z(d, t, r) is the join of t copies of the (d-1)-skeleton of Δ_d with
 * Δ_{r-1}. It has n = (d+1)t + r vertices, top dimension dt + r - 1, and
 * its only missing faces are the t vertex sets of the skeleton copies.
 * Its gaps and minimum degrees have the closed forms in
 * `predicted_profile_Z`, and they make the bound tight in every dimension.
 *
 * The canonical equality complex (Δ_d^{(d-1)})^{*(n-k-1)} * Δ_{(d+1)(k+1)-dn-1}
 * is the unique clique complex (d = 1) with μ_k = 2(k+1) - n; for d >= 2
 * uniqueness is open and is probed by probe.hpp.
 */

#ifndef LAPGAP_EXTREMAL_HPP
#define LAPGAP_EXTREMAL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "isomorphism.hpp"
#include "operators.hpp"
#include "spectral.hpp"

namespace lapgap {

/** Tolerance for "μ_k equals an integer target". */
inline constexpr double kEqualityTolerance = 1e-7;

struct ZParams
{
    int d = 1;
    int t = 1;
    int r = 1;

    int n() const { return (d + 1) * t + r; }
    int dim() const { return d * t + r - 1; }
};

inline void validate(const ZParams& p)
{
    if (p.d < 1)
        throw InputError("Z(d,t,r): d must be at least 1");
    if (p.t < 1 || p.r < 1)
        throw InputError("Z(d,t,r): unsupported parameters, t and r must be at least 1");
}

inline SimplicialComplex build_Z(const ZParams& p)
{
    validate(p);
    return join(join_power(skeleton(p.d, p.d - 1), p.t), simplex(p.r - 1));
}

inline SimplicialComplex build_Z(int d, int t, int r) { return build_Z(ZParams{d, t, r}); }

/** Predicted gap and minimum degree of Z in one dimension. */
struct ZProfileRow
{
    int k = -1;
    Integer mu = 0;
    Integer delta = 0;
};

/**
 * For -1 <= k <= dt - 1 with m = floor((k+1)/d):
 *     μ_k = (d+1)(t - m) + r,   δ_k = n - (k+1) - m;
 * for dt <= k <= dt + r - 1:
 *     μ_k = r,                  δ_k = n - (k+1) - t.
 */
inline std::vector<ZProfileRow> predicted_profile_Z(const ZParams& p)
{
    validate(p);
    std::vector<ZProfileRow> rows;
    const Integer n = p.n();
    for (int k = -1; k <= p.dim(); ++k)
    {
        ZProfileRow row;
        row.k = k;
        if (k <= p.d * p.t - 1)
        {
            const Integer m = (k + 1) / p.d;     // k + 1 >= 0
            row.mu = static_cast<Integer>(p.d + 1) * (p.t - m) + p.r;
            row.delta = n - (k + 1) - m;
        }
        else
        {
            row.mu = p.r;
            row.delta = n - (k + 1) - p.t;
        }
        rows.push_back(row);
    }
    return rows;
}

/** One dimension of a Z(d,t,r) reproduction. */
struct ZCheckRow
{
    int k = -1;
    Integer predicted_mu = 0;
    Integer predicted_delta = 0;
    double actual_mu = 0.0;         // eigensolve of L_k(Z)
    double join_mu = 0.0;           // minimum of the join-composed spectrum
    Integer actual_delta = 0;       // enumeration
    double bound_gap = 0.0;         // (d+1)(δ_k + k + 1) - dn - μ_k

    bool passes(double tol) const
    {
        return std::abs(actual_mu - static_cast<double>(predicted_mu)) <= tol
               && std::abs(join_mu - static_cast<double>(predicted_mu)) <= tol
               && actual_delta == predicted_delta && std::abs(bound_gap) <= tol;
    }
};

struct ZCheckReport
{
    ZParams params;
    std::vector<ZCheckRow> rows;
    double tolerance = 1e-8;

    bool passed() const
    {
        for (const auto& r : rows)
            if (!r.passes(tolerance))
                return false;
        return true;
    }
};

/** Face counts of Z(d,t,r) per dimension, without building it. */
inline std::vector<std::uint64_t> z_face_counts(const ZParams& p)
{
    std::vector<std::uint64_t> f{1};
    auto convolve = [&](const std::vector<std::uint64_t>& g) {
        std::vector<std::uint64_t> out(f.size() + g.size() - 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                out[i + j] += f[i] * g[j];
        f = std::move(out);
    };
    std::vector<std::uint64_t> skel, full;
    for (int j = 0; j <= p.d; ++j)
        skel.push_back(binomial(p.d + 1, j));
    for (int j = 0; j <= p.r; ++j)
        full.push_back(binomial(p.r, j));
    for (int i = 0; i < p.t; ++i)
        convolve(skel);
    convolve(full);
    return f;   // f[k + 1] = |Z(k)|
}

/**
 * Build Z, eigensolve every L_k, enumerate every δ_k, recompose the gaps
 * from the factor spectra, and compare everything with the closed forms.
 */
inline ZCheckReport verify_prop14(const ZParams& p, double tol = 1e-8)
{
    validate(p);
    const auto counts = z_face_counts(p);
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > kDenseBasisCap)
            throw SizeError("Z(" + std::to_string(p.d) + "," + std::to_string(p.t) + ","
                            + std::to_string(p.r) + ") has " + std::to_string(counts[i])
                            + " faces in dimension " + std::to_string(static_cast<int>(i) - 1)
                            + ", above the dense cap");

    ZCheckReport rep;
    rep.params = p;
    rep.tolerance = tol;
    const auto z = build_Z(p);
    const auto predicted = predicted_profile_Z(p);

    std::vector<FactorSpectra> factors(static_cast<std::size_t>(p.t), factor_spectra(skeleton(p.d, p.d - 1)));
    factors.push_back(factor_spectra(simplex(p.r - 1)));

    const Integer n = p.n();
    for (const auto& pr : predicted)
    {
        ZCheckRow row;
        row.k = pr.k;
        row.predicted_mu = pr.mu;
        row.predicted_delta = pr.delta;
        row.actual_mu = spectral_gap(z, pr.k);
        row.join_mu = join_spectrum(factors, pr.k).min();
        row.actual_delta = static_cast<Integer>(min_degree(z, pr.k));
        const Integer bound = static_cast<Integer>(p.d + 1) * (row.actual_delta + pr.k + 1) - p.d * n;
        row.bound_gap = static_cast<double>(bound) - row.actual_mu;
        rep.rows.push_back(row);
    }
    return rep;
}

/**
 * (Δ_d^{(d-1)})^{*t} * Δ_{r-1} with t = n - k - 1 and r = (d+1)(k+1) - dn.
 * A zero-fold join or Δ_{-1} is the complex {∅}, so t = 0 gives Δ_{n-1}
 * and r = 0 gives the pure join of skeleta.
 */
inline SimplicialComplex canonical_complex(int d, int n, int k)
{
    if (d < 1)
        throw InputError("canonical complex: d must be at least 1");
    const int t = n - k - 1;
    const int r = (d + 1) * (k + 1) - d * n;
    if (t < 0 || r < 0 || n < 1)
        throw InputError("canonical complex: (n, k) = (" + std::to_string(n) + ", " + std::to_string(k)
                         + ") needs n - k - 1 >= 0 and (d+1)(k+1) - dn >= 0");
    SimplicialComplex out = simplex(r - 1);
    if (t > 0)
        out = join(join_power(skeleton(d, d - 1), t), out);
    return out;
}

/** The clique-complex case: (Δ_1^{(0)})^{*(n-k-1)} * Δ_{2(k+1)-n-1}. */
inline SimplicialComplex canonical_equality_complex(int n, int k)
{
    return canonical_complex(1, n, k);
}

struct EqualityVerdict
{
    int k = -1;
    double mu = 0.0;
    Integer target = 0;                             // (d+1)(k+1) - dn
    bool holds = false;
    std::optional<std::vector<Vertex>> canonical_iso;
};

/**
 * Whether μ_k(X) = 2(k+1) - n for a clique complex X and, if so, the
 * isomorphism onto the canonical equality complex. Equality without such
 * an isomorphism is an IntegrityError.
 */
inline EqualityVerdict equality_case_check(const SimplicialComplex& x, int k, double tol = kEqualityTolerance)
{
    auto h = missing_faces(x).h;
    if (h && *h > 1)
        throw InputError("equality_case_check: X has a missing face of dimension " + std::to_string(*h)
                         + " and is not a clique complex");
    if (k < -1 || k > x.dimension())
        throw DomainError("equality_case_check: dimension " + std::to_string(k) + " undefined (no k-faces)");
    EqualityVerdict v;
    v.k = k;
    const Integer n = x.vertex_count();
    v.target = 2 * (k + 1) - n;
    v.mu = spectral_gap(x, k);
    v.holds = std::abs(v.mu - static_cast<double>(v.target)) <= tol;
    if (!v.holds)
        return v;
    v.canonical_iso = isomorphic(x, canonical_equality_complex(static_cast<int>(n), k));
    if (!v.canonical_iso)
        throw IntegrityError("mu_" + std::to_string(k) + " = 2(k+1) - n but X is not isomorphic to the "
                             "canonical equality complex");
    return v;
}

}   // namespace lapgap

#endif
