/**
 * Spectra of reduced Laplacians: dense symmetric eigensolves, spectral
 * gaps, Betti numbers (numerical kernel cross-checked against an exact
 * rank computation over GF(p)), closed-form skeleton spectra and the
 * sumset composition of join spectra.
 */

#ifndef LAPGAP_SPECTRAL_HPP
#define LAPGAP_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "complex.hpp"
#include "error.hpp"
#include "operators.hpp"

namespace lapgap {

/** Absolute tolerance below which an eigenvalue counts as zero. */
inline constexpr double kZeroTolerance = 1e-7;

/** A sorted real multiset. */
struct Spectrum
{
    std::vector<double> values;         // ascending
    double tolerance = 1e-8;            // gap tolerance for multiplicity grouping
    std::size_t source_size = 0;        // dimension of the matrix it came from

    Spectrum() = default;
    explicit Spectrum(std::vector<double> v, double tol = 1e-8)
        : values(std::move(v)), tolerance(tol), source_size(values.size())
    {
        std::sort(values.begin(), values.end());
    }

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    double min() const { return values.front(); }
    double max() const { return values.back(); }

    /** (value, multiplicity) pairs; consecutive values within `tolerance` share a group. */
    std::vector<std::pair<double, std::size_t>> groups() const
    {
        std::vector<std::pair<double, std::size_t>> out;
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (i > 0 && values[i] - values[i - 1] <= tolerance)
                ++out.back().second;
            else
                out.emplace_back(values[i], 1);
        }
        return out;
    }

    std::size_t count_below(double threshold) const
    {
        return static_cast<std::size_t>(std::count_if(values.begin(), values.end(),
                                                      [&](double v) { return v < threshold; }));
    }
};

/** Multiset equality of two spectra, matching sorted values within `tol`. */
inline bool multiset_equal(const Spectrum& a, const Spectrum& b, double tol)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol)
            return false;
    return true;
}

namespace detail {

inline Spectrum solve_blocks(const Eigen::MatrixXd& m, const std::vector<std::vector<Eigen::Index>>& blocks)
{
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(m.rows()));
    for (const auto& block : blocks)
    {
        const auto size = static_cast<Eigen::Index>(block.size());
        if (size == 1)
        {
            values.push_back(m(block[0], block[0]));
            continue;
        }
        Eigen::MatrixXd sub(size, size);
        for (Eigen::Index i = 0; i < size; ++i)
            for (Eigen::Index j = 0; j < size; ++j)
                sub(i, j) = m(block[i], block[j]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw IntegrityError("symmetric eigensolver did not converge");
        for (Eigen::Index i = 0; i < size; ++i)
            values.push_back(solver.eigenvalues()(i));
    }
    return Spectrum(std::move(values));
}

// Connected components of the non-zero pattern; the matrix is block
// diagonal after permuting each component together.
template <typename IsEdge>
std::vector<std::vector<Eigen::Index>> components(Eigen::Index n, IsEdge&& neighbours)
{
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Eigen::Index>> out;
    for (Eigen::Index s = 0; s < n; ++s)
    {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Eigen::Index> stack{s};
        comp[s] = id;
        while (!stack.empty())
        {
            Eigen::Index v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            neighbours(v, [&](Eigen::Index w) {
                if (comp[w] < 0)
                {
                    comp[w] = id;
                    stack.push_back(w);
                }
            });
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

}   // namespace detail

/**
 * Full spectrum of a real symmetric matrix. The matrix is split into the
 * connected components of its non-zero pattern and each block is solved
 * with a dense self-adjoint eigensolver.
 */
inline Spectrum eigenvalues(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols())
        throw ContractError("eigenvalues: matrix is not square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ContractError("eigenvalues: matrix is not symmetric");
    auto blocks = detail::components(m.rows(), [&](Eigen::Index v, auto&& visit) {
        for (Eigen::Index w = 0; w < m.cols(); ++w)
            if (w != v && m(v, w) != 0.0)
                visit(w);
    });
    return detail::solve_blocks(m, blocks);
}

inline Spectrum eigenvalues(const OperatorMatrix& op)
{
    if (!op.is_symmetric())
        throw ContractError("eigenvalues: operator is not symmetric");
    const auto& e = op.entries;
    auto blocks = detail::components(e.rows(), [&](Eigen::Index v, auto&& visit) {
        for (IntSparse::InnerIterator it(e, v); it; ++it)
            if (it.col() != v)
                visit(it.col());
    });
    return detail::solve_blocks(op.to_double(), blocks);
}

/** Spectrum of L_k(X); the k = -1 spectrum is {|X(0)|} without a solve. */
inline Spectrum laplacian_spectrum(const SimplicialComplex& x, int k)
{
    if (k < -1 || k > x.dimension())
        throw DomainError("spectrum of L_" + std::to_string(k) + " undefined (no " + std::to_string(k)
                          + "-faces)");
    if (k == -1)
        return Spectrum({static_cast<double>(x.face_count(0))});
    return eigenvalues(laplacian(x, k));
}

/** μ_k(X), the smallest eigenvalue of L_k(X). */
inline double spectral_gap(const SimplicialComplex& x, int k)
{
    return laplacian_spectrum(x, k).min();
}

inline std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return out;
}

/**
 * Closed-form spectrum of L_i on the k-skeleton of the simplex on n
 * vertices: n repeated C(n, i+1) times for i < k, and C(n-1, k+1) zeros
 * followed by C(n-1, k) copies of n for i = k.
 */
inline Spectrum skeleton_spectrum(int n, int k, int i)
{
    if (i > k)
        throw InputError("skeleton_spectrum: requires i <= k");
    if (i < -1 || k > n - 1)
        throw InputError("skeleton_spectrum: requires -1 <= i <= k <= n-1");
    std::vector<double> v;
    if (i < k)
        v.assign(binomial(n, i + 1), static_cast<double>(n));
    else
    {
        v.assign(binomial(n - 1, k + 1), 0.0);
        v.insert(v.end(), binomial(n - 1, k), static_cast<double>(n));
    }
    return Spectrum(std::move(v));
}

/** Rank of an integer matrix over GF(p), p = 2^31 - 1, by sparse row reduction. */
inline std::size_t rank_mod_p(const IntSparse& m)
{
    constexpr std::int64_t p = 2147483647;
    auto reduce = [](std::int64_t a) { a %= p; return a < 0 ? a + p : a; };
    auto inverse = [&](std::int64_t a) {
        std::int64_t result = 1, base = a, e = p - 2;
        while (e > 0)
        {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };

    using Row = std::vector<std::pair<Eigen::Index, std::int64_t>>;     // sorted by column
    std::map<Eigen::Index, Row> pivots;                                 // leading column -> monic row
    for (Eigen::Index r = 0; r < m.outerSize(); ++r)
    {
        Row row;
        for (IntSparse::InnerIterator it(m, r); it; ++it)
            if (reduce(it.value()) != 0)
                row.emplace_back(it.col(), reduce(it.value()));
        while (!row.empty())
        {
            auto found = pivots.find(row.front().first);
            if (found == pivots.end())
            {
                const std::int64_t inv = inverse(row.front().second);
                for (auto& [c, v] : row)
                    v = v * inv % p;
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const std::int64_t factor = row.front().second;
            const Row& piv = found->second;
            Row next;
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < piv.size())
            {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first))
                    next.push_back(row[a++]);
                else if (a == row.size() || piv[b].first < row[a].first)
                {
                    next.emplace_back(piv[b].first, reduce(-factor * piv[b].second % p));
                    ++b;
                }
                else
                {
                    std::int64_t v = reduce(row[a].second - factor * piv[b].second % p);
                    if (v != 0)
                        next.emplace_back(row[a].first, v);
                    ++a;
                    ++b;
                }
            }
            row = std::move(next);
        }
    }
    return pivots.size();
}

/** β_k from exact ranks: |X(k)| - rank δ_k - rank δ_{k-1}. */
inline std::size_t betti_exact(const SimplicialComplex& x, int k)
{
    if (k < -1 || k > x.dimension())
        throw DomainError("betti: dimension " + std::to_string(k) + " undefined (no k-faces)");
    std::size_t rank_up = rank_mod_p(coboundary_matrix(x, k).entries);
    std::size_t rank_down = (k >= 0) ? rank_mod_p(coboundary_matrix(x, k - 1).entries) : 0;
    return x.face_count(k) - rank_up - rank_down;
}

/**
 * Reduced Betti number β_k = dim ker L_k, counted as eigenvalues below
 * `zero_tol` and required to match the exact GF(p) rank computation.
 */
inline std::size_t betti(const SimplicialComplex& x, int k, const Spectrum& spectrum,
                         double zero_tol = kZeroTolerance)
{
    const std::size_t numeric = spectrum.count_below(zero_tol);
    const std::size_t exact = betti_exact(x, k);
    if (numeric != exact)
        throw IntegrityError("betti_" + std::to_string(k) + ": kernel of L_k has dimension "
                             + std::to_string(numeric) + " numerically but exact rank gives "
                             + std::to_string(exact));
    return exact;
}

inline std::size_t betti(const SimplicialComplex& x, int k, double zero_tol = kZeroTolerance)
{
    return betti(x, k, laplacian_spectrum(x, k), zero_tol);
}

/** Per-dimension spectra s_{-1}, ..., s_dim of one join factor. */
struct FactorSpectra
{
    int dim = -1;
    std::vector<Spectrum> by_dim;       // by_dim[i + 1] = s_i

    const Spectrum& at(int i) const { return by_dim[static_cast<std::size_t>(i + 1)]; }
};

inline FactorSpectra factor_spectra(const SimplicialComplex& x)
{
    FactorSpectra out;
    out.dim = x.dimension();
    for (int k = -1; k <= x.dimension(); ++k)
        out.by_dim.push_back(laplacian_spectrum(x, k));
    return out;
}

/**
 * Spectrum of L_k on X_1 * ... * X_m from the factor spectra: the multiset
 * union, over index tuples with i_1 + ... + i_m = k - m + 1 and
 * -1 <= i_j <= dim X_j, of the sumsets s_{i_1}(X_1) + ... + s_{i_m}(X_m).
 * Returns an empty spectrum when k is outside the join's dimension range.
 */
inline Spectrum join_spectrum(const std::vector<FactorSpectra>& factors, int k)
{
    const int m = static_cast<int>(factors.size());
    if (m == 0)
        throw InputError("join_spectrum: no factors");
    const int target = k - m + 1;
    std::vector<double> out;

    // suffix bounds prune tuples that cannot reach the target sum
    std::vector<int> min_rest(m + 1, 0), max_rest(m + 1, 0);
    for (int j = m - 1; j >= 0; --j)
    {
        min_rest[j] = min_rest[j + 1] - 1;
        max_rest[j] = max_rest[j + 1] + factors[j].dim;
    }

    std::vector<double> partial{0.0};
    auto recurse = [&](auto&& self, int j, int remaining, const std::vector<double>& sums) -> void {
        if (j == m)
        {
            if (remaining == 0)
                out.insert(out.end(), sums.begin(), sums.end());
            return;
        }
        for (int i = -1; i <= factors[j].dim; ++i)
        {
            const int rest = remaining - i;
            if (rest < min_rest[j + 1] || rest > max_rest[j + 1])
                continue;
            const auto& s = factors[j].at(i);
            std::vector<double> next;
            next.reserve(sums.size() * s.size());
            for (double a : sums)
                for (double b : s.values)
                    next.push_back(a + b);
            self(self, j + 1, rest, next);
        }
    };
    recurse(recurse, 0, target, partial);
    return Spectrum(std::move(out));
}

/** One row of a spectral profile. */
struct ProfileRecord
{
    int k = -1;
    double gap = 0.0;
    std::size_t betti = 0;
    Spectrum spectrum;
};

/** Gap, Betti number and spectrum for every k = -1, ..., dim X. */
inline std::vector<ProfileRecord> spectral_profile(const SimplicialComplex& x, double zero_tol = kZeroTolerance)
{
    std::vector<ProfileRecord> out;
    for (int k = -1; k <= x.dimension(); ++k)
    {
        ProfileRecord rec;
        rec.k = k;
        rec.spectrum = laplacian_spectrum(x, k);
        rec.gap = rec.spectrum.empty() ? 0.0 : rec.spectrum.min();
        rec.betti = betti(x, k, rec.spectrum, zero_tol);
        out.push_back(std::move(rec));
    }
    return out;
}

}   // namespace lapgap

#endif
