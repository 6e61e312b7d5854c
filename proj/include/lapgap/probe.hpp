/**
 * Search for complexes X with h(X) = d that attain μ_k(X) = (d+1)(k+1) - dn,
 * and test each one against the canonical equality complex.
 *
 * Complexes are generated from their missing faces: any antichain of
 * vertex sets of sizes 2..d+1 is exactly the set of minimal non-faces of
 * the complex {σ : no member of the antichain lies in σ}, and requiring a
 * member of size d+1 makes h(X) = d. Exhaustive mode walks every labeled
 * antichain; random mode samples them from a seeded generator.
 *
 * Two exact facts rule out most (X, k) before any eigensolve: L_k is
 * positive semi-definite, so a negative target cannot be attained, and
 * μ_k is at least the Gershgorin row bound of L_k, which equals the
 * integer degree-sum minimum computed here from bit masks. Only pairs
 * whose row bound does not exceed the target are eigensolved.
 */

#ifndef LAPGAP_PROBE_HPP
#define LAPGAP_PROBE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "extremal.hpp"
#include "isomorphism.hpp"
#include "spectral.hpp"

namespace lapgap {

enum class ProbeMode
{
    exhaustive,
    random
};

inline constexpr int kExhaustiveVertexCap = 9;
inline constexpr int kRandomVertexCap = 12;

/** Hits are re-checked against this tighter tolerance before being reported. */
inline constexpr double kHitConfirmTolerance = 1e-10;

struct ProbeHit
{
    int n = 0;
    int d = 0;
    int k = 0;
    double mu = 0.0;
    Integer target = 0;
    bool isomorphic_to_canonical = false;
    std::vector<Simplex> facets;
    Spectrum spectrum;
    std::uint64_t labeled_copies = 1;   // labeled complexes seen in this isomorphism class
};

struct ProbeReport
{
    int d = 0;
    int n = 0;
    ProbeMode mode = ProbeMode::exhaustive;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::uint64_t examined = 0;         // complexes generated
    std::uint64_t eigensolves = 0;      // (X, k) pairs that survived the exact filters
    std::uint64_t labeled_hits = 0;
    std::uint64_t near_misses = 0;      // within kEqualityTolerance but not kHitConfirmTolerance
    bool complete = true;               // false when the budget ran out first
    std::vector<ProbeHit> hits;         // one per isomorphism class and k

    std::size_t counterexamples() const
    {
        return static_cast<std::size_t>(std::count_if(hits.begin(), hits.end(),
                                                      [](const ProbeHit& h) { return !h.isomorphic_to_canonical; }));
    }
};

namespace detail {

/** Subsets of {0..n-1} as bit masks, with fixed-size bitsets over all 2^n of them. */
class SubsetLattice
{
    public:
        using Bits = std::vector<std::uint64_t>;

        explicit SubsetLattice(int n) : n_(n), words_(std::max<std::size_t>(1, (std::size_t{1} << n) / 64))
        {
            by_size_.resize(n + 1);
            for (std::uint32_t s = 0; s < (1u << n); ++s)
                by_size_[std::popcount(s)].push_back(s);
        }

        int n() const { return n_; }
        std::size_t words() const { return words_; }
        const std::vector<std::uint32_t>& of_size(int size) const { return by_size_[size]; }

        Bits empty_bits() const { return Bits(words_, 0); }

        static bool test(const Bits& b, std::uint32_t s) { return (b[s >> 6] >> (s & 63)) & 1u; }
        static void set(Bits& b, std::uint32_t s) { b[s >> 6] |= std::uint64_t{1} << (s & 63); }

        /** Every superset of `m` inside {0..n-1}. */
        Bits upset(std::uint32_t m) const
        {
            Bits b = empty_bits();
            const std::uint32_t rest = ((1u << n_) - 1) & ~m;
            for (std::uint32_t sub = rest;; sub = (sub - 1) & rest)
            {
                set(b, m | sub);
                if (sub == 0)
                    break;
            }
            return b;
        }

    private:
        int n_;
        std::size_t words_;
        std::vector<std::vector<std::uint32_t>> by_size_;
};

/** Gershgorin row bound of L_k for the complex whose non-faces are `nonface`. */
inline std::optional<Integer> mask_row_bound(const SubsetLattice& lat, const SubsetLattice::Bits& nonface, int k)
{
    const int n = lat.n();
    auto is_face = [&](std::uint32_t s) { return !SubsetLattice::test(nonface, s); };
    auto degree_of = [&](std::uint32_t s) {
        Integer deg = 0;
        for (int v = 0; v < n; ++v)
            if (!(s >> v & 1u) && is_face(s | (1u << v)))
                ++deg;
        return deg;
    };
    std::optional<Integer> best;
    for (std::uint32_t s : lat.of_size(k + 1))
    {
        if (!is_face(s))
            continue;
        Integer sum_below = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1u)
                sum_below += degree_of(s & ~(1u << v));
        const Integer value = static_cast<Integer>(k + 2) * degree_of(s) + 2 * (k + 1) - sum_below;
        if (!best || value < *best)
            best = value;
    }
    return best;
}

inline SimplicialComplex complex_from_nonfaces(const SubsetLattice& lat, const SubsetLattice::Bits& nonface)
{
    std::vector<Simplex> faces;
    for (std::uint32_t s = 0; s < (1u << lat.n()); ++s)
        if (!SubsetLattice::test(nonface, s))
            faces.push_back(Simplex::from_mask(s));
    return SimplicialComplex::from_faces(lat.n(), faces);
}

class EqualitySearch
{
    public:
        EqualitySearch(int d, int n, ProbeReport& report) : d_(d), n_(n), lat_(n), report_(report)
        {
            for (int size = 2; size <= d + 1 && size <= n; ++size)
                for (std::uint32_t s : lat_.of_size(size))
                {
                    candidates_.push_back(s);
                    upsets_.push_back(lat_.upset(s));
                }
        }

        const std::vector<std::uint32_t>& candidates() const { return candidates_; }
        const SubsetLattice::Bits& upset(std::size_t i) const { return upsets_[i]; }
        const SubsetLattice& lattice() const { return lat_; }

        /** Evaluate one complex given by its non-face set. */
        void evaluate(const SubsetLattice::Bits& nonface)
        {
            ++report_.examined;
            const Integer dn = static_cast<Integer>(d_) * n_;
            std::optional<SimplicialComplex> complex;
            for (int k = 0; k < n_; ++k)
            {
                const Integer target = static_cast<Integer>(d_ + 1) * (k + 1) - dn;
                if (target < 0)
                    continue;
                auto row_bound = mask_row_bound(lat_, nonface, k);
                if (!row_bound)
                    break;      // no k-faces, hence none above
                if (*row_bound > target)
                    continue;
                if (!complex)
                    complex = complex_from_nonfaces(lat_, nonface);
                ++report_.eigensolves;
                Spectrum spec = laplacian_spectrum(*complex, k);
                const double mu = spec.min();
                const double miss = std::abs(mu - static_cast<double>(target));
                if (miss > kEqualityTolerance)
                    continue;
                if (miss > kHitConfirmTolerance)
                {
                    ++report_.near_misses;
                    continue;
                }
                record(*complex, k, mu, target, std::move(spec));
            }
        }

    private:
        void record(const SimplicialComplex& x, int k, double mu, Integer target, Spectrum spec)
        {
            ++report_.labeled_hits;
            for (auto& [hit, rep] : classes_)
                if (report_.hits[hit].k == k && isomorphic(x, rep))
                {
                    ++report_.hits[hit].labeled_copies;
                    return;
                }
            ProbeHit hit;
            hit.n = n_;
            hit.d = d_;
            hit.k = k;
            hit.mu = mu;
            hit.target = target;
            hit.isomorphic_to_canonical = isomorphic(x, canonical_complex(d_, n_, k)).has_value();
            hit.facets = x.facets();
            hit.spectrum = std::move(spec);
            classes_.emplace_back(report_.hits.size(), x);
            report_.hits.push_back(std::move(hit));
        }

        int d_;
        int n_;
        SubsetLattice lat_;
        ProbeReport& report_;
        std::vector<std::uint32_t> candidates_;     // by size, then numerically
        std::vector<SubsetLattice::Bits> upsets_;
        std::vector<std::pair<std::size_t, SimplicialComplex>> classes_;
};

inline void run_exhaustive(EqualitySearch& search, int d, bool require_top, ProbeReport& report)
{
    const auto& cand = search.candidates();
    const std::size_t count = cand.size();
    auto nonface = search.lattice().empty_bits();

    // Candidates are ordered by size, so a later candidate is never a subset
    // of an earlier one: it extends the antichain iff it is not yet a non-face.
    auto walk = [&](auto&& self, std::size_t from, int top_count, SubsetLattice::Bits& nf) -> bool {
        if (!require_top || top_count > 0)
        {
            if (report.examined >= report.budget)
                return false;
            search.evaluate(nf);
        }
        for (std::size_t i = from; i < count; ++i)
        {
            if (SubsetLattice::test(nf, cand[i]))
                continue;
            SubsetLattice::Bits next = nf;
            const auto& up = search.upset(i);
            for (std::size_t w = 0; w < next.size(); ++w)
                next[w] |= up[w];
            const int top = top_count + (std::popcount(cand[i]) == d + 1 ? 1 : 0);
            if (!self(self, i + 1, top, next))
                return false;
        }
        return true;
    };
    report.complete = walk(walk, 0, 0, nonface);
}

inline void run_random(EqualitySearch& search, int d, ProbeReport& report)
{
    std::mt19937_64 rng(report.seed);
    const auto& cand = search.candidates();
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (std::popcount(cand[i]) == d + 1)
            top.push_back(i);
    if (top.empty())
        throw InputError("probe: no vertex sets of size d+1 on this many vertices");

    std::vector<std::size_t> order(cand.size());
    for (std::uint64_t sample = 0; sample < report.budget; ++sample)
    {
        // inclusion probability in (0, 1/2], drawn per sample so both sparse
        // and dense missing-face families are visited
        const double p = 0.5 * static_cast<double>(rng() % 1000 + 1) / 1000.0;
        std::vector<std::uint32_t> chosen{cand[top[rng() % top.size()]]};
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
        for (std::size_t i : order)
        {
            if (static_cast<double>(rng() % 1000000) / 1e6 >= p)
                continue;
            const std::uint32_t c = cand[i];
            bool ok = true;
            for (std::uint32_t m : chosen)
                if ((m & c) == m || (m & c) == c)
                {
                    ok = false;
                    break;
                }
            if (ok)
                chosen.push_back(c);
        }
        auto nonface = search.lattice().empty_bits();
        for (std::uint32_t m : chosen)
        {
            const auto& up = search.upset(static_cast<std::size_t>(
                std::find(cand.begin(), cand.end(), m) - cand.begin()));
            for (std::size_t w = 0; w < nonface.size(); ++w)
                nonface[w] |= up[w];
        }
        search.evaluate(nonface);
    }
}

inline ProbeReport equality_search(int d, int n, ProbeMode mode, std::uint64_t budget, std::uint64_t seed,
                                   bool require_top)
{
    if (d < 1)
        throw InputError("probe: d must be at least 1");
    if (n < d + 1)
        throw InputError("probe: need at least d+1 vertices for a missing face of dimension d");
    if (mode == ProbeMode::exhaustive && n > kExhaustiveVertexCap)
        throw InputError("probe: exhaustive mode is limited to " + std::to_string(kExhaustiveVertexCap)
                         + " vertices");
    if (n > kRandomVertexCap)
        throw InputError("probe: random mode is limited to " + std::to_string(kRandomVertexCap) + " vertices");
    ProbeReport report;
    report.d = d;
    report.n = n;
    report.mode = mode;
    report.budget = budget;
    report.seed = seed;
    EqualitySearch search(d, n, report);
    if (mode == ProbeMode::exhaustive)
        run_exhaustive(search, d, require_top, report);
    else
        run_random(search, d, report);
    return report;
}

}   // namespace detail

/**
 * Probe the higher-dimensional equality case: complexes with h(X) = d >= 2
 * on n vertices attaining μ_k = (d+1)(k+1) - dn. Every hit is compared with
 * (Δ_d^{(d-1)})^{*(n-k-1)} * Δ_{(d+1)(k+1)-dn-1}; a hit that is not
 * isomorphic to it is a counterexample and is kept verbatim.
 *
 * `budget` caps the number of complexes examined. Exhaustive mode sets
 * `complete = false` when it stops early.
 */
inline ProbeReport conjecture_probe(int d, int n, ProbeMode mode, std::uint64_t budget, std::uint64_t seed = 0)
{
    if (d < 2)
        throw InputError("conjecture_probe: d must be at least 2 (d = 1 is settled, see clique_equality_search)");
    return detail::equality_search(d, n, mode, budget, seed, true);
}

/**
 * Every clique complex on n vertices (all 2^C(n,2) labeled graphs,
 * including the complete one) checked for μ_k = 2(k+1) - n.
 */
inline ProbeReport clique_equality_search(int n, std::uint64_t budget = std::numeric_limits<std::uint64_t>::max())
{
    if (n < 1)
        throw InputError("clique_equality_search: n must be at least 1");
    if (n == 1)
    {
        // a single vertex: only the complete complex Δ_0, where μ_0 = 1 = 2 - 1
        ProbeReport report;
        report.d = 1;
        report.n = 1;
        report.budget = budget;
        report.examined = 1;
        report.eigensolves = 1;
        report.labeled_hits = 1;
        ProbeHit hit;
        hit.n = 1;
        hit.d = 1;
        hit.k = 0;
        const auto x = simplex(0);
        hit.spectrum = laplacian_spectrum(x, 0);
        hit.mu = hit.spectrum.min();
        hit.target = 1;
        hit.isomorphic_to_canonical = isomorphic(x, canonical_equality_complex(1, 0)).has_value();
        hit.facets = x.facets();
        report.hits.push_back(std::move(hit));
        return report;
    }
    return detail::equality_search(1, n, ProbeMode::exhaustive, budget, 0, false);
}

}   // namespace lapgap

#endif
