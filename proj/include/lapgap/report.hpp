/**
 * Text serialization of lapgap results: JSON objects with a fixed key
 * order and floats printed with 12 significant digits, so identical runs
 * produce byte-identical output.
 */

#ifndef LAPGAP_REPORT_HPP
#define LAPGAP_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <utility>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "complex.hpp"
#include "extremal.hpp"
#include "probe.hpp"
#include "spectral.hpp"

namespace lapgap {

/** 12 significant digits; magnitudes below 5e-13 print as 0. */
inline std::string format_double(double v)
{
    if (std::abs(v) < 5e-13)
        v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/**
 * An ordered list of fields. Values are stored as JSON literals; `text()`
 * renders the same fields as `key=value` pairs with strings unquoted.
 */
class Record
{
    public:
        Record& field(const std::string& key, const std::string& raw)
        {
            fields_.emplace_back(key, raw);
            return *this;
        }
        Record& num(const std::string& key, long long v) { return field(key, std::to_string(v)); }
        Record& real(const std::string& key, double v) { return field(key, format_double(v)); }
        Record& flag(const std::string& key, bool v) { return field(key, v ? "true" : "false"); }
        Record& text(const std::string& key, const std::string& v) { return field(key, '"' + v + '"'); }

        std::string json() const
        {
            if (fields_.empty())
                return "{}";
            std::string out = "{";
            for (std::size_t i = 0; i < fields_.size(); ++i)
                out += (i ? ", \"" : "\"") + fields_[i].first + "\": " + fields_[i].second;
            return out + "}";
        }

        std::string text() const
        {
            std::string out;
            for (std::size_t i = 0; i < fields_.size(); ++i)
            {
                std::string v = fields_[i].second;
                if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
                    v = v.substr(1, v.size() - 2);
                out += (i ? " " : "") + fields_[i].first + "=" + v;
            }
            return out;
        }

    private:
        std::vector<std::pair<std::string, std::string>> fields_;
};

namespace detail {

inline std::string json_reals(const std::vector<double>& values)
{
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? ", " : "") + format_double(values[i]);
    return s + "]";
}

inline std::string json_faces(const std::vector<Simplex>& faces)
{
    std::string s = "[";
    for (std::size_t i = 0; i < faces.size(); ++i)
    {
        s += (i ? ", [" : "[");
        for (std::size_t j = 0; j < faces[i].size(); ++j)
            s += (j ? ", " : "") + std::to_string(faces[i][j]);
        s += "]";
    }
    return s + "]";
}

}   // namespace detail

/** `{"k", "gap", "betti", "spectrum"}` for one dimension. */
inline Record profile_record(const ProfileRecord& r)
{
    return Record()
        .num("k", r.k)
        .real("gap", r.gap)
        .num("betti", static_cast<long long>(r.betti))
        .field("spectrum", detail::json_reals(r.spectrum.values));
}

/** `{"n", "dim", "profile": [...]}` with one profile record per dimension. */
inline std::string profile_json(const SimplicialComplex& x, const std::vector<ProfileRecord>& profile)
{
    std::string rows = "[";
    for (std::size_t i = 0; i < profile.size(); ++i)
        rows += (i ? ", " : "") + profile_record(profile[i]).json();
    rows += "]";
    return Record().num("n", x.vertex_count()).num("dim", x.dimension()).field("profile", rows).json();
}

inline Record gap_record(int k, double gap)
{
    return Record().num("k", k).real("gap", gap);
}

inline Record betti_record(int k, std::size_t betti)
{
    return Record().num("k", k).num("betti", static_cast<long long>(betti));
}

inline Record bound_record(const BoundReport& b)
{
    return Record()
        .num("k", b.k)
        .num("delta_k", b.delta_k)
        .real("mu_k", b.mu_k)
        .num("paper_bound", b.paper_bound)
        .num("degree_sum_min", b.degree_sum_min)
        .num("gershgorin_bound", b.gershgorin_bound)
        .num("d", b.d)
        .flag("d_convention", b.d_convention)
        .real("slack", b.slack)
        .flag("tight", b.tight)
        .flag("chain_holds", b.chain_holds())
        .flag("degree_sum_holds", b.degree_sum_holds);
}

inline std::string bound_json(const BoundReport& b) { return bound_record(b).json(); }

inline Record vanishing_record(const VanishingReport& v)
{
    return Record()
        .num("d", v.d)
        .flag("d_convention", v.d_convention)
        .num("k_min", v.k_min)
        .flag("verified", v.verified);
}

/**
 * `{"n", "d", "k", "mu", "target", "isomorphic_to_canonical", "facets"}`;
 * a counterexample also carries its full "spectrum".
 */
inline Record probe_hit_record(const ProbeHit& h)
{
    Record o;
    o.num("n", h.n)
        .num("d", h.d)
        .num("k", h.k)
        .real("mu", h.mu)
        .num("target", h.target)
        .flag("isomorphic_to_canonical", h.isomorphic_to_canonical)
        .field("facets", detail::json_faces(h.facets));
    if (!h.isomorphic_to_canonical)
        o.field("spectrum", detail::json_reals(h.spectrum.values));
    return o;
}

inline std::string probe_hit_json(const ProbeHit& h) { return probe_hit_record(h).json(); }

inline Record probe_summary_record(const ProbeReport& r)
{
    return Record()
        .num("n", r.n)
        .num("d", r.d)
        .text("mode", r.mode == ProbeMode::exhaustive ? "exhaustive" : "random")
        .num("seed", static_cast<long long>(r.seed))
        .num("examined", static_cast<long long>(r.examined))
        .num("eigensolves", static_cast<long long>(r.eigensolves))
        .num("labeled_hits", static_cast<long long>(r.labeled_hits))
        .num("classes", static_cast<long long>(r.hits.size()))
        .num("counterexamples", static_cast<long long>(r.counterexamples()))
        .num("near_misses", static_cast<long long>(r.near_misses))
        .flag("complete", r.complete);
}

inline std::string probe_summary_json(const ProbeReport& r) { return probe_summary_record(r).json(); }

inline Record z_check_row_record(const ZParams& p, const ZCheckRow& row, double tol)
{
    return Record()
        .num("d", p.d)
        .num("t", p.t)
        .num("r", p.r)
        .num("k", row.k)
        .num("predicted_mu", row.predicted_mu)
        .real("mu", row.actual_mu)
        .real("join_mu", row.join_mu)
        .num("predicted_delta", row.predicted_delta)
        .num("delta", row.actual_delta)
        .flag("pass", row.passes(tol));
}

inline Record equality_record(const SimplicialComplex& x, const EqualityVerdict& v)
{
    Record o;
    o.num("n", x.vertex_count()).num("k", v.k).real("mu", v.mu).num("target", v.target).flag("holds", v.holds);
    if (v.canonical_iso)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.canonical_iso->size(); ++i)
            s += (i ? ", " : "") + std::to_string((*v.canonical_iso)[i]);
        o.field("canonical_iso", s + "]");
    }
    return o;
}

inline Record missing_record(const SimplicialComplex& x, const MissingFaceReport& m)
{
    return Record()
        .num("n", x.vertex_count())
        .field("missing_faces", detail::json_faces(m.missing_faces))
        .field("h", m.h ? std::to_string(*m.h) : "null");
}

inline Record complex_record(const SimplicialComplex& x)
{
    std::string f = "[";
    const auto fv = x.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i)
        f += (i ? ", " : "") + std::to_string(fv[i]);
    f += "]";
    return Record()
        .num("n", x.vertex_count())
        .num("dim", x.dimension())
        .field("f_vector", f)
        .field("facets", detail::json_faces(x.facets()));
}

}   // namespace lapgap

#endif
