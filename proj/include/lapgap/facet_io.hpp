/**
 * Facet file format.
 *
 *     # comment
 *     n 5
 *     0 1 2
 *     2 3
 *
 * The first non-comment line is `n <count>`; every later non-comment line
 * is one facet given as space-separated vertex ids. `#` starts a comment
 * that runs to end of line and blank lines are ignored. With no facet lines
 * the complex is {∅} plus the n singletons.
 */

#ifndef LAPGAP_FACET_IO_HPP
#define LAPGAP_FACET_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace lapgap {

namespace detail {

inline std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool is_blank(const std::string& s)
{
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

inline std::vector<long long> parse_ints(const std::string& text, int line_no)
{
    std::istringstream in(text);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok)
    {
        std::size_t used = 0;
        long long value = 0;
        try
        {
            value = std::stoll(tok, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used != tok.size())
            throw InputError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

}   // namespace detail

/** Vertex count and facet list exactly as written in a facet file. */
struct FacetList
{
    int n = 0;
    std::vector<std::vector<Vertex>> facets;
};

inline FacetList parse_facet_list(std::istream& in)
{
    FacetList out;
    bool have_header = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        std::string body = detail::strip_comment(line);
        if (detail::is_blank(body))
            continue;
        if (!have_header)
        {
            std::istringstream head(body);
            std::string key;
            head >> key;
            if (key != "n")
                throw InputError("line " + std::to_string(line_no) + ": expected 'n <count>'");
            std::string rest;
            std::getline(head, rest);
            auto nums = detail::parse_ints(rest, line_no);
            if (nums.size() != 1 || nums[0] < 1 || nums[0] > 1'000'000)
                throw InputError("line " + std::to_string(line_no) + ": bad vertex count");
            out.n = static_cast<int>(nums[0]);
            have_header = true;
            continue;
        }
        std::vector<Vertex> facet;
        for (long long v : detail::parse_ints(body, line_no))
        {
            if (v < 0 || v >= out.n)
                throw InputError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v)
                                 + " outside 0.." + std::to_string(out.n - 1));
            facet.push_back(static_cast<Vertex>(v));
        }
        out.facets.push_back(std::move(facet));
    }
    if (!have_header)
        throw InputError("facet file has no 'n <count>' line");
    return out;
}

inline SimplicialComplex read_facet_file(std::istream& in)
{
    auto list = parse_facet_list(in);
    return from_facets(list.n, list.facets);
}

inline SimplicialComplex read_facet_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open facet file '" + path + "'");
    return read_facet_file(in);
}

/**
 * Write the facets of X. Isolated vertices are written as one-vertex
 * facets, so reading the output back reproduces X whenever every singleton
 * of {0..n-1} is a face.
 */
inline void write_facet_file(std::ostream& out, const SimplicialComplex& x)
{
    out << "n " << x.vertex_count() << "\n";
    for (const auto& f : x.facets())
    {
        if (f.empty())
            continue;
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? " " : "") << f[i];
        out << "\n";
    }
}

/** Edge list file for `clique(...)`: same header, then one `u v` pair per line. */
inline SimplicialComplex read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open edge list file '" + path + "'");
    auto list = parse_facet_list(in);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : list.facets)
    {
        if (e.size() != 2)
            throw InputError("edge list lines must hold exactly two vertex ids");
        edges.emplace_back(e[0], e[1]);
    }
    return clique_complex(list.n, edges);
}

}   // namespace lapgap

#endif
