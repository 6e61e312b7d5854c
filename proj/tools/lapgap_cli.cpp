/**
 * lapgap command-line front end. Every subcommand loads or builds a
 * complex, calls into the library, and prints one report line per result.
 *
 * Exit codes: 0 success, 1 a verified statement failed or an internal
 * consistency check tripped, 2 bad input.
 */

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lapgap/lapgap.hpp>

using namespace lapgap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Options
{
    std::string input;
    std::string k = "all";
    std::optional<double> tol;
    std::string dump_path;
    std::optional<int> assume_d;
    bool skip_d_check = false;
    std::string mode = "exhaustive";
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
    std::string op = "laplacian";
    int probe_d = 2;
    int probe_n = 0;
};

/** Line sink for stdout or an --output file. */
class Emitter
{
    public:
        Emitter(const std::string& path, bool text) : text_(text)
        {
            if (!path.empty())
            {
                file_ = std::make_unique<std::ofstream>(path);
                if (!*file_)
                    throw InputError("cannot open output file '" + path + "'");
            }
        }

        void emit(const Record& r) { line(text_ ? r.text() : r.json()); }
        void line(const std::string& s) { out() << s << '\n'; }
        std::ostream& out() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }

    private:
        bool text_;
        std::unique_ptr<std::ofstream> file_;
};

/** A bare path is a facet file; anything with a '(' is a constructor expression. */
SimplicialComplex load_input(const std::string& input)
{
    if (input.find('(') == std::string::npos)
        return read_facet_file(input);
    return parse_constructor(input);
}

std::vector<int> selected_dimensions(const SimplicialComplex& x, const std::string& spec)
{
    if (spec == "all")
    {
        std::vector<int> ks;
        for (int k = -1; k <= x.dimension(); ++k)
            ks.push_back(k);
        return ks;
    }
    std::size_t used = 0;
    int k = 0;
    try
    {
        k = std::stoi(spec, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used != spec.size() || spec.empty())
        throw InputError("--k expects an integer or 'all', got '" + spec + "'");
    if (k < -1 || k > x.dimension())
        throw DomainError("dimension " + std::to_string(k) + " undefined (complex has dimension "
                          + std::to_string(x.dimension()) + ")");
    return {k};
}

int single_dimension(const SimplicialComplex& x, const std::string& spec, const char* what)
{
    auto ks = selected_dimensions(x, spec);
    if (ks.size() != 1)
        throw InputError(std::string(what) + " needs a single --k");
    return ks.front();
}

void maybe_dump(const SimplicialComplex& x, const Options& o)
{
    if (o.dump_path.empty())
        return;
    const int k = single_dimension(x, o.k, "--dump-matrix");
    std::ofstream out(o.dump_path);
    if (!out)
        throw InputError("cannot open dump file '" + o.dump_path + "'");
    write_matrix_dump(out, laplacian(x, k));
}

/** d from --assume-d, checked against the missing faces unless --skip-d-check. */
std::optional<int> resolve_d(const SimplicialComplex& x, const Options& o)
{
    if (!o.assume_d)
        return std::nullopt;
    if (*o.assume_d < 0)
        throw InputError("--assume-d must be non-negative");
    if (!o.skip_d_check)
    {
        auto h = missing_face_dimension(x);
        if (h.d > *o.assume_d)
            throw InputError("--assume-d " + std::to_string(*o.assume_d) + " is below h(X) = "
                             + std::to_string(h.d));
    }
    return o.assume_d;
}

ZParams parse_z_params(const std::string& text)
{
    static const std::regex pattern(R"(\s*(?:Z\s*\(\s*)?(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw InputError("verify-z expects 'Z(d,t,r)' or 'd,t,r', got '" + text + "'");
    return ZParams{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

int run_build(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    if (o.format == "text")
        write_facet_file(e.out(), x);
    else
        e.emit(complex_record(x));
    return kExitOk;
}

int run_spectrum(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    maybe_dump(x, o);
    const double tol = o.tol.value_or(kZeroTolerance);
    for (int k : selected_dimensions(x, o.k))
    {
        ProfileRecord rec;
        rec.k = k;
        rec.spectrum = laplacian_spectrum(x, k);
        rec.gap = rec.spectrum.min();
        rec.betti = betti(x, k, rec.spectrum, tol);
        e.emit(profile_record(rec));
    }
    return kExitOk;
}

int run_gap(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    maybe_dump(x, o);
    for (int k : selected_dimensions(x, o.k))
        e.emit(gap_record(k, spectral_gap(x, k)));
    return kExitOk;
}

int run_betti(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    maybe_dump(x, o);
    const double tol = o.tol.value_or(kZeroTolerance);
    for (int k : selected_dimensions(x, o.k))
        e.emit(betti_record(k, betti(x, k, tol)));
    return kExitOk;
}

int run_missing(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    e.emit(missing_record(x, missing_faces(x)));
    return kExitOk;
}

int run_bound(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    maybe_dump(x, o);
    const auto d = resolve_d(x, o);
    bool ok = true;
    for (int k : selected_dimensions(x, o.k))
    {
        auto b = theorem_bound(x, k, d);
        e.emit(bound_record(b));
        ok = ok && b.ok();
    }
    return ok ? kExitOk : kExitFailed;
}

int run_verify_z(const Options& o, Emitter& e)
{
    const auto p = parse_z_params(o.input);
    const double tol = o.tol.value_or(1e-8);
    auto report = verify_prop14(p, tol);
    for (const auto& row : report.rows)
        e.emit(z_check_row_record(p, row, tol));
    return report.passed() ? kExitOk : kExitFailed;
}

int run_equality(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    const double tol = o.tol.value_or(kEqualityTolerance);
    for (int k : selected_dimensions(x, o.k))
        e.emit(equality_record(x, equality_case_check(x, k, tol)));
    return kExitOk;
}

int run_probe(const Options& o, Emitter& e)
{
    if (o.mode != "exhaustive" && o.mode != "random")
        throw InputError("--mode must be 'exhaustive' or 'random'");
    const ProbeMode mode = o.mode == "exhaustive" ? ProbeMode::exhaustive : ProbeMode::random;
    if (mode == ProbeMode::random && o.budget == std::numeric_limits<std::uint64_t>::max())
        throw InputError("random mode needs --budget");
    ProbeReport report;
    if (o.probe_d == 1)
    {
        if (mode != ProbeMode::exhaustive)
            throw InputError("--d 1 supports exhaustive mode only");
        report = clique_equality_search(o.probe_n, o.budget);
    }
    else
        report = conjecture_probe(o.probe_d, o.probe_n, mode, o.budget, o.seed);
    for (const auto& hit : report.hits)
        e.emit(probe_hit_record(hit));
    e.emit(probe_summary_record(report));
    return kExitOk;
}

int run_dump_matrix(const Options& o, Emitter& e)
{
    auto x = load_input(o.input);
    const int k = single_dimension(x, o.k, "dump-matrix");
    OperatorMatrix m;
    if (o.op == "laplacian")
        m = laplacian(x, k);
    else if (o.op == "coboundary")
        m = coboundary_matrix(x, k);
    else if (o.op == "boundary")
        m = boundary_matrix(x, k);
    else
        throw InputError("--operator must be laplacian, coboundary or boundary");
    write_matrix_dump(e.out(), m);
    return kExitOk;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral gaps of simplicial complexes and their missing faces"};
    app.require_subcommand(1);
    Options o;

    const std::string input_help = "facet file path or constructor expression: skeleton(m,k), simplex(m), "
                                   "Z(d,t,r), join(e,e), clique(path), file(path)";
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, input_help)->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", o.output, "write the report to this file instead of stdout");
    };
    auto add_k = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "dimension, or 'all' (default)");
    };
    auto add_dump = [&](CLI::App* sub) {
        sub->add_option("--dump-matrix", o.dump_path, "also write L_k (single --k) to this path");
    };

    using Runner = std::function<int(const Options&, Emitter&)>;
    std::vector<std::pair<CLI::App*, Runner>> commands;

    auto* build = app.add_subcommand("build", "print the complex (text format: facet file)");
    add_input(build);
    add_common(build);
    commands.emplace_back(build, run_build);

    auto* spectrum = app.add_subcommand("spectrum", "spectrum, gap and Betti number per dimension");
    add_input(spectrum);
    add_common(spectrum);
    add_k(spectrum);
    add_dump(spectrum);
    spectrum->add_option("--tol", o.tol, "zero tolerance for the kernel count");
    commands.emplace_back(spectrum, run_spectrum);

    auto* gap = app.add_subcommand("gap", "smallest eigenvalue of L_k");
    add_input(gap);
    add_common(gap);
    add_k(gap);
    add_dump(gap);
    commands.emplace_back(gap, run_gap);

    auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers (spectral and exact, cross-checked)");
    add_input(betti_cmd);
    add_common(betti_cmd);
    add_k(betti_cmd);
    add_dump(betti_cmd);
    betti_cmd->add_option("--tol", o.tol, "zero tolerance for the kernel count");
    commands.emplace_back(betti_cmd, run_betti);

    auto* missing = app.add_subcommand("missing", "minimal non-faces and their maximum dimension");
    add_input(missing);
    add_common(missing);
    commands.emplace_back(missing, run_missing);

    auto* bound = app.add_subcommand("bound", "gap lower bound from minimum degree and missing-face dimension");
    add_input(bound);
    add_common(bound);
    add_k(bound);
    add_dump(bound);
    bound->add_option("--assume-d", o.assume_d, "use this d instead of h(X)");
    bound->add_flag("--skip-d-check", o.skip_d_check, "do not verify --assume-d against the missing faces");
    commands.emplace_back(bound, run_bound);

    auto* verify_z = app.add_subcommand("verify-z", "check the closed-form profile of Z(d,t,r)");
    verify_z->add_option("params", o.input, "Z(d,t,r) or d,t,r")->required();
    add_common(verify_z);
    verify_z->add_option("--tol", o.tol, "tolerance on gaps (default 1e-8)");
    commands.emplace_back(verify_z, run_verify_z);

    auto* equality = app.add_subcommand("equality", "equality case of the clique-complex bound");
    add_input(equality);
    add_common(equality);
    add_k(equality);
    equality->add_option("--tol", o.tol, "equality tolerance (default 1e-7)");
    commands.emplace_back(equality, run_equality);

    auto* probe = app.add_subcommand("probe", "search for complexes attaining the bound with equality");
    add_common(probe);
    probe->add_option("--d", o.probe_d, "missing-face dimension (1 searches clique complexes)");
    probe->add_option("--n", o.probe_n, "number of vertices")->required();
    probe->add_option("--mode", o.mode, "exhaustive or random");
    probe->add_option("--budget", o.budget, "maximum number of complexes to examine");
    probe->add_option("--seed", o.seed, "seed for random mode");
    commands.emplace_back(probe, run_probe);

    auto* dump = app.add_subcommand("dump-matrix", "write an operator as 'rows cols' plus 'i j value' lines");
    add_input(dump);
    add_k(dump);
    dump->add_option("--output", o.output, "write to this file instead of stdout");
    dump->add_option("--operator", o.op, "laplacian (default), coboundary or boundary");
    commands.emplace_back(dump, run_dump_matrix);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitInput;
    }

    try
    {
        for (auto& [sub, runner] : commands)
            if (sub->parsed())
            {
                Emitter emitter(o.output, o.format == "text");
                return runner(o, emitter);
            }
    }
    catch (const InputError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const DomainError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const Error& e)
    {
        std::cerr << "failed: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitInput;
}
