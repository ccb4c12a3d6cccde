#include "superhomology/cli.hpp"

#include "superhomology/algebra.hpp"
#include "superhomology/catalog.hpp"
#include "superhomology/chain.hpp"
#include "superhomology/error.hpp"
#include "superhomology/exterior.hpp"
#include "superhomology/homology.hpp"
#include "superhomology/monomial.hpp"
#include "superhomology/ranklin.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace superhomology {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliConfig {
    std::string subcommand;
    std::string algebra;
    std::vector<std::string> params;
    int w_max = -1;
    int m = -1;
    int w = -1;
    std::string basis = "alias";
    std::string format;
    std::string sweep;
    std::string dump_path;
    std::string report_path;
    std::string expected_path;
    std::optional<unsigned> threads;
};

/// A resolved algebra: display name plus generators.
struct Loaded {
    std::string name;
    GeneratorSystem gs;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << content;
}

bool is_catalog_name(const std::string& name)
{
    try {
        catalog_entry(name);
        return true;
    } catch (const UnknownAlgebra&) {
        return false;
    }
}

/// Catalog name first, then a JSON algebra file.
Loaded load(const CliConfig& cfg, const Bindings& bindings)
{
    const auto basis = cfg.basis == "canonical" ? BasisChoice::canonical : BasisChoice::alias;
    if (is_catalog_name(cfg.algebra))
        return {catalog_entry(cfg.algebra).name, catalog_generators(cfg.algebra, bindings, basis)};
    if (!fs::is_regular_file(cfg.algebra))
        throw UnknownAlgebra(cfg.algebra);
    const auto spec = parse_algebra_spec(read_file(cfg.algebra));
    const std::string name = spec.name.empty() ? fs::path(cfg.algebra).stem().string() : spec.name;
    return {name, GeneratorSystem(spec.instantiate(bindings))};
}

Bindings parse_bindings(const std::vector<std::string>& texts)
{
    Bindings b;
    for (const auto& t : texts) {
        auto [name, value] = parse_binding(t);
        b[name] = value;
    }
    return b;
}

unsigned thread_count(const CliConfig& cfg)
{
    if (cfg.threads)
        return *cfg.threads;
    const char* env = std::getenv("SUPERHOMOLOGY_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string_view(env).size() || v < 0)
            throw std::invalid_argument(env);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("SUPERHOMOLOGY_THREADS must be a natural number, got '") + env + "'");
    }
}

struct MatrixRecord {
    int w = 0, m = 0;
    std::size_t rows = 0, cols = 0;
    EliminationReport report;
};

json report_json(std::vector<MatrixRecord> records)
{
    std::sort(records.begin(), records.end(),
              [](const auto& a, const auto& b) { return std::tie(a.w, a.m) < std::tie(b.w, b.m); });
    json out = json::array();
    for (const auto& r : records) {
        json pivots = json::array();
        for (auto [row, col] : r.report.pivots)
            pivots.push_back({row, col});
        out.push_back({{"w", r.w},
                       {"m", r.m},
                       {"rows", r.rows},
                       {"cols", r.cols},
                       {"rank", r.report.rank},
                       {"fill_in", r.report.fill_in},
                       {"elapsed_ns", r.report.elapsed.count()},
                       {"pivots", pivots}});
    }
    return out;
}

std::string matrix_text(const RationalMatrix& m)
{
    std::ostringstream os;
    m.dump(os);
    return os.str();
}

/// Computes a table, writing matrix dumps and the elimination report when requested.
BettiTable compute_table(const CliConfig& cfg, const Loaded& loaded, const Bindings& bindings, int w_max,
                         const std::string& dump_suffix = "")
{
    std::vector<MatrixRecord> records;
    HomologyOptions options;
    options.threads = thread_count(cfg);
    if (!cfg.dump_path.empty())
        fs::create_directories(cfg.dump_path);
    if (!cfg.dump_path.empty() || !cfg.report_path.empty()) {
        options.on_matrix = [&](int w, int m, const RationalMatrix& matrix, const EliminationReport& report) {
            records.push_back({w, m, matrix.rows(), matrix.cols(), report});
            if (!cfg.dump_path.empty()) {
                const auto file = "d_w" + std::to_string(w) + "_m" + std::to_string(m) + dump_suffix + ".txt";
                write_file((fs::path(cfg.dump_path) / file).string(), matrix_text(matrix));
            }
        };
    }
    auto table = betti_table(loaded.gs, w_max, options);
    table.algebra = loaded.name;
    table.params = bindings;
    if (!cfg.report_path.empty()) {
        const auto path = dump_suffix.empty() ? cfg.report_path : cfg.report_path + dump_suffix;
        write_file(path, report_json(std::move(records)).dump(2) + "\n");
    }
    return table;
}

std::string render(const BettiTable& table, const std::string& format)
{
    if (format == "csv")
        return render_csv(table);
    if (format == "md")
        return render_markdown(table);
    return to_json(table).dump(2) + "\n";
}

std::string cmd_catalog(const CliConfig& cfg)
{
    if (cfg.format == "json") {
        json out = json::array();
        for (const auto& e : catalog()) {
            json constraints = json::array();
            for (const auto& c : e.spec.constraints)
                constraints.push_back({{"param", c.param}, {"nonzero", c.nonzero}});
            out.push_back({{"name", e.name},
                           {"other_names", e.other_names},
                           {"dim", e.spec.dim},
                           {"params", e.spec.params},
                           {"constraints", constraints},
                           {"alias_basis", static_cast<bool>(e.alias_basis)},
                           {"description", e.description}});
        }
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& e : catalog()) {
        std::string params;
        for (const auto& p : e.spec.params) {
            params += (params.empty() ? "" : ", ") + p;
            for (const auto& c : e.spec.constraints)
                if (c.param == p && c.nonzero)
                    params += " != 0";
        }
        os << std::left << std::setw(10) << e.name << "dim " << e.spec.dim << "  params: " << std::setw(24)
           << (params.empty() ? "-" : params) << e.description;
        if (!e.other_names.empty()) {
            os << "  (also:";
            for (const auto& n : e.other_names)
                os << ' ' << n;
            os << ')';
        }
        os << '\n';
    }
    return os.str();
}

std::string residual_text(const std::vector<Rational>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + to_string(v[k]);
    return s + ")";
}

CliResult cmd_check_jacobi(const CliConfig& cfg, const Bindings& bindings)
{
    std::vector<JacobiViolation> violations;
    int dim = 0;
    try {
        const auto loaded = load(cfg, bindings);
        dim = loaded.gs.dim();
    } catch (const JacobiError& e) {
        violations = e.violations();
    }
    if (violations.empty()) {
        const long triples = static_cast<long>(dim) * (dim - 1) * (dim - 2) / 6;
        return {kExitOk, "Jacobi identity holds (" + std::to_string(triples) + " triples checked)\n", ""};
    }
    std::ostringstream os;
    for (const auto& v : violations)
        os << "triple (" << v.i << "," << v.j << "," << v.k << "): residual " << residual_text(v.residual) << '\n';
    os << violations.size() << " violating triple(s)\n";
    return {kExitDiff, os.str(), ""};
}

std::string cmd_bracket_table(const CliConfig& cfg, const Bindings& bindings)
{
    const auto loaded = load(cfg, bindings);
    const auto& gs = loaded.gs;
    std::ostringstream os;
    os << "# " << loaded.name;
    for (const auto& [name, value] : bindings)
        os << ' ' << name << '=' << to_string(value);
    os << '\n';
    for (std::size_t g = 0; g < gs.size(); ++g) {
        const auto& gen = gs[g];
        if (gen.level == 1)
            continue;
        os << gen.label << " =";
        bool first = true;
        for (const auto& [e, coef] : gen.expansion.terms()) {
            std::string word;
            for (int i : e.indices())
                word += (word.empty() ? "z" : "∧z") + std::to_string(i);
            const bool neg = sgn(coef) < 0;
            const Rational mag = abs(coef);
            os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
            if (mag != 1)
                os << to_string(mag) << "·";
            os << word;
            first = false;
        }
        os << '\n';
    }
    os << '\n' << render_bracket_table(gs);
    return os.str();
}

std::string cmd_basis(const CliConfig& cfg, const Bindings& bindings)
{
    const auto loaded = load(cfg, bindings);
    const auto basis = chain_basis(loaded.gs, cfg.m, cfg.w);
    std::ostringstream os;
    os << "# " << loaded.name << " m=" << cfg.m << " w=" << cfg.w << " dim=" << basis.size() << '\n';
    for (std::size_t i = 0; i < basis.size(); ++i)
        os << i << '\t' << format_monomial(loaded.gs, basis[i]) << '\n';
    if ((!cfg.dump_path.empty() || !cfg.report_path.empty()) && cfg.m >= 1) {
        const auto matrix = boundary_matrix(loaded.gs, cfg.m, cfg.w);
        if (!cfg.dump_path.empty())
            write_file(cfg.dump_path, matrix_text(matrix));
        if (!cfg.report_path.empty())
            write_file(cfg.report_path,
                       report_json({{cfg.w, cfg.m, matrix.rows(), matrix.cols(), eliminate(matrix)}}).dump(2) + "\n");
    }
    return os.str();
}

/// "alpha=-1,1,2" -> ("alpha", [-1, 1, 2]).
std::pair<std::string, std::vector<Rational>> parse_sweep(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        throw ParseError("sweep must look like name=v1,v2,...: '" + text + "'");
    std::vector<Rational> values;
    std::stringstream ss(text.substr(eq + 1));
    for (std::string item; std::getline(ss, item, ',');)
        values.push_back(parse_rational(item));
    return {text.substr(0, eq), values};
}

struct SweepCell {
    int w = 0, m = 0;
    std::vector<std::size_t> betti;
};

std::vector<SweepCell> sweep_differences(const std::vector<BettiTable>& tables)
{
    std::set<std::pair<int, int>> cells;
    for (const auto& t : tables)
        for (const auto& row : t.rows)
            for (int m : row.degrees)
                cells.insert({row.weight, m});
    std::vector<SweepCell> diffs;
    for (auto [w, m] : cells) {
        SweepCell cell{w, m, {}};
        for (const auto& t : tables) {
            auto it = std::find_if(t.rows.begin(), t.rows.end(), [&](const BettiRow& r) { return r.weight == w; });
            cell.betti.push_back(it == t.rows.end() ? 0 : it->at(m).betti);
        }
        if (std::adjacent_find(cell.betti.begin(), cell.betti.end(), std::not_equal_to<>()) != cell.betti.end())
            diffs.push_back(std::move(cell));
    }
    return diffs;
}

std::string cmd_sweep(const CliConfig& cfg, Bindings bindings, int w_max)
{
    const auto [param, values] = parse_sweep(cfg.sweep);
    std::vector<BettiTable> tables;
    for (std::size_t i = 0; i < values.size(); ++i) {
        bindings[param] = values[i];
        const auto loaded = load(cfg, bindings);
        tables.push_back(compute_table(cfg, loaded, bindings, w_max, "." + std::to_string(i)));
    }
    const auto diffs = sweep_differences(tables);

    if (cfg.format == "json") {
        json vals = json::array(), ts = json::array(), ds = json::array();
        for (const auto& v : values)
            vals.push_back(to_string(v));
        for (const auto& t : tables)
            ts.push_back(to_json(t));
        for (const auto& d : diffs)
            ds.push_back({{"w", d.w}, {"degree", d.m}, {"betti", d.betti}});
        return json{{"sweep", {{"param", param}, {"values", vals}}}, {"tables", ts}, {"differences", ds}}.dump(2) +
               "\n";
    }
    std::set<std::pair<int, int>> differing;
    for (const auto& d : diffs)
        differing.insert({d.w, d.m});
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << param << ",w,degree,dim,kernel,betti,differs\n";
        for (std::size_t i = 0; i < tables.size(); ++i)
            for (const auto& row : tables[i].rows)
                for (std::size_t k = 0; k < row.degrees.size(); ++k) {
                    const auto& c = row.cells[k];
                    os << to_string(values[i]) << ',' << row.weight << ',' << row.degrees[k] << ',' << c.space_dim
                       << ',' << c.kernel_dim << ',' << c.betti << ','
                       << differing.count({row.weight, row.degrees[k]}) << '\n';
                }
        return os.str();
    }
    for (std::size_t i = 0; i < tables.size(); ++i)
        os << "# " << param << " = " << to_string(values[i]) << "\n\n" << render_markdown(tables[i]) << '\n';
    os << "# Cells whose Betti number depends on " << param << "\n\n";
    if (diffs.empty())
        return os.str() + "none\n";
    os << "| w | m |";
    for (const auto& v : values)
        os << ' ' << param << '=' << to_string(v) << " |";
    os << "\n|---|---|";
    for (std::size_t i = 0; i < values.size(); ++i)
        os << "---|";
    os << '\n';
    for (const auto& d : diffs) {
        os << "| " << d.w << " | " << d.m << " |";
        for (auto b : d.betti)
            os << ' ' << b << " |";
        os << '\n';
    }
    return os.str();
}

std::string cmd_table(const CliConfig& cfg, const Bindings& bindings)
{
    if (!cfg.sweep.empty())
        return cmd_sweep(cfg, bindings, cfg.w_max);
    const auto loaded = load(cfg, bindings);
    return render(compute_table(cfg, loaded, bindings, cfg.w_max), cfg.format);
}

CliResult cmd_verify(const CliConfig& cfg, const Bindings& flag_bindings)
{
    auto expected = parse_expected(read_file(cfg.expected_path));
    if (cfg.w_max >= 0)
        std::erase_if(expected.rows, [&](const ExpectedRow& r) { return r.weight > cfg.w_max; });
    Bindings bindings = expected.params;
    for (const auto& [name, value] : flag_bindings)
        bindings[name] = value;
    int w_max = cfg.w_max;
    if (w_max < 0)
        for (const auto& row : expected.rows)
            w_max = std::max(w_max, row.weight);
    const auto loaded = load(cfg, bindings);
    const auto table = compute_table(cfg, loaded, bindings, std::max(w_max, 0));
    const auto diffs = verify_table(table, expected);
    return {diffs.empty() ? kExitOk : kExitDiff, render_diff(diffs), ""};
}

void add_algebra_options(CLI::App* sub, CliConfig& cfg)
{
    sub->add_option("--algebra,-a", cfg.algebra, "Catalog name or JSON algebra file")->required();
    sub->add_option("--param,-p", cfg.params, "Parameter binding name=p/q (repeatable)");
    sub->add_option("--basis", cfg.basis, "Generator basis for levels >= 2")
        ->check(CLI::IsMember({"canonical", "alias"}))
        ->capture_default_str();
}

void add_compute_options(CLI::App* sub, CliConfig& cfg)
{
    sub->add_option("--threads,-j", cfg.threads, "Worker threads (0 = auto; default SUPERHOMOLOGY_THREADS)");
    sub->add_option("--report", cfg.report_path, "Write elimination reports as JSON to this file");
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args)
{
    CliConfig cfg;
    CLI::App app{"Exact super homology of the Lie superalgebra of multivectors", "superhomology"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in algebras and their parameters");
    catalog_cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* jacobi_cmd = app.add_subcommand("check-jacobi", "Check the Jacobi identity of an algebra");
    add_algebra_options(jacobi_cmd, cfg);

    auto* bracket_cmd = app.add_subcommand("bracket-table", "Print the generator bracket table");
    add_algebra_options(bracket_cmd, cfg);

    auto* basis_cmd = app.add_subcommand("basis", "List the chain basis of degree m and weight w");
    add_algebra_options(basis_cmd, cfg);
    basis_cmd->add_option("--m", cfg.m, "Degree")->required()->check(CLI::NonNegativeNumber);
    basis_cmd->add_option("--w", cfg.w, "Weight")->required()->check(CLI::NonNegativeNumber);
    basis_cmd->add_option("--dump-matrix", cfg.dump_path, "Write the boundary matrix of this space to a file");
    basis_cmd->add_option("--report", cfg.report_path, "Write its elimination report as JSON to this file");

    auto* table_cmd = app.add_subcommand("table", "Compute the Betti table for w = 0..wmax");
    add_algebra_options(table_cmd, cfg);
    add_compute_options(table_cmd, cfg);
    table_cmd->add_option("--wmax", cfg.w_max, "Largest weight")->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--format", cfg.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    table_cmd->add_option("--sweep", cfg.sweep, "Recompute for each value, e.g. alpha=-1,1,2");
    table_cmd->add_option("--dump-matrix", cfg.dump_path, "Directory for boundary matrix dumps");

    auto* verify_cmd = app.add_subcommand("verify", "Compare computed values with an expected table");
    add_algebra_options(verify_cmd, cfg);
    add_compute_options(verify_cmd, cfg);
    verify_cmd->add_option("--expected,-e", cfg.expected_path, "Expected table (JSON)")->required();
    verify_cmd->add_option("--wmax", cfg.w_max, "Largest weight; expected rows above it are ignored (default: from the expected table)")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--dump-matrix", cfg.dump_path, "Directory for boundary matrix dumps");

    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return {kExitOk, out.str(), err.str()};
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return {kExitOk, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return {kExitUsage, "", err.str()};
    }

    try {
        const Bindings bindings = parse_bindings(cfg.params);
        if (app.got_subcommand(catalog_cmd))
            return {kExitOk, cmd_catalog(cfg), ""};
        if (app.got_subcommand(jacobi_cmd))
            return cmd_check_jacobi(cfg, bindings);
        if (app.got_subcommand(bracket_cmd))
            return {kExitOk, cmd_bracket_table(cfg, bindings), ""};
        if (app.got_subcommand(basis_cmd))
            return {kExitOk, cmd_basis(cfg, bindings), ""};
        if (cfg.format.empty())
            cfg.format = "json";
        if (app.got_subcommand(table_cmd))
            return {kExitOk, cmd_table(cfg, bindings), ""};
        return cmd_verify(cfg, bindings);
    } catch (const std::exception& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace superhomology
