#include "superhomology/homology.hpp"

#include "superhomology/error.hpp"
#include "superhomology/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace superhomology {

using nlohmann::json;

BettiCell BettiRow::at(int m) const
{
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == m)
            return cells[k];
    return {};
}

namespace {

struct WeightPlan {
    int weight = 0;
    std::vector<std::size_t> dims; // index = degree
    int lo = 0, hi = -1;           // support range
};

WeightPlan plan_weight(const GeneratorSystem& gs, int w)
{
    WeightPlan plan;
    plan.weight = w;
    for (const auto& d : chain_dims(gs, w)) {
        if (!d.fits_ulong_p())
            throw std::overflow_error("chain space too large to enumerate");
        plan.dims.push_back(d.get_ui());
    }
    for (int m = 0; m < static_cast<int>(plan.dims.size()); ++m)
        if (plan.dims[m] > 0) {
            if (plan.hi < plan.lo)
                plan.lo = m;
            plan.hi = m;
        }
    return plan;
}

struct MatrixTask {
    std::size_t plan = 0;
    int m = 0;
    std::size_t rank = 0;
    std::optional<RationalMatrix> matrix;
    EliminationReport report;
};

BettiRow assemble(const WeightPlan& plan, const std::map<int, std::size_t>& ranks)
{
    BettiRow row;
    row.weight = plan.weight;
    auto rank_of = [&](int m) {
        auto it = ranks.find(m);
        return it == ranks.end() ? std::size_t{0} : it->second;
    };
    for (int m = plan.lo; m <= plan.hi; ++m) {
        BettiCell cell;
        cell.space_dim = plan.dims[m];
        cell.kernel_dim = cell.space_dim - rank_of(m);
        cell.betti = cell.kernel_dim - rank_of(m + 1);
        row.degrees.push_back(m);
        row.cells.push_back(cell);
    }
    return row;
}

std::vector<BettiRow> compute_rows(const GeneratorSystem& gs, const std::vector<int>& weights,
                                   const HomologyOptions& options)
{
    std::vector<WeightPlan> plans;
    std::vector<MatrixTask> tasks;
    for (int w : weights) {
        plans.push_back(plan_weight(gs, w));
        const auto& plan = plans.back();
        for (int m = std::max(plan.lo, 1); m <= plan.hi; ++m)
            if (plan.dims[m] > 0 && plan.dims[m - 1] > 0)
                tasks.push_back({plans.size() - 1, m, 0, std::nullopt, {}});
    }
    // Larger matrices first so the pool drains evenly.
    std::vector<std::size_t> order(tasks.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = plans[tasks[a].plan];
        const auto& pb = plans[tasks[b].plan];
        return pa.dims[tasks[a].m] + pa.dims[tasks[a].m - 1] > pb.dims[tasks[b].m] + pb.dims[tasks[b].m - 1];
    });
    parallel_for(order.size(), options.threads, [&](std::size_t i) {
        auto& task = tasks[order[i]];
        auto matrix = boundary_matrix(gs, task.m, plans[task.plan].weight);
        task.report = eliminate(matrix);
        task.rank = task.report.rank;
        if (options.on_matrix)
            task.matrix = std::move(matrix);
    });
    std::vector<std::map<int, std::size_t>> ranks(plans.size());
    for (auto& task : tasks) {
        ranks[task.plan][task.m] = task.rank;
        if (options.on_matrix)
            options.on_matrix(plans[task.plan].weight, task.m, *task.matrix, task.report);
    }
    std::vector<BettiRow> rows;
    for (std::size_t p = 0; p < plans.size(); ++p)
        rows.push_back(assemble(plans[p], ranks[p]));
    return rows;
}

} // namespace

BettiRow betti_row(const GeneratorSystem& gs, int w, const HomologyOptions& options)
{
    if (w < 0)
        throw std::invalid_argument("weight must be >= 0");
    return compute_rows(gs, {w}, options).front();
}

BettiTable betti_table(const GeneratorSystem& gs, int w_max, const HomologyOptions& options)
{
    if (w_max < 0)
        throw std::invalid_argument("w_max must be >= 0");
    std::vector<int> weights;
    for (int w = 0; w <= w_max; ++w)
        weights.push_back(w);
    BettiTable table;
    table.rows = compute_rows(gs, weights, options);
    return table;
}

std::int64_t euler_check(const GeneratorSystem& gs, int w)
{
    Integer total = 0;
    const auto dims = chain_dims(gs, w);
    for (std::size_t m = 0; m < dims.size(); ++m)
        total += m % 2 ? Integer(-dims[m]) : dims[m];
    if (!total.fits_slong_p())
        throw std::overflow_error("Euler characteristic out of range");
    return total.get_si();
}

namespace {

std::optional<std::vector<std::int64_t>> optional_array(const json& row, const char* key, std::size_t n)
{
    if (!row.contains(key) || row.at(key).is_null())
        return std::nullopt;
    auto values = row.at(key).get<std::vector<std::int64_t>>();
    if (values.size() != n)
        throw ParseError(std::string("expected-table field '") + key + "' length differs from 'degrees'");
    return values;
}

} // namespace

ExpectedTable parse_expected(std::string_view document)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("expected table: ") + e.what());
    }
    try {
        ExpectedTable table;
        if (doc.contains("algebra"))
            table.algebra = doc.at("algebra").get<std::string>();
        if (doc.contains("params"))
            for (const auto& [name, value] : doc.at("params").items())
                table.params[name] = value.is_string() ? parse_rational(value.get<std::string>())
                                                       : Rational(value.get<long>());
        for (const auto& r : doc.at("rows")) {
            ExpectedRow row;
            row.weight = r.at("w").get<int>();
            if (r.contains("degrees"))
                row.degrees = r.at("degrees").get<std::vector<int>>();
            row.dims = optional_array(r, "dims", row.degrees.size());
            row.kernels = optional_array(r, "kernels", row.degrees.size());
            row.betti = optional_array(r, "betti", row.degrees.size());
            table.rows.push_back(std::move(row));
        }
        return table;
    } catch (const json::exception& e) {
        throw ParseError(std::string("expected table: ") + e.what());
    }
}

std::vector<CellDiff> verify_table(const BettiTable& computed, const ExpectedTable& expected)
{
    std::vector<CellDiff> diffs;
    for (const auto& er : expected.rows) {
        auto it = std::find_if(computed.rows.begin(), computed.rows.end(),
                               [&](const BettiRow& r) { return r.weight == er.weight; });
        if (it == computed.rows.end()) {
            diffs.push_back({er.weight, 0, "row", 1, 0});
            continue;
        }
        for (std::size_t k = 0; k < er.degrees.size(); ++k) {
            const int m = er.degrees[k];
            const BettiCell cell = it->at(m);
            auto compare = [&](const std::optional<std::vector<std::int64_t>>& values, const char* field,
                               std::size_t actual) {
                if (values && (*values)[k] != static_cast<std::int64_t>(actual))
                    diffs.push_back({er.weight, m, field, (*values)[k], static_cast<std::int64_t>(actual)});
            };
            compare(er.dims, "dim", cell.space_dim);
            compare(er.kernels, "kernel", cell.kernel_dim);
            compare(er.betti, "betti", cell.betti);
        }
    }
    return diffs;
}

json to_json(const BettiTable& table)
{
    json params = json::object();
    for (const auto& [name, value] : table.params)
        params[name] = to_string(value);
    json rows = json::array();
    for (const auto& row : table.rows) {
        json dims = json::array(), kernels = json::array(), betti = json::array();
        for (const auto& c : row.cells) {
            dims.push_back(c.space_dim);
            kernels.push_back(c.kernel_dim);
            betti.push_back(c.betti);
        }
        rows.push_back({{"w", row.weight}, {"degrees", row.degrees}, {"dims", dims}, {"kernels", kernels}, {"betti", betti}});
    }
    return {{"algebra", table.algebra}, {"params", params}, {"rows", rows}};
}

std::string render_csv(const BettiTable& table)
{
    std::ostringstream os;
    os << "w,degree,dim,kernel,betti\n";
    for (const auto& row : table.rows)
        for (std::size_t k = 0; k < row.degrees.size(); ++k)
            os << row.weight << ',' << row.degrees[k] << ',' << row.cells[k].space_dim << ','
               << row.cells[k].kernel_dim << ',' << row.cells[k].betti << '\n';
    return os.str();
}

std::string render_markdown(const BettiTable& table)
{
    std::ostringstream os;
    os << "## " << (table.algebra.empty() ? std::string("algebra") : table.algebra);
    if (!table.params.empty()) {
        os << " (";
        bool first = true;
        for (const auto& [name, value] : table.params) {
            os << (first ? "" : ", ") << name << " = " << to_string(value);
            first = false;
        }
        os << ")";
    }
    os << "\n\n";

    int lo = 0, hi = -1;
    for (const auto& row : table.rows)
        if (!row.empty()) {
            lo = hi < lo ? row.degrees.front() : std::min(lo, row.degrees.front());
            hi = std::max(hi, row.degrees.back());
        }
    if (hi >= lo) {
        os << "### Betti numbers\n\n| m-th chain |";
        for (int m = lo; m <= hi; ++m)
            os << ' ' << m << " |";
        os << "\n|---|";
        for (int m = lo; m <= hi; ++m)
            os << "---:|";
        os << '\n';
        for (const auto& row : table.rows) {
            os << "| w=" << row.weight << " |";
            for (int m = lo; m <= hi; ++m) {
                const bool inside = !row.empty() && m >= row.degrees.front() && m <= row.degrees.back();
                os << ' ' << (inside ? std::to_string(row.at(m).betti) : std::string()) << " |";
            }
            os << '\n';
        }
        os << '\n';
    }

    for (const auto& row : table.rows) {
        os << "### w = " << row.weight << "\n\n";
        if (row.empty()) {
            os << "(all chain spaces are zero)\n\n";
            continue;
        }
        os << "| weight = " << row.weight << " |";
        for (int m : row.degrees)
            os << " C_" << m << " |";
        os << "\n|---|";
        for (std::size_t k = 0; k < row.degrees.size(); ++k)
            os << "---:|";
        os << "\n| SpaceDim |";
        for (const auto& c : row.cells)
            os << ' ' << c.space_dim << " |";
        os << "\n| KerDim |";
        for (const auto& c : row.cells)
            os << ' ' << c.kernel_dim << " |";
        os << "\n| Betti |";
        for (const auto& c : row.cells)
            os << ' ' << c.betti << " |";
        os << "\n\n";
    }
    return os.str();
}

std::string render_diff(const std::vector<CellDiff>& diffs)
{
    if (diffs.empty())
        return "all cells match\n";
    std::ostringstream os;
    os << diffs.size() << " mismatching cell" << (diffs.size() == 1 ? "" : "s") << '\n';
    for (const auto& d : diffs) {
        if (d.field == "row")
            os << "w=" << d.weight << ": row not computed\n";
        else
            os << "w=" << d.weight << " m=" << d.degree << ' ' << d.field << ": expected " << d.expected << ", got "
               << d.actual << '\n';
    }
    return os.str();
}

} // namespace superhomology
