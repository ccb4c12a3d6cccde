#include "superhomology/algebra.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace superhomology {

using nlohmann::json;

StructureConstants::StructureConstants(int dim) : dim_(dim)
{
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("algebra dimension must be in 1.." + std::to_string(kMaxDim));
}

void StructureConstants::check_index(int i) const
{
    if (i < 1 || i > dim_)
        throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(dim_));
}

void StructureConstants::set(int i, int j, std::vector<Rational> coeffs)
{
    check_index(i);
    check_index(j);
    if (i >= j)
        throw std::invalid_argument("bracket entries require i < j");
    if (coeffs.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("bracket coefficient vector has wrong length");
    const bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
    if (zero)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(coeffs);
}

std::vector<Rational> StructureConstants::bracket(int i, int j) const
{
    check_index(i);
    check_index(j);
    std::vector<Rational> out(dim_);
    if (i == j)
        return out;
    const bool swapped = i > j;
    auto it = entries_.find(swapped ? std::pair{j, i} : std::pair{i, j});
    if (it == entries_.end())
        return out;
    out = it->second;
    if (swapped)
        for (auto& q : out)
            q = -q;
    return out;
}

Rational StructureConstants::coefficient(int i, int j, int k) const
{
    check_index(k);
    if (i == j)
        return 0;
    check_index(i);
    check_index(j);
    const bool swapped = i > j;
    auto it = entries_.find(swapped ? std::pair{j, i} : std::pair{i, j});
    if (it == entries_.end())
        return 0;
    return swapped ? Rational(-it->second[k - 1]) : it->second[k - 1];
}

std::vector<JacobiViolation> check_jacobi(const StructureConstants& sc)
{
    const int n = sc.dim();
    // [x, zk] for x given as a coefficient vector
    auto bracket_with = [&](const std::vector<Rational>& x, int k) {
        std::vector<Rational> out(n);
        for (int l = 1; l <= n; ++l) {
            if (x[l - 1] == 0)
                continue;
            for (int r = 1; r <= n; ++r)
                out[r - 1] += x[l - 1] * sc.coefficient(l, k, r);
        }
        return out;
    };
    std::vector<JacobiViolation> violations;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                auto a = bracket_with(sc.bracket(i, j), k);
                auto b = bracket_with(sc.bracket(j, k), i);
                auto c = bracket_with(sc.bracket(k, i), j);
                bool zero = true;
                for (int r = 0; r < n; ++r) {
                    a[r] += b[r] + c[r];
                    zero = zero && a[r] == 0;
                }
                if (!zero)
                    violations.push_back({i, j, k, std::move(a)});
            }
    return violations;
}

namespace {

std::string describe(const std::vector<JacobiViolation>& violations)
{
    std::ostringstream os;
    os << "Jacobi identity violated";
    for (const auto& v : violations) {
        os << " (" << v.i << "," << v.j << "," << v.k << "): [";
        for (std::size_t r = 0; r < v.residual.size(); ++r)
            os << (r ? ", " : "") << to_string(v.residual[r]);
        os << "]";
    }
    return os.str();
}

Coefficient parse_coefficient(const json& node)
{
    Coefficient out;
    auto term = [&](const json& t) {
        if (t.is_number_integer())
            return CoefficientTerm{Rational(t.get<long>()), std::nullopt};
        if (t.is_string()) {
            const auto s = t.get<std::string>();
            const bool negated = !s.empty() && s.front() == '-';
            const std::string_view body = negated ? std::string_view(s).substr(1) : std::string_view(s);
            if (!body.empty() && (std::isalpha(static_cast<unsigned char>(body.front())) || body.front() == '_'))
                return CoefficientTerm{Rational(negated ? -1 : 1), std::string(body)};
            return CoefficientTerm{parse_rational(s), std::nullopt};
        }
        if (t.is_object()) {
            CoefficientTerm ct{Rational(1), std::nullopt};
            if (t.contains("coef")) {
                const auto& c = t.at("coef");
                ct.coef = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
            }
            if (t.contains("param"))
                ct.param = t.at("param").get<std::string>();
            return ct;
        }
        throw ParseError("unsupported coefficient expression: " + t.dump());
    };
    if (node.is_array())
        for (const auto& t : node)
            out.terms.push_back(term(t));
    else
        out.terms.push_back(term(node));
    return out;
}

} // namespace

JacobiError::JacobiError(std::vector<JacobiViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations))
{
}

Rational Coefficient::evaluate(const Bindings& bindings) const
{
    Rational total = 0;
    for (const auto& t : terms) {
        if (!t.param) {
            total += t.coef;
            continue;
        }
        auto it = bindings.find(*t.param);
        if (it == bindings.end())
            throw UnboundParameter(*t.param);
        total += t.coef * it->second;
    }
    return total;
}

StructureConstants AlgebraSpec::instantiate(const Bindings& bindings) const
{
    for (const auto& [name, value] : bindings)
        if (std::find(params.begin(), params.end(), name) == params.end())
            throw ParseError("algebra '" + this->name + "' has no parameter '" + name + "'");
    for (const auto& p : params)
        if (!bindings.contains(p))
            throw UnboundParameter(p);
    for (const auto& c : constraints) {
        auto it = bindings.find(c.param);
        if (it == bindings.end())
            throw UnboundParameter(c.param);
        if (c.nonzero && it->second == 0)
            throw ConstraintViolation("algebra '" + name + "' requires " + c.param + " != 0");
    }
    StructureConstants sc(dim);
    for (const auto& b : brackets) {
        if (b.i < 1 || b.j > dim || b.i >= b.j)
            throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
        std::vector<Rational> coeffs = sc.bracket(b.i, b.j);
        for (const auto& [k, coef] : b.out) {
            if (k < 1 || k > dim)
                throw ParseError("bracket output index " + std::to_string(k) + " out of range");
            coeffs[k - 1] += coef.evaluate(bindings);
        }
        sc.set(b.i, b.j, std::move(coeffs));
    }
    auto violations = check_jacobi(sc);
    if (!violations.empty())
        throw JacobiError(std::move(violations));
    return sc;
}

AlgebraSpec parse_algebra_spec(std::string_view document)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("algebra document: ") + e.what());
    }
    try {
        AlgebraSpec spec;
        spec.name = doc.value("name", std::string{});
        spec.dim = doc.at("dim").get<int>();
        if (spec.dim < 1 || spec.dim > kMaxDim)
            throw ParseError("dim must be in 1.." + std::to_string(kMaxDim));
        if (doc.contains("params"))
            spec.params = doc.at("params").get<std::vector<std::string>>();
        if (doc.contains("constraints"))
            for (const auto& c : doc.at("constraints"))
                spec.constraints.push_back({c.at("param").get<std::string>(), c.value("nonzero", false)});
        if (doc.contains("brackets"))
            for (const auto& b : doc.at("brackets")) {
                BracketSpec bs;
                bs.i = b.at("i").get<int>();
                bs.j = b.at("j").get<int>();
                if (bs.i < 1 || bs.j > spec.dim || bs.i >= bs.j)
                    throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
                for (const auto& [key, value] : b.at("out").items()) {
                    int k = 0;
                    try {
                        k = std::stoi(key);
                    } catch (const std::exception&) {
                        throw ParseError("bracket output key '" + key + "' is not an index");
                    }
                    if (k < 1 || k > spec.dim)
                        throw ParseError("bracket output index " + key + " out of range");
                    bs.out[k] = parse_coefficient(value);
                }
                spec.brackets.push_back(std::move(bs));
            }
        for (const auto& b : spec.brackets)
            for (const auto& [k, coef] : b.out)
                for (const auto& t : coef.terms)
                    if (t.param && std::find(spec.params.begin(), spec.params.end(), *t.param) == spec.params.end())
                        throw ParseError("coefficient references undeclared parameter '" + *t.param + "'");
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra document: ") + e.what());
    }
}

StructureConstants load_algebra(std::string_view document, const Bindings& bindings)
{
    return parse_algebra_spec(document).instantiate(bindings);
}

std::string serialize(const StructureConstants& sc, std::string_view name)
{
    json doc;
    doc["name"] = std::string(name);
    doc["dim"] = sc.dim();
    doc["brackets"] = json::array();
    for (const auto& [ij, coeffs] : sc.entries()) {
        json out = json::object();
        for (int k = 1; k <= sc.dim(); ++k)
            if (coeffs[k - 1] != 0)
                out[std::to_string(k)] = to_string(coeffs[k - 1]);
        doc["brackets"].push_back({{"i", ij.first}, {"j", ij.second}, {"out", out}});
    }
    doc["params"] = json::array();
    doc["constraints"] = json::array();
    return doc.dump(2);
}

std::pair<std::string, Rational> parse_binding(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ParseError("parameter binding must look like name=p/q: '" + std::string(text) + "'");
    return {std::string(text.substr(0, eq)), parse_rational(text.substr(eq + 1))};
}

} // namespace superhomology
