#include "superhomology/catalog.hpp"

#include "superhomology/error.hpp"

#include <algorithm>

namespace superhomology {

namespace {

BracketSpec br(int i, int j, std::map<int, Coefficient> out)
{
    return {i, j, std::move(out)};
}

Coefficient c(long v)
{
    return Coefficient::constant(Rational(v));
}

Coefficient p(long v, const char* param)
{
    return Coefficient::times(Rational(v), param);
}

Multivector mv(std::initializer_list<int> indices, Rational coef = 1)
{
    return Multivector::from_indices(indices, std::move(coef));
}

AlgebraSpec abelian(int n)
{
    AlgebraSpec s;
    s.name = "abelian" + std::to_string(n);
    s.dim = n;
    return s;
}

AlgebraSpec gl2()
{
    // z1..z4 = E11, E12, E21, E22; [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
    const int idx[2][2] = {{1, 2}, {3, 4}};
    AlgebraSpec s;
    s.name = "gl2";
    s.dim = 4;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cc = 0; cc < 2; ++cc)
                for (int d = 0; d < 2; ++d) {
                    const int i = idx[a][b], j = idx[cc][d];
                    if (i >= j)
                        continue;
                    std::map<int, long> out;
                    if (b == cc)
                        out[idx[a][d]] += 1;
                    if (d == a)
                        out[idx[cc][b]] -= 1;
                    std::map<int, Coefficient> coeffs;
                    for (auto [k, v] : out)
                        if (v != 0)
                            coeffs[k] = c(v);
                    if (!coeffs.empty())
                        s.brackets.push_back(br(i, j, std::move(coeffs)));
                }
    return s;
}

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> entries;
    for (int n = 1; n <= 6; ++n)
        entries.push_back({"abelian" + std::to_string(n), {}, "abelian Lie algebra of dimension " + std::to_string(n),
                           abelian(n), {}});

    entries.push_back({"aff1",
                       {},
                       "dim 2: [z1,z2]=z1",
                       {"aff1", 2, {br(1, 2, {{1, c(1)}})}, {}, {}},
                       {}});

    entries.push_back({"heis3",
                       {"g3d1_central"},
                       "dim 3, [g,g] 1-dim and central: [z1,z2]=z3",
                       {"heis3", 3, {br(1, 2, {{3, c(1)}})}, {}, {}},
                       [](const Bindings&) {
                           return std::vector<AliasBasis>{
                               {2, {mv({2, 3}), mv({1, 3}, -1), mv({1, 2})}}};
                       }});

    entries.push_back({"g3d1n",
                       {"g3d1_noncentral"},
                       "dim 3, [g,g] 1-dim and not central: [z1,z2]=z2",
                       {"g3d1n", 3, {br(1, 2, {{2, c(1)}})}, {}, {}},
                       [](const Bindings&) {
                           return std::vector<AliasBasis>{
                               {2, {mv({1, 2}), mv({2, 3}), mv({1, 3}, -1)}}};
                       }});

    entries.push_back({"g3d2",
                       {},
                       "dim 3, [g,g] 2-dim: [z1,z3]=z1, [z2,z3]=alpha z2 (alpha != 0)",
                       {"g3d2",
                        3,
                        {br(1, 3, {{1, c(1)}}), br(2, 3, {{2, p(1, "alpha")}})},
                        {"alpha"},
                        {{"alpha", true}}},
                       [](const Bindings&) {
                           return std::vector<AliasBasis>{
                               {2, {mv({1, 2}), mv({1, 3}), mv({2, 3})}}};
                       }});

    entries.push_back({"g3d3",
                       {},
                       "dim 3, [g,g]=g: [z1,z2]=z3, [z1,z3]=-beta z2, [z2,z3]=alpha z1 (alpha, beta != 0)",
                       {"g3d3",
                        3,
                        {br(1, 2, {{3, c(1)}}), br(1, 3, {{2, p(-1, "beta")}}), br(2, 3, {{1, p(1, "alpha")}})},
                        {"alpha", "beta"},
                        {{"alpha", true}, {"beta", true}}},
                       [](const Bindings& b) {
                           const Rational alpha = b.at("alpha"), beta = b.at("beta");
                           return std::vector<AliasBasis>{
                               {2, {mv({2, 3}, 1 / alpha), mv({1, 3}, -1 / beta), mv({1, 2})}}};
                       }});

    entries.push_back({"sl2_efh",
                       {"a1"},
                       "sl(2): [z1,z2]=z3, [z1,z3]=2 z1, [z2,z3]=-2 z2",
                       {"sl2_efh",
                        3,
                        {br(1, 2, {{3, c(1)}}), br(1, 3, {{1, c(2)}}), br(2, 3, {{2, c(-2)}})},
                        {},
                        {}},
                       [](const Bindings&) {
                           return std::vector<AliasBasis>{
                               {2, {mv({1, 3}, Rational(1, 2)), mv({2, 3}, Rational(-1, 2)), mv({1, 2})}}};
                       }});

    entries.push_back({"gl2", {}, "gl(2) on E11, E12, E21, E22", gl2(), {}});
    return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name)
{
    for (const auto& e : catalog())
        if (e.name == name || std::find(e.other_names.begin(), e.other_names.end(), name) != e.other_names.end())
            return e;
    throw UnknownAlgebra(std::string(name));
}

StructureConstants catalog_get(std::string_view name, const Bindings& bindings)
{
    return catalog_entry(name).spec.instantiate(bindings);
}

GeneratorSystem catalog_generators(std::string_view name, const Bindings& bindings, BasisChoice basis)
{
    const auto& entry = catalog_entry(name);
    auto sc = entry.spec.instantiate(bindings);
    if (basis == BasisChoice::alias && entry.alias_basis)
        return GeneratorSystem(std::move(sc), entry.alias_basis(bindings));
    return GeneratorSystem(std::move(sc));
}

} // namespace superhomology
