#pragma once

#include "superhomology/algebra.hpp"
#include "superhomology/exterior.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace superhomology {

enum class BasisChoice { canonical, alias };

struct CatalogEntry {
    std::string name;
    std::vector<std::string> other_names;
    std::string description;
    AlgebraSpec spec;
    /// Named level-2 basis (u1, u2, u3) used by the bracket tables; empty
    /// when the canonical basis is used as is.
    std::function<std::vector<AliasBasis>(const Bindings&)> alias_basis;
};

/// abelian1..abelian6, aff1, heis3, g3d1n, g3d2, g3d3, sl2_efh, gl2.
const std::vector<CatalogEntry>& catalog();

/// Looks up by name or alternative name. Throws UnknownAlgebra.
const CatalogEntry& catalog_entry(std::string_view name);

StructureConstants catalog_get(std::string_view name, const Bindings& bindings = {});

GeneratorSystem catalog_generators(std::string_view name, const Bindings& bindings = {},
                                   BasisChoice basis = BasisChoice::canonical);

} // namespace superhomology
