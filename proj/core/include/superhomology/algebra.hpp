#pragma once

#include "superhomology/error.hpp"
#include "superhomology/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superhomology {

/// Maximum Lie algebra dimension; wedge basis elements are stored as bitmasks.
inline constexpr int kMaxDim = 16;

/// Bracket of a finite-dimensional Lie algebra on a fixed basis z1..zn.
///
/// Indices are 1-based. Only pairs i < j are stored, and only when the
/// bracket is nonzero; [zj, zi] is answered by antisymmetry.
class StructureConstants {
public:
    explicit StructureConstants(int dim);

    int dim() const noexcept { return dim_; }

    /// Sets [zi, zj] = sum_k coeffs[k-1] zk. Requires 1 <= i < j <= dim.
    void set(int i, int j, std::vector<Rational> coeffs);

    /// [zi, zj] as a length-dim coefficient vector, for any i, j.
    std::vector<Rational> bracket(int i, int j) const;

    /// Coefficient c_ij^k.
    Rational coefficient(int i, int j, int k) const;

    bool is_abelian() const noexcept { return entries_.empty(); }

    const std::map<std::pair<int, int>, std::vector<Rational>>& entries() const noexcept { return entries_; }

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    void check_index(int i) const;

    int dim_;
    std::map<std::pair<int, int>, std::vector<Rational>> entries_;
};

/// One cyclic-sum failure [[zi,zj],zk] + [[zj,zk],zi] + [[zk,zi],zj] != 0.
struct JacobiViolation {
    int i = 0, j = 0, k = 0;
    std::vector<Rational> residual;
};

/// Every triple i < j < k whose Jacobi cyclic sum is nonzero, with its exact residual.
std::vector<JacobiViolation> check_jacobi(const StructureConstants& sc);

class JacobiError : public Error {
public:
    explicit JacobiError(std::vector<JacobiViolation> violations);
    const std::vector<JacobiViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<JacobiViolation> violations_;
};

/// A coefficient expression: a sum of terms coef or coef*param.
struct CoefficientTerm {
    Rational coef;
    std::optional<std::string> param;
};

struct Coefficient {
    std::vector<CoefficientTerm> terms;

    static Coefficient constant(Rational c) { return {{{std::move(c), std::nullopt}}}; }
    static Coefficient times(Rational c, std::string param) { return {{{std::move(c), std::move(param)}}}; }

    Rational evaluate(const Bindings& bindings) const;
};

struct BracketSpec {
    int i = 0, j = 0;
    std::map<int, Coefficient> out;
};

struct ParamConstraint {
    std::string param;
    bool nonzero = false;
};

/// Structure constants whose coefficients may reference named parameters.
struct AlgebraSpec {
    std::string name;
    int dim = 0;
    std::vector<BracketSpec> brackets;
    std::vector<std::string> params;
    std::vector<ParamConstraint> constraints;

    /// Substitutes bindings, checks constraints and the Jacobi identity.
    /// Throws UnboundParameter, ConstraintViolation, ParseError (unknown
    /// binding name) or JacobiError.
    StructureConstants instantiate(const Bindings& bindings) const;
};

/// Parses the JSON algebra description document.
AlgebraSpec parse_algebra_spec(std::string_view document);

StructureConstants load_algebra(std::string_view document, const Bindings& bindings = {});

/// JSON document (parameter-free) that load_algebra reads back to the same constants.
std::string serialize(const StructureConstants& sc, std::string_view name = "");

/// Parses "name=p/q". Throws ParseError.
std::pair<std::string, Rational> parse_binding(std::string_view text);

} // namespace superhomology
