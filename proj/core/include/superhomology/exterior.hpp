#pragma once

#include "superhomology/algebra.hpp"
#include "superhomology/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace superhomology {

/// Canonical basis element z_{i1} ^ ... ^ z_{ik} of the k-th exterior power,
/// i1 < ... < ik, stored as a bitmask (bit i-1 set for index i).
struct WedgeBasisElement {
    std::uint32_t mask = 0;

    static WedgeBasisElement from_indices(std::span<const int> indices);

    int level() const noexcept { return std::popcount(mask); }
    /// Super-degree in the graded Lie superalgebra: level - 1.
    int grade() const noexcept { return level() - 1; }
    int parity() const noexcept { return grade() & 1; }
    std::vector<int> indices() const;

    /// Orders by level, then lexicographically by index tuple.
    std::strong_ordering operator<=>(const WedgeBasisElement& other) const noexcept;
    bool operator==(const WedgeBasisElement&) const noexcept = default;
};

/// Homogeneous element of the k-th exterior power with exact coefficients.
class Multivector {
public:
    using Terms = std::map<WedgeBasisElement, Rational>;

    explicit Multivector(int level = 1) : level_(level) {}
    static Multivector basis(WedgeBasisElement e, Rational coef = 1);
    static Multivector from_indices(std::initializer_list<int> indices, Rational coef = 1);

    int level() const noexcept { return level_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(WedgeBasisElement e) const;

    /// Adds coef * e; e must have this multivector's level.
    void add(WedgeBasisElement e, const Rational& coef);

    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(const Rational& s);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
    friend Multivector operator-(Multivector a) { return a *= Rational(-1); }

    /// Zero multivectors compare equal regardless of level.
    friend bool operator==(const Multivector& a, const Multivector& b)
    {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.level_ == b.level_);
    }

private:
    int level_;
    Terms terms_;
};

/// All C(n,k) basis elements of the k-th exterior power in lexicographic order.
std::vector<WedgeBasisElement> wedge_basis(int n, int k);
std::vector<WedgeBasisElement> wedge_basis(const StructureConstants& sc, int k);

/// Exterior product of multivectors (levels add).
Multivector wedge(const Multivector& a, const Multivector& b);

/// Schouten-like bracket of multivectors of levels p, q >= 1; result level p + q - 1.
/// Throws std::invalid_argument on level-0 input.
Multivector schouten(const StructureConstants& sc, const Multivector& a, const Multivector& b);

/// Replacement basis for one exterior level, e.g. u1 = 1/2 z1^z3.
struct AliasBasis {
    int level = 2;
    std::vector<Multivector> elements;
};

using GeneratorCombination = std::vector<std::pair<int, Rational>>;

struct Generator {
    int level = 1;
    Multivector expansion;
    std::string label;

    int grade() const noexcept { return level - 1; }
    bool odd() const noexcept { return (grade() & 1) != 0; }
};

/// The generators of the induced superalgebra: a basis of every exterior
/// level 1..n, even-grade generators first, then odd-grade ones, each group
/// ordered by level and then by (alias or lexicographic) basis order.
///
/// Labels: even generators are z1, z2, ..., odd ones u1, u2, ... in that
/// order (for n = 3 this is z1 z2 z3 z4=V u1 u2 u3).
class GeneratorSystem {
public:
    explicit GeneratorSystem(StructureConstants sc, std::vector<AliasBasis> aliases = {});

    const StructureConstants& constants() const noexcept { return sc_; }
    int dim() const noexcept { return sc_.dim(); }

    std::size_t size() const noexcept { return generators_.size(); }
    std::size_t even_count() const noexcept { return even_count_; }
    std::size_t odd_count() const noexcept { return generators_.size() - even_count_; }
    const Generator& operator[](std::size_t g) const { return generators_[g]; }
    const std::vector<Generator>& generators() const noexcept { return generators_; }

    int grade(std::size_t g) const { return grades_[g]; }
    bool odd(std::size_t g) const { return grades_[g] & 1; }

    /// Generator indices spanning exterior level k, in basis order.
    const std::vector<int>& level_generators(int k) const { return by_level_.at(k); }

    /// Rewrites a multivector in the generator basis of its level.
    GeneratorCombination express(const Multivector& v) const;
    Multivector to_multivector(const GeneratorCombination& combo) const;

    /// Schouten bracket of two generators in the generator basis (memoized).
    const GeneratorCombination& bracket(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

    /// Index of a generator by label (z1, u3, ...); throws std::out_of_range.
    std::size_t find(std::string_view label) const;

    bool uses_aliases() const noexcept { return aliased_; }

private:
    StructureConstants sc_;
    std::vector<Generator> generators_;
    std::vector<int> grades_;
    std::size_t even_count_ = 0;
    std::map<int, std::vector<int>> by_level_;
    // Per level: canonical element -> column, and inverse of the alias matrix.
    std::map<int, std::map<WedgeBasisElement, std::size_t>> canonical_index_;
    std::map<int, std::vector<std::vector<Rational>>> inverse_;
    std::vector<GeneratorCombination> table_;
    bool aliased_ = false;
};

/// Pairwise bracket table over all generators (rows and columns in generator order).
struct BracketTable {
    std::vector<std::vector<GeneratorCombination>> entries;
};

BracketTable bracket_table(const GeneratorSystem& gs);

/// "0", "u1", "-u2", "2·z4", "1/2·u1 - z3", ...
std::string format_combination(const GeneratorSystem& gs, const GeneratorCombination& combo);

/// Text rendering: grade-0 generators against all generators, then odd
/// generators against odd generators and the top exterior level.
std::string render_bracket_table(const GeneratorSystem& gs);

} // namespace superhomology
