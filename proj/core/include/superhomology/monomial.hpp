#pragma once

#include "superhomology/exterior.hpp"
#include "superhomology/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace superhomology {

/// A basis chain of the super exterior algebra: exponents over the
/// generators of a GeneratorSystem, in generator order. Even-grade
/// exponents are 0 or 1; odd-grade exponents are arbitrary naturals.
class SuperMonomial {
public:
    SuperMonomial() = default;
    /// Throws std::invalid_argument if an even exponent exceeds 1.
    SuperMonomial(const GeneratorSystem& gs, std::vector<std::uint32_t> exponents);

    static SuperMonomial unit(const GeneratorSystem& gs);

    const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
    std::uint32_t exponent(std::size_t g) const { return exponents_[g]; }
    int degree() const noexcept { return degree_; }
    int weight() const noexcept { return weight_; }

    /// Exponents are compared lexicographically: the even bit vector read as
    /// an integer (first generator most significant), then the odd exponents.
    std::strong_ordering operator<=>(const SuperMonomial& other) const noexcept
    {
        return exponents_ <=> other.exponents_;
    }
    bool operator==(const SuperMonomial& other) const noexcept { return exponents_ == other.exponents_; }

private:
    std::vector<std::uint32_t> exponents_;
    int degree_ = 0;
    int weight_ = 0;
};

struct SuperMonomialHash {
    std::size_t operator()(const SuperMonomial& m) const noexcept;
};

/// The canonical word of a monomial: generator indices in order, odd
/// generators repeated by their exponent.
std::vector<int> expand_word(const SuperMonomial& mono);

/// Reorders a word of generators into canonical order. Each adjacent swap
/// of letters with grades x, y contributes -(-1)^{xy}. Returns nullopt when
/// an even-grade generator repeats (the product vanishes).
std::optional<std::pair<int, SuperMonomial>> normalize_word(const GeneratorSystem& gs, std::span<const int> word);

/// Exact linear combination of monomials.
class Chain {
public:
    using Terms = std::map<SuperMonomial, Rational>;

    Chain() = default;
    static Chain of(const SuperMonomial& m, Rational coef = 1);

    void add(const SuperMonomial& m, const Rational& coef);
    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(const Rational& s);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rational& s, Chain a) { return a *= s; }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const SuperMonomial& m) const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    Terms terms_;
};

/// Super exterior product of monomials / chains.
Chain wedge(const GeneratorSystem& gs, const SuperMonomial& a, const SuperMonomial& b);
Chain wedge(const GeneratorSystem& gs, const Chain& a, const Chain& b);

/// "W^{1101} ∧ U^{2,0,1}" for three-dimensional algebras, otherwise
/// "Z{1,2,4} ∧ U{u1^2 u3}" (Z lists even generator numbers).
std::string format_monomial(const GeneratorSystem& gs, const SuperMonomial& mono);
std::string format_chain(const GeneratorSystem& gs, const Chain& chain);

} // namespace superhomology
