#include "superhomology/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace superhomology {

SuperMonomial::SuperMonomial(const GeneratorSystem& gs, std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents))
{
    if (exponents_.size() != gs.size())
        throw std::invalid_argument("monomial exponent vector does not match the generator system");
    for (std::size_t g = 0; g < exponents_.size(); ++g) {
        if (!gs.odd(g) && exponents_[g] > 1)
            throw std::invalid_argument("even-grade generator " + gs[g].label + " squares to zero");
        degree_ += static_cast<int>(exponents_[g]);
        weight_ += gs.grade(g) * static_cast<int>(exponents_[g]);
    }
}

SuperMonomial SuperMonomial::unit(const GeneratorSystem& gs)
{
    return SuperMonomial(gs, std::vector<std::uint32_t>(gs.size(), 0));
}

std::size_t SuperMonomialHash::operator()(const SuperMonomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<int> expand_word(const SuperMonomial& mono)
{
    std::vector<int> word;
    word.reserve(mono.degree());
    const auto& e = mono.exponents();
    for (std::size_t g = 0; g < e.size(); ++g)
        word.insert(word.end(), e[g], static_cast<int>(g));
    return word;
}

std::optional<std::pair<int, SuperMonomial>> normalize_word(const GeneratorSystem& gs, std::span<const int> word)
{
    std::vector<std::uint32_t> counts(gs.size(), 0);
    // Swaps past an even letter flip the sign; odd letters commute with each
    // other. Even generators precede odd ones in canonical order, so only an
    // even letter can be out of order with respect to an earlier letter.
    std::size_t inversions = 0;
    for (int y : word) {
        if (y < 0 || static_cast<std::size_t>(y) >= gs.size())
            throw std::out_of_range("word letter is not a generator index");
        if (!gs.odd(y)) {
            if (counts[y])
                return std::nullopt;
            for (std::size_t g = y + 1; g < gs.size(); ++g)
                inversions += counts[g];
        }
        ++counts[y];
    }
    return std::pair{inversions % 2 ? -1 : 1, SuperMonomial(gs, std::move(counts))};
}

Chain Chain::of(const SuperMonomial& m, Rational coef)
{
    Chain c;
    c.add(m, coef);
    return c;
}

void Chain::add(const SuperMonomial& m, const Rational& coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other)
{
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

Chain& Chain::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

Rational Chain::coefficient(const SuperMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Chain wedge(const GeneratorSystem& gs, const SuperMonomial& a, const SuperMonomial& b)
{
    auto word = expand_word(a);
    const auto tail = expand_word(b);
    word.insert(word.end(), tail.begin(), tail.end());
    Chain out;
    if (auto n = normalize_word(gs, word))
        out.add(n->second, Rational(n->first));
    return out;
}

Chain wedge(const GeneratorSystem& gs, const Chain& a, const Chain& b)
{
    Chain out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out += (ca * cb) * wedge(gs, ma, mb);
    return out;
}

std::string format_monomial(const GeneratorSystem& gs, const SuperMonomial& mono)
{
    const auto& e = mono.exponents();
    if (gs.dim() == 3) {
        std::string out = "W^{";
        for (std::size_t g = 0; g < gs.even_count(); ++g)
            out += std::to_string(e[g]);
        out += "} ∧ U^{";
        for (std::size_t g = gs.even_count(); g < gs.size(); ++g)
            out += (g > gs.even_count() ? "," : "") + std::to_string(e[g]);
        return out + "}";
    }
    std::string out = "Z{";
    bool first = true;
    for (std::size_t g = 0; g < gs.even_count(); ++g)
        if (e[g]) {
            out += (first ? "" : ",") + std::to_string(g + 1);
            first = false;
        }
    out += "} ∧ U{";
    first = true;
    for (std::size_t g = gs.even_count(); g < gs.size(); ++g)
        if (e[g]) {
            out += (first ? "" : " ") + gs[g].label;
            if (e[g] > 1)
                out += "^" + std::to_string(e[g]);
            first = false;
        }
    return out + "}";
}

std::string format_chain(const GeneratorSystem& gs, const Chain& chain)
{
    if (chain.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : chain.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (mag != 1)
            out += to_string(mag) + "·";
        out += "(" + format_monomial(gs, m) + ")";
        first = false;
    }
    return out;
}

} // namespace superhomology
