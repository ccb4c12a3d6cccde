#include "superhomology/exterior.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace superhomology {

WedgeBasisElement WedgeBasisElement::from_indices(std::span<const int> indices)
{
    WedgeBasisElement e;
    int previous = 0;
    for (int i : indices) {
        if (i <= previous || i > kMaxDim)
            throw std::invalid_argument("wedge indices must be strictly increasing and within 1..16");
        e.mask |= 1u << (i - 1);
        previous = i;
    }
    return e;
}

std::vector<int> WedgeBasisElement::indices() const
{
    std::vector<int> out;
    out.reserve(level());
    for (std::uint32_t m = mask; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::strong_ordering WedgeBasisElement::operator<=>(const WedgeBasisElement& other) const noexcept
{
    if (auto c = level() <=> other.level(); c != 0)
        return c;
    // Same level: lexicographic on sorted indices equals comparing the lowest
    // differing bit, where the set having it comes first.
    const std::uint32_t diff = mask ^ other.mask;
    if (diff == 0)
        return std::strong_ordering::equal;
    const std::uint32_t low = diff & (~diff + 1);
    return (mask & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Multivector Multivector::basis(WedgeBasisElement e, Rational coef)
{
    Multivector v(e.level());
    v.add(e, coef);
    return v;
}

Multivector Multivector::from_indices(std::initializer_list<int> indices, Rational coef)
{
    std::vector<int> idx(indices);
    return basis(WedgeBasisElement::from_indices(idx), std::move(coef));
}

Rational Multivector::coefficient(WedgeBasisElement e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add(WedgeBasisElement e, const Rational& coef)
{
    if (coef == 0)
        return;
    if (e.level() != level_)
        throw std::invalid_argument("multivector terms must share one level");
    auto [it, inserted] = terms_.try_emplace(e, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& other)
{
    for (const auto& [e, c] : other.terms_)
        add(e, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other)
{
    for (const auto& [e, c] : other.terms_)
        add(e, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

std::vector<WedgeBasisElement> wedge_basis(int n, int k)
{
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("dimension out of range");
    if (k < 1 || k > n)
        throw std::out_of_range("wedge level " + std::to_string(k) + " outside 1.." + std::to_string(n));
    std::vector<WedgeBasisElement> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i + 1;
    while (true) {
        out.push_back(WedgeBasisElement::from_indices(idx));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - (k - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i)
            idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<WedgeBasisElement> wedge_basis(const StructureConstants& sc, int k)
{
    return wedge_basis(sc.dim(), k);
}

namespace {

/// Sign of sorting a word of level-1 letters into increasing order; 0 on a repeat.
int sort_word(std::vector<int>& word)
{
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j - 1] >= word[j]; --j) {
            if (word[j - 1] == word[j])
                return 0;
            std::swap(word[j - 1], word[j]);
            sign = -sign;
        }
    return sign;
}

/// Number of pairs (x in a, y in b) with x > y.
int crossing_pairs(std::uint32_t a, std::uint32_t b)
{
    int count = 0;
    for (std::uint32_t m = b; m; m &= m - 1) {
        const int bit = std::countr_zero(m);
        count += std::popcount(a & ~((2u << bit) - 1));
    }
    return count;
}

} // namespace

Multivector wedge(const Multivector& a, const Multivector& b)
{
    Multivector out(a.level() + b.level());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            if (ea.mask & eb.mask)
                continue;
            const Rational c = ca * cb;
            out.add({ea.mask | eb.mask}, crossing_pairs(ea.mask, eb.mask) % 2 ? Rational(-c) : c);
        }
    return out;
}

Multivector schouten(const StructureConstants& sc, const Multivector& a, const Multivector& b)
{
    if (a.level() < 1 || b.level() < 1)
        throw std::invalid_argument("schouten bracket needs multivectors of level >= 1");
    const int n = sc.dim();
    Multivector out(a.level() + b.level() - 1);
    for (const auto& [ea, ca] : a.terms()) {
        const auto ai = ea.indices();
        for (const auto& [eb, cb] : b.terms()) {
            const auto bj = eb.indices();
            const Rational cab = ca * cb;
            for (std::size_t i = 0; i < ai.size(); ++i)
                for (std::size_t j = 0; j < bj.size(); ++j) {
                    const auto br = sc.bracket(ai[i], bj[j]);
                    // (-1)^{i+j} with 1-based positions
                    const int outer = ((i + j) % 2) ? -1 : 1;
                    for (int k = 1; k <= n; ++k) {
                        if (br[k - 1] == 0)
                            continue;
                        std::vector<int> word{k};
                        for (std::size_t s = 0; s < ai.size(); ++s)
                            if (s != i)
                                word.push_back(ai[s]);
                        for (std::size_t s = 0; s < bj.size(); ++s)
                            if (s != j)
                                word.push_back(bj[s]);
                        const int sign = sort_word(word);
                        if (sign == 0)
                            continue;
                        out.add(WedgeBasisElement::from_indices(word), Rational(outer * sign) * cab * br[k - 1]);
                    }
                }
        }
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::invalid_argument("alias basis is not invertible");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = m[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] /= p;
            inv[col][c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace

GeneratorSystem::GeneratorSystem(StructureConstants sc, std::vector<AliasBasis> aliases) : sc_(std::move(sc))
{
    const int n = sc_.dim();
    std::map<int, std::vector<Multivector>> levels;
    for (auto& alias : aliases) {
        if (alias.level < 1 || alias.level > n)
            throw std::invalid_argument("alias basis level out of range");
        for (const auto& v : alias.elements)
            if (v.is_zero() || v.level() != alias.level)
                throw std::invalid_argument("alias basis elements must be nonzero and level-homogeneous");
        if (levels.contains(alias.level))
            throw std::invalid_argument("duplicate alias basis for one level");
        levels[alias.level] = std::move(alias.elements);
        aliased_ = true;
    }
    for (int k = 1; k <= n; ++k) {
        const auto canonical = wedge_basis(n, k);
        auto& index = canonical_index_[k];
        for (std::size_t c = 0; c < canonical.size(); ++c)
            index[canonical[c]] = c;
        auto& elements = levels[k];
        if (elements.empty())
            for (const auto& e : canonical)
                elements.push_back(Multivector::basis(e));
        if (elements.size() != canonical.size())
            throw std::invalid_argument("alias basis at level " + std::to_string(k) + " needs " +
                                        std::to_string(canonical.size()) + " elements");
        std::vector<std::vector<Rational>> m(elements.size(), std::vector<Rational>(canonical.size()));
        for (std::size_t r = 0; r < elements.size(); ++r)
            for (const auto& [e, c] : elements[r].terms())
                m[r][index.at(e)] = c;
        inverse_[k] = invert(std::move(m));
    }
    // Even grades live on odd levels.
    for (int pass = 0; pass < 2; ++pass)
        for (int k = pass == 0 ? 1 : 2; k <= n; k += 2) {
            auto& ids = by_level_[k];
            for (auto& v : levels[k]) {
                ids.push_back(static_cast<int>(generators_.size()));
                generators_.push_back({k, std::move(v), {}});
                grades_.push_back(k - 1);
            }
            if (pass == 0)
                even_count_ = generators_.size();
        }
    std::size_t even_label = 0, odd_label = 0;
    for (auto& g : generators_)
        g.label = g.odd() ? "u" + std::to_string(++odd_label) : "z" + std::to_string(++even_label);

    const std::size_t count = generators_.size();
    table_.resize(count * count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            if (generators_[a].level + generators_[b].level - 1 > n)
                continue;
            table_[a * count + b] = express(schouten(sc_, generators_[a].expansion, generators_[b].expansion));
        }
}

GeneratorCombination GeneratorSystem::express(const Multivector& v) const
{
    GeneratorCombination out;
    if (v.is_zero())
        return out;
    const int k = v.level();
    if (k < 1 || k > dim())
        throw std::invalid_argument("multivector level outside the generator system");
    const auto& index = canonical_index_.at(k);
    const auto& inv = inverse_.at(k);
    const auto& ids = by_level_.at(k);
    std::vector<Rational> x(ids.size());
    for (const auto& [e, c] : v.terms()) {
        const auto col = index.at(e);
        for (std::size_t r = 0; r < ids.size(); ++r)
            if (inv[col][r] != 0)
                x[r] += c * inv[col][r];
    }
    for (std::size_t r = 0; r < ids.size(); ++r)
        if (x[r] != 0)
            out.emplace_back(ids[r], x[r]);
    return out;
}

Multivector GeneratorSystem::to_multivector(const GeneratorCombination& combo) const
{
    Multivector out(combo.empty() ? 1 : generators_[combo.front().first].level);
    for (const auto& [g, c] : combo)
        out += c * generators_[g].expansion;
    return out;
}

std::size_t GeneratorSystem::find(std::string_view label) const
{
    for (std::size_t g = 0; g < generators_.size(); ++g)
        if (generators_[g].label == label)
            return g;
    throw std::out_of_range("no generator labelled '" + std::string(label) + "'");
}

BracketTable bracket_table(const GeneratorSystem& gs)
{
    BracketTable t;
    t.entries.resize(gs.size());
    for (std::size_t a = 0; a < gs.size(); ++a) {
        t.entries[a].reserve(gs.size());
        for (std::size_t b = 0; b < gs.size(); ++b)
            t.entries[a].push_back(gs.bracket(a, b));
    }
    return t;
}

std::string format_combination(const GeneratorSystem& gs, const GeneratorCombination& combo)
{
    if (combo.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : combo) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + "·";
        out += gs[g].label;
        first = false;
    }
    return out;
}

namespace {

void render_matrix(std::ostringstream& os, const GeneratorSystem& gs, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols)
{
    std::vector<std::vector<std::string>> cells(rows.size() + 1, std::vector<std::string>(cols.size() + 1));
    for (std::size_t c = 0; c < cols.size(); ++c)
        cells[0][c + 1] = gs[cols[c]].label;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        cells[r + 1][0] = gs[rows[r]].label;
        for (std::size_t c = 0; c < cols.size(); ++c)
            cells[r + 1][c + 1] = format_combination(gs, gs.bracket(rows[r], cols[c]));
    }
    // Width in code points; "·" is two bytes.
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char ch : s)
            w += (ch & 0xC0) != 0x80;
        return w;
    };
    std::vector<std::size_t> widths(cols.size() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], width(row[c]));
    for (std::size_t r = 0; r < cells.size(); ++r) {
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            const auto& s = cells[r][c];
            os << s << std::string(widths[c] - width(s), ' ');
            os << (c == 0 ? " | " : (c + 1 < cells[r].size() ? "  " : ""));
        }
        os << '\n';
        if (r == 0) {
            std::size_t total = widths[0] + 3;
            for (std::size_t c = 1; c < widths.size(); ++c)
                total += widths[c] + (c + 1 < widths.size() ? 2 : 0);
            os << std::string(total, '-') << '\n';
        }
    }
}

} // namespace

std::string render_bracket_table(const GeneratorSystem& gs)
{
    std::vector<std::size_t> grade0, all, odd, odd_top;
    for (std::size_t g = 0; g < gs.size(); ++g) {
        all.push_back(g);
        if (gs.grade(g) == 0)
            grade0.push_back(g);
        if (gs.odd(g)) {
            odd.push_back(g);
            odd_top.push_back(g);
        }
    }
    for (std::size_t g = 0; g < gs.size(); ++g)
        if (gs[g].level == gs.dim() && !gs.odd(g))
            odd_top.push_back(g);
    std::ostringstream os;
    render_matrix(os, gs, grade0, all);
    if (!odd.empty()) {
        os << '\n';
        render_matrix(os, gs, odd, odd_top);
    }
    return os.str();
}

} // namespace superhomology
