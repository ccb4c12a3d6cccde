#include "superhomology/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace superhomology {

std::size_t RationalMatrix::nnz() const noexcept
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

void RationalMatrix::check(std::size_t r, std::size_t c) const
{
    if (r >= rows_.size() || c >= cols_)
        throw std::out_of_range("matrix index out of range");
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const
{
    check(r, c);
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? it->second : Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v)
{
    check(r, c);
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (v == 0) {
        if (present)
            row.erase(it);
    } else if (present) {
        it->second = v;
    } else {
        row.insert(it, {c, v});
    }
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& v)
{
    check(r, c);
    auto& row = rows_[r];
    if (row.empty() || row.back().first < c) {
        if (v != 0)
            row.emplace_back(c, v);
        return;
    }
    set(r, c, get(r, c) + v);
}

void RationalMatrix::scale_row(std::size_t r, const Rational& s)
{
    check(r, 0);
    if (s == 0) {
        rows_[r].clear();
        return;
    }
    for (auto& e : rows_[r])
        e.second *= s;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b)
{
    check(a, 0);
    check(b, 0);
    std::swap(rows_[a], rows_[b]);
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r])
            t.rows_[c].emplace_back(r, v);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, av] : a.rows_[r])
            for (const auto& [c, bv] : b.rows_[k])
                acc[c] += av * bv;
        for (auto& [c, v] : acc)
            if (v != 0)
                out.rows_[r].emplace_back(c, std::move(v));
    }
    return out;
}

void RationalMatrix::dump(std::ostream& os) const
{
    os << rows() << ' ' << cols() << '\n';
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r])
            os << r << ' ' << c << ' ' << to_string(v) << '\n';
}

int max_degree(const GeneratorSystem& gs, int w)
{
    // Each odd letter has grade >= 1, so at most w of them.
    return static_cast<int>(gs.even_count()) + std::max(w, 0);
}

namespace {

/// reachable[g][d][s]: generators g.. can supply exactly degree d and weight s.
class Reachability {
public:
    Reachability(const GeneratorSystem& gs, int max_d, int max_w)
        : count_(gs.size()), md_(max_d), mw_(max_w), table_((count_ + 1) * (md_ + 1) * (mw_ + 1), 0)
    {
        at(count_, 0, 0) = 1;
        for (std::size_t g = count_; g-- > 0;) {
            const int grade = gs.grade(g);
            const int cap = gs.odd(g) ? md_ : 1;
            for (int d = 0; d <= md_; ++d)
                for (int s = 0; s <= mw_; ++s) {
                    bool ok = false;
                    for (int e = 0; e <= cap && e <= d && e * grade <= s && !ok; ++e)
                        ok = at(g + 1, d - e, s - e * grade);
                    at(g, d, s) = ok;
                }
        }
    }

    bool operator()(std::size_t g, int d, int s) const
    {
        if (d < 0 || s < 0 || d > md_ || s > mw_)
            return false;
        return table_[(g * (md_ + 1) + d) * (mw_ + 1) + s];
    }

private:
    char& at(std::size_t g, int d, int s) { return table_[(g * (md_ + 1) + d) * (mw_ + 1) + s]; }

    std::size_t count_;
    int md_, mw_;
    std::vector<char> table_;
};

void enumerate(const GeneratorSystem& gs, const Reachability& reach, std::size_t g, int d, int s,
               std::vector<std::uint32_t>& exps, std::vector<SuperMonomial>& out)
{
    if (g == gs.size()) {
        out.emplace_back(gs, exps);
        return;
    }
    const int grade = gs.grade(g);
    const int cap = gs.odd(g) ? d : 1;
    for (int e = 0; e <= cap && e <= d && e * grade <= s; ++e) {
        if (!reach(g + 1, d - e, s - e * grade))
            continue;
        exps[g] = static_cast<std::uint32_t>(e);
        enumerate(gs, reach, g + 1, d - e, s - e * grade, exps, out);
    }
    exps[g] = 0;
}

} // namespace

std::vector<SuperMonomial> chain_basis(const GeneratorSystem& gs, int m, int w)
{
    std::vector<SuperMonomial> out;
    if (m < 0 || w < 0 || m > max_degree(gs, w))
        return out;
    Reachability reach(gs, m, w);
    if (!reach(0, m, w))
        return out;
    std::vector<std::uint32_t> exps(gs.size(), 0);
    enumerate(gs, reach, 0, m, w, exps, out);
    return out;
}

std::vector<Integer> chain_dims(const GeneratorSystem& gs, int w)
{
    if (w < 0)
        return {};
    const int md = max_degree(gs, w);
    // poly[d][s]: number of monomials over the generators processed so far.
    std::vector<std::vector<Integer>> poly(md + 1, std::vector<Integer>(w + 1, 0));
    poly[0][0] = 1;
    for (std::size_t g = 0; g < gs.size(); ++g) {
        const int grade = gs.grade(g);
        auto next = poly;
        if (gs.odd(g)) {
            // multiply by 1 / (1 - x^grade y), ascending so repeats accumulate
            for (int d = 1; d <= md; ++d)
                for (int s = grade; s <= w; ++s)
                    next[d][s] += next[d - 1][s - grade];
        } else {
            for (int d = 1; d <= md; ++d)
                for (int s = grade; s <= w; ++s)
                    next[d][s] += poly[d - 1][s - grade];
        }
        poly = std::move(next);
    }
    std::vector<Integer> dims(md + 1);
    for (int d = 0; d <= md; ++d)
        dims[d] = poly[d][w];
    return dims;
}

Chain boundary_monomial(const GeneratorSystem& gs, const SuperMonomial& mono)
{
    Chain out;
    const auto word = expand_word(mono);
    const std::size_t len = word.size();
    std::vector<int> scratch(len > 0 ? len - 1 : 0);
    for (std::size_t i = 0; i < len; ++i) {
        const bool yi_odd = gs.odd(word[i]);
        int between = 0; // parity of y_{i+1} + ... + y_{j-1}
        for (std::size_t j = i + 1; j < len; between ^= gs.odd(word[j]) ? 1 : 0, ++j) {
            const auto& br = gs.bracket(word[i], word[j]);
            if (br.empty())
                continue;
            const bool negative = ((i & 1) != 0) != (yi_odd && between);
            // word without letter i; letter j lands at position j-1
            std::size_t pos = 0;
            for (std::size_t s = 0; s < len; ++s)
                if (s != i)
                    scratch[pos++] = word[s];
            for (const auto& [g, c] : br) {
                scratch[j - 1] = g;
                auto n = normalize_word(gs, scratch);
                if (!n)
                    continue;
                out.add(n->second, (n->first < 0) != negative ? Rational(-c) : c);
            }
        }
    }
    return out;
}

Chain boundary(const GeneratorSystem& gs, const Chain& chain)
{
    Chain out;
    for (const auto& [m, c] : chain.terms())
        out += c * boundary_monomial(gs, m);
    return out;
}

Chain induced_bracket(const GeneratorSystem& gs, const SuperMonomial& a, const SuperMonomial& b)
{
    Chain out = boundary(gs, wedge(gs, a, b));
    out -= wedge(gs, boundary_monomial(gs, a), Chain::of(b));
    const Rational sign = a.degree() % 2 ? -1 : 1;
    out -= sign * wedge(gs, Chain::of(a), boundary_monomial(gs, b));
    return out;
}

RationalMatrix boundary_matrix(const GeneratorSystem& gs, int m, int w)
{
    if (m < 1)
        throw std::invalid_argument("boundary_matrix needs m >= 1");
    const auto cols = chain_basis(gs, m, w);
    const auto rows = chain_basis(gs, m - 1, w);
    std::unordered_map<SuperMonomial, std::size_t, SuperMonomialHash> row_index;
    row_index.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_index.emplace(rows[r], r);
    RationalMatrix matrix(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Chain image = boundary_monomial(gs, cols[c]);
        for (const auto& [mono, coef] : image.terms())
            matrix.add(row_index.at(mono), c, coef);
    }
    return matrix;
}

} // namespace superhomology
