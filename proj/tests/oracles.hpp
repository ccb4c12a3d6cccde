#pragma once

// Independent reference implementations used only by the tests.

#include "superhomology/algebra.hpp"
#include "superhomology/chain.hpp"
#include "superhomology/exterior.hpp"
#include "superhomology/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using superhomology::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense to_dense(const superhomology::RationalMatrix& m)
{
    Dense d(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            d[r][c] = v;
    return d;
}

/// Plain Gauss-Jordan elimination over the rationals.
inline std::size_t naive_rank(Dense a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline Dense dense_product(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Dense out(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    out[i][j] += a[i][t] * b[t][j];
    return out;
}

/// [[zi,zj],zk] + [[zj,zk],zi] + [[zk,zi],zj] by expanding the structure constants.
inline std::vector<Rational> jacobi_sum(const superhomology::StructureConstants& sc, int i, int j, int k)
{
    const int n = sc.dim();
    std::vector<Rational> out(n);
    const int triple[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
    for (const auto& t : triple) {
        const auto inner = sc.bracket(t[0], t[1]);
        for (int p = 1; p <= n; ++p) {
            if (inner[p - 1] == 0)
                continue;
            const auto outer = sc.bracket(p, t[2]);
            for (int l = 0; l < n; ++l)
                out[l] += inner[p - 1] * outer[l];
        }
    }
    return out;
}

/// Exponent vector with sign, or nullopt for a vanishing word.
using Normalized = std::optional<std::pair<int, std::vector<std::uint32_t>>>;

/// Bubble sort by generator index; each adjacent swap of grades x, y
/// multiplies by -(-1)^{xy}; an even letter occurring twice kills the word.
inline Normalized bubble_normalize(const superhomology::GeneratorSystem& gs, std::vector<int> word)
{
    int sign = 1;
    for (std::size_t pass = 0; pass < word.size(); ++pass)
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] > word[i + 1]) {
                const int x = gs.grade(word[i]), y = gs.grade(word[i + 1]);
                sign *= ((x * y) % 2 == 0) ? -1 : 1;
                std::swap(word[i], word[i + 1]);
            }
    std::vector<std::uint32_t> exps(gs.size());
    for (int g : word) {
        ++exps[g];
        if (!gs.odd(g) && exps[g] > 1)
            return std::nullopt;
    }
    return std::make_pair(sign, exps);
}

using WordChain = std::map<std::vector<int>, Rational>;

/// d(Y1 W) = sum_j (-1)^{y1 (y2+...+y_{j-1})} (W with Yj replaced by [Y1,Yj]) - Y1 d(W),
/// evaluated on raw words; terms stay unnormalized.
inline WordChain boundary_words(const superhomology::GeneratorSystem& gs, const std::vector<int>& word)
{
    WordChain out;
    if (word.size() < 2)
        return out;
    const int y1 = gs.grade(word[0]);
    const std::vector<int> rest(word.begin() + 1, word.end());
    int between = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
        const int sign = ((y1 * between) % 2 == 0) ? 1 : -1;
        for (const auto& [g, coef] : gs.bracket(word[0], rest[j])) {
            auto w = rest;
            w[j] = g;
            out[w] += sign * coef;
        }
        between += gs.grade(rest[j]);
    }
    for (const auto& [w, coef] : boundary_words(gs, rest)) {
        std::vector<int> full{word[0]};
        full.insert(full.end(), w.begin(), w.end());
        out[full] -= coef;
    }
    return out;
}

/// Collects a word chain into exponent vectors via bubble_normalize.
inline std::map<std::vector<std::uint32_t>, Rational> collect(const superhomology::GeneratorSystem& gs,
                                                              const WordChain& words)
{
    std::map<std::vector<std::uint32_t>, Rational> out;
    for (const auto& [w, coef] : words)
        if (auto n = bubble_normalize(gs, w)) {
            auto& slot = out[n->second];
            slot += n->first * coef;
            if (slot == 0)
                out.erase(n->second);
        }
    return out;
}

/// dim C_m^w for every m by trying every exponent vector with odd exponents <= w.
inline std::map<int, std::int64_t> brute_dims(const superhomology::GeneratorSystem& gs, int w)
{
    std::map<int, std::int64_t> dims;
    const std::size_t n = gs.size();
    std::vector<std::uint32_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t g, int weight) -> void {
        if (g == n) {
            if (weight == w) {
                int degree = 0;
                for (std::size_t k = 0; k < n; ++k)
                    degree += static_cast<int>(e[k]);
                ++dims[degree];
            }
            return;
        }
        const int grade = gs.grade(g);
        const std::uint32_t cap = gs.odd(g) ? static_cast<std::uint32_t>(w) : 1;
        for (std::uint32_t v = 0; v <= cap && weight + grade * static_cast<int>(v) <= w; ++v) {
            e[g] = v;
            self(self, g + 1, weight + grade * static_cast<int>(v));
        }
        e[g] = 0;
    };
    rec(rec, 0, 0);
    return dims;
}

inline std::int64_t binom2(std::int64_t n)
{
    return n * (n - 1) / 2;
}

/// Random small nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
inline Rational random_nonzero(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(1, 5), den(1, 4), sign(0, 1);
    Rational r(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    r.canonicalize();
    return r;
}

inline Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> zero(0, 3);
    return zero(rng) == 0 ? Rational(0) : random_nonzero(rng);
}

} // namespace oracle
