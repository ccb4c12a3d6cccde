#include "superhomology/ranklin.hpp"

#include <algorithm>
#include <limits>

namespace superhomology {

namespace {

using IntEntry = std::pair<std::size_t, Integer>;
using IntRow = std::vector<IntEntry>;

IntRow to_primitive_integers(std::span<const RationalMatrix::Entry> row)
{
    Integer lcm = 1;
    for (const auto& e : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.second.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    Integer content = 0;
    for (const auto& [c, q] : row) {
        Integer v = q.get_num() * (lcm / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.emplace_back(c, std::move(v));
    }
    if (content > 1)
        for (auto& e : out)
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
    return out;
}

const Integer* find_entry(const IntRow& row, std::size_t c)
{
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const IntEntry& e, std::size_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
}

} // namespace

EliminationReport eliminate(const RationalMatrix& m)
{
    const auto start = std::chrono::steady_clock::now();
    EliminationReport report;

    std::vector<IntRow> rows(m.rows());
    std::vector<std::size_t> level(m.rows(), 0);
    std::vector<std::size_t> col_count(m.cols(), 0);
    std::vector<std::size_t> active;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r] = to_primitive_integers(m.row(r));
        for (const auto& e : rows[r])
            ++col_count[e.first];
        if (!rows[r].empty())
            active.push_back(r);
    }
    // Bareiss pivots; a row at level s holds the step-s values.
    std::vector<Integer> pivot_values{Integer(1)};

    auto raise = [&](std::size_t r, std::size_t k) {
        if (level[r] == k)
            return;
        const Integer& target = pivot_values[k];
        const Integer& from = pivot_values[level[r]];
        for (auto& e : rows[r]) {
            e.second *= target;
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), from.get_mpz_t());
        }
        level[r] = k;
    };

    IntRow scratch;
    while (!active.empty()) {
        const std::size_t step = report.pivots.size();

        std::size_t best = 0;
        for (std::size_t a = 1; a < active.size(); ++a) {
            const auto& cand = rows[active[a]];
            const auto& cur = rows[active[best]];
            if (cand.size() != cur.size() ? cand.size() < cur.size()
                                          : (cand.front().first != cur.front().first
                                                 ? cand.front().first < cur.front().first
                                                 : active[a] < active[best]))
                best = a;
        }
        const std::size_t prow = active[best];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));

        std::size_t pcol = rows[prow].front().first;
        for (const auto& e : rows[prow])
            if (col_count[e.first] < col_count[pcol])
                pcol = e.first;

        raise(prow, step);
        const Integer pivot = *find_entry(rows[prow], pcol);
        const Integer& previous = pivot_values[step];
        report.pivots.emplace_back(prow, pcol);
        for (const auto& e : rows[prow])
            --col_count[e.first];

        std::vector<std::size_t> still_active;
        still_active.reserve(active.size());
        for (std::size_t t : active) {
            const Integer* factor_ptr = find_entry(rows[t], pcol);
            if (!factor_ptr) {
                still_active.push_back(t);
                continue;
            }
            raise(t, step);
            const Integer factor = *find_entry(rows[t], pcol);
            auto& row = rows[t];
            for (const auto& e : row)
                --col_count[e.first];
            scratch.clear();
            // row <- (pivot * row - factor * pivot_row) / previous, merged by column
            auto a = row.begin();
            auto b = rows[prow].begin();
            while (a != row.end() || b != rows[prow].end()) {
                if (b == rows[prow].end() || (a != row.end() && a->first < b->first)) {
                    Integer v = pivot * a->second;
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                    scratch.emplace_back(a->first, std::move(v));
                    ++a;
                } else if (a == row.end() || b->first < a->first) {
                    Integer v = -factor * b->second;
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                    scratch.emplace_back(b->first, std::move(v));
                    ++report.fill_in;
                    ++b;
                } else {
                    Integer v = pivot * a->second - factor * b->second;
                    if (v != 0) {
                        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                        scratch.emplace_back(a->first, std::move(v));
                    }
                    ++a;
                    ++b;
                }
            }
            row.swap(scratch);
            level[t] = step + 1;
            for (const auto& e : row)
                ++col_count[e.first];
            if (!row.empty())
                still_active.push_back(t);
        }
        active.swap(still_active);
        pivot_values.push_back(pivot);
        rows[prow].clear();
    }
    report.rank = report.pivots.size();
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::size_t rank(const RationalMatrix& m)
{
    return eliminate(m).rank;
}

std::size_t kernel_dim(const RationalMatrix& m)
{
    return m.cols() - rank(m);
}

} // namespace superhomology
