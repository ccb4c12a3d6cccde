#pragma once

#include "superhomology/chain.hpp"
#include "superhomology/exterior.hpp"
#include "superhomology/ranklin.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superhomology {

struct BettiCell {
    std::size_t space_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t betti = 0;

    friend bool operator==(const BettiCell&, const BettiCell&) = default;
};

/// One weight of the homology table: cells over the degrees where the
/// chain space is nonzero (lowest to highest, contiguous range).
struct BettiRow {
    int weight = 0;
    std::vector<int> degrees;
    std::vector<BettiCell> cells;

    /// The cell at degree m; an all-zero cell outside the support.
    BettiCell at(int m) const;
    bool empty() const noexcept { return degrees.empty(); }
};

struct BettiTable {
    std::string algebra;
    Bindings params;
    std::vector<BettiRow> rows;
};

struct HomologyOptions {
    /// Worker threads for boundary matrices and ranks; 0 = hardware concurrency.
    unsigned threads = 1;
    /// Called once per computed boundary matrix (w, m, matrix, report), sequentially.
    std::function<void(int, int, const RationalMatrix&, const EliminationReport&)> on_matrix;
};

BettiRow betti_row(const GeneratorSystem& gs, int w, const HomologyOptions& options = {});

/// Rows for w = 0..w_max; each boundary matrix is built and ranked once.
BettiTable betti_table(const GeneratorSystem& gs, int w_max, const HomologyOptions& options = {});

/// Alternating sum of chain-space dimensions at weight w.
std::int64_t euler_check(const GeneratorSystem& gs, int w);

/// Expected values; any field may be missing.
struct ExpectedRow {
    int weight = 0;
    std::vector<int> degrees;
    std::optional<std::vector<std::int64_t>> dims, kernels, betti;
};

struct ExpectedTable {
    std::optional<std::string> algebra;
    Bindings params;
    std::vector<ExpectedRow> rows;
};

/// Parses the BettiTable JSON schema with every numeric field optional. Throws ParseError.
ExpectedTable parse_expected(std::string_view document);

struct CellDiff {
    int weight = 0;
    int degree = 0;
    std::string field; // "dim", "kernel", "betti", or "row" for a weight that was not computed
    std::int64_t expected = 0;
    std::int64_t actual = 0;
};

/// Empty iff every expected cell matches.
std::vector<CellDiff> verify_table(const BettiTable& computed, const ExpectedTable& expected);

nlohmann::json to_json(const BettiTable& table);
std::string render_csv(const BettiTable& table);
std::string render_markdown(const BettiTable& table);
std::string render_diff(const std::vector<CellDiff>& diffs);

} // namespace superhomology
