#pragma once

#include "superhomology/exterior.hpp"
#include "superhomology/monomial.hpp"
#include "superhomology/rational.hpp"

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace superhomology {

/// Sparse exact matrix, stored by rows with column-sorted entries.
class RationalMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept;
    bool is_zero() const noexcept { return nnz() == 0; }

    Rational get(std::size_t r, std::size_t c) const;
    /// Stores v at (r, c); zero erases.
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add(std::size_t r, std::size_t c, const Rational& v);

    std::span<const Entry> row(std::size_t r) const { return rows_.at(r); }

    void scale_row(std::size_t r, const Rational& s);
    void swap_rows(std::size_t a, std::size_t b);

    RationalMatrix transpose() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    /// "rows cols" then one "r c p/q" line per entry, 0-based, sorted by (r, c).
    void dump(std::ostream& os) const;

private:
    void check(std::size_t r, std::size_t c) const;

    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> rows_;
};

/// All monomials of degree m and weight w, in ascending exponent order.
std::vector<SuperMonomial> chain_basis(const GeneratorSystem& gs, int m, int w);

/// Largest degree a weight-w monomial can have.
int max_degree(const GeneratorSystem& gs, int w);

/// dim C_m^w for m = 0..max_degree(gs, w), by counting (no enumeration).
std::vector<Integer> chain_dims(const GeneratorSystem& gs, int w);

/// Boundary of one basis chain: for each letter pair i < j of its word,
/// remove letter i and replace letter j by their bracket, with sign
/// (-1)^{i-1 + y_i (y_{i+1} + ... + y_{j-1})}.
Chain boundary_monomial(const GeneratorSystem& gs, const SuperMonomial& mono);
Chain boundary(const GeneratorSystem& gs, const Chain& chain);

/// d(a ^ b) - (d a) ^ b - (-1)^{deg a} a ^ (d b).
Chain induced_bracket(const GeneratorSystem& gs, const SuperMonomial& a, const SuperMonomial& b);

/// Matrix of d: C_m^w -> C_{m-1}^w (columns index C_m^w, rows C_{m-1}^w,
/// both in chain_basis order). Requires m >= 1.
RationalMatrix boundary_matrix(const GeneratorSystem& gs, int m, int w);

} // namespace superhomology
