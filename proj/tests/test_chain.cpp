#include "oracles.hpp"

#include "superhomology/catalog.hpp"
#include "superhomology/chain.hpp"
#include "superhomology/monomial.hpp"
#include "superhomology/ranklin.hpp"

#include <doctest.h>

#include <array>
#include <random>
#include <sstream>

using namespace superhomology;

namespace {

/// n = 3 monomial W^{e1 e2 e3 e4} ^ U^{a,b,c}.
SuperMonomial W(const GeneratorSystem& gs, std::array<int, 4> e, std::array<int, 3> u = {0, 0, 0})
{
    return SuperMonomial(gs, {std::uint32_t(e[0]), std::uint32_t(e[1]), std::uint32_t(e[2]), std::uint32_t(e[3]),
                              std::uint32_t(u[0]), std::uint32_t(u[1]), std::uint32_t(u[2])});
}

SuperMonomial U(const GeneratorSystem& gs, int a, int b, int c, bool z4 = false)
{
    return W(gs, {0, 0, 0, z4 ? 1 : 0}, {a, b, c});
}

Rational R(long p, long q = 1)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

struct Named {
    std::string name;
    Bindings params;
};

/// Every catalog algebra with representative parameters.
std::vector<Named> catalog_samples()
{
    std::vector<Named> out;
    for (const auto& e : catalog()) {
        Bindings b;
        for (const auto& p : e.spec.params)
            b[p] = p == "alpha" ? R(-1) : R(3, 2);
        out.push_back({e.name, b});
    }
    out.push_back({"g3d2", {{"alpha", R(2)}}});
    out.push_back({"g3d3", {{"alpha", R(-1)}, {"beta", R(1)}}});
    return out;
}

int weight_limit(const GeneratorSystem& gs)
{
    return gs.dim() <= 3 ? 5 : gs.dim() == 4 ? 3 : 2;
}

} // namespace

TEST_SUITE("chain")
{
    TEST_CASE("chain_basis examples")
    {
        const auto gs = catalog_generators("heis3");
        const auto low = chain_basis(gs, 3, 4);
        CHECK(low.size() == 6);
        for (const auto& m : low) {
            CHECK(m.exponent(3) == 1);
            CHECK(m.exponent(0) + m.exponent(1) + m.exponent(2) == 0);
        }
        const auto top = chain_basis(gs, 5, 2);
        CHECK(top.size() == 6);
        for (const auto& m : top) {
            CHECK(m.exponent(0) == 1);
            CHECK(m.exponent(1) == 1);
            CHECK(m.exponent(2) == 1);
            CHECK(m.exponent(3) == 0);
        }
        const auto unit = chain_basis(gs, 0, 0);
        REQUIRE(unit.size() == 1);
        CHECK(unit[0] == SuperMonomial::unit(gs));
        CHECK(chain_basis(gs, 4, 3).size() == 39);
        CHECK(chain_basis(gs, 0, 3).empty());
        CHECK(chain_basis(gs, 9, 3).empty());
    }

    TEST_CASE("chain_basis is sorted, homogeneous and complete")
    {
        for (const auto& [name, params] : catalog_samples()) {
            const auto gs = catalog_generators(name, params);
            for (int w = 0; w <= weight_limit(gs); ++w) {
                const auto brute = oracle::brute_dims(gs, w);
                const auto dims = chain_dims(gs, w);
                CHECK(static_cast<int>(dims.size()) == max_degree(gs, w) + 1);
                for (int m = 0; m <= max_degree(gs, w) + 1; ++m) {
                    CAPTURE(name);
                    CAPTURE(w);
                    CAPTURE(m);
                    const auto basis = chain_basis(gs, m, w);
                    const auto it = brute.find(m);
                    CHECK(static_cast<std::int64_t>(basis.size()) == (it == brute.end() ? 0 : it->second));
                    if (m < static_cast<int>(dims.size()))
                        CHECK(dims[m] == basis.size());
                    CHECK(std::adjacent_find(basis.begin(), basis.end(), std::greater_equal<>()) == basis.end());
                    for (const auto& mono : basis) {
                        CHECK(mono.degree() == m);
                        CHECK(mono.weight() == w);
                    }
                }
            }
        }
    }

    TEST_CASE("three-dimensional chain table")
    {
        const auto gs = catalog_generators("g3d1n");
        for (int w = 2; w <= 10; ++w) {
            const std::int64_t a = oracle::binom2(w), b = oracle::binom2(w + 2);
            const std::vector<std::int64_t> expected{a, 3 * a + b, 3 * a + 3 * b, a + 3 * b, b};
            const auto dims = chain_dims(gs, w);
            for (int m = 0; m < static_cast<int>(dims.size()); ++m) {
                const int k = m - (w - 1);
                CHECK(dims[m] == ((k >= 0 && k < 5) ? expected[k] : 0));
            }
        }
    }

    TEST_CASE("boundary examples")
    {
        const auto sl2 = catalog_generators("sl2_efh", {}, BasisChoice::alias);
        CHECK(boundary_monomial(sl2, W(sl2, {1, 1, 1, 0})).is_zero());
        CHECK(boundary_monomial(sl2, W(sl2, {1, 1, 0, 1})) == Chain::of(W(sl2, {0, 0, 1, 1})));
        CHECK(boundary_monomial(sl2, W(sl2, {1, 0, 1, 1})) == Chain::of(W(sl2, {1, 0, 0, 1}), 2));
        CHECK(boundary_monomial(sl2, W(sl2, {0, 1, 1, 1})) == Chain::of(W(sl2, {0, 1, 0, 1}), -2));
        CHECK(boundary_monomial(sl2, W(sl2, {1, 1, 1, 1})).is_zero());

        const auto g3d2 = catalog_generators("g3d2", {{"alpha", R(2)}}, BasisChoice::alias);
        CHECK(boundary_monomial(g3d2, W(g3d2, {1, 1, 1, 0})) == Chain::of(W(g3d2, {1, 1, 0, 0}), -3));
        CHECK(boundary_monomial(g3d2, W(g3d2, {1, 1, 1, 1})) == Chain::of(W(g3d2, {1, 1, 0, 1}), -6));
        CHECK(boundary_monomial(g3d2, W(g3d2, {1, 1, 0, 1})).is_zero());
        CHECK(boundary_monomial(g3d2, W(g3d2, {1, 0, 1, 1})) == Chain::of(W(g3d2, {1, 0, 0, 1}), 4));

        const auto g3d1n = catalog_generators("g3d1n", {}, BasisChoice::alias);
        CHECK(boundary_monomial(g3d1n, W(g3d1n, {1, 1, 1, 1})) == Chain::of(W(g3d1n, {0, 1, 1, 1}), 2));
        CHECK(boundary_monomial(g3d1n, W(g3d1n, {1, 1, 1, 0})) == Chain::of(W(g3d1n, {0, 1, 1, 0})));
        CHECK(boundary_monomial(g3d1n, W(g3d1n, {1, 1, 0, 1})) == Chain::of(W(g3d1n, {0, 1, 0, 1}), 2));
        CHECK(boundary_monomial(g3d1n, W(g3d1n, {1, 0, 1, 1})) == Chain::of(W(g3d1n, {0, 0, 1, 1})));
        CHECK(boundary_monomial(g3d1n, W(g3d1n, {0, 1, 1, 1})).is_zero());

        const Rational a = R(2, 3), b = R(-5);
        const auto g3d3 = catalog_generators("g3d3", {{"alpha", a}, {"beta", b}}, BasisChoice::alias);
        CHECK(boundary_monomial(g3d3, W(g3d3, {1, 1, 1, 0})).is_zero());
        CHECK(boundary_monomial(g3d3, W(g3d3, {1, 1, 0, 1})) == Chain::of(W(g3d3, {0, 0, 1, 1})));
        CHECK(boundary_monomial(g3d3, W(g3d3, {1, 0, 1, 1})) == Chain::of(W(g3d3, {0, 1, 0, 1}), -b));
        CHECK(boundary_monomial(g3d3, W(g3d3, {0, 1, 1, 1})) == Chain::of(W(g3d3, {1, 0, 0, 1}), a));

        CHECK(boundary_monomial(sl2, SuperMonomial::unit(sl2)).is_zero());
        CHECK(boundary_monomial(sl2, W(sl2, {1, 0, 0, 0})).is_zero());
    }

    TEST_CASE("lowest chain space is a cycle space")
    {
        for (const auto& [name, params] : catalog_samples()) {
            const auto gs = catalog_generators(name, params);
            if (gs.dim() != 3)
                continue;
            for (int w = 1; w <= 6; ++w)
                for (const auto& mono : chain_basis(gs, w - 1, w)) {
                    CAPTURE(name);
                    CHECK(boundary_monomial(gs, mono).is_zero());
                }
        }
    }

    TEST_CASE("closed forms for odd powers")
    {
        // sl2: d U^{a,b,c} = z4 ^ (-ab U^{a-1,b-1,c} + 2 C(c,2) U^{a,b,c-2}).
        const auto sl2 = catalog_generators("sl2_efh", {}, BasisChoice::alias);
        // heis3: d U^{a,b,c} = z4 ^ 2 C(c,2) U^{a,b,c-2}.
        const auto heis = catalog_generators("heis3", {}, BasisChoice::alias);
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int c = 0; c <= 4; ++c) {
                    Chain want_sl2, want_heis;
                    if (a > 0 && b > 0)
                        want_sl2.add(U(sl2, a - 1, b - 1, c, true), -a * b);
                    if (c >= 2) {
                        want_sl2.add(U(sl2, a, b, c - 2, true), c * (c - 1));
                        want_heis.add(U(heis, a, b, c - 2, true), c * (c - 1));
                    }
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CHECK(boundary_monomial(sl2, U(sl2, a, b, c)) == want_sl2);
                    CHECK(boundary_monomial(heis, U(heis, a, b, c)) == want_heis);

                    // heis3: [z1, U^A] = -c U^{a,b+1,c-1}, [z2, U^A] = c U^{a+1,b,c-1}, [z3, U^A] = 0.
                    Chain z1_want, z2_want;
                    if (c > 0) {
                        z1_want.add(U(heis, a, b + 1, c - 1), -c);
                        z2_want.add(U(heis, a + 1, b, c - 1), c);
                    }
                    CHECK(induced_bracket(heis, W(heis, {1, 0, 0, 0}), U(heis, a, b, c)) == z1_want);
                    CHECK(induced_bracket(heis, W(heis, {0, 1, 0, 0}), U(heis, a, b, c)) == z2_want);
                    CHECK(induced_bracket(heis, W(heis, {0, 0, 1, 0}), U(heis, a, b, c)).is_zero());
                }
    }

    TEST_CASE("boundary_monomial matches the recursive oracle")
    {
        for (const auto& [name, params] : catalog_samples())
            for (auto basis : {BasisChoice::canonical, BasisChoice::alias}) {
                const auto gs = catalog_generators(name, params, basis);
                const int wmax = std::min(weight_limit(gs), 3);
                for (int w = 0; w <= wmax; ++w)
                    for (int m = 0; m <= max_degree(gs, w); ++m)
                        for (const auto& mono : chain_basis(gs, m, w)) {
                            const auto got = boundary_monomial(gs, mono);
                            std::map<std::vector<std::uint32_t>, Rational> flat;
                            for (const auto& [t, c] : got.terms()) {
                                CHECK(t.weight() == w);
                                CHECK(t.degree() == m - 1);
                                flat[t.exponents()] = c;
                            }
                            CAPTURE(name);
                            CAPTURE(format_monomial(gs, mono));
                            CHECK(flat == oracle::collect(gs, oracle::boundary_words(gs, expand_word(mono))));
                        }
            }
    }

    TEST_CASE("induced bracket")
    {
        const auto sl2 = catalog_generators("sl2_efh", {}, BasisChoice::alias);
        // Two single even letters give the Lie bracket.
        CHECK(induced_bracket(sl2, W(sl2, {1, 0, 0, 0}), W(sl2, {0, 1, 0, 0})) == Chain::of(W(sl2, {0, 0, 1, 0})));
        CHECK(induced_bracket(sl2, W(sl2, {1, 0, 0, 0}), W(sl2, {0, 0, 1, 0})) == Chain::of(W(sl2, {1, 0, 0, 0}), 2));
        const auto heis = catalog_generators("heis3", {}, BasisChoice::alias);
        CHECK(induced_bracket(heis, W(heis, {1, 0, 0, 0}), U(heis, 0, 0, 1)) == Chain::of(U(heis, 0, 1, 0), -1));
        for (int w = 0; w <= 3; ++w)
            for (const auto& mono : chain_basis(sl2, 2, w))
                CHECK(induced_bracket(sl2, mono, SuperMonomial::unit(sl2)).is_zero());
    }

    TEST_CASE("boundary matrices")
    {
        const auto sl2 = catalog_generators("sl2_efh", {}, BasisChoice::alias);
        const auto d = boundary_matrix(sl2, 5, 2);
        CHECK(d.cols() == 6);
        CHECK(d.rows() == 19);
        CHECK(d.rows() == chain_basis(sl2, 4, 2).size());
        CHECK(oracle::naive_rank(oracle::to_dense(d)) == 6);

        const auto heis = catalog_generators("heis3");
        for (int w = 2; w <= 7; ++w) {
            const auto low = boundary_matrix(heis, w - 1, w);
            CHECK(low.is_zero());
            CHECK(low.cols() == static_cast<std::size_t>(oracle::binom2(w)));
        }
        const auto ab = catalog_generators("abelian3");
        for (int w = 0; w <= 4; ++w)
            for (int m = 1; m <= max_degree(ab, w); ++m)
                CHECK(boundary_matrix(ab, m, w).is_zero());

        // Degenerate shapes.
        CHECK(boundary_matrix(heis, 1, 1).rows() == 0);
        CHECK(boundary_matrix(heis, 1, 1).cols() == 3);
        CHECK(boundary_matrix(heis, 9, 1).cols() == 0);
        CHECK(boundary_matrix(heis, 9, 1).rows() == 0);
        CHECK_THROWS_AS(boundary_matrix(heis, 0, 1), std::invalid_argument);

        // Columns are boundary_monomial images in chain_basis order.
        const auto g3d1n = catalog_generators("g3d1n");
        const auto cols = chain_basis(g3d1n, 4, 2), rows = chain_basis(g3d1n, 3, 2);
        const auto m = boundary_matrix(g3d1n, 4, 2);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto image = boundary_monomial(g3d1n, cols[c]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                CHECK(m.get(r, c) == image.coefficient(rows[r]));
        }
    }

    TEST_CASE("boundary squares to zero")
    {
        for (const auto& [name, params] : catalog_samples())
            for (auto basis : {BasisChoice::canonical, BasisChoice::alias}) {
                const auto gs = catalog_generators(name, params, basis);
                for (int w = 0; w <= weight_limit(gs); ++w)
                    for (int m = 2; m <= max_degree(gs, w); ++m) {
                        CAPTURE(name);
                        CAPTURE(w);
                        CAPTURE(m);
                        const auto prod = boundary_matrix(gs, m - 1, w) * boundary_matrix(gs, m, w);
                        CHECK(prod.is_zero());
                    }
            }
    }

    TEST_CASE("rational matrix basics")
    {
        RationalMatrix m(3, 4);
        m.set(0, 1, R(1, 2));
        m.add(0, 1, R(1, 2));
        m.add(2, 3, R(-3));
        m.add(2, 0, R(5));
        m.add(1, 2, R(0));
        CHECK(m.nnz() == 3);
        CHECK(m.get(0, 1) == 1);
        m.add(2, 3, R(3));
        CHECK(m.nnz() == 2);
        m.set(0, 1, 0);
        CHECK(m.nnz() == 1);
        CHECK_THROWS_AS(m.set(3, 0, 1), std::out_of_range);
        CHECK_THROWS_AS(m.get(0, 4), std::out_of_range);

        std::mt19937 rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            RationalMatrix a(4, 5), b(5, 3);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 5; ++j)
                    a.set(i, j, oracle::random_rational(rng));
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 3; ++j)
                    b.set(i, j, oracle::random_rational(rng));
            CHECK(oracle::to_dense(a * b) == oracle::dense_product(oracle::to_dense(a), oracle::to_dense(b)));
            CHECK(a.transpose().transpose() == a);
            CHECK(oracle::to_dense(a.transpose())[2][3] == a.get(3, 2));
        }
        CHECK_THROWS_AS(RationalMatrix(2, 3) * RationalMatrix(2, 3), std::invalid_argument);

        RationalMatrix s(2, 3);
        s.set(1, 2, R(-7, 3));
        s.set(0, 0, R(4));
        std::ostringstream os;
        s.dump(os);
        CHECK(os.str() == "2 3\n0 0 4\n1 2 -7/3\n");
    }

    TEST_CASE("monomial validation and formatting")
    {
        const auto gs = catalog_generators("sl2_efh", {}, BasisChoice::alias);
        CHECK_THROWS_AS(SuperMonomial(gs, {2, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(SuperMonomial(gs, {0, 0, 0}), std::invalid_argument);
        const auto mono = W(gs, {1, 1, 0, 1}, {2, 0, 1});
        CHECK(mono.degree() == 6);
        CHECK(mono.weight() == 2 + 3);
        CHECK(format_monomial(gs, mono) == "W^{1101} ∧ U^{2,0,1}");
        const auto gl2 = catalog_generators("gl2");
        std::vector<std::uint32_t> e(gl2.size());
        e[0] = e[1] = e[4] = 1;
        e[gl2.find("u1")] = 2;
        e[gl2.find("u3")] = 1;
        CHECK(format_monomial(gl2, SuperMonomial(gl2, e)) == "Z{1,2,5} ∧ U{u1^2 u3}");
        // Wedge of monomials respects the sign rules.
        const auto z1 = W(gs, {1, 0, 0, 0}), z2 = W(gs, {0, 1, 0, 0}), u1 = U(gs, 1, 0, 0);
        CHECK(wedge(gs, z2, z1) == Chain::of(W(gs, {1, 1, 0, 0}), -1));
        CHECK(wedge(gs, u1, z1) == Chain::of(W(gs, {1, 0, 0, 0}, {1, 0, 0}), -1));
        CHECK(wedge(gs, u1, u1) == Chain::of(U(gs, 2, 0, 0)));
        CHECK(wedge(gs, z1, z1).is_zero());
    }
}
