#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include <hilbaut/cyclotomic.hpp>
#include <hilbaut/rational.hpp>
#include <hilbaut/series.hpp>
#include <hilbaut/trace.hpp>

using namespace hilbaut;

TEST_CASE("rational arithmetic basics") {
    rational a(3, 4), b("5/6");
    CHECK((a + b).str() == "19/12");
    CHECK((a * b).str() == "5/8");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().str() == "4/3");
    CHECK(rational(-6, 4).str() == "-3/2");
    CHECK(rational(2).pow(10) == rational(1024));
    CHECK(rational(2, 3).pow(-2) == rational(9, 4));
    CHECK(rational(7).is_integer());
    CHECK(rational(7).as_integer().value() == 7);
    CHECK(!rational(7, 2).as_integer());
    CHECK(rational(1, 3).approx() == Catch::Approx(1.0 / 3.0));
    CHECK_THROWS(rational(1, 0));
}

TEST_CASE("primitive second root of unity is -1") {
    cyclotomic z = cyclotomic::root_of_unity(2, 1);
    CHECK(z.is_rational());
    CHECK(z.as_rational() == rational(-1));
    CHECK(z.conductor() == 1);
    CHECK(cyc_as_integer(z).value() == -1);
}

TEST_CASE("fifth roots of unity sum to zero") {
    cyclotomic s(0);
    for (long k = 0; k < 5; ++k)
        s = s + cyclotomic::root_of_unity(5, k);
    CHECK(s.is_zero());
}

TEST_CASE("inverse roots multiply to one") {
    cyclotomic z = cyclotomic::root_of_unity(5, 1);
    cyclotomic w = cyclotomic::root_of_unity(5, 4);
    CHECK((z * w) == cyclotomic(1));
    CHECK(z.inverse() == w);
    CHECK(z.pow(5) == cyclotomic(1));
    CHECK(z.pow(-1) == w);
}

TEST_CASE("mixed conductors lift to the lcm") {
    cyclotomic z2 = cyclotomic::root_of_unity(2, 1);
    cyclotomic z3 = cyclotomic::root_of_unity(3, 1);
    cyclotomic prod = z2 * z3;
    auto root = prod.as_root_of_unity();
    REQUIRE(root);
    CHECK(root->first == 5);
    CHECK(root->second == 6);
    CHECK(prod.root_order() == 6);
    // z6^3 collapses back to the rational -1
    cyclotomic z6 = cyclotomic::root_of_unity(6, 1);
    CHECK(z6.pow(3).is_rational());
    CHECK(z6.pow(3).as_rational() == rational(-1));
    // minus a fifth root has order 10
    cyclotomic m = cyclotomic(-1) * cyclotomic::root_of_unity(5, 1);
    auto mr = m.as_root_of_unity();
    REQUIRE(mr);
    CHECK(mr->second == 10);
    CHECK(mr->first == 7);
}

TEST_CASE("float approximations track the unit circle") {
    for (long m : {1L, 2L, 3L, 5L, 7L, 12L, 30L}) {
        for (long k = 0; k < m; ++k) {
            const auto z = cyclotomic::root_of_unity(m, k).approx();
            const double arg = 2.0 * 3.14159265358979323846 * double(k) / double(m);
            CHECK(std::abs(z - std::complex<double>(std::cos(arg), std::sin(arg))) < 1e-9);
        }
    }
}

TEST_CASE("cyclotomic ring axioms on random elements") {
    std::mt19937 rng(20240811);
    auto random_elt = [&]() {
        cyclotomic acc(0);
        const long m = 1 + long(rng() % 12);
        for (int j = 0; j < 3; ++j)
            acc = acc + cyclotomic(rational(long(rng() % 7) - 3)) *
                            cyclotomic::root_of_unity(m, long(rng() % m));
        return acc;
    };
    for (int trial = 0; trial < 25; ++trial) {
        cyclotomic a = random_elt(), b = random_elt(), c = random_elt();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK(a * a.inverse() == cyclotomic(1));
        const auto za = a.approx(), zb = b.approx();
        CHECK(std::abs((a * b).approx() - za * zb) < 1e-6);
    }
}

TEST_CASE("series inverse and geometric expansions") {
    truncation tr{{var::q, 6}};
    auto one = truncated_series<rational>::one(tr);
    auto q = truncated_series<rational>::monomial(tr, exp_of(var::q, 1), rational(1));
    auto g = truncated_series<rational>::geometric(tr, exp_of(var::q, 1), rational(1));
    CHECK(g * (one - q) == one);
    CHECK((one - q).inverse() == g);
    for (int k = 0; k <= 6; ++k)
        CHECK(g.coefficient(exp_of(var::q, k)) == rational(1));
    // (1 - 2q)^{-3} has coefficients binom(k+2,2) 2^k
    auto f = (one - q.scaled(rational(2))).pow(-3);
    for (int k = 0; k <= 6; ++k)
        CHECK(f.coefficient(exp_of(var::q, k)) ==
              rational((k + 2) * (k + 1) / 2) * rational(2).pow(k));
}

TEST_CASE("series truncation drops high order terms silently") {
    truncation tr{{var::q, 3}, {var::t, 2}};
    auto s = truncated_series<rational>::geometric(tr, exp_of(var::q, 1, var::t, 1), rational(1));
    CHECK(s.coefficient(exp_of(var::q, 2, var::t, 2)) == rational(1));
    CHECK(s.coefficient(exp_of(var::q, 3, var::t, 3)) == rational(0)); // above t bound
    auto p = s * s;
    CHECK(p.coefficient(exp_of(var::q, 2, var::t, 2)) == rational(3));
}

TEST_CASE("substitution evaluates a variable") {
    truncation tr{{var::q, 4}, {var::t, 8}};
    auto s = truncated_series<rational>::geometric(tr, exp_of(var::q, 1, var::t, 2), rational(1));
    auto at_minus_one = s.substitute(var::t, rational(-1));
    for (int k = 0; k <= 4; ++k)
        CHECK(at_minus_one.coefficient(exp_of(var::q, k)) == rational(1));
}

namespace {

struct gen {
    cyclotomic lam;
    int deg;
};

graded_eigenvalues<cyclotomic> pack(const std::vector<gen>& gens) {
    graded_eigenvalues<cyclotomic> e;
    e.by_degree.assign(5, {});
    for (const auto& g : gens)
        e.by_degree[g.deg].push_back(g.lam);
    return e;
}

// Coefficient of q^k t^D in the trace series of the k-th tensor power:
// ordered k-tuples of basis eigenvectors.
cyclotomic tensor_oracle(const std::vector<gen>& gens, int k, int D) {
    if (k == 0)
        return cyclotomic(D == 0 ? 1 : 0);
    cyclotomic total(0);
    for (const auto& g : gens)
        if (g.deg <= D)
            total = total + g.lam * tensor_oracle(gens, k - 1, D - g.deg);
    return total;
}

cyclotomic sym_oracle(const std::vector<gen>& gens, std::size_t from, int k, int D) {
    if (k == 0)
        return cyclotomic(D == 0 ? 1 : 0);
    cyclotomic total(0);
    for (std::size_t i = from; i < gens.size(); ++i)
        if (gens[i].deg <= D)
            total = total + gens[i].lam * sym_oracle(gens, i, k - 1, D - gens[i].deg);
    return total;
}

cyclotomic ext_oracle(const std::vector<gen>& gens, std::size_t from, int k, int D) {
    if (k == 0)
        return cyclotomic(D == 0 ? 1 : 0);
    cyclotomic total(0);
    for (std::size_t i = from; i < gens.size(); ++i)
        if (gens[i].deg <= D)
            total = total + gens[i].lam * ext_oracle(gens, i + 1, k - 1, D - gens[i].deg);
    return total;
}

} // namespace

TEST_CASE("trace series match power-basis enumeration") {
    std::vector<std::vector<gen>> samples = {
        {{cyclotomic(1), 0}, {cyclotomic::root_of_unity(3, 1), 1}, {cyclotomic::root_of_unity(3, 2), 2}},
        {{cyclotomic::root_of_unity(4, 1), 1}, {cyclotomic::root_of_unity(4, 3), 1}},
        {{cyclotomic(1), 0}, {cyclotomic(-1), 2}, {cyclotomic(2), 2}, {cyclotomic::root_of_unity(5, 2), 3}},
    };
    for (const auto& gens : samples) {
        auto e = pack(gens);
        auto ten = tensor_trace_series(e, 4);
        auto sym = sym_trace_series(e, 4);
        auto ext = ext_trace_series(e, 4);
        for (int k = 0; k <= 4; ++k) {
            for (int D = 0; D <= 4 * 4; ++D) {
                CAPTURE(k, D);
                CHECK(ten.coefficient(exp_of(var::q, k, var::t, D)) == tensor_oracle(gens, k, D));
                CHECK(sym.coefficient(exp_of(var::q, k, var::t, D)) == sym_oracle(gens, 0, k, D));
                CHECK(ext.coefficient(exp_of(var::q, k, var::t, D)) == ext_oracle(gens, 0, k, D));
            }
        }
    }
}

TEST_CASE("trace series are multiplicative over direct sums") {
    std::vector<gen> va = {{cyclotomic::root_of_unity(3, 1), 1}, {cyclotomic(2), 2}};
    std::vector<gen> vb = {{cyclotomic(1), 0}, {cyclotomic(-1), 2}};
    std::vector<gen> vab = va;
    vab.insert(vab.end(), vb.begin(), vb.end());
    auto ea = pack(va), eb = pack(vb), eab = pack(vab);
    CHECK(sym_trace_series(eab, 3) == sym_trace_series(ea, 3) * sym_trace_series(eb, 3));
    CHECK(ext_trace_series(eab, 3) == ext_trace_series(ea, 3) * ext_trace_series(eb, 3));
}

TEST_CASE("exterior series terminates at the dimension") {
    std::vector<gen> v = {{cyclotomic(1), 1}, {cyclotomic(-1), 1}, {cyclotomic(2), 2}};
    auto ext = ext_trace_series(pack(v), 6);
    auto top = ext.coefficient_of(var::q, 3);
    CHECK(top.coefficient(exp_of(var::t, 4)) == cyclotomic(-2)); // 1 * -1 * 2 at t^{1+1+2}
    for (int k = 4; k <= 6; ++k)
        for (int D = 0; D <= 8; ++D)
            CHECK(ext.coefficient(exp_of(var::q, k, var::t, D)).is_zero());
}
