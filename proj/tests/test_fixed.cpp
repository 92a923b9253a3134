#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <hilbaut/fixed_locus.hpp>
#include <hilbaut/io.hpp>
#include <hilbaut/partition.hpp>
#include <hilbaut/tangent.hpp>

using namespace hilbaut;

namespace {

// Independent oracle: hook arm/leg content of each diagram cell. The tangent
// space of the punctual locus at a monomial ideal carries the classes
// (a+1, -l) and (-a, l+1) per cell.
std::multiset<std::pair<int, int>> arm_leg_classes(const partition& p) {
    std::multiset<std::pair<int, int>> out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (int i = 0; i < p[j]; ++i) {
            const int arm = p[j] - 1 - i;
            int leg = 0;
            for (std::size_t jp = j + 1; jp < p.size(); ++jp)
                if (p[jp] > i)
                    ++leg;
            out.insert({arm + 1, -leg});
            out.insert({-arm, leg + 1});
        }
    }
    return out;
}

std::multiset<std::pair<int, int>> class_multiset(const tangent_weight_report& rep) {
    return {rep.weight_classes.begin(), rep.weight_classes.end()};
}

} // namespace

TEST_CASE("partition enumeration and transposition") {
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.size() == counts[n]);
        CHECK(ps.front() == partition{n});
        for (const auto& p : ps) {
            CHECK(partition_sum(p) == n);
            CHECK(transpose(transpose(p)) == p);
        }
    }
}

TEST_CASE("diagram generators follow the staircase") {
    auto d = diagram({3});
    CHECK(d.cells.size() == 3);
    REQUIRE(d.generators.size() == 2);
    CHECK(d.generators[0] == std::pair<int, int>{3, 0});
    CHECK(d.generators[1] == std::pair<int, int>{0, 1});
    // number of generators = number of distinct parts + 1
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            std::set<int> distinct(p.begin(), p.end());
            CHECK(diagram(p).generators.size() == distinct.size() + 1);
        }
}

TEST_CASE("single box tangent weights") {
    auto rep = monomial_tangent_weights({1}, cyclotomic::root_of_unity(3, 1),
                                        cyclotomic::root_of_unity(3, 2));
    REQUIRE(rep.weights.size() == 2);
    CHECK(class_multiset(rep) == std::multiset<std::pair<int, int>>{{0, 1}, {1, 0}});
    CHECK(!rep.degenerate);
}

TEST_CASE("row of three at a symplectic fifth root point") {
    cyclotomic e1 = cyclotomic::root_of_unity(5, 1), e2 = cyclotomic::root_of_unity(5, 4);
    auto rep = monomial_tangent_weights({3}, e1, e2);
    REQUIRE(rep.weights.size() == 6);
    CHECK(class_multiset(rep) == std::multiset<std::pair<int, int>>{
                                     {-2, 1}, {-1, 1}, {0, 1}, {1, 0}, {2, 0}, {3, 0}});
    // weight values: eps1^3, eps1^2, eps1, eps2, eps2/eps1, eps2/eps1^2
    std::multiset<std::string> vals;
    for (const auto& w : rep.weights)
        vals.insert(w.str());
    std::multiset<std::string> expect = {e1.pow(3).str(),           e1.pow(2).str(),
                                         e1.str(),                  e2.str(),
                                         (e2 * e1.inverse()).str(), (e2 * e1.pow(2).inverse()).str()};
    CHECK(vals == expect);
    CHECK(!rep.degenerate);
    CHECK(rep.fixed_subspace_dim == 0);
}

TEST_CASE("vertical pair at the involution point is degenerate") {
    auto rep = monomial_tangent_weights({1, 1}, cyclotomic(-1), cyclotomic(-1));
    REQUIRE(rep.weights.size() == 4);
    CHECK(rep.degenerate);
    CHECK(rep.fixed_subspace_dim == 2); // classes (1,-1) and (0,2)
    CHECK(class_multiset(rep) ==
          std::multiset<std::pair<int, int>>{{0, 1}, {0, 2}, {1, -1}, {1, 0}});
}

TEST_CASE("hook of three keeps doubled first order classes") {
    auto rep = monomial_tangent_weights({2, 1}, cyclotomic::root_of_unity(5, 1),
                                        cyclotomic::root_of_unity(5, 4));
    CHECK(class_multiset(rep) == std::multiset<std::pair<int, int>>{
                                     {-1, 2}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {2, -1}});
    CHECK(!rep.degenerate);
}

TEST_CASE("syzygy computation agrees with the hook content formula") {
    const std::vector<std::pair<long, long>> eps_pairs = {{1, 4}, {2, 3}, {1, 2}, {3, 1}};
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : partitions_of(n))
            for (auto [a, b] : eps_pairs) {
                auto rep = monomial_tangent_weights(p, cyclotomic::root_of_unity(5, a),
                                                    cyclotomic::root_of_unity(5, b));
                CAPTURE(partition_str(p), a, b);
                CHECK(class_multiset(rep) == arm_leg_classes(p));
            }
}

TEST_CASE("weights always number twice the length") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : partitions_of(n)) {
            auto rep = monomial_tangent_weights(p, cyclotomic::root_of_unity(7, 2),
                                                cyclotomic::root_of_unity(7, 3));
            CAPTURE(partition_str(p));
            CHECK(rep.weights.size() == 2 * static_cast<std::size_t>(n));
        }
}

TEST_CASE("transposition swaps the torus factors") {
    cyclotomic e1 = cyclotomic::root_of_unity(7, 2), e2 = cyclotomic::root_of_unity(7, 5);
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : partitions_of(n)) {
            auto a = monomial_tangent_weights(p, e1, e2);
            auto b = monomial_tangent_weights(transpose(p), e2, e1);
            std::multiset<std::pair<int, int>> swapped;
            for (const auto& [u, v] : b.weight_classes)
                swapped.insert({v, u});
            CAPTURE(partition_str(p));
            CHECK(class_multiset(a) == swapped);
            CHECK(a.degenerate == b.degenerate);
            CHECK(a.fixed_subspace_dim == b.fixed_subspace_dim);
        }
}

TEST_CASE("curvilinear directions require matching differentials") {
    cyclotomic z5 = cyclotomic::root_of_unity(5, 1);
    auto dirs = curvilinear_fixed_directions(3, z5, z5 * z5);
    REQUIRE(dirs.size() == 1);
    CHECK(dirs[0].axis == curvilinear_axis::xy);
    CHECK(dirs[0].exponent == 2);
    // the reversed pair admits nothing below exponent 3
    CHECK(curvilinear_fixed_directions(3, z5 * z5, z5).empty());
    // the symplectic pair needs i = 4 > n-1 on either axis
    CHECK(curvilinear_fixed_directions(3, z5, z5.pow(4)).empty());
    cyclotomic z3 = cyclotomic::root_of_unity(3, 1);
    auto d3 = curvilinear_fixed_directions(3, z3, z3 * z3);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].axis == curvilinear_axis::xy);
    CHECK(d3[0].exponent == 2);
    // equal differentials admit every exponent on both axes
    auto both = curvilinear_fixed_directions(3, cyclotomic(-1), cyclotomic(-1));
    CHECK(both.size() == 2); // xy i=1 and yx i=1 (i=2 fails: (-1)^2 = 1)
}

TEST_CASE("involution square of the torus") {
    scenario sc = preset("torus-involution");
    auto rep = enumerate_fixed_components(sc.fixed, 2, sc.spec);
    CHECK(rep.components.size() == 169);
    std::map<component_kind, int> by_kind;
    for (const auto& c : rep.components)
        ++by_kind[c.kind];
    CHECK(by_kind[component_kind::reduced_assembly] == 120);
    CHECK(by_kind[component_kind::monomial_thick] == 32);
    CHECK(by_kind[component_kind::curvilinear_family] == 16);
    CHECK(by_kind[component_kind::periodic_orbit_family] == 1);
    CHECK(rep.isolated_nondegenerate_count == 120);
    CHECK(rep.crosscheck.lefschetz == 144);
    CHECK(rep.crosscheck.remainder == 24);
    CHECK(!rep.crosscheck.reconciled); // positive-dimensional families remain
    // every reduced pair is isolated and nondegenerate
    for (const auto& c : rep.components)
        if (c.kind == component_kind::reduced_assembly) {
            CHECK(c.dimension == 0);
            CHECK(!c.degenerate);
            CHECK(c.pieces.size() == 2);
        }
}

TEST_CASE("symplectic K3 squares match the pair count formula") {
    struct row {
        const char* name;
        long m;
        long long expect;
    };
    for (const auto& r :
         {row{"k3-symplectic-3", 6, 27}, row{"k3-symplectic-5", 4, 14}, row{"k3-symplectic-7", 3, 9}}) {
        scenario sc = preset(r.name);
        auto rep = enumerate_fixed_components(sc.fixed, 2, sc.spec);
        CAPTURE(r.name);
        CHECK(rep.components.size() == static_cast<std::size_t>(r.expect));
        CHECK(rep.isolated_nondegenerate_count == r.expect);
        CHECK(rep.isolated_nondegenerate_count == r.m * (r.m - 1) / 2 + 2 * r.m);
        CHECK(rep.crosscheck.lefschetz == r.expect);
        CHECK(rep.crosscheck.reconciled);
    }
}

TEST_CASE("order five cube reconciles both routes at forty") {
    scenario sc = preset("k3-symplectic-5");
    auto rep = enumerate_fixed_components(sc.fixed, 3, sc.spec);
    CHECK(rep.components.size() == 40);
    CHECK(rep.isolated_nondegenerate_count == 40);
    CHECK(rep.crosscheck.lefschetz == 40);
    CHECK(rep.crosscheck.reconciled);
    // every component is a point with a full six-dimensional weight set
    for (const auto& c : rep.components) {
        CHECK(c.dimension == 0);
        CHECK(!c.degenerate);
        CHECK(c.weights_complete);
        CHECK(c.weights.size() == 6);
    }
    // the published count and the discrepancy flag travel with the report
    json doc = fixed_report_to_json(rep, sc);
    bool mentions_published = false;
    for (const auto& note : doc["crosscheck"]["notes"])
        if (note.get<std::string>().find("36") != std::string::npos)
            mentions_published = true;
    CHECK(mentions_published);
}

TEST_CASE("triple points of the torus involution") {
    scenario sc = preset("torus-involution");
    auto rep = enumerate_fixed_components(sc.fixed, 3, sc.spec);
    CHECK(rep.components.size() == 1360);
    CHECK(rep.isolated_nondegenerate_count == 576);
    CHECK(rep.crosscheck.lefschetz == 960);
    CHECK(rep.crosscheck.remainder == 384);
    // the sixteen nondegenerate thick triples all use the hook partition
    int hooks = 0;
    for (const auto& c : rep.components)
        if (c.kind == component_kind::monomial_thick && c.dimension == 0 && !c.degenerate) {
            REQUIRE(c.pieces.size() == 1);
            CHECK(c.pieces[0].parts == partition{2, 1});
            ++hooks;
        }
    CHECK(hooks == 16);
}

TEST_CASE("components arrive sorted and deterministic") {
    scenario sc = preset("k3-symplectic-3");
    auto a = enumerate_fixed_components(sc.fixed, 2, sc.spec);
    auto b = enumerate_fixed_components(sc.fixed, 2, sc.spec);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i)
        CHECK(a.components[i].description == b.components[i].description);
    CHECK(std::is_sorted(a.components.begin(), a.components.end(),
                         [](const fixed_component& x, const fixed_component& y) {
                             return x.description < y.description;
                         }));
}

TEST_CASE("enumeration guards its inputs") {
    scenario sc = preset("torus-involution");
    CHECK_THROWS_AS(enumerate_fixed_components(sc.fixed, 9, sc.spec), bound_error);
    CHECK_THROWS_AS(enumerate_fixed_components(sc.fixed, 0, sc.spec), std::invalid_argument);
    scenario bad = sc;
    bad.spec.order.reset();
    CHECK_THROWS_AS(enumerate_fixed_components(bad.fixed, 2, bad.spec), validation_error);
    scenario broken = sc;
    broken.spec.surface.betti[0] = 7;
    CHECK_THROWS_AS(enumerate_fixed_components(broken.fixed, 2, broken.spec), validation_error);
}

TEST_CASE("tangent weight validation rejects non roots") {
    CHECK_THROWS_AS(monomial_tangent_weights({2}, cyclotomic(2), cyclotomic(-1)),
                    validation_error);
}
