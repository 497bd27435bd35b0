#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pde/builtin_graphs.hpp"
#include "pde/cayley.hpp"
#include "pde/digraph.hpp"
#include "pde/group_names.hpp"
#include "pde/pipeline.hpp"

using namespace pde;

namespace {

struct Setup {
    SignedGroup G;
    SymmetryList S;
    std::vector<IsotypicDecomposition> dec;
    std::vector<BifurcationArrow> arrows;
};

Setup make_setup(const Graph& g) {
    Setup s;
    s.G = build_gamma0(automorphisms(g), true);
    s.S = isotropy_symmetries(s.G);
    for (const auto& sub : s.S.groups) {
        CharacterTable ct = character_table(s.G, sub.members);
        s.dec.push_back(isotypic_decomposition(s.G, sub.members, ct));
    }
    s.arrows = bifurcation_arrows(s.G, s.S, s.dec);
    return s;
}

}  // namespace

TEST_CASE("P3 digraph: four solid Z2 arrows") {
    Setup s = make_setup(path_graph(3));
    REQUIRE(s.arrows.size() == 4);
    for (const auto& a : s.arrows) {
        CHECK(a.style == ArrowStyle::solid);
        CHECK(a.bif_group == "Z2");
        CHECK(a.quotient_order == 2);
    }
    // S0 -> S1, S0 -> S2, S1 -> S3, S2 -> S3 at the type level
    std::multiset<std::pair<int, int>> got;
    for (const auto& a : s.arrows)
        got.insert({s.S.type_of[a.mother], s.S.type_of[a.daughter]});
    std::multiset<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    CHECK(got == expect);
    SUBCASE("arrow endpoints and fixed spaces are sound") {
        for (const auto& a : s.arrows) {
            CHECK(s.S.groups[a.mother].members.contains(s.S.groups[a.daughter].members));
            // EBL arrows: one fixed direction per irreducible copy
            const auto& comp = s.dec[a.mother].comps[a.comp];
            CHECK(a.fix_dim == comp.dim / comp.real_degree);
        }
    }
}

TEST_CASE("Z5 Cayley graph: five bifurcation arrows over three digraph arrows") {
    Setup s = make_setup(builtin_graph("cayley-z5"));
    CHECK(s.arrows.size() == 5);
    std::set<std::tuple<int, int, std::string>> digraph_arrows;
    for (const auto& a : s.arrows)
        digraph_arrows.insert(
            {s.S.type_of[a.mother], s.S.type_of[a.daughter], a.bif_group});
    CHECK(digraph_arrows.size() == 3);
    // one solid Z2 arrow, dotted Z10 and Z5 arrows
    int solid = 0, dotted = 0;
    std::set<std::string> labels;
    for (const auto& a : s.arrows) {
        if (a.style == ArrowStyle::solid) ++solid;
        if (a.style == ArrowStyle::dotted) ++dotted;
        labels.insert(a.bif_group);
    }
    CHECK(solid == 1);
    CHECK(dotted == 4);
    CHECK(labels == std::set<std::string>{"Z2", "Z5", "Z10"});
}

TEST_CASE("S3 Cayley graph digraph") {
    Setup s = make_setup(builtin_graph("cayley-s3"));
    CHECK(s.S.types.size() == 7);  // S0..S6
    // dotted arrow labeled Z3 from the S3-isomorphic type into the trivial type
    bool found_dotted_z3 = false;
    for (const auto& a : s.arrows)
        if (a.style == ArrowStyle::dotted && a.bif_group == "Z3" &&
            s.S.groups[a.daughter].order == 1)
            found_dotted_z3 = true;
    CHECK(found_dotted_z3);
    SUBCASE("deduplication: same (i,k) arrows have non-conjugate daughters") {
        for (size_t x = 0; x < s.arrows.size(); ++x)
            for (size_t y = x + 1; y < s.arrows.size(); ++y) {
                const auto& a = s.arrows[x];
                const auto& b = s.arrows[y];
                if (a.mother != b.mother || a.comp != b.comp) continue;
                bool conj = false;
                for (int g : s.S.groups[a.mother].members.to_indices())
                    if (s.G.conjugate_set(s.S.groups[a.daughter].members, g) ==
                        s.S.groups[b.daughter].members)
                        conj = true;
                CHECK(!conj);
            }
    }
}

TEST_CASE("condensation classes") {
    SUBCASE("P3 has three classes") {
        Setup s = make_setup(path_graph(3));
        CondensationResult cond = condensation_classes(s.G, s.S);
        REQUIRE(cond.computed);
        CHECK(cond.classes.size() == 3);
        // classes are {S0}, {S1,S2}, {S3}
        std::multiset<size_t> sizes;
        for (const auto& c : cond.classes) sizes.insert(c.size());
        CHECK(sizes == std::multiset<size_t>{1, 1, 2});
    }
    SUBCASE("S3 Cayley graph: {S0},{S1,S2},{S3},{S4,S5},{S6}") {
        Setup s = make_setup(builtin_graph("cayley-s3"));
        CondensationResult cond = condensation_classes(s.G, s.S);
        REQUIRE(cond.computed);
        CHECK(cond.classes.size() == 5);
        std::multiset<size_t> sizes;
        for (const auto& c : cond.classes) sizes.insert(c.size());
        CHECK(sizes == std::multiset<size_t>{1, 1, 1, 2, 2});
    }
    SUBCASE("Q Cayley graph: 6 classes; S11 and S12 in different classes") {
        Setup s = make_setup(builtin_graph("cayley-q8"));
        CHECK(s.S.types.size() == 14);
        CondensationResult cond = condensation_classes(s.G, s.S);
        REQUIRE(cond.computed);
        CHECK(cond.classes.size() == 6);
        // the two Z2 symmetries <(-1,-1)> and <(-1,1)> are singleton classes
        int singleton_z2 = 0;
        for (const auto& c : cond.classes) {
            if (c.size() != 1) continue;
            int rep = s.S.types[c.front()].front();
            if (s.S.groups[rep].order == 2) ++singleton_z2;
        }
        CHECK(singleton_z2 == 2);
        SUBCASE("conjugate types always co-class") {
            // types partition the symmetry list; classes partition types
            std::set<int> seen;
            for (const auto& c : cond.classes)
                for (int t : c) {
                    CHECK(!seen.count(t));
                    seen.insert(t);
                }
            CHECK(seen.size() == s.S.types.size());
        }
    }
}

TEST_CASE("digraph export") {
    Setup s = make_setup(path_graph(3));
    CondensationResult cond = condensation_classes(s.G, s.S);
    SUBCASE("uncondensed DOT has one edge per type pair") {
        std::string dot = export_digraph(s.G, s.S, s.arrows, cond, false);
        CHECK(dot.find("digraph") != std::string::npos);
        CHECK(dot.find("S0 -> S1") != std::string::npos);
        CHECK(dot.find("style=solid") != std::string::npos);
        CHECK(dot.find("label=\"Z2\"") != std::string::npos);
    }
    SUBCASE("condensed DOT boxes classes and annotates multiplicity") {
        std::string dot = export_digraph(s.G, s.S, s.arrows, cond, true);
        CHECK(dot.find("S1, S2") != std::string::npos);
        // two labeled edges each carrying a numeral 2
        int numerals = 0;
        size_t pos = 0;
        while ((pos = dot.find("label=\"2\"", pos)) != std::string::npos) {
            ++numerals;
            pos += 1;
        }
        CHECK(numerals == 2);
    }
    SUBCASE("empty arrow list gives a header-only file") {
        // a single vertex with a non-odd nonlinearity has a trivial group
        Graph one(1, {});
        SignedGroup G1 = build_gamma0(automorphisms(one), false);
        SymmetryList S1 = isotropy_symmetries(G1);
        std::vector<IsotypicDecomposition> dec1;
        for (const auto& sub : S1.groups)
            dec1.push_back(isotypic_decomposition(G1, sub.members, character_table(G1, sub.members)));
        auto arrows1 = bifurcation_arrows(G1, S1, dec1);
        CHECK(arrows1.empty());
        CondensationResult c1 = condensation_classes(G1, S1);
        std::string dot = export_digraph(G1, S1, arrows1, c1, false);
        CHECK(dot.find("->") == std::string::npos);
    }
    SUBCASE("arrow table round trip") {
        std::string table = format_arrow_table(s.arrows);
        auto parsed = parse_arrow_table(table);
        REQUIRE(parsed.size() == s.arrows.size());
        for (size_t i = 0; i < parsed.size(); ++i) {
            CHECK(parsed[i].mother == s.arrows[i].mother);
            CHECK(parsed[i].comp == s.arrows[i].comp);
            CHECK(parsed[i].daughter == s.arrows[i].daughter);
            CHECK(parsed[i].bif_group == s.arrows[i].bif_group);
            CHECK(parsed[i].quotient_order == s.arrows[i].quotient_order);
        }
    }
}

TEST_CASE("group naming") {
    auto name_of = [](const GroupTable& t) {
        std::vector<SignedSymmetry> elems;
        const int n = t.order();
        for (int a = 0; a < n; ++a) {
            SignedSymmetry s;
            s.perm.resize(n);
            for (int b = 0; b < n; ++b) s.perm[b] = t.mult[a][b];
            s.sign = 1;
            elems.push_back(s);
        }
        SignedGroup G = SignedGroup::from_elements(elems);
        Bitset whole(G.order());
        for (int i = 0; i < G.order(); ++i) whole.set(i);
        return subgroup_name(G, whole);
    };
    CHECK(name_of(cyclic_group(1)) == "Z1");
    CHECK(name_of(cyclic_group(2)) == "Z2");
    CHECK(name_of(cyclic_group(10)) == "Z10");
    CHECK(name_of(symmetric_group_s3()) == "S3");
    CHECK(name_of(quaternion_group()) == "Q");
    CHECK(name_of(dihedral_group(4)) == "D4");
    CHECK(name_of(dihedral_group(6)) == "D6");
}
