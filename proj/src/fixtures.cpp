#include "gcg/fixtures.hpp"

#include <functional>
#include <string>
#include <vector>

#include "gcg/catalog.hpp"
#include "gcg/criteria.hpp"
#include "gcg/element_spec.hpp"
#include "gcg/errors.hpp"
#include "gcg/gcs.hpp"
#include "gcg/graph.hpp"
#include "gcg/group.hpp"
#include "gcg/spectrum.hpp"

namespace gcg {

const std::vector<Fixture>& fixture_registry() {
    static const std::vector<Fixture> registry = [] {
        std::vector<Fixture> fx;
        auto add = [&fx](Fixture f) { fx.push_back(std::move(f)); };

        {
            Fixture f;
            f.id = "Z14-inversion-bipartite";
            f.group_expr = "Z14";
            f.alpha_spec = "g->g^-1";
            f.subset = "g,g^3,g^5";
            f.connected = true;
            f.bipartite = true;
            f.integral = false;
            f.note = "odd residues under inversion give a connected bipartite sum graph";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z2^2xZ6-odd-product-witness";
            f.group_expr = "Z2^2 x Z6";
            f.alpha_spec = "(1,0,0)->(1,0,0),(0,1,0)->(0,1,0),(0,0,1)->(0,1,1)";
            f.subset = "(1,0,0),(0,0,2),(0,0,4)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.bipartite = false;
            f.note = "an odd power of (0,0,2) lands in omega, so no 2-coloring exists";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z2^3-pair-plus-fixed";
            f.group_expr = "Z2^3";
            f.alpha_spec = "(0,0,1)->(0,1,1)";
            f.subset = "(1,0,0),(0,0,1),(0,1,1)";
            f.connected = true;
            f.bipartite = true;
            f.integral = true;
            f.cubic_count = 4;
            f.note = "one swapped pair plus one fixed element; four cubic subsets exist";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z2^2-swap-no-cubic";
            f.group_expr = "Z2^2";
            f.alpha_spec = "(0,1)->(1,0),(1,0)->(0,1)";
            f.cubic_count = 0;
            f.note = "coordinate swap: big-Omega empty, so odd sizes are impossible";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z4-inversion-no-cubic";
            f.group_expr = "Z4";
            f.alpha_spec = "g->g^-1";
            f.cubic_count = 0;
            f.note = "only two non-square elements, one short of a cubic subset";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z8-inversion";
            f.group_expr = "Z8";
            f.alpha_spec = "g->g^-1";
            f.subset = "1,3,5";
            f.connected = true;
            f.bipartite = true;
            f.integral = true;
            f.branch = "IndexTwoCoset";
            f.cubic_count = 4;
            f.note = "four odd-residue subsets; this one spans the odd coset of the evens";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z8-cube-map-no-cubic";
            f.group_expr = "Z8";
            f.alpha_spec = "g->g^3";
            f.cubic_count = 0;
            f.note = "big-Omega is empty for g->g^3, so no odd-size subset exists";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z8-fifth-map-no-cubic";
            f.group_expr = "Z8";
            f.alpha_spec = "g->g^5";
            f.cubic_count = 0;
            f.note = "big-Omega is empty for g->g^5, so no odd-size subset exists";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Q8-swap-class";
            f.group_expr = "Q8";
            f.alpha_spec = "a->a^3,b->b";
            f.subset = "a,a^3,ab";
            f.connected = true;
            f.bipartite = true;
            f.integral = true;
            f.branch = "IndexTwoCoset";
            f.cubic_count = 8;
            f.note = "transposition-type class representative; eight cubic subsets";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Q8-rotation-class-no-cubic";
            f.group_expr = "Q8";
            f.alpha_spec = "a->a^3,b->ab";
            f.cubic_count = 0;
            f.note = "the other involution class has empty big-Omega";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D8-reflection-subset";
            f.group_expr = "D8";
            f.alpha_spec = "a->a^3,b->b";
            f.subset = "a,a^3,b";
            f.connected = true;
            f.bipartite = true;
            f.integral = true;
            f.branch = "IndexTwoCoset";
            f.note = "rotations plus one reflection from big-Omega";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D6-all-reflections";
            f.group_expr = "D6";
            f.alpha_spec = "a->a^2,b->b";
            f.subset = "b,ab,a^2b";
            f.connected = true;
            f.bipartite = true;
            f.integral = true;
            f.branch = "IndexTwoCoset";
            f.cubic_count = 1;
            f.note = "the unique cubic subset: the fixed reflection plus the swapped pair";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D10-non-integral";
            f.group_expr = "D10";
            f.alpha_spec = "a->a^4,b->b";
            f.subset = "b,ab,a^4b";
            f.connected = true;
            f.bipartite = true;
            f.integral = false;
            f.branch = "IndexTwoCoset";
            f.cubic_count = 2;
            f.note = "connected but with irrational eigenvalues; the excluding witness";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "T8-collapsed-subset";
            f.group_expr = "T8";
            f.alpha_spec = "a->a,b->a^2b";
            f.subset = "b,a^2b,a^4b";
            f.resolved_size = 2;
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "a^4 = e makes a^4b collapse onto b; the pair generates an order-4 subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D12-reflection-coset";
            f.group_expr = "D12";
            f.alpha_spec = "a->a^5,b->a^2b";
            f.subset = "a^3b,a^5b,ab";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "the subset generates the index-2 mixed subgroup only";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "T12-index-four";
            f.group_expr = "T12";
            f.alpha_spec = "a->a,b->a^3b";
            f.subset = "b,a^2b,a^4b";
            f.connected = false;
            f.branch = "FailsIndex";
            f.note = "the difference set spans only the order-3 rotation subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "A4-index-four";
            f.group_expr = "A4";
            f.alpha_spec = "(123)->(142),(12)(34)->(12)(34)";
            f.subset = "(123),(124),(12)(34)";
            f.connected = false;
            f.branch = "FailsIndex";
            f.note = "the difference set spans an order-3 subgroup of index 4";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D20-reflection-coset";
            f.group_expr = "D20";
            f.alpha_spec = "a->a^9,b->a^2b";
            f.subset = "a^3b,a^9b,ab";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "the subset generates the index-2 mixed subgroup only";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "T20-index-four";
            f.group_expr = "T20";
            f.alpha_spec = "a->a,b->a^5b";
            f.subset = "b,a^2b,a^4b";
            f.connected = false;
            f.branch = "FailsIndex";
            f.note = "the difference set spans only the order-5 rotation subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "F54-b-powers";
            f.group_expr = "F54";
            f.alpha_spec = "a->a^4,b->b";
            f.subset = "b,b^2,b^3";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "powers of b stay inside the order-4 cyclic subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D12xZ2-lifted-subset";
            f.group_expr = "D12 x Z2";
            f.alpha_spec = "(a,0)->(a^5,0),(b,0)->(a^2b,0),(e,1)->(e,1)";
            f.subset = "(a^3b,1),(a^5b,1),(ab,1)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "lifting a non-generating subset into the product keeps it non-generating";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "T12xZ2-lifted-subset";
            f.group_expr = "T12 x Z2";
            f.alpha_spec = "(a,0)->(a,0),(b,0)->(a^3b,0),(e,1)->(e,1)";
            f.subset = "(b,1),(a^2b,1),(a^4b,1)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "the rotation/reflection parity pins the second coordinate";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D6xZ4-reflection-column";
            f.group_expr = "D6 x Z4";
            f.alpha_spec = "(a,0)->(a^2,0),(b,0)->(a^2b,0),(e,1)->(e,3)";
            f.subset = "(b,1),(ab,1),(a^2b,1)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "reflection-parity tracks the second coordinate mod 2, so the subset "
                     "generates only the order-12 subgroup (rotations on even, reflections "
                     "on odd)";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "A4xZ2-lifted-subset";
            f.group_expr = "A4 x Z2";
            f.alpha_spec = "((123),0)->((142),0),((12)(34),0)->((12)(34),0),(e,1)->(e,1)";
            f.subset = "((123),1),((124),1),((12)(34),1)";
            f.connected = false;
            f.branch = "FailsIndex";
            f.note = "generation survives the lift (no index-2 subgroup below), the index does not";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Q8xZ3-a-column";
            f.group_expr = "Q8 x Z3";
            f.alpha_spec = "(a,0)->(a^3,0),(b,0)->(b,0),(e,1)->(e,1)";
            f.subset = "(a,0),(a,1),(a,2)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "the column over a generates only an order-12 subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D24-even-rotations";
            f.group_expr = "D24";
            f.alpha_spec = "a->a^5,b->b";
            f.subset = "a^2,a^6,a^10";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "even rotations generate an order-6 cyclic subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "T24-reflections";
            f.group_expr = "T24";
            f.alpha_spec = "a->a,b->a^6b";
            f.subset = "b,a^2b,a^4b";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "products stay in the even-rotation half";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "S4-three-transpositions";
            f.group_expr = "S4";
            f.alpha_spec = "(12)->(12),(1234)->(1342)";
            f.subset = "(12),(13),(23)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "transpositions on three points generate a point stabilizer";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D8xZ3-a-column";
            f.group_expr = "D8 x Z3";
            f.alpha_spec = "(a,0)->(a^3,0),(b,0)->(a^2b,0),(e,1)->(e,1)";
            f.subset = "(a,0),(a,1),(a,2)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "the column over a generates only an order-12 subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "U24-a-powers";
            f.group_expr = "U24";
            f.alpha_spec = "a->a,b->b^2";
            f.subset = "a,a^7,a^4";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "powers of a stay inside the order-8 cyclic subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "V24-a-powers";
            f.group_expr = "V24";
            f.alpha_spec = "a->a,b->b^3";
            f.subset = "a,a^5,a^3";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "powers of a stay inside the order-6 cyclic subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "SL23-first-class-no-cubic";
            f.group_expr = "SL23";
            f.alpha_spec = "A->[[0,2],[1,0]],B->[[0,1],[2,2]]";
            f.cubic_count = 0;
            f.note = "big-Omega is empty for this involution class";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "SL23-second-class-no-cubic";
            f.group_expr = "SL23";
            f.alpha_spec = "A->[[2,1],[1,1]],B->[[1,2],[0,1]]";
            f.cubic_count = 0;
            f.note = "big-Omega is empty for this involution class";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D30-spread-reflections";
            f.group_expr = "D30";
            f.alpha_spec = "a->a^4,b->b";
            f.subset = "b,a^5b,a^10b";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "three evenly spaced reflections generate an order-6 dihedral subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "U30-a-powers";
            f.group_expr = "U30";
            f.alpha_spec = "a->a,b->b^2";
            f.subset = "a,a^9,a^5";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "powers of a stay inside the order-10 cyclic subgroup";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D10xZ3-rejected-subset";
            f.group_expr = "D10 x Z3";
            f.alpha_spec = "(a,0)->(a^4,0),(b,0)->(a^2b,0),(e,1)->(e,1)";
            f.subset = "(a,0),(a,1),(a,2)";
            f.expect_valid = false;
            f.invalid_error = "MeetsOmega";
            f.note = "(a,0) lies in omega for this map, so construction must reject";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "D10xZ3-factor-reflections";
            f.group_expr = "D10 x Z3";
            f.alpha_spec = "(a,0)->(a,0),(b,0)->(b,0),(e,1)->(e,2)";
            f.subset = "(b,0),(ab,0),(a^2b,0)";
            f.connected = false;
            f.branch = "FailsGeneration";
            f.note = "replacement witness: reflections in the first factor never move the third coordinate";
            add(std::move(f));
        }
        {
            Fixture f;
            f.id = "Z6-inversion";
            f.group_expr = "Z6";
            f.alpha_spec = "g->g^5";
            f.subset = "1,3,5";
            f.connected = true;
            f.bipartite = true;
            f.integral = true;
            f.branch = "IndexTwoCoset";
            f.cubic_count = 1;
            f.note = "the unique cubic subset: all odd residues, giving K_{3,3}";
            add(std::move(f));
        }
        return fx;
    }();
    return registry;
}

namespace {

// Runs fn, returning the class name of the library error it throws ("" when
// it does not throw).  Order matters: most-derived first.
std::string thrown_error_name(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const MeetsOmega&) {
        return "MeetsOmega";
    } catch (const NotAlphaSymmetric&) {
        return "NotAlphaSymmetric";
    } catch (const IdentityAlpha&) {
        return "IdentityAlpha";
    } catch (const NotInvolutory&) {
        return "NotInvolutory";
    } catch (const EmptySubset&) {
        return "EmptySubset";
    } catch (const Error&) {
        return "Error";
    }
    return "";
}

std::string bool_name(bool b) { return b ? "true" : "false"; }

FixtureResult evaluate_fixture(const Fixture& f) {
    FixtureResult result{f.id, false, ""};
    auto fail = [&](const std::string& why) {
        result.detail = why;
        return result;
    };

    const FiniteGroup g = build_group(f.group_expr);
    const GroupMap alpha = resolve_group_map(g, f.alpha_spec);

    if (f.cubic_count) {
        const int got = static_cast<int>(enumerate_gcs(g, alpha, 3).size());
        if (got != *f.cubic_count)
            return fail("expected " + std::to_string(*f.cubic_count) + " cubic subsets, found " +
                        std::to_string(got));
    }
    if (f.subset.empty()) {
        result.passed = true;
        result.detail = "ok";
        return result;
    }

    const ElementSet members = resolve_element_set(g, f.subset);
    if (f.resolved_size && members.size() != *f.resolved_size)
        return fail("expected the subset to resolve to " + std::to_string(*f.resolved_size) +
                    " elements, got " + std::to_string(members.size()));

    const std::string got_error =
        thrown_error_name([&] { GCSubset probe(g, alpha, members); });
    if (!f.expect_valid) {
        if (got_error == f.invalid_error) {
            result.passed = true;
            result.detail = "ok";
            return result;
        }
        return fail("expected rejection " + f.invalid_error + ", got " +
                    (got_error.empty() ? std::string("no error") : got_error));
    }
    if (!got_error.empty()) return fail("unexpected rejection: " + got_error);

    const GCSubset s(g, alpha, members);
    const SimpleGraph graph = build_gc_graph(s);
    const ConnectivityVerdict three_part = connected_algebraic(s);
    const ConnectivityVerdict coset = connected_coset_criterion(s);
    const bool bfs_connected = connected_components(graph).size() == 1;
    if (three_part.connected != bfs_connected || coset.connected != bfs_connected)
        return fail("connectivity criteria disagree with BFS");

    if (f.connected && bfs_connected != *f.connected)
        return fail("expected connected=" + bool_name(*f.connected) + ", got " +
                    bool_name(bfs_connected));
    if (f.branch && to_string(three_part.branch) != *f.branch)
        return fail("expected branch " + *f.branch + ", got " + to_string(three_part.branch));

    if (f.bipartite) {
        const bool two_colorable = is_bipartite(graph).bipartite;
        if (g.is_abelian() && bipartite_algebraic(s).bipartite != two_colorable)
            return fail("odd-product criterion disagrees with 2-coloring");
        if (two_colorable != *f.bipartite)
            return fail("expected bipartite=" + bool_name(*f.bipartite) + ", got " +
                        bool_name(two_colorable));
    }
    if (f.integral) {
        const bool integral = integral_spectrum(graph).integral;
        if (integral != *f.integral)
            return fail("expected integral=" + bool_name(*f.integral) + ", got " +
                        bool_name(integral));
    }

    result.passed = true;
    result.detail = "ok";
    return result;
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
    std::vector<FixtureResult> results;
    for (const Fixture& f : fixture_registry()) {
        try {
            results.push_back(evaluate_fixture(f));
        } catch (const std::exception& e) {
            results.push_back({f.id, false, std::string("error: ") + e.what()});
        }
    }
    return results;
}

}  // namespace gcg
