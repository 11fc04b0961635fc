// Atom sets, balance checks, exact cone membership, and reachability ideals.
#include "doctest.h"

#include <utility>
#include <vector>

#include "cardcomp/algebra.hpp"
#include "cardcomp/basics.hpp"
#include "cardcomp/syntax.hpp"

using namespace cardcomp;

namespace {

LabelRegistry ab() { return LabelRegistry::from_names({"a", "b"}); }
LabelRegistry abc() { return LabelRegistry::from_names({"a", "b", "c"}); }

AtomSet at(const char* text, const LabelRegistry& l) {
    return atomize(parse_term(text, l), l);
}

AtomVector diff(const AtomSet& plus, const AtomSet& minus) {
    AtomVector v = indicator(plus);
    v.add(indicator(minus), -1);
    return v;
}

AtomVector vec(std::vector<int> entries) {
    AtomVector v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v.counts[i] = entries[i];
    return v;
}

}  // namespace

TEST_CASE("atom sets: construction and boolean operations") {
    AtomSet s = AtomSet::from_indices(4, {1, 3});
    CHECK(s.universe_size() == 4);
    CHECK(s.count() == 2);
    CHECK(s.test(1));
    CHECK_FALSE(s.test(0));
    CHECK(s.to_indices() == std::vector<std::size_t>{1, 3});

    AtomSet t = AtomSet::from_indices(4, {2, 3});
    CHECK((s & t) == AtomSet::from_indices(4, {3}));
    CHECK((s | t) == AtomSet::from_indices(4, {1, 2, 3}));
    CHECK(s.minus(t) == AtomSet::from_indices(4, {1}));
    CHECK(~AtomSet::none(4) == AtomSet::all(4));
    CHECK(AtomSet::single(4, 2) == AtomSet::from_indices(4, {2}));
    CHECK(AtomSet::from_indices(4, {3}).subset_of(s));
    CHECK_FALSE(s.subset_of(t));
    CHECK(AtomSet::none(4).empty());

    // a 70-atom universe exercises the multi-word representation
    AtomSet wide = AtomSet::all(70);
    CHECK(wide.count() == 70);
    wide.reset(69);
    CHECK(wide.count() == 69);
    CHECK_FALSE(wide.test(69));
    CHECK((~wide) == AtomSet::single(70, 69));

    CHECK_THROWS_AS(AtomSet::none(4) & AtomSet::none(8), DimensionMismatch);
    CHECK_THROWS_AS(AtomSet::none(4).set(4), DimensionMismatch);
}

TEST_CASE("atomize maps terms through the free algebra") {
    LabelRegistry l = ab();
    // atom index bit i records membership in label i (a = bit 0, b = bit 1)
    CHECK(at("a", l) == AtomSet::from_indices(4, {1, 3}));
    CHECK(at("b", l) == AtomSet::from_indices(4, {2, 3}));
    CHECK(at("a & b", l) == AtomSet::from_indices(4, {3}));
    CHECK(at("a + b", l) == AtomSet::from_indices(4, {1, 2, 3}));
    CHECK(at("a'", l) == AtomSet::from_indices(4, {0, 2}));
    CHECK(at("0", l) == AtomSet::none(4));
    CHECK(at("1", l) == AtomSet::all(4));
    CHECK(at("a & b'", l) == AtomSet::from_indices(4, {1}));
    CHECK(at("(a + b)'", l) == AtomSet::from_indices(4, {0}));

    CHECK_THROWS_AS(atomize(mk_label("zzz"), l), UnknownLabel);
}

TEST_CASE("indicator and balance checks") {
    LabelRegistry l = ab();
    AtomVector chi_a = indicator(at("a", l));
    CHECK(chi_a == vec({0, 1, 0, 1}));

    // the modular identity: <a, b> covers atoms exactly like <a+b, a&b>
    CHECK(is_balanced({at("a", l), at("b", l)}, {at("a + b", l), at("a & b", l)}));
    CHECK_FALSE(is_balanced({at("a", l)}, {at("b", l)}));
    CHECK(is_balanced({}, {}));

    CHECK(is_balanced_weighted({{at("a", l), 2}}, {{at("a", l), 1}, {at("a", l), 1}}));
    CHECK_FALSE(is_balanced_weighted({{at("a", l), 2}},
                                     {{at("a + b", l), 1}, {at("a & b", l), 1}}));
    CHECK(is_balanced_weighted({{at("a", l), 1}, {at("b", l), 0}}, {{at("a", l), 1}}));
    CHECK_THROWS_AS(is_balanced_weighted({{at("a", l), -1}}, {{at("a", l), -1}}), Error);
}

TEST_CASE("atom vectors: scaled accumulation") {
    AtomVector v = vec({1, 0, -2});
    v.add(vec({0, 1, 1}), 3);
    CHECK(v == vec({1, 3, 1}));
    CHECK_FALSE(v.is_zero());
    CHECK(AtomVector(5).is_zero());
    CHECK_THROWS_AS(vec({1}).add(vec({1, 2})), DimensionMismatch);
}

TEST_CASE("cone membership: direct members and scaling") {
    // single generator, target equals it
    ConeMembership r = cone_member(vec({1, -1}), {vec({1, -1})});
    CHECK(r.member);
    CHECK(r.scale == 1);
    CHECK(r.multipliers == std::vector<BigInt>{1});

    // target is twice the generator
    r = cone_member(vec({2, -2}), {vec({1, -1})});
    CHECK(r.member);
    CHECK(r.scale == 1);
    CHECK(r.multipliers == std::vector<BigInt>{2});

    // the zero vector is the empty combination
    r = cone_member(vec({0, 0}), {vec({1, -1})});
    CHECK(r.member);
    CHECK(r.scale == 1);
    CHECK(r.multipliers == std::vector<BigInt>{0});
    CHECK(cone_member(AtomVector(2), {}).member);
}

TEST_CASE("cone membership: halving needs scale two") {
    // (1,0) = 1/2 (1,-1) + 1/2 (1,1): no integer combination exists
    ConeMembership r = cone_member(vec({1, 0}), {vec({1, -1}), vec({1, 1})});
    CHECK(r.member);
    CHECK(r.scale == 2);
    CHECK(r.multipliers == std::vector<BigInt>{1, 1});
}

TEST_CASE("cone membership: rejects targets outside the cone") {
    CHECK_FALSE(cone_member(vec({0, 1}), {vec({1, 0})}).member);
    CHECK_FALSE(cone_member(vec({-1, 0}), {vec({1, 0})}).member);
    CHECK_FALSE(cone_member(vec({1, 1}), {}).member);
    CHECK_THROWS_AS(cone_member(vec({1, 1}), {vec({1, 1, 1})}), DimensionMismatch);
}

TEST_CASE("cone membership: minimizes the total multiplier weight") {
    // (2,0) is 1 x (2,0) or 2 x (1,0); the lighter combination wins
    ConeMembership r = cone_member(vec({2, 0}), {vec({2, 0}), vec({1, 0})});
    CHECK(r.member);
    CHECK(r.scale == 1);
    CHECK(r.multipliers == std::vector<BigInt>{1, 0});
}

TEST_CASE("reachability ideal: subset pulls to the fixpoint") {
    LabelRegistry l = abc();
    auto A = at("a", l), B = at("b", l), C = at("c", l);

    // |a| >= |b| pulls b below a
    IdealTop r = ideal_top(A, {{A, B}});
    CHECK(r.top == (A | B));
    CHECK(r.pulls == std::vector<std::size_t>{0});

    // chain: a pulls b (premise 1), which unlocks b pulls c (premise 0)
    r = ideal_top(A, {{B, C}, {A, B}});
    CHECK(r.top == (A | B | C));
    CHECK(r.pulls == std::vector<std::size_t>{1, 0});

    // a premise that adds nothing new is consumed silently
    r = ideal_top(A, {{A, A & B}});
    CHECK(r.top == A);
    CHECK(r.pulls.empty());

    // a premise whose left side stays outside never fires
    r = ideal_top(A, {{B, C}});
    CHECK(r.top == A);
    CHECK(r.pulls.empty());

    // starting from the empty set, only empty-left premises fire
    r = ideal_top(AtomSet::none(8), {{AtomSet::none(8), A& B}, {A, C}});
    CHECK(r.top == (A & B));
    CHECK(r.pulls == std::vector<std::size_t>{0});
}

TEST_CASE("reachability ideal: the probe can admit blocked premises") {
    LabelRegistry l = abc();
    auto A = at("a", l), B = at("b", l), C = at("c", l);

    std::size_t calls = 0;
    auto always = [&](const AtomSet&, const AtomSet&) {
        ++calls;
        return true;
    };
    IdealTop r = ideal_top(A, {{B, C}}, always);
    CHECK(r.top == (A | C));  // the probe admits the right side, not the left
    CHECK(r.pulls == std::vector<std::size_t>{0});
    CHECK(calls == 1);

    auto never = [](const AtomSet&, const AtomSet&) { return false; };
    r = ideal_top(A, {{B, C}}, never);
    CHECK(r.top == A);
    CHECK(r.pulls.empty());
}
