#include "fixtures.hpp"

namespace relfix::testing {

namespace {

Carrier abc() { return Carrier::create({"a", "b", "c"}); }
Carrier ab() { return Carrier::create({"a", "b"}); }

FiniteDistanceSpace space_from(Carrier carrier, std::vector<long> table) {
    std::vector<Rational> values;
    values.reserve(table.size());
    for (long v : table) values.emplace_back(v);
    return FiniteDistanceSpace::from_table(std::move(carrier), std::move(values));
}

} // namespace

FiniteDistanceSpace example1_sigma() {
    return space_from(abc(), {0, 2, 1,
                              2, 0, 1,
                              1, 1, 2});
}

FiniteDistanceSpace example1_p() {
    return space_from(abc(), {0, 1, 1,
                              1, 1, 1,
                              1, 1, 1});
}

FiniteDistanceSpace example2_space() {
    return space_from(abc(), {0, 1, 2,
                              1, 0, 2,
                              2, 2, 3});
}

FiniteRelation example2_relation() {
    return FiniteRelation::create(abc(), {{"a", "a"}, {"b", "b"}, {"a", "b"}});
}

SelfMap example2_map() {
    return SelfMap::create(abc(), {{"a", "b"}, {"b", "b"}, {"c", "a"}});
}

Instance example2_instance() {
    return Instance::create(example2_space(), example2_relation(), example2_map(),
                            std::vector<std::string>{"a", "b"});
}

Instance example2_universal_instance() {
    return Instance::create(example2_space(), FiniteRelation::universal(abc()), example2_map());
}

Instance nonunique_limits_instance() {
    return Instance::create(space_from(ab(), {0, 1,
                                              1, 1}),
                            FiniteRelation::create(ab(), {{"a", "a"}}),
                            SelfMap::create(ab(), {{"a", "a"}, {"b", "a"}}));
}

Instance continuity_fail_instance() {
    // limits of the tail {a} are {a, b}; f sends b to c where the image
    // distances disagree: dist(f a, f b) = dist(a, c) = 3 != 4 = dist(c, c).
    auto space = space_from(abc(), {0, 1, 3,
                                    1, 1, 3,
                                    3, 3, 4});
    auto relation = FiniteRelation::create(abc(), {{"a", "a"}});
    auto map = SelfMap::create(abc(), {{"a", "a"}, {"b", "c"}, {"c", "c"}});
    return Instance::create(std::move(space), std::move(relation), std::move(map));
}

Instance self_closed_fail_instance() {
    return Instance::create(space_from(ab(), {0, 1,
                                              1, 1}),
                            FiniteRelation::create(ab(), {{"a", "a"}}),
                            SelfMap::create(ab(), {{"a", "a"}, {"b", "b"}}));
}

Instance two_cycle_instance() {
    return Instance::create(space_from(ab(), {0, 1,
                                              1, 0}),
                            FiniteRelation::universal(ab()),
                            SelfMap::create(ab(), {{"a", "b"}, {"b", "a"}}));
}

Instance identity_diagonal_instance() {
    return Instance::create(space_from(ab(), {0, 1,
                                              1, 0}),
                            FiniteRelation::diagonal(ab()), SelfMap::identity(ab()));
}

std::vector<Instance> fixture_corpus() {
    std::vector<Instance> corpus;
    corpus.push_back(example2_instance());
    corpus.push_back(example2_universal_instance());
    corpus.push_back(nonunique_limits_instance());
    corpus.push_back(continuity_fail_instance());
    corpus.push_back(self_closed_fail_instance());
    corpus.push_back(two_cycle_instance());
    corpus.push_back(identity_diagonal_instance());
    return corpus;
}

} // namespace relfix::testing
