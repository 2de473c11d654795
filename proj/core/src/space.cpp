#include "relfix/space.hpp"

#include <utility>

#include "relfix/error.hpp"

namespace relfix {

std::string_view to_string(SpaceClass cls) {
    switch (cls) {
        case SpaceClass::Metric: return "Metric";
        case SpaceClass::PartialMetric: return "PartialMetric";
        case SpaceClass::MetricLike: return "MetricLike";
        case SpaceClass::NotMetricLike: return "NotMetricLike";
    }
    return "?";
}

std::string_view to_string(AxiomId axiom) {
    switch (axiom) {
        case AxiomId::SigmaZeroDistance: return "sigma1";
        case AxiomId::SigmaTriangle: return "sigma3";
        case AxiomId::PartialIndistancy: return "p1";
        case AxiomId::PartialSmallSelf: return "p2";
        case AxiomId::PartialTriangle: return "p4";
        case AxiomId::MetricSelfDistance: return "self-distance";
    }
    return "?";
}

FiniteDistanceSpace::FiniteDistanceSpace(Carrier carrier, std::vector<Rational> table)
    : carrier_(std::move(carrier)), table_(std::move(table)) {}

FiniteDistanceSpace FiniteDistanceSpace::from_table(Carrier carrier, std::vector<Rational> table) {
    const size_t n = static_cast<size_t>(carrier.size());
    if (table.size() != n * n) {
        throw InstanceError("distance table size does not match the carrier");
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const Rational& value = table[i * n + j];
            if (value < 0) {
                throw InstanceError("negative distance between '" + carrier.label(static_cast<int>(i)) +
                                    "' and '" + carrier.label(static_cast<int>(j)) + "'");
            }
            if (j > i && value != table[j * n + i]) {
                throw InstanceError("asymmetric distance table at ('" +
                                    carrier.label(static_cast<int>(i)) + "', '" +
                                    carrier.label(static_cast<int>(j)) + "')");
            }
        }
    }
    return FiniteDistanceSpace(std::move(carrier), std::move(table));
}

FiniteDistanceSpace FiniteDistanceSpace::from_entries(
    Carrier carrier, const std::vector<std::tuple<std::string, std::string, Rational>>& entries,
    bool strict) {
    const size_t n = static_cast<size_t>(carrier.size());
    std::vector<Rational> table(n * n);
    std::vector<char> listed(n * n, 0);

    for (const auto& [xLabel, yLabel, value] : entries) {
        const size_t i = static_cast<size_t>(carrier.at(xLabel));
        const size_t j = static_cast<size_t>(carrier.at(yLabel));
        if (value < 0) {
            throw InstanceError("negative distance between '" + xLabel + "' and '" + yLabel + "'");
        }
        const size_t forward = i * n + j;
        const size_t backward = j * n + i;
        if (listed[forward] && table[forward] != value) {
            throw InstanceError("conflicting values for pair ('" + xLabel + "', '" + yLabel + "')");
        }
        if (listed[backward] && table[backward] != value) {
            throw InstanceError("asymmetric values for pair ('" + xLabel + "', '" + yLabel + "')");
        }
        table[forward] = value;
        listed[forward] = 1;
        if (!strict) {
            table[backward] = value;
            listed[backward] = 1;
        }
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (!listed[i * n + j]) {
                throw InstanceError(std::string("missing sigma entry for pair ('") +
                                    carrier.label(static_cast<int>(i)) + "', '" +
                                    carrier.label(static_cast<int>(j)) + "')" +
                                    (strict ? " (strict mode lists every ordered pair)" : ""));
            }
        }
    }
    if (strict) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                if (table[i * n + j] != table[j * n + i]) {
                    throw InstanceError("asymmetric values for pair ('" +
                                        carrier.label(static_cast<int>(i)) + "', '" +
                                        carrier.label(static_cast<int>(j)) + "')");
                }
            }
        }
    }
    return FiniteDistanceSpace(std::move(carrier), std::move(table));
}

const Rational& FiniteDistanceSpace::dist(std::string_view x, std::string_view y) const {
    return dist(carrier_.at(x), carrier_.at(y));
}

AxiomReport check_metric_like(const FiniteDistanceSpace& space) {
    AxiomReport report;
    const int n = space.size();
    const auto& carrier = space.carrier();

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (space.dist(i, j) == 0) {
                report.violations.push_back({AxiomId::SigmaZeroDistance,
                                             {carrier.label(i), carrier.label(j)},
                                             space.dist(i, j),
                                             Rational(0)});
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int z = 0; z < n; ++z) {
                Rational rhs = space.dist(i, z) + space.dist(z, j);
                if (space.dist(i, j) > rhs) {
                    report.violations.push_back({AxiomId::SigmaTriangle,
                                                 {carrier.label(i), carrier.label(z), carrier.label(j)},
                                                 space.dist(i, j),
                                                 std::move(rhs)});
                }
            }
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

AxiomReport check_partial_metric(const FiniteDistanceSpace& space) {
    AxiomReport report;
    const int n = space.size();
    const auto& carrier = space.carrier();

    // indistancy: distinct points may not be indistinguishable at level
    // zero (equal self- and cross distances at a positive level are
    // tolerated; the standard examples rely on that)
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (space.dist(i, j) == 0 && space.dist(i, i) == 0 && space.dist(j, j) == 0) {
                report.violations.push_back({AxiomId::PartialIndistancy,
                                             {carrier.label(i), carrier.label(j)},
                                             space.dist(i, j),
                                             space.dist(i, i)});
            }
        }
    }
    // small self-distance
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (space.dist(i, i) > space.dist(i, j)) {
                report.violations.push_back({AxiomId::PartialSmallSelf,
                                             {carrier.label(i), carrier.label(j)},
                                             space.dist(i, i),
                                             space.dist(i, j)});
            }
        }
    }
    // triangle inequality with the middle self-distance subtracted
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int z = 0; z < n; ++z) {
                Rational rhs = space.dist(i, z) + space.dist(z, j) - space.dist(z, z);
                if (space.dist(i, j) > rhs) {
                    report.violations.push_back({AxiomId::PartialTriangle,
                                                 {carrier.label(i), carrier.label(z), carrier.label(j)},
                                                 space.dist(i, j),
                                                 std::move(rhs)});
                }
            }
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

AxiomReport check_metric(const FiniteDistanceSpace& space) {
    AxiomReport report = check_partial_metric(space);
    const auto& carrier = space.carrier();
    for (int i = 0; i < space.size(); ++i) {
        if (space.dist(i, i) != 0) {
            report.violations.push_back({AxiomId::MetricSelfDistance,
                                         {carrier.label(i)},
                                         space.dist(i, i),
                                         Rational(0)});
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

SpaceClass classify(const FiniteDistanceSpace& space) {
    if (!check_metric_like(space).satisfied) return SpaceClass::NotMetricLike;
    if (check_metric(space).satisfied) return SpaceClass::Metric;
    if (check_partial_metric(space).satisfied) return SpaceClass::PartialMetric;
    return SpaceClass::MetricLike;
}

} // namespace relfix
