#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relfix/analysis.hpp"
#include "relfix/error.hpp"
#include "relfix/instance_io.hpp"
#include "relfix/report_io.hpp"
#include "relfix/solver.hpp"
#include "relfix/validator.hpp"

namespace {

constexpr int kExitUsage = 64;

using namespace relfix;

void print_axiom_report(const char* title, const AxiomReport& report) {
    std::cout << title << ": " << (report.satisfied ? "satisfied" : "violated") << "\n";
    for (const auto& violation : report.violations) {
        std::cout << "  " << to_string(violation.axiom) << " at (";
        for (size_t i = 0; i < violation.witness.size(); ++i) {
            std::cout << (i ? ", " : "") << violation.witness[i];
        }
        std::cout << "): lhs = " << to_string(violation.lhs)
                  << ", rhs = " << to_string(violation.rhs) << "\n";
    }
}

int cmd_check_axioms(const std::string& path, bool strict, bool jsonOutput) {
    const FiniteDistanceSpace space = load_space_document(path, strict);
    const AxiomReport metricLike = check_metric_like(space);
    const AxiomReport partial = check_partial_metric(space);
    const AxiomReport metric = check_metric(space);
    const SpaceClass cls = classify(space);

    if (jsonOutput) {
        std::cout << axioms_report_json(space, cls, metricLike, partial, metric);
    } else {
        std::cout << "classification: " << to_string(cls) << "\n";
        print_axiom_report("metric-like axioms", metricLike);
        print_axiom_report("partial-metric axioms", partial);
        print_axiom_report("metric axioms", metric);
    }
    return cls == SpaceClass::NotMetricLike ? 2 : 0;
}

void print_property(const char* label, const PropertyReport& report) {
    std::cout << label << (report.holds ? "holds" : "fails");
    if (report.witness) {
        std::cout << " (tail {";
        for (size_t i = 0; i < report.witness->tail.members.size(); ++i) {
            std::cout << (i ? ", " : "") << report.witness->tail.members[i];
        }
        std::cout << "}";
        if (report.witness->limitPoint) {
            std::cout << ", limit " << *report.witness->limitPoint;
        }
        std::cout << ")";
    }
    std::cout << "\n";
}

void print_hypotheses(const Instance& instance, const HypothesisReport& report) {
    std::cout << "space class: " << to_string(report.spaceClass) << "\n";
    print_property("(a)  completeness of Y under preserving sequences  ", report.completeness);

    std::cout << "(b)  start point related to its image              "
              << (report.startHolds ? "holds" : "fails");
    if (!report.admissibleStarts.empty()) {
        std::cout << " (admissible:";
        for (const auto& start : report.admissibleStarts) std::cout << " " << start;
        std::cout << ")";
    }
    std::cout << "\n";

    std::cout << "(c)  relation closed under the map                 "
              << (report.fClosed.holds ? "holds" : "fails");
    if (report.fClosed.witness) {
        std::cout << " ((" << report.fClosed.witness->source.first << ", "
                  << report.fClosed.witness->source.second << ") -> ("
                  << report.fClosed.witness->image.first << ", "
                  << report.fClosed.witness->image.second << ") escapes)";
    }
    std::cout << "\n";

    std::cout << "(d)  continuity-like or self-closedness            "
              << (report.dHolds ? "holds" : "fails") << "\n";
    print_property("     - relational continuity-like                  ", report.rContinuityLike);
    print_property("     - sigma-self-closedness on Y                  ", report.sigmaSelfClosedY);

    std::cout << "(e)  contraction on related pairs                  "
              << (report.eHolds ? "holds" : "fails");
    if (report.contraction.kStar) {
        std::cout << " (k* = " << to_string(*report.contraction.kStar) << ")";
    } else {
        std::cout << " (no admissible constant)";
    }
    if (instance.k()) {
        std::cout << " [supplied k = " << to_string(*instance.k()) << " "
                  << (*report.suppliedKHolds ? "holds" : "fails") << "]";
    }
    std::cout << "\n";

    auto print_pair_condition = [](const char* label, const Verdict<PointPair>& verdict) {
        std::cout << label << (verdict.holds ? "holds" : "fails");
        if (verdict.witness) {
            std::cout << " (missing: " << verdict.witness->first << ", "
                      << verdict.witness->second << ")";
        }
        std::cout << "\n";
    };
    print_pair_condition("(f)  paths join all image points                   ", report.pathCondition);
    print_pair_condition("(f') image set is directed in R^s                  ", report.directedImage);
    print_pair_condition("(f'') relation complete on the image               ", report.completeImage);

    if (report.integralContraction) {
        std::cout << "integral contraction                               "
                  << (report.integralContraction->feasible ? "feasible" : "infeasible");
        if (report.integralContraction->kStar) {
            std::cout << " (k* = " << to_string(*report.integralContraction->kStar) << ")";
        }
        std::cout << "\n";
    }

    std::cout << "prediction: " << to_string(report.prediction) << "\n";
    std::cout << "applicable:";
    if (report.applicableResults.empty()) {
        std::cout << " none";
    } else {
        for (size_t i = 0; i < report.applicableResults.size(); ++i) {
            std::cout << (i ? ", " : " ") << report.applicableResults[i];
        }
    }
    std::cout << "\n";
}

int prediction_exit_code(Prediction prediction) {
    switch (prediction) {
        case Prediction::UniqueFixedPoint: return 0;
        case Prediction::ExistenceGuaranteed: return 1;
        case Prediction::NoGuarantee: return 2;
    }
    return 2;
}

int cmd_validate(const std::string& path, bool strict, bool corollaries, bool jsonOutput) {
    const Instance instance = load_instance(path, strict);
    const HypothesisReport report = validate(instance);
    std::optional<Corollary3Report> corollary3;
    if (corollaries) corollary3 = corollary3_variants(instance);

    if (jsonOutput) {
        std::cout << hypothesis_report_json(instance, report, corollary3);
    } else {
        print_hypotheses(instance, report);
        if (corollary3) {
            std::cout << "corollary-3 constructions: directed->paths<=2 "
                      << (corollary3->directed.holds
                              ? (corollary3->directedPathsVerified ? "verified" : "FAILED")
                              : "n/a")
                      << ", complete->paths<=1 "
                      << (corollary3->complete.holds
                              ? (corollary3->completePathsVerified ? "verified" : "FAILED")
                              : "n/a")
                      << "\n";
        }
    }
    return prediction_exit_code(report.prediction);
}

int cmd_solve(const std::string& path, bool strict, std::optional<std::string> x0Flag,
              int maxIter, bool jsonOutput) {
    const Instance instance = load_instance(path, strict);
    std::optional<std::string> x0 = x0Flag ? x0Flag : instance.x0();
    if (!x0) {
        std::cerr << "error: no start point; pass --x0 or put \"x0\" in the document\n";
        return kExitUsage;
    }
    instance.space().carrier().at(*x0); // unknown labels exit 64 before iterating

    PicardOptions options;
    options.maxIter = maxIter;
    options.relation = &instance.relation();
    if (instance.k()) {
        options.contractionConstant = instance.k();
    } else {
        const auto contraction = minimal_k(instance.space(), instance.relation(), instance.map());
        if (contraction.feasible) options.contractionConstant = contraction.kStar;
    }
    const PicardResult result = picard(instance.space(), instance.map(), *x0, options);

    if (jsonOutput) {
        std::cout << solve_report_json(instance, result, *x0,
                                       options.maxIter > 0 ? options.maxIter
                                                           : instance.space().size() + 1);
    } else {
        std::cout << "iterates:";
        for (const auto& point : result.trace.iterates) std::cout << " " << point;
        std::cout << "\ngaps:";
        for (const auto& gap : result.trace.gaps) std::cout << " " << to_string(gap);
        std::cout << "\n";
        if (!result.trace.bounds.empty()) {
            std::cout << "bounds:";
            for (const auto& bound : result.trace.bounds) std::cout << " " << to_string(bound);
            std::cout << "\n";
        }
        if (result.certificate) {
            const auto& certificate = *result.certificate;
            std::cout << "fixed point: " << certificate.point
                      << " (iterations " << certificate.iterations
                      << ", self-distance " << to_string(certificate.selfDistance)
                      << ", residual " << to_string(certificate.residual)
                      << ", preserving " << (certificate.preservingVerified ? "yes" : "no")
                      << ")\n";
        } else {
            std::cout << "no fixed point within the iteration budget\n";
        }
    }
    return result.certificate ? 0 : 3;
}

int cmd_oracle(const std::string& path, bool strict, int walks, int horizon, std::uint64_t seed,
               const std::string& assumePrediction, bool jsonOutput) {
    const Instance instance = load_instance(path, strict);
    HypothesisReport report = validate(instance);
    if (!assumePrediction.empty()) {
        if (assumePrediction == "unique") {
            report.prediction = Prediction::UniqueFixedPoint;
        } else if (assumePrediction == "existence") {
            report.prediction = Prediction::ExistenceGuaranteed;
        } else if (assumePrediction == "none") {
            report.prediction = Prediction::NoGuarantee;
        } else {
            std::cerr << "error: --assume-prediction takes unique, existence or none\n";
            return kExitUsage;
        }
    }
    const FixedPointSet fixed = fixed_points(instance.map());
    const ConsistencyVerdict verdict = cross_check(instance, report);

    WalkOptions walkOptions{walks, horizon, seed};
    const auto records = simulate_walks(instance.space(), instance.relation(), instance.Y(),
                                        walkOptions);
    WalkSummary summary;
    summary.count = walks;
    summary.horizon = horizon;
    summary.seed = seed;
    const auto tails = realizable_tail_sets(instance.space(), instance.relation(), instance.Y());
    for (const auto& record : records) {
        if (record.stuck) {
            ++summary.stuck;
            continue;
        }
        if (record.cauchyValue) ++summary.cauchy;
        if (!record.limits.empty()) ++summary.convergent;
        // a stabilized Cauchy walk must be matched by a realizable tail set
        // whenever the completeness verdict promises one
        if (record.cauchyValue && report.completeness.holds) {
            bool realizable = false;
            for (const auto& tail : tails) {
                if (tail.members == record.stableTail) {
                    realizable = tail.cauchyValue.has_value();
                    break;
                }
            }
            bool servedLimit = false;
            for (const auto& y : instance.Y()) {
                bool matches = instance.space().dist(y, y) == *record.cauchyValue;
                for (const auto& s : record.stableTail) {
                    matches = matches && instance.space().dist(s, y) == *record.cauchyValue;
                }
                if (matches) {
                    servedLimit = true;
                    break;
                }
            }
            if (realizable && !servedLimit) ++summary.contradictions;
        }
    }

    if (jsonOutput) {
        std::cout << oracle_report_json(instance, fixed, report, verdict, summary);
    } else {
        std::cout << "fixed points:";
        if (fixed.points.empty()) std::cout << " none";
        for (const auto& point : fixed.points) std::cout << " " << point;
        std::cout << "\nprediction: " << to_string(report.prediction) << "\n";
        std::cout << "consistency: " << (verdict.consistent ? "consistent" : "ALARM") << "\n";
        for (const auto& alarmText : verdict.alarms) {
            std::cout << "  alarm: " << alarmText << "\n";
        }
        if (!verdict.serializedInstance.empty()) {
            std::cout << "offending instance:\n" << verdict.serializedInstance;
        }
        std::cout << "walks: " << summary.count << " (horizon " << summary.horizon << ", seed "
                  << summary.seed << "): " << summary.stuck << " stuck, " << summary.cauchy
                  << " cauchy, " << summary.convergent << " convergent, "
                  << summary.contradictions << " contradictions\n";
    }
    if (!verdict.consistent || summary.contradictions > 0) return 5;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for relational contraction principles on finite distance spaces"};
    app.require_subcommand(1);

    std::string path;
    bool strict = false;
    bool jsonOutput = false;

    auto* checkCmd = app.add_subcommand("check-axioms",
                                        "classify a distance table (metric / partial / metric-like)");
    checkCmd->add_option("file", path, "instance document")->required();
    checkCmd->add_flag("--strict", strict, "require every ordered sigma pair to be listed");
    checkCmd->add_flag("--json", jsonOutput, "machine-readable report");

    auto* validateCmd = app.add_subcommand("validate", "evaluate every hypothesis and predict");
    bool corollaries = false;
    validateCmd->add_option("file", path, "instance document")->required();
    validateCmd->add_flag("--corollaries", corollaries, "verify the corollary-3 path constructions");
    validateCmd->add_flag("--strict", strict, "require every ordered sigma pair to be listed");
    validateCmd->add_flag("--json", jsonOutput, "machine-readable report");

    auto* solveCmd = app.add_subcommand("solve", "run the fixed-point iteration with certificates");
    std::string x0;
    int maxIter = 0;
    solveCmd->add_option("file", path, "instance document")->required();
    solveCmd->add_option("--x0", x0, "start point (defaults to the document's x0)");
    solveCmd->add_option("--max-iter", maxIter, "iteration budget (default: points + 1)");
    solveCmd->add_flag("--strict", strict, "require every ordered sigma pair to be listed");
    solveCmd->add_flag("--json", jsonOutput, "machine-readable report");

    auto* oracleCmd = app.add_subcommand("oracle",
                                         "brute-force fixed points, cross-check the prediction, simulate walks");
    int walks = 100;
    int horizon = 120;
    std::uint64_t seed = 0;
    std::string assumePrediction;
    oracleCmd->add_option("file", path, "instance document")->required();
    oracleCmd->add_option("--walks", walks, "number of simulated walks (default 100)");
    oracleCmd->add_option("--horizon", horizon, "walk length (default 120)");
    oracleCmd->add_option("--seed", seed, "random seed (default 0)");
    oracleCmd->add_option("--assume-prediction", assumePrediction,
                          "override the prediction (unique|existence|none); exercises the alarm path");
    oracleCmd->add_flag("--strict", strict, "require every ordered sigma pair to be listed");
    oracleCmd->add_flag("--json", jsonOutput, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) {
            return app.exit(error); // --help
        }
        app.exit(error);
        return kExitUsage;
    }

    try {
        if (checkCmd->parsed()) {
            return cmd_check_axioms(path, strict, jsonOutput);
        }
        if (validateCmd->parsed()) {
            return cmd_validate(path, strict, corollaries, jsonOutput);
        }
        if (solveCmd->parsed()) {
            return cmd_solve(path, strict,
                             x0.empty() ? std::nullopt : std::optional<std::string>(x0), maxIter,
                             jsonOutput);
        }
        if (oracleCmd->parsed()) {
            return cmd_oracle(path, strict, walks, horizon, seed, assumePrediction, jsonOutput);
        }
    } catch (const relfix::InstanceError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 70;
    }
    return kExitUsage;
}
