#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "conedual/convex_sep.hpp"
#include "conedual/errors.hpp"
#include "conedual/functionals.hpp"
#include "conedual/interpolate.hpp"
#include "conedual/valuations.hpp"
#include "oracles.hpp"

namespace conedual::checks {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

ExtReal inf() { return ExtReal::infinity(); }

/// Runs `body`, turning an escaped exception into a recorded failure.
void guarded(CriterionResult& c, const std::string& label, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        c.record(false, label + ": unexpected exception: " + e.what());
    }
}

std::vector<ExtReal> randomMonotone(const FinitePoset& poset, Sampler& s, long infNum, long infDen)
{
    std::vector<ExtReal> raw(poset.size());
    for (auto& v : raw)
        v = s.extReal(6, 3, infNum, infDen);
    std::vector<ExtReal> out(poset.size());
    for (std::size_t x = 0; x < poset.size(); ++x)
        for (std::size_t y = 0; y < poset.size(); ++y)
            if (poset.leq(y, x))
                out[x] = std::max(out[x], raw[y]);
    return out;
}

LinFun randomLin(Sampler& s, std::size_t dim, long maxNum, long maxDen, long infNum = 0, long infDen = 1)
{
    return LinFun{s.point(dim, maxNum, maxDen, infNum, infDen)};
}

std::string describe(const std::vector<ExtVec>& points)
{
    std::string out;
    for (const auto& p : points)
        out += p.toString();
    return out;
}

/// Scales y so that f(y) = target when f(y) is finite and positive.
ExtVec scaleTo(const Functional& f, const ExtVec& y, const Rational& target)
{
    const ExtReal v = eval(f, y);
    if (v.isInfinite() || v.isZero())
        return y;
    return ExtReal(target / v.rational()) * y;
}

}   // namespace

void CriterionResult::record(bool ok, const std::string& description)
{
    if (ok) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < kMaxRecordedFailures)
        failures.push_back(description);
}

bool SuiteReport::ok() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.ok(); });
}

std::string SuiteReport::serialize() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    std::size_t passed = 0, failed = 0;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : criteria) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["failed"] = c.failed;
        entry["failures"] = c.failures;
        list.push_back(entry);
        passed += c.passed;
        failed += c.failed;
    }
    j["passed"] = passed;
    j["failed"] = failed;
    j["ok"] = ok();
    j["criteria"] = list;
    return j.dump();
}

const std::vector<std::string>& suiteNames()
{
    static const std::vector<std::string> names{"extreal", "separation", "interpolation", "minkowski",
                                                "schroder-simpson", "regression", "lemma1"};
    return names;
}

SuiteReport runSuite(const std::string& name, std::uint64_t seed)
{
    if (name == "extreal") return extrealSuite(seed);
    if (name == "separation") return separationSuite(seed);
    if (name == "interpolation") return interpolationSuite(seed);
    if (name == "minkowski") return minkowskiSuite(seed);
    if (name == "schroder-simpson") return schroderSimpsonSuite(seed);
    if (name == "regression") return regressionSuite(seed);
    if (name == "lemma1") return lemma1Suite(seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteReport> runAll(std::uint64_t seed)
{
    std::vector<SuiteReport> out;
    for (const auto& name : suiteNames())
        out.push_back(runSuite(name, seed));
    return out;
}

// ---------------------------------------------------------------------------
// Extended reals
// ---------------------------------------------------------------------------

SuiteReport extrealSuite(std::uint64_t seed)
{
    const std::vector<ExtReal> values{ExtReal(0), ExtReal(1, 3), ExtReal(1, 2), ExtReal(1),
                                      ExtReal(2), ExtReal(3), inf()};
    SuiteReport report{"extreal", seed, {}};
    CriterionResult addLaws{"add_commutative_monoid"};
    CriterionResult mulLaws{"mul_associative_commutative_unital"};
    CriterionResult distributive{"distributivity"};
    CriterionResult conventions{"infinity_conventions"};
    CriterionResult monotone{"monotonicity"};
    CriterionResult order{"total_order"};
    CriterionResult partial{"sub_partial"};
    CriterionResult text{"text_round_trip"};

    for (const auto& a : values) {
        const std::string sa = a.toString();
        addLaws.record(a + ExtReal(0) == a && ExtReal(0) + a == a, "0 neutral for " + sa);
        mulLaws.record(a * ExtReal(1) == a && ExtReal(0) * a == ExtReal(0), "1 unit / 0 absorbing for " + sa);
        conventions.record(a + inf() == inf() && inf() + a == inf(), sa + " + inf");
        conventions.record(a * inf() == (a.isZero() ? ExtReal(0) : inf()) && inf() * a == a * inf(),
                           sa + " * inf");
        text.record(ExtReal::parse(a.toString()) == a, "round trip of " + sa);
        for (const auto& b : values) {
            const std::string sb = sa + "," + b.toString();
            addLaws.record(a + b == b + a, "a+b=b+a at " + sb);
            mulLaws.record(a * b == b * a, "ab=ba at " + sb);
            const int relations = (a < b) + (a == b) + (a > b);
            order.record(relations == 1, "trichotomy at " + sb);
            order.record((a <= b && b <= a) == (a == b), "antisymmetry at " + sb);
            if (b.isFinite()) {
                partial.record(subPartial(a + b, b) == a, "(a+b)-b at " + sb);
            } else {
                bool threw = false;
                try {
                    subPartial(a, b);
                } catch (const UndefinedDifference&) {
                    threw = true;
                }
                partial.record(threw, "a - inf rejected at " + sb);
            }
            if (b > a) {
                bool threw = false;
                try {
                    subPartial(a, b);
                } catch (const UndefinedDifference&) {
                    threw = true;
                }
                partial.record(threw, "negative difference rejected at " + sb);
            }
            for (const auto& c : values) {
                const std::string sc = sb + "," + c.toString();
                addLaws.record((a + b) + c == a + (b + c), "add associativity at " + sc);
                mulLaws.record((a * b) * c == a * (b * c), "mul associativity at " + sc);
                distributive.record(a * (b + c) == a * b + a * c, "r(a+b) at " + sc);
                distributive.record((a + b) * c == a * c + b * c, "(r+s)a at " + sc);
                if (a <= b) {
                    monotone.record(a + c <= b + c, "add monotone at " + sc);
                    monotone.record(a * c <= b * c, "mul monotone at " + sc);
                }
                if (a <= b && b <= c)
                    order.record(a <= c, "transitivity at " + sc);
            }
        }
    }
    conventions.record(ExtReal(0) * inf() == ExtReal(0), "0*inf = 0");
    conventions.record(ExtReal(3) * inf() == inf(), "3*inf = inf");
    report.criteria = {addLaws, mulLaws, distributive, conventions, monotone, order, partial, text};
    return report;
}

// ---------------------------------------------------------------------------
// Separation from the corner V
// ---------------------------------------------------------------------------

SuiteReport separationSuite(std::uint64_t seed)
{
    SuiteReport report{"separation", seed, {}};
    CriterionResult separators{"separator_certificates"};
    CriterionResult witnesses{"meets_v_witnesses"};
    CriterionResult strict{"separator_strict_on_v"};
    CriterionResult decision{"decision_form_agrees"};
    CriterionResult oracleAgreement{"dyadic_oracle_agreement"};

    Sampler s(seed);
    for (int instance = 0; instance < 500; ++instance) {
        const auto n = static_cast<std::size_t>(s.uniform(1, 6));
        const auto g = static_cast<std::size_t>(s.uniform(1, 8));
        std::vector<ExtVec> gens;
        for (std::size_t p = 0; p < g; ++p) {
            ExtVec v(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (s.chance(1, 10)) {
                    v[i] = inf();
                } else {
                    const long q = s.uniform(1, 16);
                    v[i] = ExtReal(s.uniform(0, 3 * q), q);
                }
            }
            gens.push_back(std::move(v));
        }
        const std::string label = "instance " + std::to_string(instance);
        guarded(separators, label, [&] {
            const SeparationOutcome outcome = separate(gens, n);
            const bool isSeparated = std::holds_alternative<Separated>(outcome);
            decision.record(hullDisjointFromV(gens, n) == isSeparated, label);
            if (isSeparated) {
                const auto& w = std::get<Separated>(outcome).weights;
                separators.record(verifySeparator(gens, w), label);
                const ExtVec a = fromRationals(w.a);
                for (int k = 0; k < 5; ++k) {
                    ExtVec y(n);
                    for (std::size_t i = 0; i < n; ++i)
                        y[i] = s.chance(1, 5) ? inf() : ExtReal(1) + ExtReal(s.uniform(1, 8), s.uniform(1, 64));
                    strict.record(pairing(a, y) > ExtReal(1), label + " at " + y.toString());
                }
            } else {
                witnesses.record(verifyWitness(gens, std::get<MeetsV>(outcome).witness), label);
            }
            if (n <= 3) {
                const bool oracleMeets = oracle::dyadicHullPointInV(gens, 32).has_value();
                oracleAgreement.record(oracleMeets == !isSeparated,
                                       label + ": oracle " + (oracleMeets ? "meets" : "disjoint")
                                           + ", solver " + (isSeparated ? "separated" : "meets_v") + " on "
                                           + describe(gens));
            }
        });
    }
    report.criteria = {separators, witnesses, strict, decision, oracleAgreement};
    return report;
}

// ---------------------------------------------------------------------------
// Interpolation between a clause minimum and a max of linear functionals
// ---------------------------------------------------------------------------

SuiteReport interpolationSuite(std::uint64_t seed)
{
    SuiteReport report{"interpolation", seed, {}};
    CriterionResult hypothesis{"constructed_hypothesis_detected"};
    CriterionResult certificate{"coordinatewise_certificate"};
    CriterionResult sandwich{"sandwich_at_sampled_points"};
    CriterionResult proofRoute{"agrees_with_separation_of_images"};
    CriterionResult violations{"violations_detected_with_exact_point"};
    CriterionResult witnesses{"theorem_main_witnesses"};

    Sampler s(seed);
    for (int instance = 0; instance < 300; ++instance) {
        const auto m = static_cast<std::size_t>(s.uniform(1, 5));
        const auto n = static_cast<std::size_t>(s.uniform(1, 4));
        const auto k = static_cast<std::size_t>(s.uniform(1, 4));
        std::vector<LinFun> clause;
        for (std::size_t i = 0; i < n; ++i)
            clause.push_back(randomLin(s, m, 8, 4));
        std::vector<LinFun> branches;
        for (std::size_t b = 0; b < k; ++b)
            branches.push_back(randomLin(s, m, 8, 4));

        // Lift every branch by the deficit of a random mixture of the branches
        // against a random mixture of the clause, so the hypothesis holds.
        std::vector<Rational> a(n), lambda(k);
        Rational sa = 0, sl = 0;
        for (auto& v : a) sa += (v = s.uniform(0, 4));
        for (auto& v : lambda) sl += (v = s.uniform(1, 4));
        if (sa == 0) { a[0] = 1; sa = 1; }
        for (auto& v : a) v /= sa;
        for (auto& v : lambda) v /= sl;
        const LinFun target = combination(clause, a);
        const LinFun mixture = combination(branches, lambda);
        for (std::size_t j = 0; j < m; ++j) {
            const Rational deficit = target.coeffs[j].rational() - mixture.coeffs[j].rational();
            if (deficit > 0)
                for (auto& b : branches)
                    b.coeffs[j] = b.coeffs[j] + ExtReal(deficit);
        }
        const SublinFun phi{branches};
        const SuperlinFun clauseMin{clause};
        const std::string label = "instance " + std::to_string(instance);

        guarded(certificate, label, [&] {
            hypothesis.record(checkMinBelow(clauseMin, phi).holds, label);
            const InterpolationResult result = interpolate(clause, phi);
            certificate.record(verifyInterpolation(clause, phi, result), label);
            const LinFun x = combination(clause, result.a);
            bool allOk = true;
            std::string where;
            for (int p = 0; p < 1000; ++p) {
                const ExtVec y = s.point(m, 8, 4, 1, 8);
                const ExtReal lo = eval(clauseMin, y);
                const ExtReal mid = eval(x, y);
                const ExtReal hi = eval(phi, y);
                if (!(lo <= mid && mid <= hi)) {
                    allOk = false;
                    where = y.toString();
                    break;
                }
            }
            sandwich.record(allOk, label + (where.empty() ? "" : " at " + where));

            if (instance % 5 == 0) {
                // Proof route: images of sampled points of A_phi under (g_1, ..., g_n).
                std::vector<ExtVec> samples, images;
                for (int p = 0; p < 24; ++p) {
                    ExtVec y = s.finitePoint(m, 8, 4);
                    const ExtReal v = eval(phi, y);
                    if (v.isZero())
                        continue;
                    y = scaleTo(phi, y, 1);
                    ExtVec image(n);
                    for (std::size_t i = 0; i < n; ++i)
                        image[i] = eval(clause[i], y);
                    samples.push_back(y);
                    images.push_back(std::move(image));
                }
                if (images.empty())
                    return;
                const SeparationOutcome outcome = separate(images, n);
                const auto* sep = std::get_if<Separated>(&outcome);
                bool ok = sep != nullptr;
                if (ok) {
                    const LinFun viaImages = combination(clause, sep->weights.a);
                    for (const auto& y : samples)
                        ok = ok && eval(clauseMin, y) <= eval(viaImages, y) && eval(viaImages, y) <= eval(phi, y);
                }
                proofRoute.record(ok, label);
            }
        });
    }

    for (int instance = 0; instance < 100; ++instance) {
        const auto m = static_cast<std::size_t>(s.uniform(1, 5));
        const auto n = static_cast<std::size_t>(s.uniform(1, 4));
        const auto k = static_cast<std::size_t>(s.uniform(1, 4));
        const auto j = static_cast<std::size_t>(s.uniform(0, static_cast<long>(m) - 1));
        std::vector<LinFun> branches;
        for (std::size_t b = 0; b < k; ++b)
            branches.push_back(randomLin(s, m, 8, 4));
        Rational top = 0;
        for (const auto& b : branches)
            top = std::max(top, b.coeffs[j].rational());
        std::vector<LinFun> clause;
        for (std::size_t i = 0; i < n; ++i) {
            LinFun g = randomLin(s, m, 8, 4);
            g.coeffs[j] = ExtReal(top + 1 + s.rational(4, 4));
            clause.push_back(std::move(g));
        }
        const SublinFun phi{branches};
        const SuperlinFun clauseMin{clause};
        const std::string label = "violating instance " + std::to_string(instance);
        guarded(violations, label, [&] {
            const MinBelowCheck check = checkMinBelow(clauseMin, phi);
            bool ok = !check.holds && check.violation.has_value()
                   && eval(clauseMin, *check.violation) > eval(phi, *check.violation);
            try {
                interpolate(clause, phi);
                ok = false;
            } catch (const PreconditionViolated& e) {
                ok = ok && eval(clauseMin, e.point()) > eval(phi, e.point());
            }
            violations.record(ok, label);
        });
    }

    // Witness extraction: phi is the max of some cone generators; extra clauses
    // sit below it, so the max of the witnesses must reproduce phi.
    for (int instance = 0; instance < 50; ++instance) {
        const auto m = static_cast<std::size_t>(s.uniform(1, 4));
        const auto top = static_cast<std::size_t>(s.uniform(1, 3));
        std::vector<LinFun> gens;
        for (std::size_t b = 0; b < top; ++b)
            gens.push_back(randomLin(s, m, 8, 4));
        std::vector<std::vector<std::size_t>> clauses;
        for (std::size_t b = 0; b < top; ++b)
            clauses.push_back({b});
        const SublinFun phi{gens};
        for (int extra = 0; extra < 2; ++extra) {
            // A generator below phi plus one arbitrary generator.
            const auto base = static_cast<std::size_t>(s.uniform(0, static_cast<long>(top) - 1));
            LinFun below = gens[base];
            for (std::size_t j = 0; j < m; ++j)
                below.coeffs[j] = ExtReal(below.coeffs[j].rational() * s.rational(4, 4) / 4);
            gens.push_back(below);
            gens.push_back(randomLin(s, m, 16, 4));
            clauses.push_back({gens.size() - 2, gens.size() - 1});
        }
        const std::string label = "witness instance " + std::to_string(instance);
        guarded(witnesses, label, [&] {
            const auto found = theoremMainWitnesses(clauses, gens, phi);
            bool ok = found.size() == clauses.size();
            std::vector<LinFun> xs;
            for (std::size_t c = 0; c < found.size() && ok; ++c) {
                std::vector<LinFun> clause;
                for (std::size_t idx : clauses[c])
                    clause.push_back(gens[idx]);
                ok = verifyInterpolation(clause, phi, found[c].weights)
                  && dominatedByMax(found[c].x, phi).dominated;
                xs.push_back(found[c].x);
            }
            for (int p = 0; p < 100 && ok; ++p) {
                const ExtVec y = s.point(m, 8, 4, 1, 8);
                ok = eval(SublinFun{xs}, y) == eval(phi, y);
            }
            witnesses.record(ok, label);
        });
    }

    report.criteria = {hypothesis, certificate, sandwich, proofRoute, violations, witnesses};
    return report;
}

// ---------------------------------------------------------------------------
// Minkowski functionals and the open-set correspondence
// ---------------------------------------------------------------------------

SuiteReport minkowskiSuite(std::uint64_t seed)
{
    SuiteReport report{"minkowski", seed, {}};
    CriterionResult roundTrip{"minkowski_equals_min_of_linear"};
    CriterionResult scan{"minkowski_matches_definition_scan"};
    CriterionResult intersection{"open_of_min_is_intersection"};
    CriterionResult unionCrit{"open_of_max_is_union"};
    CriterionResult orderCrit{"order_iff_open_inclusion"};
    CriterionResult convexA{"sublinear_closed_part_convex"};
    CriterionResult convexU{"superlinear_open_part_convex"};
    CriterionResult homogeneity{"homogeneity"};
    CriterionResult specOrder{"specialization_preorder"};
    CriterionResult domination{"dominated_by_max_vs_grid"};

    Sampler s(seed);
    const std::vector<ExtReal> scalars{ExtReal(0), ExtReal(1, 2), ExtReal(1), ExtReal(3), inf()};
    const std::vector<ExtReal> mixes{ExtReal(0), ExtReal(1, 8), ExtReal(1, 4), ExtReal(1, 2),
                                     ExtReal(3, 4), ExtReal(7, 8), ExtReal(1)};
    for (int family = 0; family < 200; ++family) {
        const auto m = static_cast<std::size_t>(s.uniform(1, 4));
        const auto size = static_cast<std::size_t>(s.uniform(1, 4));
        std::vector<LinFun> block;
        for (std::size_t i = 0; i < size; ++i)
            block.push_back(randomLin(s, m, 6, 3, 1, 12));
        const OpenSetRep u{{block}};
        const Functional minF = SuperlinFun{block};
        const Functional maxF = SublinFun{block};
        const std::string label = "family " + std::to_string(family);

        guarded(roundTrip, label, [&] {
            std::vector<ExtVec> points;
            for (int p = 0; p < 40; ++p)
                points.push_back(s.point(m, 6, 3, 1, 8));
            points.push_back(ExtVec(m));

            for (std::size_t p = 0; p < points.size(); ++p) {
                const ExtVec& y = points[p];
                const std::string at = label + " at " + y.toString();
                const ExtReal value = minkowski(u, y);
                roundTrip.record(value == eval(minF, y), at);
                if (p < 4)
                    scan.record(oracle::minkowskiScanAgrees(u, y, value, 4, 40), at);

                bool all = true, any = false;
                for (const auto& f : block) {
                    all = all && memberU(Functional(f), y);
                    any = any || memberU(Functional(f), y);
                }
                intersection.record(memberU(minF, y) == all, at);
                unionCrit.record(memberU(maxF, y) == any, at);
                intersection.record(memberU(u, y) == all, at);

                for (const auto& r : scalars) {
                    const ExtVec ry = r * y;
                    homogeneity.record(eval(minF, ry) == r * eval(minF, y)
                                           && eval(maxF, ry) == r * eval(maxF, y)
                                           && eval(Functional(block.front()), ry) == r * eval(Functional(block.front()), y),
                                       at + " scaled by " + r.toString());
                }
            }

            // Order versus inclusion of the associated opens.
            std::vector<Functional> reps{minF, maxF};
            for (const auto& f : block)
                reps.push_back(f);
            for (const auto& phi : reps) {
                for (const auto& psi : reps) {
                    const LeqDecision d = leqFunctional(phi, psi, 400, seed);
                    bool ok = true;
                    if (d.holds) {
                        for (const auto& y : points)
                            ok = ok && (!memberU(phi, y) || memberU(psi, y));
                    } else {
                        ok = d.witness.has_value() && eval(phi, *d.witness) > eval(psi, *d.witness);
                        if (ok) {
                            const ExtVec z = oracle::separatingScale(phi, psi, *d.witness);
                            ok = memberU(phi, z) && !memberU(psi, z);
                        }
                    }
                    orderCrit.record(ok, label + " pair");
                }
            }
            // Known relations min F <= f <= max F must be confirmed.
            for (const auto& f : block) {
                orderCrit.record(leqFunctional(minF, Functional(f), 400, seed).holds, label + " min<=f");
                orderCrit.record(leqFunctional(Functional(f), maxF, 400, seed).holds, label + " f<=max");
            }

            // Convexity of A_max and U_min on scaled samples.
            for (int p = 0; p < 6; ++p) {
                const ExtVec y1 = scaleTo(maxF, s.point(m, 6, 3, 1, 10), Rational(s.uniform(1, 4), 4));
                const ExtVec y2 = scaleTo(maxF, s.point(m, 6, 3, 1, 10), Rational(s.uniform(1, 4), 4));
                if (memberA(maxF, y1) && memberA(maxF, y2))
                    for (const auto& t : mixes)
                        convexA.record(memberA(maxF, t * y1 + subPartial(ExtReal(1), t) * y2),
                                       label + " mix " + t.toString());
                const ExtVec z1 = scaleTo(minF, s.point(m, 6, 3, 1, 10), Rational(s.uniform(5, 12), 4));
                const ExtVec z2 = scaleTo(minF, s.point(m, 6, 3, 1, 10), Rational(s.uniform(5, 12), 4));
                if (memberU(minF, z1) && memberU(minF, z2))
                    for (const auto& t : mixes)
                        convexU.record(memberU(minF, t * z1 + subPartial(ExtReal(1), t) * z2),
                                       label + " mix " + t.toString());
            }

            // Specialisation order of the cone generated by the block.
            for (int p = 0; p < 6; ++p) {
                const ExtVec y1 = s.point(m, 6, 3, 1, 10);
                const ExtVec y2 = y1 + s.point(m, 6, 3, 1, 10);
                const ExtVec y3 = y2 + s.point(m, 6, 3, 1, 10);
                const ExtVec other = s.point(m, 6, 3, 1, 10);
                bool ok = specLeq(y1, y1, block) && specLeq(y1, y2, block) && specLeq(y2, y3, block)
                       && specLeq(y1, y3, block);
                if (specLeq(y1, other, block) && specLeq(other, y3, block))
                    ok = ok && specLeq(y1, y3, block);
                if (specLeq(y1, other, block)) {
                    // Generators suffice: every nonnegative combination respects the order.
                    for (int c = 0; c < 4; ++c) {
                        ExtVec x(m);
                        for (const auto& f : block)
                            x = x + ExtReal(s.rational(4, 3)) * f.coeffs;
                        ok = ok && pairing(x, y1) <= pairing(x, other);
                    }
                }
                specOrder.record(ok, label);
            }

            // Coordinatewise domination versus a dyadic grid.
            std::vector<LinFun> finiteBlock;
            for (std::size_t i = 0; i < size; ++i)
                finiteBlock.push_back(randomLin(s, m, 6, 3));
            const LinFun f = randomLin(s, m, 6, 3);
            const SublinFun phi{finiteBlock};
            const Domination d = dominatedByMax(f, phi);
            const auto gridHit = oracle::gridViolation(Functional(f), Functional(phi), 2, 4);
            bool ok = true;
            if (d.dominated)
                ok = verifyDomination(f, phi, *d.lambda) && !gridHit.has_value();
            else {
                const LeqDecision refute = leqFunctional(Functional(f), Functional(phi), 400, seed);
                ok = !refute.holds && refute.witness && eval(f, *refute.witness) > eval(phi, *refute.witness);
            }
            if (gridHit)
                ok = ok && !d.dominated;
            domination.record(ok, label + " domination");
        });
    }
    report.criteria = {roundTrip, scan, intersection, unionCrit, orderCrit,
                       convexA, convexU, homogeneity, specOrder, domination};
    return report;
}

// ---------------------------------------------------------------------------
// Finite spaces, valuations and recovery of the representing function
// ---------------------------------------------------------------------------

SuiteReport schroderSimpsonSuite(std::uint64_t seed)
{
    SuiteReport report{"schroder-simpson", seed, {}};
    CriterionResult census{"poset_census"};
    CriterionResult recover{"recovery_represents_phi"};
    CriterionResult notLsc{"non_monotone_rejected_with_witness"};
    CriterionResult bijective{"recovery_bijective"};
    CriterionResult mobiusWeights{"mobius_weights_round_trip"};
    CriterionResult mobiusTables{"mobius_tables_round_trip"};
    CriterionResult mobiusInfinite{"mobius_infinite_weights"};
    CriterionResult linearity{"evaluation_linear"};
    CriterionResult scott{"evaluation_preserves_chain_sups"};
    CriterionResult lemma2{"sup_representation"};
    CriterionResult lsc{"lsc_matches_open_preimages"};
    CriterionResult coneOps{"cone_operations_stay_lsc"};

    Sampler s(seed);
    const std::vector<std::size_t> expectedCounts{1, 2, 5, 16, 63, 318};
    std::map<std::size_t, std::vector<FinitePoset>> bySize;
    for (std::size_t n = 1; n <= 6; ++n) {
        bySize[n] = posetsUpToIsomorphism(n);
        census.record(bySize[n].size() == expectedCounts[n - 1],
                      "size " + std::to_string(n) + ": " + std::to_string(bySize[n].size()) + " classes");
    }

    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t pi = 0; pi < bySize[n].size(); ++pi) {
            const FinitePoset& poset = bySize[n][pi];
            const std::string plabel = "poset " + std::to_string(n) + "." + std::to_string(pi);
            std::vector<LSCFun> recovered;
            for (int trial = 0; trial < 50; ++trial) {
                const std::string label = plabel + " trial " + std::to_string(trial);
                std::vector<ExtReal> c;
                if (trial % 2 == 0) {
                    c = randomMonotone(poset, s, 1, 12);
                } else {
                    for (std::size_t x = 0; x < n; ++x)
                        c.push_back(s.extReal(6, 3, 1, 12));
                }
                const DualFunctionalRep phi{c};
                const bool monotone = oracle::lscByPreimages(c, poset);
                guarded(recover, label, [&] {
                    try {
                        const LSCFun f = ssRecover(phi, poset);
                        bool ok = monotone && f.values() == c;
                        for (int k = 0; k < 200 && ok; ++k) {
                            const SimpleValuation mu = randomValuation(poset, s);
                            ok = evalDual(phi, mu) == evalValuation(mu, f);
                        }
                        recover.record(ok, label);
                        recovered.push_back(f);
                    } catch (const NotLSC& e) {
                        const bool ok = !monotone && poset.leq(e.lower(), e.upper()) && c[e.lower()] > c[e.upper()];
                        notLsc.record(ok, label);
                    }
                });
            }
            // Distinct monotone functions are told apart by a Dirac valuation.
            for (std::size_t i = 0; i + 1 < recovered.size(); ++i) {
                const LSCFun& f = recovered[i];
                const LSCFun& g = recovered[i + 1];
                bool separated = f == g;
                for (std::size_t x = 0; x < n && !separated; ++x) {
                    const SimpleValuation delta = SimpleValuation::dirac(poset, x);
                    separated = evalValuation(delta, f) != evalValuation(delta, g);
                }
                bijective.record(separated, plabel);
            }

            // Linearity, chain sups and the sup representation.
            for (int trial = 0; trial < 10; ++trial) {
                const LSCFun f(poset, randomMonotone(poset, s, 1, 10));
                const LSCFun g(poset, randomMonotone(poset, s, 1, 10));
                const ExtReal r = s.extReal(6, 3, 1, 10);
                const SimpleValuation mu = randomValuation(poset, s);
                linearity.record(evalValuation(mu, f + g) == evalValuation(mu, f) + evalValuation(mu, g)
                                     && evalValuation(mu, r * f) == r * evalValuation(mu, f),
                                 plabel);
                std::vector<LSCFun> chain{f};
                chain.push_back(sup(std::vector<LSCFun>{f, g}));
                chain.push_back(chain.back() + g);
                ExtReal best;
                for (const auto& h : chain)
                    best = std::max(best, evalValuation(mu, h));
                scott.record(evalValuation(mu, sup(chain)) == best, plabel);

                const DualFunctionalRep phi{f.values()};
                const LSCFun rec = ssRecover(phi, poset);
                const auto single = lemma2SupCheck(phi, poset, {rec}, seed + trial, 40);
                std::vector<LSCFun> partial;
                for (const auto& [level, open] : toSteps(rec)) {
                    LSCFun st = step(poset, level, open.mask);
                    partial.push_back(partial.empty() ? st : sup(std::vector<LSCFun>{partial.back(), st}));
                }
                if (partial.empty())
                    partial.push_back(LSCFun::zero(poset));
                const auto steps = lemma2SupCheck(phi, poset, partial, seed + trial, 40);
                bool ok = single.bounded && single.equal && steps.bounded && steps.equal;
                const bool phiZero = std::all_of(f.values().begin(), f.values().end(),
                                                 [](const ExtReal& v) { return v.isZero(); });
                if (!phiZero) {
                    const auto zero = lemma2SupCheck(phi, poset, {LSCFun::zero(poset)}, seed + trial, 40);
                    ok = ok && zero.bounded && !zero.equal;
                }
                lemma2.record(ok, plabel);

                std::vector<LSCFun> family{f, g, r * f, f + g};
                coneOps.record(isLsc(sup(family).values(), poset).lsc && isLsc(inf(family).values(), poset).lsc,
                               plabel);
            }
        }
    }

    // Moebius inversion, exhaustive on posets with at most four elements.
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t pi = 0; pi < bySize[n].size(); ++pi) {
            const FinitePoset& poset = bySize[n][pi];
            const std::string plabel = "poset " + std::to_string(n) + "." + std::to_string(pi);
            const auto opens = allOpens(poset);

            std::vector<long> digits(n, 0);
            for (bool more = true; more;) {
                SimpleValuation mu = SimpleValuation::zero(poset);
                for (std::size_t x = 0; x < n; ++x)
                    mu.weights[x] = digits[x];
                guarded(mobiusWeights, plabel, [&] {
                    mobiusWeights.record(fromOpens(toOpens(mu)) == mu, plabel);
                });
                more = false;
                for (std::size_t x = 0; x < n; ++x) {
                    if (++digits[x] <= 3) {
                        more = true;
                        break;
                    }
                    digits[x] = 0;
                }
            }

            // Tables with values in {0,..,3}: exhaustive when small, otherwise
            // valuation tables and their single-entry perturbations.
            std::vector<ValuationOnOpens> tables;
            if (opens.size() <= 8) {
                std::vector<long> vals(opens.size(), 0);
                for (bool more = true; more;) {
                    ValuationOnOpens nu{poset, {}};
                    for (std::size_t i = 0; i < opens.size(); ++i)
                        nu.table.emplace(opens[i], ExtReal(vals[i]));
                    tables.push_back(std::move(nu));
                    more = false;
                    for (std::size_t i = 0; i < opens.size(); ++i) {
                        if (++vals[i] <= 3) {
                            more = true;
                            break;
                        }
                        vals[i] = 0;
                    }
                }
            } else {
                std::vector<long> w(n, 0);
                for (bool more = true; more;) {
                    SimpleValuation mu = SimpleValuation::zero(poset);
                    for (std::size_t x = 0; x < n; ++x)
                        mu.weights[x] = w[x];
                    ValuationOnOpens nu = toOpens(mu);
                    tables.push_back(nu);
                    const auto& victim = opens[static_cast<std::size_t>(s.uniform(0, static_cast<long>(opens.size()) - 1))];
                    nu.table[victim] = nu.table[victim] + ExtReal(1);
                    tables.push_back(std::move(nu));
                    more = false;
                    for (std::size_t x = 0; x < n; ++x) {
                        if (++w[x] <= 3) {
                            more = true;
                            break;
                        }
                        w[x] = 0;
                    }
                }
            }
            for (const auto& nu : tables) {
                // Independent validity: zero on the empty set, monotone and modular.
                bool valid = nu.table.at(OpenSet{0}).isZero();
                for (const auto& [u1, v1] : nu.table)
                    for (const auto& [u2, v2] : nu.table) {
                        if ((u1.mask & u2.mask) == u1.mask && v1 > v2)
                            valid = false;
                        const ExtReal join = nu.table.at(OpenSet{u1.mask | u2.mask});
                        const ExtReal meet = nu.table.at(OpenSet{u1.mask & u2.mask});
                        if (v1 + v2 != join + meet)
                            valid = false;
                    }
                bool ok = false;
                try {
                    const SimpleValuation mu = fromOpens(nu);
                    ok = valid && toOpens(mu).table == nu.table;
                } catch (const NotAValuation&) {
                    ok = !valid;
                }
                mobiusTables.record(ok, plabel);
            }

            // Infinite weights: inversion is defined exactly when no strict
            // up-set above an element carries infinite mass.
            for (int trial = 0; trial < 20; ++trial) {
                SimpleValuation mu = SimpleValuation::zero(poset);
                for (auto& w : mu.weights)
                    w = s.chance(1, 3) ? inf() : ExtReal(s.uniform(0, 3));
                const ValuationOnOpens nu = toOpens(mu);
                bool blocked = false;
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        if (x != y && poset.leq(x, y) && mu.weights[y].isInfinite())
                            blocked = true;
                bool ok = false;
                try {
                    const SimpleValuation back = fromOpens(nu);
                    ok = !blocked && back == mu;
                } catch (const UndefinedDifference&) {
                    ok = blocked;
                }
                mobiusInfinite.record(ok, plabel + " weights " + ExtVec(mu.weights).toString());
            }
        }
    }

    // Monotonicity versus open preimages, exhaustive on values {0,1,2}.
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& poset : bySize[n]) {
            std::vector<long> digits(n, 0);
            for (bool more = true; more;) {
                std::vector<ExtReal> values;
                for (long d : digits)
                    values.emplace_back(d);
                lsc.record(isLsc(values, poset).lsc == oracle::lscByPreimages(values, poset),
                           "size " + std::to_string(n));
                more = false;
                for (std::size_t x = 0; x < n; ++x) {
                    if (++digits[x] <= 2) {
                        more = true;
                        break;
                    }
                    digits[x] = 0;
                }
            }
        }
    }

    report.criteria = {census, recover, notLsc, bijective, mobiusWeights, mobiusTables,
                       mobiusInfinite, linearity, scott, lemma2, lsc, coneOps};
    return report;
}

// ---------------------------------------------------------------------------
// Worked examples
// ---------------------------------------------------------------------------

SuiteReport regressionSuite(std::uint64_t seed)
{
    SuiteReport report{"regression", seed, {}};
    CriterionResult projection{"projection_not_monotone_for_specialization"};
    CriterionResult examples{"worked_examples"};

    const std::vector<LinFun> cone{LinFun{{1, 0}}, LinFun{{1, 1}}};
    const LinFun pi2{{0, 1}};
    projection.record(specLeq(ExtVec{1, 1}, ExtVec{2, 0}, cone), "(1,1) <=s (2,0)");
    projection.record(eval(pi2, ExtVec{1, 1}) == ExtReal(1) && eval(pi2, ExtVec{2, 0}) == ExtReal(0)
                          && eval(pi2, ExtVec{1, 1}) > eval(pi2, ExtVec{2, 0}),
                      "pi2(1,1) = 1 > 0 = pi2(2,0)");
    projection.record(!specLeq(ExtVec{2, 0}, ExtVec{1, 1}, cone), "(2,0) not <=s (1,1)");

    guarded(examples, "separation", [&] {
        const auto out = separate({ExtVec{2, 0}, ExtVec{0, 2}}, 2);
        examples.record(std::holds_alternative<Separated>(out)
                            && std::get<Separated>(out).weights.a == std::vector<Rational>{Rational(1, 2), Rational(1, 2)},
                        "separate {(2,0),(0,2)}");
        const auto meets = separate({ExtVec{3, 0}, ExtVec{0, 3}}, 2);
        examples.record(std::holds_alternative<MeetsV>(meets)
                            && combine({ExtVec{3, 0}, ExtVec{0, 3}}, std::get<MeetsV>(meets).witness)
                                   == ExtVec{ExtReal(3, 2), ExtReal(3, 2)},
                        "separate {(3,0),(0,3)}");
        const auto infinite = separate({ExtVec{inf(), 0}}, 2);
        examples.record(std::holds_alternative<Separated>(infinite)
                            && std::get<Separated>(infinite).weights.a == std::vector<Rational>{0, 1},
                        "separate {(inf,0)}");
    });
    guarded(examples, "interpolation", [&] {
        const std::vector<LinFun> clause{LinFun{{2, 0}}, LinFun{{0, 2}}};
        const auto r = interpolate(clause, SublinFun{{LinFun{{1, 1}}}});
        examples.record(r.a == std::vector<Rational>{Rational(1, 2), Rational(1, 2)} && r.lambda == std::vector<Rational>{1},
                        "interpolate {(2,0),(0,2)} under (1,1)");
        const auto w = theoremMainWitnesses({{0, 1}, {2}}, {LinFun{{2, 0}}, LinFun{{0, 2}}, LinFun{{1, 1}}},
                                            SublinFun{{LinFun{{1, 1}}}});
        examples.record(w.size() == 2 && w[0].x == LinFun{{1, 1}} && w[1].x == LinFun{{1, 1}},
                        "witnesses for two clauses");
    });
    guarded(examples, "valuations", [&] {
        const FinitePoset chain = FinitePoset::chain(2);
        const LSCFun f = ssRecover(DualFunctionalRep{{1, 2}}, chain);
        SimpleValuation mu = SimpleValuation::zero(chain);
        mu.weights = {3, 2};
        examples.record(evalValuation(mu, f) == ExtReal(7), "3 delta_0 + 2 delta_1 on (1,2)");
        bool rejected = false;
        try {
            ssRecover(DualFunctionalRep{{2, 1}}, chain);
        } catch (const NotLSC& e) {
            rejected = e.lower() == 0 && e.upper() == 1;
        }
        examples.record(rejected, "c = (2,1) rejected with (0,1)");
        ValuationOnOpens nu{chain, {{OpenSet{0}, 0}, {OpenSet{2}, 2}, {OpenSet{3}, 5}}};
        examples.record(fromOpens(nu).weights == std::vector<ExtReal>{3, 2}, "Moebius on the 2-chain");
        examples.record(allOpens(chain) == std::vector<OpenSet>{{0}, {2}, {3}}, "opens of Sierpinski space");
    });

    report.criteria = {projection, examples};
    return report;
}

// ---------------------------------------------------------------------------
// Directedness shadow
// ---------------------------------------------------------------------------

SuiteReport lemma1Suite(std::uint64_t seed)
{
    SuiteReport report{"lemma1", seed, {}};
    CriterionResult directed{"directedness_on_grid"};
    CriterionResult nontrivial{"admissible_sets_nonempty"};

    Sampler s(seed);
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto posets = posetsUpToIsomorphism(n);
        for (std::size_t pi = 0; pi < posets.size(); ++pi) {
            const FinitePoset& poset = posets[pi];
            std::vector<std::vector<ExtReal>> coefficientSets;
            coefficientSets.push_back(std::vector<ExtReal>(n, ExtReal(2)));
            coefficientSets.push_back(randomMonotone(poset, s, 1, 8));
            std::vector<ExtReal> raw;
            for (std::size_t x = 0; x < n; ++x)
                raw.push_back(s.extReal(6, 3, 1, 8));
            coefficientSets.push_back(raw);
            for (std::size_t c = 0; c < coefficientSets.size(); ++c) {
                const std::string label = "poset " + std::to_string(n) + "." + std::to_string(pi)
                                        + " phi " + std::to_string(c);
                guarded(directed, label, [&] {
                    const auto r = lemma1DirectednessCheck(DualFunctionalRep{coefficientSets[c]}, poset, 2,
                                                           ExtReal(2), seed + c, 200);
                    std::string detail;
                    if (r.counterexample) {
                        const auto show = [](const LSCFun& f) {
                            std::string t;
                            for (const auto& v : f.values())
                                t += v.toString() + " ";
                            return t;
                        };
                        detail = ": no upper bound for [" + show(r.counterexample->first) + "] and ["
                               + show(r.counterexample->second) + "]";
                    }
                    directed.record(r.directed, label + detail);
                    nontrivial.record(r.admissible >= 1 && r.candidates >= r.admissible, label);
                });
            }
        }
    }
    report.criteria = {directed, nontrivial};
    return report;
}

}   // namespace conedual::checks
