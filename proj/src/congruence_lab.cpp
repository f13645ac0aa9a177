#include "qlab/congruence_lab.hpp"

#include <exception>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qlab/builders.hpp"
#include "qlab/dissection.hpp"
#include "qlab/partition_oracle.hpp"

namespace qlab
{

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return "Holds";
    case Verdict::Counterexample:
        return "Counterexample";
    case Verdict::Vacuous:
        return "Vacuous";
    }
    return "?";
}

std::string describe(const CongruenceClaim &c)
{
    return "A(" + std::to_string(c.a) + "n+" + std::to_string(c.b) + ") = 0 (mod " + std::to_string(c.m) + ")";
}

namespace
{

constexpr int kMaxFamilyJ = 16;

long pow9(int e)
{
    long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= 9;
    }
    return r;
}

void validate(const CongruenceClaim &c)
{
    if (c.a < 1 || c.b < 0 || c.m < 2) {
        throw std::invalid_argument("invalid claim: need a >= 1, b >= 0, m >= 2");
    }
}

} // namespace

CongruenceClaim expand_family(const FamilyClaim &f)
{
    if (f.j < 0 || f.j > kMaxFamilyJ) {
        throw std::invalid_argument("family parameter j must be in [0, " + std::to_string(kMaxFamilyJ) + "]");
    }
    long a = 0;
    long numerator = 0;
    if (f.family == Family::Family1) {
        a = pow9(f.j + 1);
        numerator = 39 * pow9(f.j) + 1;
    } else {
        a = 3 * pow9(f.j + 1);
        numerator = 23 * pow9(f.j + 1) + 1;
    }
    if (numerator % 8 != 0) {
        throw std::logic_error("family offset " + std::to_string(numerator) + " is not divisible by 8");
    }
    return {a, numerator / 8, 3};
}

CheckReport check_claim(const CongruenceClaim &c, const Series<ModRing> &a_mod)
{
    validate(c);
    if (a_mod.ring().modulus() != c.m) {
        throw std::invalid_argument("series is mod " + std::to_string(a_mod.ring().modulus()) + ", claim is mod "
                                    + std::to_string(c.m));
    }
    CheckReport r;
    r.id = "claim-" + std::to_string(c.a) + "-" + std::to_string(c.b) + "-" + std::to_string(c.m);
    r.claim = describe(c);
    r.order = a_mod.order();
    const auto order = static_cast<long>(a_mod.order());
    for (long n = 0; c.a * n + c.b < order; ++n) {
        const long idx = c.a * n + c.b;
        ++r.checked;
        const auto v = a_mod[static_cast<std::size_t>(idx)];
        if (v != 0) {
            r.verdict = Verdict::Counterexample;
            r.witness = Witness{n, idx, std::to_string(v), "0"};
            return r;
        }
    }
    r.verdict = r.checked == 0 ? Verdict::Vacuous : Verdict::Holds;
    return r;
}

CheckReport check_claim(const CongruenceClaim &c, std::size_t order)
{
    validate(c);
    return check_claim(c, a_series(ModRing(c.m), order));
}

CheckReport check_internal(const Series<ModRing> &a_mod3)
{
    if (a_mod3.ring().modulus() != 3) {
        throw std::invalid_argument("internal congruence needs the A-series mod 3");
    }
    CheckReport r;
    r.id = "internal-27n8-3n1";
    r.claim = "A(27n+8) = A(3n+1) (mod 3)";
    r.order = a_mod3.order();
    for (std::size_t n = 0; 27 * n + 8 < a_mod3.order(); ++n) {
        ++r.checked;
        const auto hi = a_mod3[27 * n + 8];
        const auto lo = a_mod3[3 * n + 1];
        if (hi != lo) {
            r.verdict = Verdict::Counterexample;
            r.witness = Witness{static_cast<long>(n), static_cast<long>(27 * n + 8), std::to_string(hi),
                                std::to_string(lo)};
            return r;
        }
    }
    r.verdict = r.checked == 0 ? Verdict::Vacuous : Verdict::Holds;
    return r;
}

CheckReport check_internal(std::size_t order)
{
    return check_internal(a_series(ModRing(3), order));
}

CheckReport check_family_step(Family family, int j, long count)
{
    const auto member = expand_family({family, j});
    const auto next = expand_family({family, j + 1});
    CheckReport r;
    const std::string name = family == Family::Family1 ? "family1" : "family2";
    r.id = name + "-step-j" + std::to_string(j);
    r.claim = "i = " + std::to_string(next.a) + "n+" + std::to_string(next.b) + " satisfies 3(i-8)/27+1 = "
              + std::to_string(member.a) + "n+" + std::to_string(member.b);
    r.order = static_cast<std::size_t>(count);
    for (long n = 0; n < count; ++n) {
        ++r.checked;
        const long idx = next.a * n + next.b;
        const long expected = member.a * n + member.b;
        // 3(i-8)/27 + 1 = (i+1)/9, compared without division
        if (idx + 1 != 9 * expected) {
            r.verdict = Verdict::Counterexample;
            r.witness = Witness{n, idx, std::to_string(idx + 1) + "/9", std::to_string(expected)};
            return r;
        }
    }
    r.verdict = r.checked == 0 ? Verdict::Vacuous : Verdict::Holds;
    return r;
}

CheckReport check_family_step_integrality(Family family, int j, long count)
{
    const auto next = expand_family({family, j + 1});
    CheckReport r;
    const std::string name = family == Family::Family1 ? "family1" : "family2";
    r.id = name + "-step-integral-j" + std::to_string(j);
    r.claim = "i = " + std::to_string(next.a) + "n+" + std::to_string(next.b) + " has the form 27m+8 with m integral";
    r.order = static_cast<std::size_t>(count);
    for (long n = 0; n < count; ++n) {
        ++r.checked;
        const long idx = next.a * n + next.b;
        if ((idx - 8) % 27 != 0) {
            r.verdict = Verdict::Counterexample;
            r.witness = Witness{n, idx, "(i-8)/27 = " + std::to_string(idx - 8) + "/27", "an integer"};
            return r;
        }
    }
    r.verdict = r.checked == 0 ? Verdict::Vacuous : Verdict::Holds;
    return r;
}

CheckReport verify_identity(const EtaExpression &lhs, const EtaExpression &rhs, std::size_t order,
                            std::optional<std::uint32_t> modulus)
{
    std::string claim = to_string(lhs) + " = " + to_string(rhs);
    if (modulus) {
        claim += " (mod " + std::to_string(*modulus) + ")";
        const ModRing ring(*modulus);
        return compare_series("identity", claim, evaluate(lhs, ring, order), evaluate(rhs, ring, order));
    }
    const IntegerRing ring;
    return compare_series("identity", claim, evaluate(lhs, ring, order), evaluate(rhs, ring, order));
}

SuiteContext make_suite_context(std::size_t order_exact, std::size_t order_mod)
{
    return SuiteContext{order_exact, order_mod, a_series(IntegerRing{}, order_exact), a_series(ModRing(3), order_mod)};
}

namespace
{

using ExactFn = std::function<Series<IntegerRing>(const SuiteContext &)>;
using Mod3Fn = std::function<Series<ModRing>(const SuiteContext &)>;

SuiteStep exact_identity(std::string id, std::string claim, std::string rhs, ExactFn lhs)
{
    return {std::move(id), std::move(claim), std::move(rhs),
            [lhs = std::move(lhs)](const SuiteContext &ctx, const SuiteStep &step) {
                const auto left = lhs(ctx);
                const auto right = evaluate(step.expression, IntegerRing{}, left.order());
                return compare_series(step.id, step.claim, left, right);
            }};
}

SuiteStep mod3_identity(std::string id, std::string claim, std::string rhs, Mod3Fn lhs)
{
    return {std::move(id), std::move(claim), std::move(rhs),
            [lhs = std::move(lhs)](const SuiteContext &ctx, const SuiteStep &step) {
                const auto left = lhs(ctx);
                const auto right = evaluate(step.expression, ModRing(3), left.order());
                return compare_series(step.id, step.claim, left, right);
            }};
}

SuiteStep theta_identity(std::string id, std::string claim, ThetaKind kind, std::string rhs)
{
    return exact_identity(std::move(id), std::move(claim), std::move(rhs),
                          [kind](const SuiteContext &ctx) { return theta(kind, IntegerRing{}, ctx.order_exact); });
}

SuiteStep claim_step(std::string id, CongruenceClaim c)
{
    std::string claim = describe(c);
    return {std::move(id), std::move(claim), "", [c](const SuiteContext &ctx, const SuiteStep &step) {
                auto r = check_claim(c, ctx.a_mod3);
                r.id = step.id;
                return r;
            }};
}

CheckReport families_disjoint(const SuiteContext &ctx, const SuiteStep &step)
{
    CheckReport r;
    r.id = step.id;
    r.claim = step.claim;
    r.order = ctx.order_mod;
    std::vector<int> owner(ctx.order_mod, -1);
    int tag = 0;
    for (int j = 0; j <= 2; ++j) {
        for (Family fam : {Family::Family1, Family::Family2}) {
            const auto c = expand_family({fam, j});
            for (long idx = c.b; idx < static_cast<long>(ctx.order_mod); idx += c.a) {
                ++r.checked;
                auto &o = owner[static_cast<std::size_t>(idx)];
                if (o >= 0) {
                    r.verdict = Verdict::Counterexample;
                    r.witness = Witness{(idx - c.b) / c.a, idx, "progression " + std::to_string(tag),
                                        "progression " + std::to_string(o)};
                    return r;
                }
                o = tag;
            }
            ++tag;
        }
    }
    r.verdict = r.checked == 0 ? Verdict::Vacuous : Verdict::Holds;
    return r;
}

} // namespace

std::vector<SuiteStep> suite_steps()
{
    std::vector<SuiteStep> steps;

    // product forms of the theta functions
    steps.push_back(theta_identity("theta-phi", "phi(q) = f2^5/(f1^2*f4^2)", ThetaKind::PhiPlus, "f2^5/(f1^2*f4^2)"));
    steps.push_back(theta_identity("theta-phi-minus", "phi(-q) = f1^2/f2", ThetaKind::PhiMinus, "f1^2/f2"));
    steps.push_back(theta_identity("theta-psi", "psi(q) = f2^2/f1", ThetaKind::PsiPlus, "f2^2/f1"));
    steps.push_back(theta_identity("theta-psi-minus", "psi(-q) = f1*f4/f2", ThetaKind::PsiMinus, "f1*f4/f2"));

    // generating function of A(n)
    steps.push_back(exact_identity("gf-theta-quotient", "phi(-q)/psi(-q) = f1/f4", "f1/f4", [](const SuiteContext &ctx) {
        const IntegerRing z;
        return divide(theta(ThetaKind::PhiMinus, z, ctx.order_exact), theta(ThetaKind::PsiMinus, z, ctx.order_exact));
    }));
    steps.push_back(exact_identity("gf-oracle", "signed cubic-partition counts = f1/f4", "f1/f4",
                                   [](const SuiteContext &ctx) {
                                       return Series<IntegerRing>(IntegerRing{},
                                                                  signed_count_dp(static_cast<long>(ctx.order_exact)));
                                   }));

    // theta 3-dissections, exact
    steps.push_back(theta_identity("dissect3-phi-minus", "phi(-q) 3-dissection", ThetaKind::PhiMinus,
                                   "f9^2/f18 - 2*q*f3*f18^2/(f6*f9)"));
    steps.push_back(exact_identity(
        "dissect3-inv-psi-minus", "1/psi(-q) 3-dissection",
        "f18^9/(f3^2*f9^3*f12^2*f36^3) + q*f6^2*f18^3/(f3^3*f12^3) + q^2*f6^4*f9^3*f36^3/(f3^4*f12^4*f18^3)",
        [](const SuiteContext &ctx) { return invert(theta(ThetaKind::PsiMinus, IntegerRing{}, ctx.order_exact)); }));
    steps.push_back(exact_identity(
        "dissect3-inv-phi-minus", "1/phi(-q) 3-dissection", "f6^4*f9^6/(f3^8*f18^3) + 2*q*f6^3*f9^3/f3^7 + 4*q^2*f6^2*f18^3/f3^6",
        [](const SuiteContext &ctx) { return invert(theta(ThetaKind::PhiMinus, IntegerRing{}, ctx.order_exact)); }));
    steps.push_back(exact_identity(
        "dissect3-inv-psi", "1/psi(q) 3-dissection", "f3^2*f9^3/f6^6 - q*f3^3*f18^3/f6^7 + q^2*f3^4*f18^6/(f6^8*f9^3)",
        [](const SuiteContext &ctx) { return invert(theta(ThetaKind::PsiPlus, IntegerRing{}, ctx.order_exact)); }));

    // A(3n+2)
    steps.push_back(exact_identity("a3n2-extract", "sum A(3n+2) q^(3n+2)",
                                   "q^2*f6^4*f9^5*f36^3/(f3^4*f12^4*f18^4) - 2*q^2*f6*f18^5/(f3^2*f9*f12^3)",
                                   [](const SuiteContext &ctx) { return extract(ctx.a_exact, 3, 2); }));
    steps.push_back(exact_identity("a3n2", "sum A(3n+2) q^n",
                                   "f2^4*f3^5*f12^3/(f1^4*f4^4*f6^4) - 2*f2*f6^5/(f1^2*f3*f4^3)",
                                   [](const SuiteContext &ctx) { return dissect(ctx.a_exact, 3, 2); }));
    steps.push_back(mod3_identity("a3n2-mod3", "sum A(3n+2) q^n (mod 3)",
                                  "f2*f3^4*f12^2/(f1*f4*f6^3) - 2*f2*f6^5/(f1^2*f3*f12)",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 3, 2); }));

    // A(9n+5)
    steps.push_back(mod3_identity("a9n5-extract", "sum A(9n+5) q^(3n+1) (mod 3)",
                                  "q*f3*f18^3/(f6*f12) - 4*q*f6^8*f9^3/(f3^8*f12)",
                                  [](const SuiteContext &ctx) { return extract(dissect(ctx.a_mod3, 3, 2), 3, 1); }));
    steps.push_back(mod3_identity("a9n5-collapse", "sum A(9n+5) q^(3n+1) = -3 q f3 f18^3/(f6 f12) (mod 3)",
                                  "-3*q*f3*f18^3/(f6*f12)",
                                  [](const SuiteContext &ctx) { return extract(dissect(ctx.a_mod3, 3, 2), 3, 1); }));
    steps.push_back(mod3_identity("a9n5-zero", "sum A(9n+5) q^n = 0 (mod 3)", "0",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 9, 5); }));

    // A(9n+8)
    steps.push_back(mod3_identity("a9n8-extract", "sum A(9n+8) q^(3n+2) (mod 3)",
                                  "q^2*f6*f9^3*f36^3/(f12^2*f18^3) - 8*q^2*f6^7*f18^3/(f3^7*f12)",
                                  [](const SuiteContext &ctx) { return extract(dissect(ctx.a_mod3, 3, 2), 3, 2); }));
    steps.push_back(mod3_identity("a9n8", "sum A(9n+8) q^n (mod 3)",
                                  "f2*f3^3*f12^3/(f4^2*f6^3) - 8*f2^7*f6^3/(f1^7*f4)",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 9, 8); }));
    steps.push_back(mod3_identity("a9n8-regrouped", "sum A(9n+8) q^n, regrouped (mod 3)",
                                  "f2*f3^3*f12^3/(f4^2*f6^3) - 8*f2*f6^5/(f1*f4*f3^2)",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 9, 8); }));

    // A(27n+26)
    steps.push_back(mod3_identity("a27n26", "sum A(27n+26) q^n (mod 3)",
                                  "-f1^3*f12^3/f4^4 - 8*f2^9*f3^3*f12^3/(f1^6*f4^4*f6^3)",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 27, 26); }));
    steps.push_back(mod3_identity("a27n26-collapse", "sum A(27n+26) q^n = -9 f1^3 f12^3/f4^4 (mod 3)",
                                  "-f1^3*f12^3/f4^4 - 8*f1^3*f12^3/f4^4",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 27, 26); }));
    steps.push_back(mod3_identity("a27n26-zero", "sum A(27n+26) q^n = 0 (mod 3)", "0",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 27, 26); }));

    // A(27n+8) and A(3n+1)
    steps.push_back(mod3_identity("a27n8-extract", "sum A(27n+8) q^(3n) (mod 3)",
                                  "f3^3*f18^3/(f6*f12^3) - 8*f6^5*f18^9/(f3^4*f9^3*f12^2*f36^3)",
                                  [](const SuiteContext &ctx) { return extract(dissect(ctx.a_mod3, 9, 8), 3, 0); }));
    steps.push_back(mod3_identity("a27n8", "sum A(27n+8) q^n (mod 3)",
                                  "f1^3*f6^3/(f2*f4^3) - 2*f2^5*f6^9/(f1^4*f3^3*f4^2*f12^3)",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 27, 8); }));
    steps.push_back(exact_identity("a3n1-extract", "sum A(3n+1) q^(3n+1)",
                                   "q*f6^2*f9^2*f18^2/(f3^3*f12^3) - 2*q*f18^11/(f3*f6*f9^4*f12^2*f36^3)",
                                   [](const SuiteContext &ctx) { return extract(ctx.a_exact, 3, 1); }));
    steps.push_back(exact_identity("a3n1", "sum A(3n+1) q^n",
                                   "f2^2*f3^2*f6^2/(f1^3*f4^3) - 2*f6^11/(f1*f2*f3^4*f4^2*f12^3)",
                                   [](const SuiteContext &ctx) { return dissect(ctx.a_exact, 3, 1); }));
    steps.push_back(mod3_identity("a3n1-mod3", "sum A(3n+1) q^n matches sum A(27n+8) q^n (mod 3)",
                                  "f1^3*f6^3/(f2*f4^3) - 2*f2^5*f6^9/(f1^4*f3^3*f4^2*f12^3)",
                                  [](const SuiteContext &ctx) { return dissect(ctx.a_mod3, 3, 1); }));

    steps.push_back({"internal", "A(27n+8) = A(3n+1) (mod 3)", "", [](const SuiteContext &ctx, const SuiteStep &step) {
                         auto r = check_internal(ctx.a_mod3);
                         r.id = step.id;
                         return r;
                     }});

    steps.push_back(claim_step("claim-9n5", {9, 5, 3}));
    steps.push_back(claim_step("claim-27n26", {27, 26, 3}));

    for (int j = 0; j <= 2; ++j) {
        steps.push_back(claim_step("family1-j" + std::to_string(j), expand_family({Family::Family1, j})));
        steps.push_back(claim_step("family2-j" + std::to_string(j), expand_family({Family::Family2, j})));
    }
    for (int j = 0; j <= 1; ++j) {
        for (Family fam : {Family::Family1, Family::Family2}) {
            const auto proto = check_family_step(fam, j, 0);
            steps.push_back({proto.id, proto.claim, "", [fam, j](const SuiteContext &, const SuiteStep &) {
                                 return check_family_step(fam, j, 1000);
                             }});
        }
    }
    steps.push_back({"families-disjoint", "family progressions for j <= 2 share no index", "", families_disjoint});
    return steps;
}

std::vector<CheckReport> run_suite(const std::vector<SuiteStep> &steps, std::size_t order_exact, std::size_t order_mod)
{
    const auto ctx = make_suite_context(order_exact, order_mod);
    std::vector<CheckReport> reports;
    reports.reserve(steps.size());
    for (const auto &step : steps) {
        try {
            reports.push_back(step.run(ctx, step));
        } catch (const std::exception &e) {
            CheckReport r;
            r.id = step.id;
            r.claim = step.claim;
            r.verdict = Verdict::Counterexample;
            r.witness = Witness{-1, -1, e.what(), ""};
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

std::vector<CheckReport> full_suite(std::size_t order_exact, std::size_t order_mod)
{
    return run_suite(suite_steps(), order_exact, order_mod);
}

} // namespace qlab
