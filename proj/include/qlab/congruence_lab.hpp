#pragma once

// Finite verification of congruences and identities for A(n).
//
// Every check returns a CheckReport instead of throwing on failure, so a
// suite of checks always runs to the end and reports the first failing
// coefficient of each check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlab/eta_expression.hpp"
#include "qlab/ring.hpp"
#include "qlab/series.hpp"

namespace qlab
{

enum class Verdict { Holds, Counterexample, Vacuous };

std::string to_string(Verdict v);

struct Witness {
    long n;          // progression parameter, or exponent for identities
    long index;      // argument of A, or exponent for identities
    std::string lhs; // value found
    std::string rhs; // value expected
};

struct CheckReport {
    std::string id;
    std::string claim;
    std::size_t order = 0;   // truncation order the check ran at
    std::size_t checked = 0; // number of coefficients / indices examined
    Verdict verdict = Verdict::Vacuous;
    std::optional<Witness> witness;
};

/// A(a n + b) = 0 (mod m) for all n >= 0.
struct CongruenceClaim {
    long a;
    long b;
    std::uint32_t m;
};

std::string describe(const CongruenceClaim &c);

enum class Family { Family1, Family2 };

/// Family1: A(9^{j+1} n + (39*9^j + 1)/8) = 0 (mod 3).
/// Family2: A(3*9^{j+1} n + (23*9^{j+1} + 1)/8) = 0 (mod 3).
struct FamilyClaim {
    Family family;
    int j;
};

CongruenceClaim expand_family(const FamilyClaim &f);

/// Scans every n with a n + b < order.
CheckReport check_claim(const CongruenceClaim &c, std::size_t order);
/// Same, reusing a precomputed A-series mod c.m.
CheckReport check_claim(const CongruenceClaim &c, const Series<ModRing> &a_mod);

/// A(27n + 8) = A(3n + 1) (mod 3) for every n with 27n + 8 < order.
CheckReport check_internal(std::size_t order);
CheckReport check_internal(const Series<ModRing> &a_mod3);

/// Index arithmetic of the induction step for both families: for every index
/// i of member j+1, 3 (i-8)/27 + 1 is the index of member j at the same n.
/// Exact rational arithmetic; checked on the first `count` values of n.
CheckReport check_family_step(Family family, int j, long count);

/// Whether the indices of member j+1 are of the form 27m+8 with m an
/// integer, i.e. whether A(27m+8) = A(3m+1) applies to them directly. It does
/// not: (i-8)/27 = 3n + 4/3 for Family1 at j = 0.
CheckReport check_family_step_integrality(Family family, int j, long count);

/// Compares two series coefficient by coefficient up to their common order.
template <class Ring>
CheckReport compare_series(std::string id, std::string claim, const Series<Ring> &lhs, const Series<Ring> &rhs)
{
    CheckReport r;
    r.id = std::move(id);
    r.claim = std::move(claim);
    r.order = std::min(lhs.order(), rhs.order());
    r.checked = r.order;
    if (r.order == 0) {
        r.verdict = Verdict::Vacuous;
        return r;
    }
    if (auto at = first_difference(lhs, rhs)) {
        const long e = static_cast<long>(*at);
        r.verdict = Verdict::Counterexample;
        r.witness = Witness{e, e, lhs.ring().to_string(lhs[*at]), rhs.ring().to_string(rhs[*at])};
    } else {
        r.verdict = Verdict::Holds;
    }
    return r;
}

/// Evaluates both sides to the given order and compares them, over Z when no
/// modulus is given and over Z/mZ otherwise.
CheckReport verify_identity(const EtaExpression &lhs, const EtaExpression &rhs, std::size_t order,
                            std::optional<std::uint32_t> modulus = std::nullopt);

/// Series shared by the steps of a suite run.
struct SuiteContext {
    std::size_t order_exact;
    std::size_t order_mod;
    Series<IntegerRing> a_exact; // A(n), n < order_exact
    Series<ModRing> a_mod3;      // A(n) mod 3, n < order_mod
};

SuiteContext make_suite_context(std::size_t order_exact, std::size_t order_mod);

struct SuiteStep {
    std::string id;
    std::string claim;
    /// Eta expression the step compares against; empty for steps that do not
    /// use one. Tests may replace it to inject a faulty fixture.
    std::string expression;
    std::function<CheckReport(const SuiteContext &, const SuiteStep &)> run;
};

/// Every identity, dissection, congruence and family check, in derivation
/// order: theta product forms, the four theta 3-dissections, the chain for
/// A(3n+2), A(9n+5), A(9n+8), A(27n+26), A(27n+8) and A(3n+1), the internal
/// congruence, the two vanishing congruences and both infinite families.
std::vector<SuiteStep> suite_steps();

/// Runs all steps in order. A step that throws is reported as a
/// Counterexample whose witness has n = index = -1 and the message as lhs.
std::vector<CheckReport> run_suite(const std::vector<SuiteStep> &steps, std::size_t order_exact,
                                   std::size_t order_mod);

std::vector<CheckReport> full_suite(std::size_t order_exact, std::size_t order_mod);

/// One JSON object per report: {id, claim, order, checked, verdict, witness?}.
std::string to_json_line(const CheckReport &r);
/// Human-readable one-liner.
std::string to_text_line(const CheckReport &r);

} // namespace qlab
