// qlab: expand eta quotients, dissect series, check congruences and run the
// verification suite for the signed cubic-partition function A(n).
//
// Exit codes: 0 all checks hold (or are vacuous), 1 a counterexample was
// found, 2 usage, parse or evaluation error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlab/builders.hpp"
#include "qlab/congruence_lab.hpp"
#include "qlab/dissection.hpp"
#include "qlab/partition_oracle.hpp"

namespace
{

using namespace qlab;

constexpr int kExitHolds = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::size_t env_order(const char *name, std::size_t fallback)
{
    const char *v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
        return fallback;
    }
    try {
        const long parsed = std::stol(v);
        if (parsed >= 1) {
            return static_cast<std::size_t>(parsed);
        }
    } catch (const std::exception &) {
    }
    std::cerr << "warning: ignoring invalid " << name << "=" << v << "\n";
    return fallback;
}

struct CliConfig {
    std::size_t order_exact = env_order("QLAB_ORDER_EXACT", 2000);
    std::size_t order_mod = env_order("QLAB_ORDER_MOD", 100000);
    std::string ring = "exact";
    std::optional<std::uint32_t> modulus;
    std::optional<std::size_t> order;
    bool json = false;

    bool modular() const { return ring == "mod" || modulus.has_value(); }
    std::uint32_t mod_value() const { return modulus.value_or(3); }
    std::size_t effective_order() const { return order.value_or(modular() ? order_mod : order_exact); }
};

/// Named builders, otherwise an eta expression.
template <class Ring>
Series<Ring> resolve_series(const std::string &text, const Ring &ring, std::size_t order)
{
    if (text == "A") {
        return a_series(ring, order);
    }
    if (text == "phi") {
        return theta(ThetaKind::PhiPlus, ring, order);
    }
    if (text == "phi-") {
        return theta(ThetaKind::PhiMinus, ring, order);
    }
    if (text == "psi") {
        return theta(ThetaKind::PsiPlus, ring, order);
    }
    if (text == "psi-") {
        return theta(ThetaKind::PsiMinus, ring, order);
    }
    return evaluate(text, ring, order);
}

int emit(const std::vector<CheckReport> &reports, bool json)
{
    int code = kExitHolds;
    for (const auto &r : reports) {
        std::cout << (json ? to_json_line(r) : to_text_line(r)) << "\n";
        if (r.verdict == Verdict::Counterexample) {
            code = kExitCounterexample;
        } else if (r.verdict == Verdict::Vacuous) {
            std::cerr << "warning: " << r.id << " is vacuous at order " << r.order << "\n";
        }
    }
    return code;
}

Family parse_family(int id)
{
    if (id == 1) {
        return Family::Family1;
    }
    if (id == 2) {
        return Family::Family2;
    }
    throw CLI::ValidationError("family", "family id must be 1 or 2");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Truncated q-series engine and congruence checker for the signed cubic-partition function A(n)"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_ring_flags = [&](CLI::App *cmd) {
        cmd->add_option("--order", cfg.order, "number of coefficients")->check(CLI::PositiveNumber);
        cmd->add_option("--ring", cfg.ring, "coefficient ring")->check(CLI::IsMember({"exact", "mod"}));
        cmd->add_option("--mod", cfg.modulus, "work modulo m (implies --ring mod)")->check(CLI::Range(2u, 0xFFFFFFFFu));
    };

    // expand
    std::string expand_expr;
    auto *expand = app.add_subcommand("expand", "print coefficients of an eta expression or A, phi, phi-, psi, psi-");
    expand->add_option("expr", expand_expr)->required();
    add_ring_flags(expand);

    // dissect
    std::string dissect_expr;
    long dissect_k = 0;
    long dissect_r = 0;
    auto *dissect_cmd = app.add_subcommand("dissect", "print sum_n c(kn+r) q^n of a series");
    dissect_cmd->add_option("expr", dissect_expr)->required();
    dissect_cmd->add_option("k", dissect_k)->required()->check(CLI::Range(2L, 1000000L));
    dissect_cmd->add_option("r", dissect_r)->required()->check(CLI::NonNegativeNumber);
    add_ring_flags(dissect_cmd);

    // check
    auto *check = app.add_subcommand("check", "verify claims, identities and the full suite");
    check->require_subcommand(1);
    check->add_flag("--json", cfg.json, "emit one JSON object per report");

    long claim_a = 0, claim_b = 0;
    std::uint32_t claim_m = 0;
    auto *claim = check->add_subcommand("claim", "A(a n + b) = 0 (mod m)");
    claim->add_option("a", claim_a)->required()->check(CLI::PositiveNumber);
    claim->add_option("b", claim_b)->required()->check(CLI::NonNegativeNumber);
    claim->add_option("m", claim_m)->required()->check(CLI::Range(2u, 0xFFFFFFFFu));
    claim->add_option("--order", cfg.order)->check(CLI::PositiveNumber);
    claim->add_flag("--json", cfg.json);

    auto *internal = check->add_subcommand("internal", "A(27n+8) = A(3n+1) (mod 3)");
    internal->add_option("--order", cfg.order)->check(CLI::PositiveNumber);
    internal->add_flag("--json", cfg.json);

    int family_id = 0;
    int family_j = 0;
    long step_count = 1000;
    auto *family = check->add_subcommand("family", "member j of infinite family 1 or 2");
    family->add_option("id", family_id)->required()->check(CLI::IsMember({1, 2}));
    family->add_option("j", family_j)->required()->check(CLI::Range(0, 16));
    family->add_option("--order", cfg.order)->check(CLI::PositiveNumber);
    family->add_flag("--json", cfg.json);

    auto *family_step = check->add_subcommand("family-step", "index arithmetic of the induction step j -> j+1");
    family_step->add_option("id", family_id)->required()->check(CLI::IsMember({1, 2}));
    family_step->add_option("j", family_j)->required()->check(CLI::Range(0, 15));
    family_step->add_option("--count", step_count, "values of n to check")->check(CLI::NonNegativeNumber);
    family_step->add_flag("--json", cfg.json);

    std::string lhs_expr, rhs_expr;
    auto *identity = check->add_subcommand("identity", "compare two eta expressions (or named builders)");
    identity->add_option("lhs", lhs_expr)->required();
    identity->add_option("rhs", rhs_expr)->required();
    add_ring_flags(identity);
    identity->add_flag("--json", cfg.json);

    auto *suite = check->add_subcommand("suite", "run every identity, dissection and congruence check");
    suite->add_option("--order-exact", cfg.order_exact)->check(CLI::PositiveNumber);
    suite->add_option("--order-mod", cfg.order_mod)->check(CLI::PositiveNumber);
    suite->add_flag("--json", cfg.json);

    // oracle
    std::optional<long> oracle_n;
    std::optional<long> oracle_upto;
    long oracle_cap = kDefaultEnumerationCap;
    auto *oracle = app.add_subcommand("oracle", "count cubic partitions by parity of the number of parts");
    auto *n_opt = oracle->add_option("n", oracle_n, "explicit enumeration for a single n")->check(CLI::NonNegativeNumber);
    auto *upto_opt
        = oracle->add_option("--upto", oracle_upto, "table for 0..N by dynamic programming")->check(CLI::NonNegativeNumber);
    n_opt->excludes(upto_opt);
    oracle->add_option("--cap", oracle_cap, "enumeration cap")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*expand) {
            const auto order = cfg.effective_order();
            if (cfg.modular()) {
                std::cout << to_string(resolve_series(expand_expr, ModRing(cfg.mod_value()), order)) << "\n";
            } else {
                std::cout << to_string(resolve_series(expand_expr, IntegerRing{}, order)) << "\n";
            }
            return kExitHolds;
        }
        if (*dissect_cmd) {
            const auto order = cfg.effective_order();
            if (dissect_r >= dissect_k) {
                throw std::invalid_argument("residue r must be smaller than k");
            }
            if (cfg.modular()) {
                const auto s = resolve_series(dissect_expr, ModRing(cfg.mod_value()), order);
                std::cout << to_string(dissect(s, dissect_k, dissect_r)) << "\n";
            } else {
                const auto s = resolve_series(dissect_expr, IntegerRing{}, order);
                std::cout << to_string(dissect(s, dissect_k, dissect_r)) << "\n";
            }
            return kExitHolds;
        }
        if (*check) {
            std::vector<CheckReport> reports;
            if (*claim) {
                reports.push_back(check_claim({claim_a, claim_b, claim_m}, cfg.order.value_or(cfg.order_mod)));
            } else if (*internal) {
                reports.push_back(check_internal(cfg.order.value_or(cfg.order_mod)));
            } else if (*family) {
                const auto c = expand_family({parse_family(family_id), family_j});
                auto r = check_claim(c, cfg.order.value_or(cfg.order_mod));
                r.id = "family" + std::to_string(family_id) + "-j" + std::to_string(family_j);
                reports.push_back(std::move(r));
            } else if (*family_step) {
                const auto fam = parse_family(family_id);
                reports.push_back(check_family_step(fam, family_j, step_count));
                reports.push_back(check_family_step_integrality(fam, family_j, step_count));
            } else if (*identity) {
                const auto order = cfg.effective_order();
                std::string claim_text = lhs_expr + " = " + rhs_expr;
                if (cfg.modular()) {
                    const ModRing ring(cfg.mod_value());
                    claim_text += " (mod " + std::to_string(cfg.mod_value()) + ")";
                    reports.push_back(compare_series("identity", claim_text, resolve_series(lhs_expr, ring, order),
                                                     resolve_series(rhs_expr, ring, order)));
                } else {
                    const IntegerRing ring;
                    reports.push_back(compare_series("identity", claim_text, resolve_series(lhs_expr, ring, order),
                                                     resolve_series(rhs_expr, ring, order)));
                }
            } else if (*suite) {
                reports = full_suite(cfg.order_exact, cfg.order_mod);
            }
            return emit(reports, cfg.json);
        }
        if (*oracle) {
            if (oracle_upto) {
                const long limit = *oracle_upto + 1;
                const auto signed_counts = signed_count_dp(limit);
                const auto totals = cubic_count_dp(limit);
                const auto series = a_series(IntegerRing{}, static_cast<std::size_t>(limit));
                bool all_agree = true;
                for (long n = 0; n < limit; ++n) {
                    const auto i = static_cast<std::size_t>(n);
                    const Integer even = (totals[i] + signed_counts[i]) / 2;
                    const Integer odd = (totals[i] - signed_counts[i]) / 2;
                    const bool agree = signed_counts[i] == series[i];
                    all_agree = all_agree && agree;
                    std::cout << "n=" << n << " even=" << even.get_str() << " odd=" << odd.get_str()
                              << " A=" << signed_counts[i].get_str() << " agree=" << (agree ? "yes" : "no") << "\n";
                }
                return all_agree ? kExitHolds : kExitCounterexample;
            }
            if (!oracle_n) {
                std::cerr << "oracle: give n or --upto N\n";
                return kExitUsage;
            }
            const auto count = enumerate_cubic(*oracle_n, oracle_cap);
            const auto series = a_series(IntegerRing{}, static_cast<std::size_t>(*oracle_n + 1));
            const bool agree = series[static_cast<std::size_t>(*oracle_n)] == count.a_value;
            std::cout << "n=" << count.n << " even=" << count.even_parts_count << " odd=" << count.odd_parts_count
                      << " A=" << count.a_value << " agree=" << (agree ? "yes" : "no") << "\n";
            return agree ? kExitHolds : kExitCounterexample;
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
