#include <nlohmann/json.hpp>

#include "qlab/congruence_lab.hpp"

namespace qlab
{

std::string to_json_line(const CheckReport &r)
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["claim"] = r.claim;
    j["order"] = r.order;
    j["checked"] = r.checked;
    j["verdict"] = to_string(r.verdict);
    if (r.witness) {
        j["witness"] = {{"n", r.witness->n}, {"index", r.witness->index}, {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs}};
    }
    return j.dump();
}

std::string to_text_line(const CheckReport &r)
{
    std::string out = "[" + to_string(r.verdict) + "] " + r.id + ": " + r.claim + " (order " + std::to_string(r.order)
                      + ", " + std::to_string(r.checked) + " checked)";
    if (r.witness) {
        const auto &w = *r.witness;
        out += "; first failure at n=" + std::to_string(w.n) + " index=" + std::to_string(w.index) + ": got " + w.lhs
               + ", expected " + w.rhs;
    }
    return out;
}

} // namespace qlab
