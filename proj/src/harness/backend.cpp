#include "qstab/harness/backend.hpp"

#include <algorithm>

#include "qstab/numsg/semigroup.hpp"
#include "qstab/order/monogenic_order.hpp"

namespace qstab::harness {

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "flat_criterion",    "flat_iff_invertible",     "colon_identity", "flat_implies_t", "stability_chain",
        "overring_transfer", "localization_hypothesis", "question2_scan", "ff_invertible",
    };
    return names;
}

Backend make_backend(const std::string& text, long genus_bound) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("backend must look like order:<poly> or numsg:<gens>");
    const std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    if (kind == "order") return std::make_shared<OrderSystem>(order::MonogenicOrder::parse(arg));
    if (kind == "numsg") return std::make_shared<NumsgSystem>(numsg::parse_semigroup(arg), genus_bound);
    throw std::invalid_argument("unknown backend kind \"" + kind + "\"");
}

std::string backend_name(const Backend& b) {
    return std::visit([](const auto& sys) { return sys->name(); }, b);
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& n : names) {
        if (n == "all") {
            for (const auto& c : check_names())
                if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
            continue;
        }
        if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
            throw UnknownCheck("unknown check \"" + n + "\"");
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return out;
}

std::vector<TheoremReport> run_suite(const Backend& b, const std::vector<std::string>& names,
                                     const CheckOptions& opts) {
    std::vector<TheoremReport> out;
    for (const auto& name : resolve_checks(names))
        out.push_back(std::visit([&](const auto& sys) { return run_check(name, *sys, opts); }, b));
    return out;
}

}  // namespace qstab::harness
