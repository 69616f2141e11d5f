#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qstab/harness/checks.hpp"
#include "qstab/harness/numsg_system.hpp"
#include "qstab/harness/order_system.hpp"

namespace qstab::harness {

using Backend = std::variant<std::shared_ptr<OrderSystem>, std::shared_ptr<NumsgSystem>>;

/// "order:<polynomial>" or "numsg:<g1>,<g2>,...". Throws
/// std::invalid_argument on anything else.
Backend make_backend(const std::string& text, long genus_bound = 12);

std::string backend_name(const Backend& b);

/// Runs the named checks (or every check for "all") in suite order.
std::vector<TheoremReport> run_suite(const Backend& b, const std::vector<std::string>& names,
                                     const CheckOptions& opts);

/// Expands "all" and validates names; throws UnknownCheck.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

}  // namespace qstab::harness
