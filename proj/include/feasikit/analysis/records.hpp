#pragma once

#include "feasikit/analysis/convergence.hpp"

#include <json.hpp>

#include <string>

namespace feasikit {

/// {method, problem, q, c, residual, window: [first, last]} with decimal-string scalars.
nlohmann::json order_record(const std::string& method, const std::string& problem, const OrderEstimate& est);

}  // namespace feasikit
