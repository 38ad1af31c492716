#include "feasikit/analysis/records.hpp"

namespace feasikit {

nlohmann::json order_record(const std::string& method, const std::string& problem, const OrderEstimate& est) {
    return {{"method", method},
            {"problem", problem},
            {"q", est.q.to_string(30)},
            {"c", est.c.to_string(30)},
            {"residual", est.residual.to_string(30)},
            {"window", {est.first, est.last}}};
}

}  // namespace feasikit
