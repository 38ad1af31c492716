#pragma once

#include <functional>
#include <string>
#include <utility>

namespace feasikit {

/// A closed set known only through a single-valued projection selector.
///
/// P is the ambient space (Point2 or SymMatrix). The selector must satisfy
/// project(project(p)) == project(p).
template <typename P>
class FeasibilitySet {
public:
    using Projector = std::function<P(const P&)>;

    FeasibilitySet(std::string id, Projector project) : id_(std::move(id)), project_(std::move(project)) {}

    [[nodiscard]] P project(const P& p) const { return project_(p); }
    [[nodiscard]] const std::string& id() const { return id_; }

private:
    std::string id_;
    Projector project_;
};

/// R_C = 2 P_C - I.
template <typename P>
P reflect(const FeasibilitySet<P>& set, const P& p) {
    return 2 * set.project(p) - p;
}

}  // namespace feasikit
