#pragma once

#include <string>
#include <vector>

namespace ramsey {

/// A disjoint union of paths, described by its component orders.
/// Orders are kept sorted descending; the forest must have at least one
/// edge (some component of order >= 2) and total order >= 2, so the
/// derived quasar K_1 v F is never a bare star center.
class LinearForest {
public:
    explicit LinearForest(std::vector<int> orders);

    const std::vector<int>& orders() const noexcept { return orders_; }
    int total_order() const noexcept { return total_; }      // m
    int component_count() const noexcept { return static_cast<int>(orders_.size()); }
    int odd_count() const noexcept { return odd_; }          // components of odd order

    /// Comma separated descending orders, e.g. "3,2,2".
    std::string to_string() const;

    bool operator==(const LinearForest&) const = default;

private:
    std::vector<int> orders_;
    int total_ = 0;
    int odd_ = 0;
};

}  // namespace ramsey
