#include "ramsey/linear_forest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ramsey {

LinearForest::LinearForest(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty())
        throw std::invalid_argument("linear forest needs at least one component");
    for (int p : orders_) {
        if (p < 1) throw std::invalid_argument("linear forest component orders must be >= 1");
        total_ += p;
        odd_ += p % 2;
    }
    std::sort(orders_.begin(), orders_.end(), std::greater<int>());
    if (orders_.front() < 2)
        throw std::invalid_argument("linear forest must contain a component with an edge");
}

std::string LinearForest::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(orders_[i]);
    }
    return out;
}

}  // namespace ramsey
