#include "permv/ring.hpp"

namespace permv {

RingContext::RingContext(std::vector<std::string> variables, FieldSpec field)
    : vars_(std::move(variables)), field_(std::move(field)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto [it, inserted] = index_.emplace(vars_[i], i);
        if (!inserted) throw domain_error("duplicate ring variable: " + vars_[i]);
    }
}

std::optional<std::size_t> RingContext::var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace permv
