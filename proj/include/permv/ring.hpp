#ifndef PERMV_RING_HPP
#define PERMV_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permv/field.hpp"

namespace permv {

class RingContext {
  public:
    RingContext(std::vector<std::string> variables, FieldSpec field);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> var_index(const std::string& name) const;
    const FieldSpec& field() const { return field_; }

    bool operator==(const RingContext& other) const {
        return vars_ == other.vars_ && field_ == other.field_;
    }
    bool operator!=(const RingContext& other) const { return !(*this == other); }

  private:
    std::vector<std::string> vars_;
    FieldSpec field_;
    std::map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> variables, FieldSpec field) {
    return std::make_shared<RingContext>(std::move(variables), std::move(field));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace permv

#endif
