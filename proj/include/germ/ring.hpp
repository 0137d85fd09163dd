#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germ/error.hpp"

namespace germ {

// Ambient coordinate ring: an ordered list of variable names. Germs live at
// the origin of a space of dimension >= 2.
class RingSpec {
public:
    static std::shared_ptr<const RingSpec> make(std::vector<std::string> vars) {
        if (vars.size() < 2)
            throw InvalidInputError("a ring needs at least two variables");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i].empty())
                throw InvalidInputError("empty variable name");
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw InvalidInputError("duplicate variable name: " + vars[i]);
        }
        return std::shared_ptr<const RingSpec>(new RingSpec(std::move(vars)));
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var_name(int i) const { return vars_.at(i); }
    const std::vector<std::string>& var_names() const { return vars_; }

    std::optional<int> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    bool operator==(const RingSpec& o) const { return vars_ == o.vars_; }

private:
    explicit RingSpec(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatchError("operands over different rings");
}

}  // namespace germ
