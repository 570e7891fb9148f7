#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualis/error.hpp"

namespace dualis {

/// Ordered list of distinct variable names over the implicit field Q.
/// Immutable; copies share storage. Two rings are equal iff their
/// variable lists are equal.
class Ring {
public:
    Ring() : vars_(empty_list()) {}

    explicit Ring(std::vector<std::string> variables) {
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (variables[i].empty())
                throw Error(ErrorCode::Structural, "empty variable name");
            for (std::size_t j = i + 1; j < variables.size(); ++j)
                if (variables[i] == variables[j])
                    throw Error(ErrorCode::NameCollision,
                                "duplicate variable name '" + variables[i] + "'");
        }
        vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
    }

    std::size_t size() const { return vars_->size(); }
    const std::vector<std::string>& variables() const { return *vars_; }

    const std::string& variable(std::size_t i) const {
        if (i >= vars_->size())
            throw Error(ErrorCode::Structural, "variable index out of range");
        return (*vars_)[i];
    }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name) return i;
        return std::nullopt;
    }

    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }

private:
    static std::shared_ptr<const std::vector<std::string>> empty_list() {
        static const auto empty = std::make_shared<const std::vector<std::string>>();
        return empty;
    }

    std::shared_ptr<const std::vector<std::string>> vars_;
};

} // namespace dualis
