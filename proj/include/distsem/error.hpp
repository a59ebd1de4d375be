#pragma once

#include <stdexcept>
#include <string>

namespace distsem {

// Runtime failure anywhere in the toolkit: unreadable files, format
// violations, contract breaches (double weighting, OOV lookups, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace distsem
