#ifndef TADIC_ERRORS_HPP
#define TADIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tadic {

// Mathematical impossibility (division by zero, no square root, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested result cannot be certified with the available window.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tadic

#endif
