#pragma once

#include <stdexcept>
#include <string>

namespace dsr {

// Malformed external input (graph6 text, bad CLI values).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds an enumeration cap (e.g. 2^n subset scan, 3^m weight scan).
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver failed to meet its tolerance.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}

    double last_estimate() const { return last_estimate_; }

private:
    double last_estimate_;
};

} // namespace dsr
