#pragma once
/**
 * @file errors.hpp
 * @brief Exception taxonomy mapped onto CLI exit codes.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syzygy {

/// Malformed input text (polynomials, ideal files, manifests).  Exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    explicit parse_error(const std::string& msg) : std::runtime_error(msg), pos_(0) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Reduction-step budget exhausted.  Exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Projection center meets the scheme; caller should re-seed.  Exit code 4.
class center_error : public std::runtime_error {
public:
    explicit center_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition or internal invariant.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace syzygy
