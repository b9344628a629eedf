#ifndef IWA_ERRORS_HPP
#define IWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iwa {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid mathematical input (zero where nonzero required, bad prime, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Structurally malformed input: ragged matrices, bad documents, schema violations.
class format_error : public error {
public:
    explicit format_error(const std::string& msg) : error(msg) {}
};

// The presentation at hand does not support the requested computation
// (non-injective where a short free resolution is needed, non-square where
// a determinant is needed). Callers may re-present the module and retry.
class unsupported_presentation_error : public error {
public:
    explicit unsupported_presentation_error(const std::string& msg) : error(msg) {}
};

// Square presentation with determinant zero: the module is not torsion.
class not_torsion_error : public error {
public:
    explicit not_torsion_error(const std::string& msg) : error(msg) {}
};

// A standing hypothesis of the formula is violated (e.g. p >= 5).
class hypothesis_error : public error {
public:
    explicit hypothesis_error(const std::string& msg) : error(msg) {}
};

// Operation defined only for a restricted class of group descriptors.
class unsupported_group_error : public error {
public:
    explicit unsupported_group_error(const std::string& msg) : error(msg) {}
};

} // namespace iwa

#endif // IWA_ERRORS_HPP
