#pragma once

#include <stdexcept>
#include <string>

namespace qah {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two operands live over different fields (e.g. F_2 vs F_3, or Q vs F_p).
struct field_mismatch : error {
    explicit field_mismatch(const std::string& msg) : error(msg) {}
};

/// Incompatible dimensions (matrix shapes, ambient dimensions, degree windows).
struct shape_mismatch : error {
    explicit shape_mismatch(const std::string& msg) : error(msg) {}
};

/// A raw map does not preserve null subspaces, i.e. it is not a morphism
/// of the pair category.
struct not_bounded : error {
    explicit not_bounded(const std::string& msg) : error(msg) {}
};

/// Two maps that should compose do not.
struct composability_error : error {
    explicit composability_error(const std::string& msg) : error(msg) {}
};

/// A would-be complex has nonvanishing composite differentials.
struct not_a_complex : error {
    explicit not_a_complex(const std::string& msg) : error(msg) {}
};

/// A sequence offered as a short exact sequence fails the kernel-cokernel test.
struct not_strict_exact : error {
    explicit not_strict_exact(const std::string& msg) : error(msg) {}
};

/// Heart morphism endpoints do not match.
struct endpoint_mismatch : error {
    explicit endpoint_mismatch(const std::string& msg) : error(msg) {}
};

/// A computation would exceed the configured resource cap.
struct resource_limit : error {
    explicit resource_limit(const std::string& msg) : error(msg) {}
};

/// Two routes that must agree produced different answers; signals a bug in
/// the model rather than in user input.
struct internal_inconsistency : error {
    explicit internal_inconsistency(const std::string& msg) : error(msg) {}
};

/// Malformed input file; carries a human-readable location.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

/// Structurally valid input that violates a semantic precondition.
struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

} // namespace qah
