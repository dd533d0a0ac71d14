#pragma once

#include <stdexcept>
#include <string>

namespace klein {

struct not_prime_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct too_small_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct zero_vector_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct mixed_modulus_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_a_surface_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_equivariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_fixed_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Umbrella embedding precondition failure; message names the condition and vertices.
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct non_integral_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct not_real_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct closed_form_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace klein
