#pragma once

#include <stdexcept>

namespace locdel {

// Every failure surfaced by the library derives from locdel::error so callers
// can catch broadly; the concrete type names the violated contract.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LOCDEL_DEFINE_ERROR(name)            \
    class name : public error {              \
    public:                                  \
        using error::error;                  \
    }

LOCDEL_DEFINE_ERROR(unsupported_exponent);
LOCDEL_DEFINE_ERROR(non_primitive_polynomial);
LOCDEL_DEFINE_ERROR(division_by_zero);
LOCDEL_DEFINE_ERROR(field_too_small);
LOCDEL_DEFINE_ERROR(length_mismatch);
LOCDEL_DEFINE_ERROR(singular_system);
LOCDEL_DEFINE_ERROR(invalid_config);
LOCDEL_DEFINE_ERROR(invalid_pattern);
LOCDEL_DEFINE_ERROR(too_many_deletions);
LOCDEL_DEFINE_ERROR(too_long);
LOCDEL_DEFINE_ERROR(scope_too_large);

#undef LOCDEL_DEFINE_ERROR

} // namespace locdel
