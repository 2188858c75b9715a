#pragma once

#include <stdexcept>
#include <string>

namespace sds {

enum class Errc {
    invalid_group,
    out_of_range,
    not_a_unit,
    not_disjoint,
    group_mismatch,
    not_a_signed_set,
    not_cyclic,
    not_prime_power,
    precondition,
    overflow,
    verification_failed,
    parse,
};

inline const char* errc_name(Errc c) noexcept
{
    switch (c) {
    case Errc::invalid_group: return "invalid-group";
    case Errc::out_of_range: return "out-of-range";
    case Errc::not_a_unit: return "not-a-unit";
    case Errc::not_disjoint: return "not-disjoint";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::not_a_signed_set: return "not-a-signed-set";
    case Errc::not_cyclic: return "not-cyclic";
    case Errc::not_prime_power: return "not-prime-power";
    case Errc::precondition: return "precondition";
    case Errc::overflow: return "overflow";
    case Errc::verification_failed: return "verification-failed";
    case Errc::parse: return "parse";
    }
    return "unknown";
}

/// Every library failure is reported as an Error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace sds
