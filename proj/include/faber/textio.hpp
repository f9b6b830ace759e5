#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "faber/dyadic.hpp"

namespace faber {

/// Shortest decimal that round-trips the exact double.
inline std::string real_to_string(Real v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline Real real_from_string(std::string_view s) {
    Real v{};
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad real literal: " + std::string(s));
    return v;
}

inline long long int_from_string(std::string_view s) {
    long long v{};
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer literal: " + std::string(s));
    return v;
}

} // namespace faber
