#pragma once

#include <vector>

#include "subcone/pl_function.hpp"

namespace subcone::test {

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

inline PLFunction pl(std::vector<std::pair<Rational, Rational>> pts)
{
    std::vector<Breakpoint> out;
    for (auto& [t, v] : pts) {
        out.push_back({t, v});
    }
    return PLFunction(std::move(out));
}

}  // namespace subcone::test
