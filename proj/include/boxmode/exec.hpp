#pragma once

#include <cstddef>

namespace boxmode {

// Every grid kernel has a serial reference path and an OpenMP path. Each
// index is computed independently with a fixed summation order, so both
// paths produce bitwise identical output.
enum class Exec { serial, parallel };

template <typename Body>
void for_each_index(Exec exec, std::size_t count, Body&& body)
{
    if (exec == Exec::parallel) {
        const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
    }
}

} // namespace boxmode
