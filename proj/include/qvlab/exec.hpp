#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace qvlab {

enum class Exec { serial, parallel };

/// Evaluates `check(i)` for i in [0, n), collecting one optional failure
/// message per index. `check` must be pure. The serial path is the
/// reference; both paths return identical vectors.
template <class Check>
std::vector<std::optional<std::string>> run_checks_serial(std::size_t n, Check const& check)
{
    std::vector<std::optional<std::string>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            out[i] = check(i);
        } catch (std::exception const& e) {
            out[i] = std::string("exception: ") + e.what();
        }
    }
    return out;
}

template <class Check>
std::vector<std::optional<std::string>> run_checks_parallel(std::size_t n, Check const& check)
{
    std::vector<std::optional<std::string>> out(n);
    auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
        auto idx = static_cast<std::size_t>(i);
        try {
            out[idx] = check(idx);
        } catch (std::exception const& e) {
            out[idx] = std::string("exception: ") + e.what();
        }
    }
    return out;
}

template <class Check>
std::vector<std::optional<std::string>> run_checks(Exec exec, std::size_t n, Check const& check)
{
    return exec == Exec::parallel ? run_checks_parallel(n, check) : run_checks_serial(n, check);
}

} // namespace qvlab
