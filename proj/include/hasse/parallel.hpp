#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

namespace hasse {

// serial is the reference path; parallel runs the same kernel under OpenMP.
enum class Execution { serial, parallel };

std::string to_string(Execution exec);

// Evaluates `check(k)` for every k in [0, n) and returns the smallest k whose
// check returned false. Every index is evaluated on both paths, so the result
// does not depend on the schedule. Exceptions are rethrown for the smallest
// throwing index.
template <class Check>
std::optional<std::size_t> first_failure(std::size_t n, Check&& check, Execution exec) {
  std::vector<char> ok(n, 1);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < count; ++k) {
      try {
        ok[k] = check(static_cast<std::size_t>(k)) ? 1 : 0;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  } else {
    for (long long k = 0; k < count; ++k) {
      try {
        ok[k] = check(static_cast<std::size_t>(k)) ? 1 : 0;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (!ok[k]) return k;
  }
  return std::nullopt;
}

// Maps `fn` over [0, n), results in index order.
template <class T, class Fn>
std::vector<T> map_indices(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (long long k = 0; k < count; ++k) {
    try {
      slots[k].emplace(fn(static_cast<std::size_t>(k)));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace hasse
