#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orebc/bivar.hpp"
#include "orebc/ore.hpp"

namespace orebc {

struct SearchBounds {
  std::size_t max_s = 0;
  std::size_t max_t = 0;
  std::size_t max_y = 0;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// Looks for a nonzero f with f(P, Q) = 0 inside the given bounds by computing the kernel
/// of the matrix whose columns are the coordinates of y^c·P^a·Q^b, columns ordered by
/// (c, a, b). In scalars mode max_y is treated as 0. The first kernel vector is returned
/// after normalize().
///
/// std::nullopt means the bounds were exhausted; it says nothing about algebraic
/// independence. Throws NotCommuting, ZeroElement.
std::optional<BivarPoly> annihilate(const OreElem& p, const OreElem& q, CoeffMode mode, SearchBounds bounds);

struct ScheduledSearch {
  std::optional<BivarPoly> result;
  std::vector<SearchBounds> visited;
};

/// Hard cap on each bound of the default schedule; OREBC_MAX_CAP overrides the default of 16.
std::size_t annihilator_cap();

/// Default schedule: max_t = deg P, max_s = deg Q (at least 1), max_y = 0, then every bound
/// doubles (max_y grows 0 → 1 → 2 → … in poly mode) until the cap is reached.
ScheduledSearch annihilate_scheduled(const OreElem& p, const OreElem& q, CoeffMode mode,
                                     std::size_t cap = annihilator_cap());

/// eval_bivar(f, P, Q) == 0. Throws NotCommuting.
bool verify(const BivarPoly& f, const OreElem& p, const OreElem& q);

}  // namespace orebc
