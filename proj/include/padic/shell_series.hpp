#pragma once

#include <functional>

#include "padic/big_rational.hpp"

namespace padic {

/// Inclusive range of shell exponents actually summed.
struct ShellWindow {
    long lo = 0;
    long hi = -1;

    bool empty() const noexcept { return hi < lo; }
    friend bool operator==(const ShellWindow&, const ShellWindow&) = default;
};

/// A truncated shell series together with an estimate of what was left out.
struct SeriesSum {
    BigRational value;
    /// Estimated |omitted tail|; rigorous when term ratios are eventually non-increasing in magnitude.
    BigRational tail_bound;
    ShellWindow window;
    long terms = 0;
};

/// One-directional sum of term(k) for k = start, start + step, ... (step is +1 or -1).
///
/// Stopping and divergence tests only apply once k has moved strictly past `settled_after`
/// in the direction of travel; before that the terms are summed unconditionally.
/// The sum stops after the first term whose geometric tail estimate |t| r / (1 - r) falls
/// below `tail_tol`, where r is the largest of the last three settled term ratios and of
/// `ratio_floor`. A caller that knows the slowest decay the summand can have passes it as
/// the floor. Five consecutive non-decreasing nonzero terms raise DivergenceError, as does
/// exhausting `max_terms`.
struct DirectedSum {
    BigRational value;
    BigRational tail_bound;
    long last = 0;
    long terms = 0;
};

DirectedSum sum_shells(const std::function<BigRational(long)>& term, long start, int step, long settled_after,
                       const BigRational& tail_tol, long max_terms = 100000,
                       const BigRational& ratio_floor = BigRational(0));

} // namespace padic
